#pragma once
#include <functional>

#include "tensorsq/abelian.hpp"

namespace tensorsq {

// Invariant factors of a finite abelian group given as a multiplication black
// box on ids 0..n-1. Picks a generating sequence greedily (lowest unused id),
// records e_k * g_k = word(earlier gens) relations into a triangular relation
// matrix and reduces it by SNF. Throws group_error if mul turns out not to be
// closed/abelian in a way the scan notices.
AbelianInvariants abelian_invariants_blackbox(u32 n_elements, u32 identity,
                                              const std::function<u32(u32, u32)>& mul);

}  // namespace tensorsq
