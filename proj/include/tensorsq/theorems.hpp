#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tensorsq/tensor_square.hpp"

namespace tensorsq {

enum class CheckStatus { passed, failed, not_applicable };

const char* to_string(CheckStatus s);

// For G = N x| H: the projection onto H induces a surjection of tensor squares
// whose kernel orders multiply back each layer, and the inclusion of H splits it.
struct DecompositionReport {
  CheckStatus status = CheckStatus::not_applicable;
  u64 group_order = 0;
  u64 kernel_tensor = 0;
  u64 kernel_exterior = 0;
  u64 kernel_nabla = 0;
  u64 kernel_delta = 0;
  u64 kernel_symmetric = 0;
  bool tensor_identity = false;
  bool exterior_identity = false;
  bool nabla_identity = false;
  bool delta_identity = false;
  bool symmetric_identity = false;
  bool section_is_homomorphism = false;
  bool section_splits = false;
  std::string detail;
};

DecompositionReport verify_semidirect_decomposition(const FiniteGroup& n, const FiniteGroup& h,
                                                    const std::vector<ElementAuto>& action,
                                                    const TensorSquareOptions& opt = {});

// When every diagonal symbol has odd order 2n+1, sending a symbol s with flip s'
// to (s s')^-n retracts the tensor square onto its diagonal subgroup.
struct SplittingWitness {
  CheckStatus status = CheckStatus::not_applicable;
  u64 diagonal_exponent = 0;
  bool homomorphism = false;
  bool lands_in_diagonal = false;
  bool fixes_diagonal = false;
  bool nabla_equals_delta = false;
  bool order_identity = false;
  bool stable_matches_homology = false;
  std::string detail;
};

SplittingWitness odd_splitting(const TensorSquare& t);

// When the derived subgroup has a complement, the diagonal layers of G agree
// with those of its abelianization and the tensor square splits over them.
struct ComplementReport {
  CheckStatus status = CheckStatus::not_applicable;
  bool nabla_matches = false;
  bool delta_matches = false;
  bool order_identity = false;
  std::string detail;
};

ComplementReport verify_complement_case(const TensorSquare& t);
ComplementReport verify_complement_case(const FiniteGroup& g, const TensorSquareOptions& opt = {});

// h2 + (Z/2)^(r+k) for r the rank and k the even invariant factor count of the
// abelianization
AbelianInvariants pi2s_closed_form(const AbelianInvariants& gab, const AbelianInvariants& h2);

// |pi2s| <= 2^(r+k) * prod p^(a(a-1)/2) over the prime factorization of |G|
struct BoundReport {
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<std::pair<u64, u32>> factorization;
  u32 rank = 0;
  u32 even_factors = 0;
  bigint bound = 0;
  bigint measured = 0;
};

BoundReport green_bound_check(const FiniteGroup& g, const AbelianInvariants& measured_pi2s);

// For N normal and perfect, each homotopy layer forms a right-exact sequence
// N-layer -> G-layer -> quotient-layer -> 0, checked elementwise.
struct SequenceReport {
  CheckStatus status = CheckStatus::not_applicable;
  bool pi3_level = false;
  bool h2_level = false;
  bool pi2s_level = false;
  std::string detail;
};

SequenceReport verify_perfect_normal_sequences(const FiniteGroup& g, const Subgroup& n,
                                               const TensorSquareOptions& opt = {});

}  // namespace tensorsq
