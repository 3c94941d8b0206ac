#pragma once

#include <optional>
#include <string>

#include "tensorsq/finite_group.hpp"

namespace tensorsq {

FiniteGroup symmetric_group(u32 n);
FiniteGroup alternating_group(u32 n);
FiniteGroup dihedral_group(u32 order);
FiniteGroup cyclic_group(u32 n);
FiniteGroup quaternion_group();
FiniteGroup general_linear_group(u32 n, u32 p);
FiniteGroup special_linear_group(u32 n, u32 p);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// pieces of an sdp(...) spec, kept so decomposition checks can reuse them
struct SemidirectPieces {
  FiniteGroup n;
  FiniteGroup h;
  std::vector<ElementAuto> action;
};

struct ParsedGroupSpec {
  FiniteGroup group;
  std::optional<SemidirectPieces> semidirect;
};

// spec grammar: S<n>, A<n>, D<order>, Q8, C<n>, GL(<n>,<p>), SL(<n>,<p>),
// perm:<cycles;cycles>, sdp(<N>,<H>,<action>), products joined with 'x';
// actions: trivial, inversion, cycle; cycle points are 0-based
ParsedGroupSpec parse_group_spec(const std::string& spec);
FiniteGroup make_named_group(const std::string& spec);

}  // namespace tensorsq
