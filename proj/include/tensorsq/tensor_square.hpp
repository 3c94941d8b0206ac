#pragma once
#include "tensorsq/abelian.hpp"
#include "tensorsq/coset_enum.hpp"

namespace tensorsq {

struct TensorSquareOptions {
  u64 group_cap = 24;
  u64 max_cells = 320'000'000;
};

// One symbol generator per ordered pair of elements, indexed g*|G|+h over the
// canonical element order, with both families of defining product relations.
FpGroup tensor_square_presentation(const FiniteGroup& g, u64 group_cap = 24);
std::vector<std::string> tensor_symbol_names(const FiniteGroup& g);

// T together with the pairing into it and the structure it carries: the
// commutator-valued homomorphism out of it, its kernel J, and the diagonal
// and symmetrized-diagonal subgroups (all as sorted point sets).
struct TensorSquare {
  FiniteGroup group;
  u32 n;
  PointGroup square;
  std::vector<u32> pair_point;
  std::vector<u32> kappa;
  std::vector<u32> j_points;
  std::vector<u32> nabla_points;
  std::vector<u32> delta_points;
  std::vector<u32> derived_ids;

  u32 lambda(u32 gi, u32 hi) const { return pair_point[std::size_t(gi) * n + hi]; }
  u64 order() const { return square.size(); }
  u64 j_order() const { return j_points.size(); }
  u64 nabla_order() const { return nabla_points.size(); }
  u64 delta_order() const { return delta_points.size(); }
  u64 derived_order() const { return derived_ids.size(); }
  u64 exterior_order() const { return order() / nabla_order(); }
  u64 symmetric_order() const { return order() / delta_order(); }
};

TensorSquare tensor_square(const FiniteGroup& g, const TensorSquareOptions& opt = {});

// subgroup of T generated by the given points, as a sorted point set
std::vector<u32> point_span(const PointGroup& t, const std::vector<u32>& gens);
// invariants of an abelian subgroup given by its sorted point set
AbelianInvariants point_group_invariants(const PointGroup& t, const std::vector<u32>& members);
// invariants of ambient/sub for sorted point sets of abelian subgroups
AbelianInvariants point_quotient_invariants(const PointGroup& t, const std::vector<u32>& ambient,
                                            const std::vector<u32>& sub);

enum class SquareMethod { automatic, presentation, closed_form };

struct HomotopyInvariants {
  AbelianInvariants pi3, pi2s, h2, gab;
  u64 group_order = 0;
  u64 derived_order = 0;
  u64 tensor_order = 0;
  u64 exterior_order = 0;
  u64 symmetric_order = 0;
  u64 nabla_order = 0;
  u64 delta_order = 0;
  u64 j_order = 0;
  SquareMethod method_used = SquareMethod::automatic;
};

HomotopyInvariants homotopy_invariants(const FiniteGroup& g,
                                       SquareMethod method = SquareMethod::automatic,
                                       const TensorSquareOptions& opt = {});

HomotopyInvariants homotopy_invariants(const TensorSquare& ts);

}  // namespace tensorsq
