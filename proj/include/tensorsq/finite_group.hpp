#pragma once
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tensorsq/abelian.hpp"
#include "tensorsq/permutation.hpp"

namespace tensorsq {

// Deterministic Schreier-Sims chain. Base points are chosen as the smallest
// moved point at each level; orbits are explored FIFO with generators in
// insertion order, so the canonical element enumeration is reproducible.
class StabilizerChain {
 public:
  StabilizerChain(u32 degree, const std::vector<Permutation>& gens);
  u64 order() const;
  bool contains(const Permutation& p) const;
  // products of transversal representatives, identity first
  std::vector<Permutation> elements(u64 limit) const;

 private:
  struct Level {
    u32 base_point = 0;
    std::vector<Permutation> gens;
    std::vector<u32> orbit;  // discovery order, base first
    std::unordered_map<u32, Permutation> transversal;
  };
  u32 degree_;
  std::vector<Level> levels_;

  // record a strong generator at every level whose leading bases it fixes
  void insert_strong(Permutation g);
  // re-sift all Schreier generators until none leaves a residue
  void close();
  void rebuild_orbit(Level& lv) const;
  // reduce p through levels >= start; returns level where it sticks, or size()
  std::size_t strip(std::size_t start, Permutation& p) const;
};

// Permutation group with a lazily built stabilizer chain. Element tables are
// built on demand: a full n*n multiplication table when the order is at most
// kTableLimit, hash-based index arithmetic up to kEnumLimit.
class FiniteGroup {
 public:
  static constexpr u64 kTableLimit = 256;
  static constexpr u64 kEnumLimit = 20000;

  FiniteGroup();  // trivial group on one point
  FiniteGroup(u32 degree, std::vector<Permutation> generators);

  u32 degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  Permutation identity() const { return Permutation::identity(degree_); }

  u64 order() const;
  bool contains(const Permutation& p) const;
  bool is_abelian() const;
  bool is_trivial() const { return order() == 1; }

  // canonical element list (identity first); throws cap_exceeded when order > kEnumLimit
  const std::vector<Permutation>& elements() const;
  u32 element_index(const Permutation& p) const;
  u32 size_u32() const { return static_cast<u32>(elements().size()); }

  u32 mul(u32 a, u32 b) const;
  u32 inv(u32 a) const;
  u32 conj(u32 g, u32 x) const { return mul(mul(g, x), inv(g)); }
  u32 comm(u32 g, u32 h) const { return mul(mul(g, h), mul(inv(g), inv(h))); }
  u64 element_order_idx(u32 a) const;
  const std::vector<u32>& generator_indices() const;

 private:
  u32 degree_ = 1;
  std::vector<Permutation> gens_;

  struct Table;
  mutable std::shared_ptr<StabilizerChain> chain_;
  mutable std::shared_ptr<Table> table_;
  const StabilizerChain& chain() const;
  const Table& table() const;
};

struct Subgroup {
  FiniteGroup parent;
  FiniteGroup sub;  // same degree, generated by gens
  bool normal = false;
  u64 order() const { return sub.order(); }
  u64 index() const { return parent.order() / sub.order(); }
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, std::vector<Permutation> gens);
Subgroup normal_closure(const FiniteGroup& g, std::vector<Permutation> gens);
Subgroup derived_subgroup(const FiniteGroup& g);
bool is_normal_in(const FiniteGroup& g, const FiniteGroup& sub);

class GroupHomomorphism {
 public:
  // images[i] is the image of g.generators()[i]
  GroupHomomorphism(FiniteGroup domain, FiniteGroup codomain, std::vector<Permutation> images);

  const FiniteGroup& domain() const { return dom_; }
  const FiniteGroup& codomain() const { return cod_; }
  const std::vector<Permutation>& generator_images() const { return img_gens_; }

  Permutation apply(const Permutation& x) const;
  u32 apply_idx(u32 i) const;  // domain element index -> codomain element index

  // full product check f(ab) = f(a)f(b); throws group_error on failure or if
  // the domain is too large to enumerate for it
  void verify(u64 product_check_limit = 1024) const;
  Subgroup kernel() const;
  Subgroup image() const;
  bool is_surjective() const;

 private:
  FiniteGroup dom_, cod_;
  std::vector<Permutation> img_gens_;
  mutable std::shared_ptr<std::vector<u32>> elem_img_;  // index map, built by BFS
  const std::vector<u32>& element_images() const;
};

struct Quotient {
  FiniteGroup group;
  GroupHomomorphism projection;
};

// G/N as a permutation group on the right cosets of N
Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);

// invariants of G/N; requires N normal with abelian quotient
AbelianInvariants abelian_invariants_of_quotient(const FiniteGroup& g, const Subgroup& n);
// invariants of an abelian group
AbelianInvariants abelian_invariants_of_group(const FiniteGroup& g);
// invariants of G/[G,G]
AbelianInvariants abelianization(const FiniteGroup& g);

// automorphism of a group, stored as a permutation of its element indices
using ElementAuto = std::vector<u32>;

ElementAuto automorphism_from_images(const FiniteGroup& g, const std::vector<u32>& gen_images);
std::vector<ElementAuto> all_automorphisms(const FiniteGroup& g, u64 limit = 100000);

struct SemidirectResult {
  FiniteGroup group;
  GroupHomomorphism embed_n;    // N -> G
  GroupHomomorphism embed_h;    // H -> G
  GroupHomomorphism project_h;  // G -> H, kernel = embedded N
};

// N x| H for the action given per H-generator as automorphisms of N
SemidirectResult semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                                    const std::vector<ElementAuto>& action);

// exhaustive search for B <= G with B meet N = 1 and |B||N| = |G|
std::optional<Subgroup> find_complement(const FiniteGroup& g, const Subgroup& n,
                                        u64 order_bound = 1000);

// Mutual actions of two groups on each other, given per generator and extended
// multiplicatively; act tables are indexed by element ids.
struct ActionPair {
  FiniteGroup g, h;
  std::vector<std::vector<u32>> act_gh;  // |G| rows, each a permutation of H ids: (g,h) -> g.h
  std::vector<std::vector<u32>> act_hg;  // |H| rows over G ids
};

ActionPair make_action_pair(const FiniteGroup& g, const FiniteGroup& h,
                            const std::vector<ElementAuto>& g_gen_on_h,
                            const std::vector<ElementAuto>& h_gen_on_g);
ActionPair conjugation_pair(const FiniteGroup& g);

struct CompatibilityWitness {
  std::string equation;  // "h-side" or "g-side"
  std::string outer, actor, operand;  // cycle strings of the violating triple
  std::string lhs, rhs;
};

struct CompatibilityReport {
  bool compatible = false;
  std::optional<CompatibilityWitness> witness;
};

CompatibilityReport check_compatible_actions(const ActionPair& p);

}  // namespace tensorsq
