#include "tensorsq/catalog.hpp"

#include "tensorsq/permutation.hpp"

namespace tensorsq {

namespace {

std::optional<AbelianInvariants> inv(std::vector<u64> factors) {
  return invariants_from_orders(std::move(factors));
}

std::optional<AbelianInvariants> trivial() { return invariants_from_orders({}); }

std::vector<ExpectedRecord> build_catalog() {
  std::vector<ExpectedRecord> c;
  auto add = [&](std::string name, std::optional<AbelianInvariants> pi3,
                 std::optional<AbelianInvariants> pi2s, std::optional<AbelianInvariants> h2,
                 bool computable, std::string note) {
    c.push_back({std::move(name), std::move(pi3), std::move(pi2s), std::move(h2), computable,
                 std::move(note)});
  };

  add("S2", inv({2}), inv({2}), trivial(), true, "symmetric group below degree four");
  add("S3", inv({2}), inv({2}), trivial(), true, "symmetric group below degree four");
  add("S4", inv({2, 2}), inv({2, 2}), inv({2}), true, "symmetric group of degree at least four");
  add("S5", inv({2, 2}), inv({2, 2}), inv({2}), false,
      "symmetric group of degree at least four; the presentation route needs a raised cell cap");

  add("A4", inv({6}), inv({2}), inv({2}), true,
      "order twelve alternating group; classical tensor square");
  add("A5", inv({2}), inv({2}), inv({2}), true,
      "perfect alternating group outside the exceptional degrees");
  add("A6", inv({6}), inv({6}), inv({6}), false,
      "exceptional alternating degree; stored value only, presentation exceeds the desk cap");
  add("A7", inv({6}), inv({6}), inv({6}), false,
      "exceptional alternating degree; stored value only, presentation exceeds the desk cap");

  add("D6", std::nullopt, inv({2}), trivial(), true, "dihedral group of twice an odd number");
  add("D8", std::nullopt, inv({2, 2, 2}), inv({2}), true,
      "dihedral group of twice an even number");
  add("D10", std::nullopt, inv({2}), trivial(), true, "dihedral group of twice an odd number");
  add("D12", std::nullopt, inv({2, 2, 2}), inv({2}), true,
      "dihedral group of twice an even number");
  add("D14", std::nullopt, inv({2}), trivial(), true, "dihedral group of twice an odd number");
  add("D16", std::nullopt, inv({2, 2, 2}), inv({2}), true,
      "dihedral group of twice an even number");

  add("Q8", std::nullopt, inv({2, 2}), trivial(), true, "quaternion group");

  add("GL(2,2)", inv({2}), inv({2}), trivial(), true,
      "coincides with the symmetric group of degree three");
  add("GL(3,2)", inv({2}), inv({2}), inv({2}), false,
      "binary linear group with nontrivial multiplier; stored value only");
  add("GL(4,2)", inv({2}), inv({2}), inv({2}), false,
      "binary linear group with nontrivial multiplier; stored value only");
  add("GL(5,2)", trivial(), trivial(), trivial(), false,
      "binary linear group above dimension four; stored value only");
  add("GL(2,5)", inv({4}), inv({2}), trivial(), false,
      "linear group over a field with more than three elements; stored value only");
  add("GL(2,7)", inv({6}), inv({2}), trivial(), false,
      "linear group over a field with more than three elements; stored value only");
  add("GL(3,3)", inv({2}), inv({2}), trivial(), false,
      "linear group over the three element field outside dimension two; stored value only");

  return c;
}

}  // namespace

const std::vector<ExpectedRecord>& catalog_entries() {
  static const std::vector<ExpectedRecord> c = build_catalog();
  return c;
}

const ExpectedRecord* catalog_find(const std::string& name) {
  for (const ExpectedRecord& r : catalog_entries())
    if (r.name == name) return &r;
  return nullptr;
}

ExpectedRecord catalog_lookup(const std::string& name) {
  const ExpectedRecord* r = catalog_find(name);
  if (!r) throw group_error("no catalog entry for '" + name + "'");
  return *r;
}

}  // namespace tensorsq
