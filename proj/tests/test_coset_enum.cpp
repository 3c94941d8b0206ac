#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "tensorsq/coset_enum.hpp"

using namespace tensorsq;

namespace {

FpGroup sym3() {
  FpGroup fp;
  fp.ngens = 2;
  fp.relators = {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}};
  return fp;
}

FpGroup quaternion8() {
  FpGroup fp;
  fp.ngens = 2;
  fp.relators = {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}};
  return fp;
}

std::vector<u32> flatten(const CosetTable& t) {
  std::vector<u32> out;
  for (u32 c = 0; c < t.size(); ++c)
    for (u32 col = 0; col < t.cols(); ++col) out.push_back(t.act_col(c, col));
  return out;
}

}  // namespace

TEST_CASE("word reduction cancels inverse pairs and conjugating ends") {
  CHECK(reduce_word({1, -1}) == Word{});
  CHECK(reduce_word({1, 2, -2, -1}) == Word{});
  CHECK(reduce_word({1, 2, -2, 3}) == Word{1, 3});
  CHECK(reduce_word({-2, 1, 1, 2}) == Word{1, 1});
  CHECK(reduce_word({1, 2, 1, 2}) == Word{1, 2, 1, 2});
  CHECK(inverse_word({1, 2, -3}) == Word{3, -2, -1});
  CHECK(reduce_word(inverse_word({1, -1, 2})) == Word{-2});
}

TEST_CASE("cosets of the trivial subgroup count the whole group") {
  auto t = todd_coxeter(sym3(), {});
  CHECK(t.size() == 6);

  FpGroup d8;
  d8.ngens = 2;
  d8.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}};
  CHECK(todd_coxeter(d8, {}).size() == 8);

  CHECK(todd_coxeter(quaternion8(), {}).size() == 8);
}

TEST_CASE("proper subgroups give the right index") {
  CHECK(todd_coxeter(sym3(), {{1}}).size() == 2);
  CHECK(todd_coxeter(sym3(), {{2}}).size() == 3);
  CHECK(todd_coxeter(sym3(), {{1, 2}}).size() == 3);
  CHECK(todd_coxeter(sym3(), {{1}, {2}}).size() == 1);
}

TEST_CASE("coincidences collapse the table") {
  FpGroup fp;
  fp.ngens = 1;
  fp.relators = {{1, 1, 1, 1, 1}, {1, 1, 1}};
  CHECK(todd_coxeter(fp, {}).size() == 1);

  FpGroup both;
  both.ngens = 2;
  both.relators = {{1}, {2}};
  CHECK(todd_coxeter(both, {}).size() == 1);
}

TEST_CASE("unbounded enumeration hits the cell cap") {
  FpGroup free2;
  free2.ngens = 2;
  CHECK_THROWS_AS(todd_coxeter(free2, {}, 4000), cap_exceeded);
}

TEST_CASE("identical runs produce identical tables") {
  auto a = flatten(todd_coxeter(quaternion8(), {}));
  auto b = flatten(todd_coxeter(quaternion8(), {}));
  CHECK(a == b);
}

TEST_CASE("regular representation carries the group structure") {
  FpGroup c6;
  c6.ngens = 2;
  c6.relators = {{1, 1}, {2, 2, 2}, {1, 2, -1, -2}};
  auto t = todd_coxeter(c6, {});
  CHECK(t.size() == 6);
  auto g = regular_permutation_rep(t);
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());
  CHECK(abelian_invariants_of_group(g) == invariants_from_orders({6}));

  auto q = regular_permutation_rep(todd_coxeter(quaternion8(), {}));
  CHECK(q.order() == 8);
  CHECK_FALSE(q.is_abelian());
  CHECK(derived_subgroup(q).order() == 2);
  CHECK(abelianization(q) == invariants_from_orders({2, 2}));
}

TEST_CASE("point group arithmetic matches the table") {
  PointGroup g(todd_coxeter(sym3(), {}));
  REQUIRE(g.size() == 6);

  CHECK(g.word_of(0).empty());
  for (u32 x = 0; x < g.size(); ++x) {
    CHECK(g.mul(x, 0) == x);
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, g.inv(x)) == 0);
    CHECK(g.mul(g.inv(x), x) == 0);
  }
  for (u32 x = 0; x < g.size(); ++x)
    for (u32 y = 0; y < g.size(); ++y)
      for (u32 z = 0; z < g.size(); ++z)
        CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));

  std::multiset<u64> orders;
  for (u32 x = 0; x < g.size(); ++x) orders.insert(g.element_order(x));
  CHECK(orders == std::multiset<u64>{1, 2, 2, 2, 3, 3});

  PointGroup q(todd_coxeter(quaternion8(), {}));
  std::multiset<u64> qorders;
  for (u32 x = 0; x < q.size(); ++x) qorders.insert(q.element_order(x));
  CHECK(qorders == std::multiset<u64>{1, 2, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("table verification rejects corrupted entries") {
  auto t = todd_coxeter(sym3(), {});
  auto cells = flatten(t);
  std::swap(cells[1], cells[t.cols() + 1]);
  CosetTable bad(t.ngens(), cells);
  CHECK_THROWS_AS(verify_table(bad, sym3(), {}), group_error);
}

TEST_CASE("presentation text round trips") {
  auto fp = sym3();
  auto text = presentation_text(fp, {"a", "b"});
  CHECK(text.find("generators: a b") == 0);
  CHECK(text.find("a^3") != std::string::npos);

  auto back = parse_presentation(text);
  CHECK(back.ngens == fp.ngens);
  REQUIRE(back.relators.size() == fp.relators.size());
  for (std::size_t i = 0; i < fp.relators.size(); ++i) CHECK(back.relators[i] == fp.relators[i]);
  CHECK(todd_coxeter(back, {}).size() == 6);

  auto dflt = parse_presentation(presentation_text(quaternion8()));
  CHECK(todd_coxeter(dflt, {}).size() == 8);
}

TEST_CASE("presentation parsing reports bad input") {
  CHECK_THROWS_AS(parse_presentation(""), group_error);
  CHECK_THROWS_AS(parse_presentation("relators: a"), group_error);
  CHECK_THROWS_AS(parse_presentation("generators: a\nb^2\n"), group_error);
  CHECK_THROWS_AS(parse_presentation("generators: a a\n"), group_error);
  CHECK_THROWS_AS(parse_presentation("generators: a\na^x\n"), group_error);

  auto fp = parse_presentation("generators: r s\nr^-2 s / s^2\n");
  CHECK(fp.ngens == 2);
  REQUIRE(fp.relators.size() == 2);
  CHECK(fp.relators[0] == Word{-1, -1, 2});
  CHECK(fp.relators[1] == Word{2, 2});
}
