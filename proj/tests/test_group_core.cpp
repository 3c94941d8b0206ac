#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tensorsq/finite_group.hpp"

using namespace tensorsq;

namespace {

FiniteGroup sym(u32 n) {
  std::vector<u32> cyc(n);
  for (u32 i = 0; i < n; ++i) cyc[i] = i;
  return FiniteGroup(n, {Permutation::from_cycles(n, {cyc}), Permutation::from_cycles(n, {{0, 1}})});
}

FiniteGroup alt4() {
  return FiniteGroup(4, {Permutation::from_cycles(4, {{0, 1, 2}}),
                         Permutation::from_cycles(4, {{1, 2, 3}})});
}

FiniteGroup cyclic(u32 n) {
  std::vector<u32> cyc(n);
  for (u32 i = 0; i < n; ++i) cyc[i] = i;
  return FiniteGroup(n, {Permutation::from_cycles(n, {cyc})});
}

FiniteGroup klein4() {
  return FiniteGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

}  // namespace

TEST_CASE("composition applies left factor first") {
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  auto c = a * b;
  CHECK(c[0] == 2);
  CHECK(c[2] == 1);
  CHECK(c.cycle_string() == "(1 3 2)");
  CHECK((a * a).is_identity());
  CHECK(a.inverse() == a);
  CHECK(Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}}).order() == 6);
}

TEST_CASE("group orders") {
  CHECK(sym(3).order() == 6);
  CHECK(sym(4).order() == 24);
  CHECK(sym(5).order() == 120);
  CHECK(alt4().order() == 12);
  CHECK(cyclic(6).order() == 6);
  CHECK(klein4().order() == 4);
  CHECK(FiniteGroup().order() == 1);
  CHECK(FiniteGroup(5, {}).is_trivial());
}

TEST_CASE("membership") {
  auto s4 = sym(4);
  auto a4 = alt4();
  auto t = Permutation::from_cycles(4, {{0, 1}});
  CHECK(s4.contains(t));
  CHECK_FALSE(a4.contains(t));
  CHECK(a4.contains(Permutation::from_cycles(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(s4.contains(Permutation::identity(5)));
}

TEST_CASE("element enumeration is canonical") {
  auto g1 = sym(4);
  auto g2 = sym(4);
  const auto& e1 = g1.elements();
  const auto& e2 = g2.elements();
  REQUIRE(e1.size() == 24);
  CHECK(e1 == e2);
  CHECK(e1[0].is_identity());
  for (std::size_t i = 0; i < e1.size(); ++i)
    for (std::size_t j = i + 1; j < e1.size(); ++j) CHECK_FALSE(e1[i] == e1[j]);
}

TEST_CASE("index arithmetic matches permutation arithmetic") {
  for (const auto& g : {sym(4), sym(6)}) {  // table path and hash path
    const auto& e = g.elements();
    const u32 n = g.size_u32();
    for (u32 a = 0; a < n; a += 7)
      for (u32 b = 0; b < n; b += 11) {
        CHECK(e[g.mul(a, b)] == e[a] * e[b]);
      }
    for (u32 a = 0; a < n; a += 5) {
      CHECK(e[g.inv(a)] == e[a].inverse());
      CHECK(g.element_order_idx(a) == e[a].order());
    }
  }
}

TEST_CASE("abelian detection") {
  CHECK(cyclic(6).is_abelian());
  CHECK(klein4().is_abelian());
  CHECK_FALSE(sym(3).is_abelian());
}

TEST_CASE("derived subgroups") {
  CHECK(derived_subgroup(sym(3)).order() == 3);
  CHECK(derived_subgroup(sym(4)).order() == 12);
  CHECK(derived_subgroup(alt4()).order() == 4);
  CHECK(derived_subgroup(cyclic(6)).order() == 1);
  auto d = derived_subgroup(sym(4));
  CHECK(d.normal);
  CHECK(d.sub.contains(Permutation::from_cycles(4, {{0, 1, 2}})));
}

TEST_CASE("normal closure and subgroup predicates") {
  auto s4 = sym(4);
  CHECK(normal_closure(s4, {Permutation::from_cycles(4, {{0, 1}})}).order() == 24);
  auto v = normal_closure(s4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  CHECK(v.order() == 4);
  CHECK(v.index() == 6);

  auto line = subgroup_generated(s4, {Permutation::from_cycles(4, {{0, 1}})});
  CHECK(line.order() == 2);
  CHECK_FALSE(line.normal);
  CHECK_THROWS_AS(subgroup_generated(alt4(), {Permutation::from_cycles(4, {{0, 1}})}),
                  group_error);
}

TEST_CASE("quotients") {
  auto s4 = sym(4);
  auto v = normal_closure(s4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  auto q = quotient_group(s4, v);
  CHECK(q.group.order() == 6);
  CHECK_FALSE(q.group.is_abelian());
  q.projection.verify();
  CHECK(q.projection.kernel().order() == 4);
  CHECK(q.projection.is_surjective());

  auto a4 = subgroup_generated(s4, {Permutation::from_cycles(4, {{0, 1, 2}}),
                                    Permutation::from_cycles(4, {{1, 2, 3}})});
  CHECK(quotient_group(s4, a4).group.order() == 2);
  CHECK(quotient_group(s4, trivial_subgroup(s4)).group.order() == 24);

  CHECK_THROWS_AS(quotient_group(s4, subgroup_generated(
                                         s4, {Permutation::from_cycles(4, {{0, 1}})})),
                  group_error);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(sym(3)) == invariants_from_orders({2}));
  CHECK(abelianization(sym(4)) == invariants_from_orders({2}));
  CHECK(abelianization(alt4()) == invariants_from_orders({3}));
  CHECK(abelianization(cyclic(6)) == invariants_from_orders({6}));
  CHECK(abelianization(klein4()) == invariants_from_orders({2, 2}));
  CHECK(abelianization(FiniteGroup()).is_trivial());
  CHECK_THROWS_AS(abelian_invariants_of_quotient(sym(4), trivial_subgroup(sym(4))), group_error);
}

TEST_CASE("homomorphisms") {
  auto s3 = sym(3);
  auto c2 = cyclic(2);
  GroupHomomorphism sign(s3, c2, {c2.identity(), Permutation::from_cycles(2, {{0, 1}})});
  sign.verify();
  CHECK(sign.kernel().order() == 3);
  CHECK(sign.kernel().normal);
  CHECK(sign.is_surjective());
  CHECK(sign.apply(Permutation::from_cycles(3, {{0, 2}})) ==
        Permutation::from_cycles(2, {{0, 1}}));

  GroupHomomorphism bad(s3, cyclic(3),
                        {Permutation::from_cycles(3, {{0, 1, 2}}), cyclic(3).identity()});
  CHECK_THROWS_AS(bad.verify(), group_error);
}

TEST_CASE("automorphism groups") {
  CHECK(all_automorphisms(klein4()).size() == 6);
  CHECK(all_automorphisms(cyclic(6)).size() == 2);
  CHECK(all_automorphisms(sym(3)).size() == 6);
  CHECK(all_automorphisms(cyclic(7)).size() == 6);

  auto c4 = cyclic(4);
  ElementAuto inv_map(4);
  for (u32 x = 0; x < 4; ++x) inv_map[x] = c4.inv(x);
  auto a = automorphism_from_images(c4, {c4.inv(c4.generator_indices()[0])});
  CHECK(a == inv_map);
  // generator of order 4 cannot land on an element of order 2
  CHECK_THROWS_AS(automorphism_from_images(c4, {c4.mul(c4.generator_indices()[0],
                                                       c4.generator_indices()[0])}),
                  group_error);
}

TEST_CASE("semidirect products") {
  auto c3 = cyclic(3);
  auto c2 = cyclic(2);
  ElementAuto invert3(3);
  for (u32 x = 0; x < 3; ++x) invert3[x] = c3.inv(x);

  auto sd = semidirect_product(c3, c2, {invert3});
  CHECK(sd.group.order() == 6);
  CHECK_FALSE(sd.group.is_abelian());
  sd.embed_n.verify();
  sd.embed_h.verify();
  sd.project_h.verify();
  CHECK(sd.embed_n.kernel().order() == 1);
  CHECK(sd.project_h.kernel().order() == 3);
  CHECK(sd.project_h.is_surjective());

  ElementAuto ident3{0, 1, 2};
  CHECK(semidirect_product(c3, c2, {ident3}).group.is_abelian());

  auto c7 = cyclic(7);
  ElementAuto square7(7);
  for (u32 x = 0; x < 7; ++x) square7[x] = c7.mul(x, x);
  auto frob = semidirect_product(c7, cyclic(3), {square7});
  CHECK(frob.group.order() == 21);
  CHECK_FALSE(frob.group.is_abelian());

  // inversion has order 2, so it is no action of a 3 element group
  CHECK_THROWS_AS(semidirect_product(c3, cyclic(3), {invert3}), group_error);
}

TEST_CASE("complements") {
  auto s3 = sym(3);
  auto a3 = derived_subgroup(s3);
  auto b = find_complement(s3, a3);
  REQUIRE(b.has_value());
  CHECK(b->order() == 2);

  auto s4 = sym(4);
  auto v = normal_closure(s4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  auto c = find_complement(s4, v);
  REQUIRE(c.has_value());
  CHECK(c->order() == 6);

  auto c4 = cyclic(4);
  auto half = subgroup_generated(c4, {c4.elements()[c4.mul(c4.generator_indices()[0],
                                                           c4.generator_indices()[0])]});
  CHECK(half.order() == 2);
  CHECK_FALSE(find_complement(c4, half).has_value());

  CHECK(find_complement(s4, subgroup_generated(s4, s4.generators()))->order() == 1);
}

TEST_CASE("conjugation gives compatible mutual actions") {
  for (const auto& g : {sym(3), alt4(), klein4()}) {
    auto pair = conjugation_pair(g);
    auto rep = check_compatible_actions(pair);
    CHECK(rep.compatible);
    CHECK_FALSE(rep.witness.has_value());
  }
}

TEST_CASE("incompatible actions produce a witness") {
  auto c2 = cyclic(2);
  auto s3 = sym(3);
  const u32 n3 = s3.size_u32();

  // C2 twists S3 by conjugation with a transposition, S3 acts trivially on C2
  u32 t = s3.element_index(Permutation::from_cycles(3, {{0, 1}}));
  ElementAuto twist(n3);
  for (u32 x = 0; x < n3; ++x) twist[x] = s3.conj(t, x);
  ElementAuto id2{0, 1};

  auto pair = make_action_pair(c2, s3, {twist}, {id2, id2});
  auto rep = check_compatible_actions(pair);
  REQUIRE_FALSE(rep.compatible);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->equation == "h-side");
  CHECK(rep.witness->lhs != rep.witness->rhs);

  auto rep2 = check_compatible_actions(make_action_pair(c2, s3, {twist}, {id2, id2}));
  REQUIRE(rep2.witness.has_value());
  CHECK(rep2.witness->outer == rep.witness->outer);
  CHECK(rep2.witness->operand == rep.witness->operand);
}

TEST_CASE("non automorphism action maps are rejected") {
  auto c4 = cyclic(4);
  ElementAuto bad{0, 2, 1, 3};
  CHECK_THROWS_AS(make_action_pair(c4, c4, {bad}, {bad}), group_error);
}
