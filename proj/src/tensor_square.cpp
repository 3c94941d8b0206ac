#include "tensorsq/tensor_square.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tensorsq/abelian_structure.hpp"

namespace tensorsq {

namespace {

constexpr u32 kNone = UINT32_MAX;

u64 to_u64(const bigint& v, const char* what) {
  if (v < 0 || v > bigint(UINT64_MAX)) throw cap_exceeded(std::string(what) + " exceeds 64 bits");
  return v.convert_to<u64>();
}

// point -> element id, spread from 0 over the whole table and then checked on
// every edge, so the result is a homomorphism by construction
std::vector<u32> label_by_columns(const FiniteGroup& g, const CosetTable& tab,
                                  const std::vector<u32>& col_img) {
  std::vector<u32> out(tab.size(), kNone);
  out[0] = 0;
  std::deque<u32> queue{0};
  while (!queue.empty()) {
    u32 x = queue.front();
    queue.pop_front();
    for (u32 col = 0; col < tab.cols(); ++col) {
      u32 y = tab.act_col(x, col);
      if (out[y] != kNone) continue;
      out[y] = g.mul(out[x], col_img[col]);
      queue.push_back(y);
    }
  }
  for (u32 x = 0; x < tab.size(); ++x)
    for (u32 col = 0; col < tab.cols(); ++col)
      if (out[tab.act_col(x, col)] != g.mul(out[x], col_img[col]))
        throw group_error("element labels disagree across the table");
  return out;
}

// short generating sequence of an abelian subgroup given as a point set;
// validates along the way that the set really is closed and commutative-spanned
std::vector<u32> greedy_abelian_gens(const PointGroup& t, const std::vector<u32>& members) {
  std::vector<bool> is_member(t.size(), false);
  for (u32 m : members) is_member[m] = true;
  std::vector<bool> in(t.size(), false);
  in[0] = true;
  std::vector<u32> span{0};
  std::vector<u32> gens;
  for (u32 cand : members) {
    if (in[cand]) continue;
    gens.push_back(cand);
    std::size_t base_count = span.size();
    u32 pw = cand;
    while (!in[pw]) {
      for (std::size_t s = 0; s < base_count; ++s) {
        u32 x = t.mul(span[s], pw);
        if (!is_member[x]) throw group_error("subgroup points not closed under products");
        if (!in[x]) {
          in[x] = true;
          span.push_back(x);
        }
      }
      pw = t.mul(pw, cand);
    }
  }
  if (span.size() != members.size()) throw group_error("generating scan missed part of the subgroup");
  return gens;
}

}  // namespace

FpGroup tensor_square_presentation(const FiniteGroup& g, u64 group_cap) {
  const u64 order = g.order();
  if (order > group_cap) throw cap_exceeded("group order exceeds the tensor presentation cap");
  if (order > FiniteGroup::kTableLimit)
    throw cap_exceeded("tensor presentation needs the dense multiplication table");
  const u32 n = g.size_u32();
  auto letter = [n](u32 a, u32 b) { return static_cast<i32>(a * n + b) + 1; };

  FpGroup fp;
  fp.ngens = n * n;
  fp.relators.reserve(2ull * n * n * n);
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b)
      for (u32 c = 0; c < n; ++c) {
        fp.relators.push_back(
            {-letter(g.mul(a, b), c), letter(g.conj(a, b), g.conj(a, c)), letter(a, c)});
        fp.relators.push_back(
            {-letter(a, g.mul(b, c)), letter(a, b), letter(g.conj(b, a), g.conj(b, c))});
      }
  return fp;
}

std::vector<std::string> tensor_symbol_names(const FiniteGroup& g) {
  const u32 n = g.size_u32();
  std::vector<std::string> names;
  names.reserve(std::size_t(n) * n);
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b) names.push_back("t" + std::to_string(a) + "_" + std::to_string(b));
  return names;
}

TensorSquare tensor_square(const FiniteGroup& g, const TensorSquareOptions& opt) {
  FpGroup fp = tensor_square_presentation(g, opt.group_cap);
  const u32 n = g.size_u32();
  PointGroup t(todd_coxeter(fp, {}, opt.max_cells));
  const CosetTable& tab = t.table();

  std::vector<u32> pair_point(std::size_t(n) * n);
  for (u32 s = 0; s < n * n; ++s) pair_point[s] = tab.act_col(0, 2 * s);

  std::vector<u32> col_img(tab.cols());
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b) {
      u32 c = g.comm(a, b);
      col_img[2 * (a * n + b)] = c;
      col_img[2 * (a * n + b) + 1] = g.inv(c);
    }
  std::vector<u32> kappa = label_by_columns(g, tab, col_img);

  Subgroup der = derived_subgroup(g);
  std::vector<u32> derived_ids;
  for (const Permutation& p : der.sub.elements()) derived_ids.push_back(g.element_index(p));
  std::sort(derived_ids.begin(), derived_ids.end());

  {
    std::set<u32> image(kappa.begin(), kappa.end());
    if (!std::equal(image.begin(), image.end(), derived_ids.begin(), derived_ids.end()) ||
        image.size() != derived_ids.size())
      throw group_error("commutator image does not match the derived subgroup");
  }

  auto lam = [&](u32 a, u32 b) { return pair_point[std::size_t(a) * n + b]; };
  for (u32 x : derived_ids) {
    if (lam(x, x) != 0) throw group_error("diagonal of a commutator is not trivial");
    for (u32 a = 0; a < n; ++a)
      if (t.mul(lam(x, a), lam(a, x)) != 0)
        throw group_error("commutator pairing is not antisymmetric");
  }

  std::vector<u32> j_points;
  for (u32 p = 0; p < t.size(); ++p)
    if (kappa[p] == 0) j_points.push_back(p);

  std::set<u32> nabla_gen_set, delta_gen_set;
  for (u32 a = 0; a < n; ++a) {
    nabla_gen_set.insert(lam(a, a));
    for (u32 b = 0; b < n; ++b) delta_gen_set.insert(t.mul(lam(a, b), lam(b, a)));
  }
  std::vector<u32> nabla_points =
      point_span(t, std::vector<u32>(nabla_gen_set.begin(), nabla_gen_set.end()));
  std::vector<u32> delta_points =
      point_span(t, std::vector<u32>(delta_gen_set.begin(), delta_gen_set.end()));

  if (!std::includes(nabla_points.begin(), nabla_points.end(), delta_points.begin(),
                     delta_points.end()) ||
      !std::includes(j_points.begin(), j_points.end(), nabla_points.begin(), nabla_points.end()))
    throw group_error("subgroup chain delta <= nabla <= j is broken");
  if (t.size() != u64(j_points.size()) * derived_ids.size())
    throw group_error("kernel and image orders do not multiply to the group order");
  if (j_points.size() % nabla_points.size() != 0 || j_points.size() % delta_points.size() != 0)
    throw group_error("subgroup orders do not divide the kernel order");

  {
    std::set<u32> symset(pair_point.begin(), pair_point.end());
    std::vector<u32> symbols(symset.begin(), symset.end());
    for (u32 j : greedy_abelian_gens(t, j_points))
      for (u32 s : symbols)
        if (t.mul(j, s) != t.mul(s, j)) throw group_error("kernel is not central");
  }

  for (u32 gi : g.generator_indices()) {
    std::vector<u32> colmap(tab.cols());
    for (u32 a = 0; a < n; ++a)
      for (u32 b = 0; b < n; ++b) {
        u32 s2 = g.conj(gi, a) * n + g.conj(gi, b);
        colmap[2 * (a * n + b)] = 2 * s2;
        colmap[2 * (a * n + b) + 1] = 2 * s2 + 1;
      }
    std::vector<u32> sigma(t.size(), kNone);
    sigma[0] = 0;
    std::deque<u32> queue{0};
    while (!queue.empty()) {
      u32 x = queue.front();
      queue.pop_front();
      for (u32 col = 0; col < tab.cols(); ++col) {
        u32 y = tab.act_col(x, col);
        if (sigma[y] != kNone) continue;
        sigma[y] = tab.act_col(sigma[x], colmap[col]);
        queue.push_back(y);
      }
    }
    for (u32 x = 0; x < t.size(); ++x)
      for (u32 col = 0; col < tab.cols(); ++col)
        if (sigma[tab.act_col(x, col)] != tab.act_col(sigma[x], colmap[col]))
          throw group_error("conjugation does not act on the table");
    for (u32 j : j_points)
      if (sigma[j] != j) throw group_error("conjugation moves a kernel element");
  }

  return TensorSquare{g,
                      n,
                      std::move(t),
                      std::move(pair_point),
                      std::move(kappa),
                      std::move(j_points),
                      std::move(nabla_points),
                      std::move(delta_points),
                      std::move(derived_ids)};
}

std::vector<u32> point_span(const PointGroup& t, const std::vector<u32>& gens) {
  std::vector<bool> in(t.size(), false);
  in[0] = true;
  std::deque<u32> queue{0};
  while (!queue.empty()) {
    u32 p = queue.front();
    queue.pop_front();
    for (u32 d : gens) {
      u32 x = t.mul(p, d);
      if (!in[x]) {
        in[x] = true;
        queue.push_back(x);
      }
    }
  }
  std::vector<u32> out;
  for (u32 p = 0; p < t.size(); ++p)
    if (in[p]) out.push_back(p);
  return out;
}

AbelianInvariants point_group_invariants(const PointGroup& t, const std::vector<u32>& members) {
  if (members.empty() || members[0] != 0)
    throw group_error("subgroup point set must contain the identity point");
  std::vector<u32> id(t.size(), kNone);
  for (u32 i = 0; i < members.size(); ++i) id[members[i]] = i;
  return abelian_invariants_blackbox(
      static_cast<u32>(members.size()), 0, [&](u32 a, u32 b) {
        u32 r = id[t.mul(members[a], members[b])];
        if (r == kNone) throw group_error("subgroup points not closed under products");
        return r;
      });
}

AbelianInvariants point_quotient_invariants(const PointGroup& t, const std::vector<u32>& ambient,
                                            const std::vector<u32>& sub) {
  if (ambient.empty() || ambient[0] != 0)
    throw group_error("ambient point set must contain the identity point");
  if (sub.empty()) throw group_error("empty subgroup point set");
  std::vector<u32> label(t.size(), kNone);
  std::vector<u32> reps;
  for (u32 p : ambient) {
    if (label[p] != kNone) continue;
    u32 id = static_cast<u32>(reps.size());
    reps.push_back(p);
    for (u32 s : sub) {
      u32 q = t.mul(p, s);
      if (label[q] != kNone) throw group_error("cosets overlap");
      label[q] = id;
    }
  }
  if (reps.size() * sub.size() != ambient.size())
    throw group_error("cosets do not partition the ambient subgroup");
  return abelian_invariants_blackbox(
      static_cast<u32>(reps.size()), 0, [&](u32 a, u32 b) {
        u32 q = label[t.mul(reps[a], reps[b])];
        if (q == kNone) throw group_error("coset product left the ambient subgroup");
        return q;
      });
}

HomotopyInvariants homotopy_invariants(const TensorSquare& ts) {
  HomotopyInvariants h;
  h.group_order = ts.group.order();
  h.derived_order = ts.derived_order();
  h.gab = abelianization(ts.group);
  h.tensor_order = ts.order();
  h.j_order = ts.j_order();
  h.nabla_order = ts.nabla_order();
  h.delta_order = ts.delta_order();
  h.exterior_order = ts.exterior_order();
  h.symmetric_order = ts.symmetric_order();
  h.pi3 = point_group_invariants(ts.square, ts.j_points);
  h.h2 = point_quotient_invariants(ts.square, ts.j_points, ts.nabla_points);
  h.pi2s = point_quotient_invariants(ts.square, ts.j_points, ts.delta_points);
  h.method_used = SquareMethod::presentation;

  if (h.pi3.torsion_order() != h.j_order || h.pi3.rank != 0)
    throw group_error("kernel invariants do not match its order");
  if (h.exterior_order != h.h2.torsion_order() * h.derived_order)
    throw group_error("wedge order does not factor through the multiplier");
  if (h.symmetric_order != h.pi2s.torsion_order() * h.derived_order)
    throw group_error("symmetric product order does not factor through its kernel");
  return h;
}

static HomotopyInvariants closed_form_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw group_error("closed form applies to abelian groups only");
  AbelianInvariants a = abelian_invariants_of_group(g);
  AbelianSubquotients sq = abelian_subquotients(a);
  HomotopyInvariants h;
  h.group_order = g.order();
  h.derived_order = 1;
  h.gab = a;
  h.pi3 = sq.tensor;
  h.h2 = sq.exterior;
  h.pi2s = sq.symmetric;
  h.tensor_order = to_u64(sq.tensor.torsion_order(), "tensor square order");
  h.j_order = h.tensor_order;
  h.nabla_order = to_u64(sq.nabla.torsion_order(), "diagonal subgroup order");
  h.delta_order = to_u64(sq.delta.torsion_order(), "symmetrized subgroup order");
  h.exterior_order = to_u64(sq.exterior.torsion_order(), "wedge order");
  h.symmetric_order = to_u64(sq.symmetric.torsion_order(), "symmetric product order");
  h.method_used = SquareMethod::closed_form;
  return h;
}

HomotopyInvariants homotopy_invariants(const FiniteGroup& g, SquareMethod method,
                                       const TensorSquareOptions& opt) {
  if (method == SquareMethod::automatic)
    method = g.is_abelian() ? SquareMethod::closed_form : SquareMethod::presentation;
  if (method == SquareMethod::closed_form) return closed_form_invariants(g);
  return homotopy_invariants(tensor_square(g, opt));
}

}  // namespace tensorsq
