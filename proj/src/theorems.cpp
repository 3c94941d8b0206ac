#include "tensorsq/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tensorsq {

namespace {

// BFS labeling of src's table where symbol column s carries the target point
// col_img[s]; checking every edge makes the labeling a point homomorphism
std::vector<u32> induced_point_map(const PointGroup& src, const PointGroup& dst,
                                   const std::vector<u32>& col_img) {
  const CosetTable& tab = src.table();
  const u32 npts = src.size();
  const u32 ncols = tab.cols();
  std::vector<u32> full(ncols);
  for (u32 s = 0; s < ncols / 2; ++s) {
    full[2 * s] = col_img[s];
    full[2 * s + 1] = dst.inv(col_img[s]);
  }
  std::vector<u32> img(npts, UINT32_MAX);
  img[0] = 0;
  std::vector<u32> queue{0};
  queue.reserve(npts);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    u32 x = queue[qi];
    for (u32 c = 0; c < ncols; ++c) {
      u32 y = tab.act_col(x, c);
      u32 v = dst.mul(img[x], full[c]);
      if (img[y] == UINT32_MAX) {
        img[y] = v;
        queue.push_back(y);
      } else if (img[y] != v) {
        throw group_error("column images do not induce a map on the table");
      }
    }
  }
  for (u32 v : img)
    if (v == UINT32_MAX) throw group_error("point table is not transitive");
  return img;
}

std::vector<char> membership(const PointGroup& sq, const std::vector<u32>& pts) {
  std::vector<char> in(sq.size(), 0);
  for (u32 p : pts) in[p] = 1;
  return in;
}

// smallest point of the coset y * members; members must hold a subgroup's points
u32 coset_rep(const PointGroup& sq, const std::vector<u32>& members, u32 y) {
  u32 best = UINT32_MAX;
  for (u32 w : members) best = std::min(best, sq.mul(y, w));
  return best;
}

bool exact_quotient(u64 num, u64 den, u64& out) {
  if (den == 0 || num % den != 0) return false;
  out = num / den;
  return true;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::not_applicable: return "not applicable";
  }
  return "?";
}

DecompositionReport verify_semidirect_decomposition(const FiniteGroup& n, const FiniteGroup& h,
                                                    const std::vector<ElementAuto>& action,
                                                    const TensorSquareOptions& opt) {
  DecompositionReport rep;
  SemidirectResult sd = semidirect_product(n, h, action);
  const FiniteGroup& g = sd.group;
  rep.group_order = g.order();

  TensorSquare tg = tensor_square(g, opt);
  TensorSquare th = tensor_square(h, opt);
  const u32 ng = g.size_u32();
  const u32 nh = h.size_u32();

  std::vector<u32> pidx(ng);
  for (u32 a = 0; a < ng; ++a) pidx[a] = sd.project_h.apply_idx(a);
  std::vector<u32> pcols(std::size_t(ng) * ng);
  for (u32 a = 0; a < ng; ++a)
    for (u32 b = 0; b < ng; ++b) pcols[std::size_t(a) * ng + b] = th.lambda(pidx[a], pidx[b]);
  std::vector<u32> m = induced_point_map(tg.square, th.square, pcols);

  auto in_nabla_h = membership(th.square, th.nabla_points);
  auto in_delta_h = membership(th.square, th.delta_points);
  u64 pre_zero = 0, pre_nabla = 0, pre_delta = 0;
  for (u32 x = 0; x < tg.square.size(); ++x) {
    if (m[x] == 0) ++pre_zero;
    if (in_nabla_h[m[x]]) ++pre_nabla;
    if (in_delta_h[m[x]]) ++pre_delta;
  }

  rep.kernel_tensor = pre_zero;
  rep.tensor_identity = tg.order() == pre_zero * th.order();

  bool ok_ext = exact_quotient(pre_nabla, tg.nabla_order(), rep.kernel_exterior);
  rep.exterior_identity =
      ok_ext && tg.exterior_order() == rep.kernel_exterior * th.exterior_order();

  for (u32 p : tg.nabla_points)
    if (m[p] == 0) ++rep.kernel_nabla;
  rep.nabla_identity = tg.nabla_order() == rep.kernel_nabla * th.nabla_order();

  for (u32 p : tg.delta_points)
    if (m[p] == 0) ++rep.kernel_delta;
  rep.delta_identity = tg.delta_order() == rep.kernel_delta * th.delta_order();

  bool ok_sym = exact_quotient(pre_delta, tg.delta_order(), rep.kernel_symmetric);
  rep.symmetric_identity =
      ok_sym && tg.symmetric_order() == rep.kernel_symmetric * th.symmetric_order();

  std::vector<u32> hidx(nh);
  for (u32 u = 0; u < nh; ++u) hidx[u] = sd.embed_h.apply_idx(u);
  std::vector<u32> scols(std::size_t(nh) * nh);
  for (u32 u = 0; u < nh; ++u)
    for (u32 v = 0; v < nh; ++v) scols[std::size_t(u) * nh + v] = tg.lambda(hidx[u], hidx[v]);
  try {
    std::vector<u32> s = induced_point_map(th.square, tg.square, scols);
    rep.section_is_homomorphism = true;
    rep.section_splits = true;
    for (u32 y = 0; y < th.square.size(); ++y)
      if (m[s[y]] != y) {
        rep.section_splits = false;
        rep.detail = "section composed with the projection is not the identity";
        break;
      }
  } catch (const group_error& e) {
    rep.section_is_homomorphism = false;
    rep.detail = e.what();
  }

  bool all = rep.tensor_identity && rep.exterior_identity && rep.nabla_identity &&
             rep.delta_identity && rep.symmetric_identity && rep.section_is_homomorphism &&
             rep.section_splits;
  rep.status = all ? CheckStatus::passed : CheckStatus::failed;
  return rep;
}

SplittingWitness odd_splitting(const TensorSquare& t) {
  SplittingWitness w;
  const PointGroup& sq = t.square;
  const u32 n = t.n;

  u64 m = 1;
  for (u32 a = 0; a < n; ++a) m = std::lcm(m, sq.element_order(t.lambda(a, a)));
  w.diagonal_exponent = m;
  if (m % 2 == 0) {
    w.detail = "a diagonal symbol has even order";
    return w;
  }

  const u64 half = (m - 1) / 2;
  std::vector<u32> alpha(std::size_t(n) * n);
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b) {
      u32 step = sq.inv(sq.mul(t.lambda(a, b), t.lambda(b, a)));
      u32 p = 0;
      for (u64 k = 0; k < half; ++k) p = sq.mul(p, step);
      alpha[std::size_t(a) * n + b] = p;
    }

  FpGroup fp = tensor_square_presentation(t.group);
  w.homomorphism = true;
  for (const Word& r : fp.relators) {
    u32 acc = 0;
    for (i32 letter : r) {
      u32 s = static_cast<u32>(letter > 0 ? letter : -letter) - 1;
      u32 v = alpha[s];
      if (letter < 0) v = sq.inv(v);
      acc = sq.mul(acc, v);
    }
    if (acc != 0) {
      w.homomorphism = false;
      break;
    }
  }

  auto in_nabla = membership(sq, t.nabla_points);
  w.lands_in_diagonal =
      std::all_of(alpha.begin(), alpha.end(), [&](u32 p) { return in_nabla[p] != 0; });
  w.fixes_diagonal = true;
  for (u32 a = 0; a < n; ++a)
    if (alpha[std::size_t(a) * n + a] != t.lambda(a, a)) {
      w.fixes_diagonal = false;
      break;
    }
  w.nabla_equals_delta = t.nabla_points == t.delta_points;
  w.order_identity = t.order() == t.nabla_order() * t.exterior_order();
  auto hi = homotopy_invariants(t);
  w.stable_matches_homology = hi.pi2s == hi.h2;

  bool all = w.homomorphism && w.lands_in_diagonal && w.fixes_diagonal && w.nabla_equals_delta &&
             w.order_identity && w.stable_matches_homology;
  w.status = all ? CheckStatus::passed : CheckStatus::failed;
  return w;
}

ComplementReport verify_complement_case(const TensorSquare& t) {
  ComplementReport rep;
  const FiniteGroup& g = t.group;
  Subgroup der = derived_subgroup(g);
  if (!find_complement(g, der)) {
    rep.detail = "derived subgroup has no complement";
    return rep;
  }
  AbelianSubquotients ab = abelian_subquotients(abelianization(g));
  rep.nabla_matches = point_group_invariants(t.square, t.nabla_points) == ab.nabla;
  rep.delta_matches = point_group_invariants(t.square, t.delta_points) == ab.delta;
  rep.order_identity = t.order() == t.nabla_order() * t.exterior_order();
  bool all = rep.nabla_matches && rep.delta_matches && rep.order_identity;
  rep.status = all ? CheckStatus::passed : CheckStatus::failed;
  return rep;
}

ComplementReport verify_complement_case(const FiniteGroup& g, const TensorSquareOptions& opt) {
  Subgroup der = derived_subgroup(g);
  if (!find_complement(g, der)) {
    ComplementReport rep;
    rep.detail = "derived subgroup has no complement";
    return rep;
  }
  return verify_complement_case(tensor_square(g, opt));
}

AbelianInvariants pi2s_closed_form(const AbelianInvariants& gab, const AbelianInvariants& h2) {
  u32 extra = gab.rank + gab.even_factor_count();
  return direct_sum(h2, invariants_from_orders(std::vector<u64>(extra, 2)));
}

BoundReport green_bound_check(const FiniteGroup& g, const AbelianInvariants& measured_pi2s) {
  BoundReport rep;
  u64 rem = g.order();
  for (u64 p = 2; p * p <= rem; ++p) {
    if (rem % p != 0) continue;
    u32 a = 0;
    while (rem % p == 0) {
      rem /= p;
      ++a;
    }
    rep.factorization.emplace_back(p, a);
  }
  if (rem > 1) rep.factorization.emplace_back(rem, 1);

  AbelianInvariants gab = abelianization(g);
  rep.rank = gab.rank;
  rep.even_factors = gab.even_factor_count();
  bigint bound = bigint(1) << (rep.rank + rep.even_factors);
  for (auto [p, a] : rep.factorization)
    for (u32 i = 0; i < a * (a - 1) / 2; ++i) bound *= p;
  rep.bound = bound;
  rep.measured = measured_pi2s.torsion_order();
  rep.status = rep.measured <= rep.bound ? CheckStatus::passed : CheckStatus::failed;
  return rep;
}

SequenceReport verify_perfect_normal_sequences(const FiniteGroup& g, const Subgroup& n,
                                               const TensorSquareOptions& opt) {
  SequenceReport rep;
  if (!n.normal && !is_normal_in(g, n.sub)) {
    rep.detail = "subgroup is not normal";
    return rep;
  }
  if (derived_subgroup(n.sub).order() != n.sub.order()) {
    rep.detail = "subgroup is not perfect";
    return rep;
  }

  Quotient q = quotient_group(g, n);
  TensorSquare tn = tensor_square(n.sub, opt);
  TensorSquare tg = tensor_square(g, opt);
  TensorSquare tq = tensor_square(q.group, opt);

  const u32 nn = n.sub.size_u32();
  const u32 ng = g.size_u32();
  std::vector<u32> inc(nn);
  for (u32 i = 0; i < nn; ++i) inc[i] = g.element_index(n.sub.elements()[i]);
  std::vector<u32> jcols(std::size_t(nn) * nn);
  for (u32 a = 0; a < nn; ++a)
    for (u32 b = 0; b < nn; ++b) jcols[std::size_t(a) * nn + b] = tg.lambda(inc[a], inc[b]);
  std::vector<u32> jmap = induced_point_map(tn.square, tg.square, jcols);

  std::vector<u32> qidx(ng);
  for (u32 i = 0; i < ng; ++i) qidx[i] = q.projection.apply_idx(i);
  std::vector<u32> pcols(std::size_t(ng) * ng);
  for (u32 a = 0; a < ng; ++a)
    for (u32 b = 0; b < ng; ++b) pcols[std::size_t(a) * ng + b] = tq.lambda(qidx[a], qidx[b]);
  std::vector<u32> pmap = induced_point_map(tg.square, tq.square, pcols);

  {
    std::set<u32> image_n;
    for (u32 x : tn.j_points) image_n.insert(jmap[x]);
    std::set<u32> ker_mid, image_right;
    for (u32 y : tg.j_points) {
      if (pmap[y] == 0) ker_mid.insert(y);
      image_right.insert(pmap[y]);
    }
    std::set<u32> jq(tq.j_points.begin(), tq.j_points.end());
    rep.pi3_level = image_right == jq && ker_mid == image_n;
  }

  auto layer = [&](const std::vector<u32>& sub_g, const std::vector<u32>& sub_q) {
    auto in_sub_q = membership(tq.square, sub_q);
    std::set<u32> image_n;
    for (u32 x : tn.j_points) image_n.insert(coset_rep(tg.square, sub_g, jmap[x]));
    std::set<u32> ker_mid, image_right, target;
    for (u32 y : tg.j_points) {
      if (in_sub_q[pmap[y]]) ker_mid.insert(coset_rep(tg.square, sub_g, y));
      image_right.insert(coset_rep(tq.square, sub_q, pmap[y]));
    }
    for (u32 z : tq.j_points) target.insert(coset_rep(tq.square, sub_q, z));
    return image_right == target && ker_mid == image_n;
  };

  rep.h2_level = layer(tg.nabla_points, tq.nabla_points);
  rep.pi2s_level = layer(tg.delta_points, tq.delta_points);

  bool all = rep.pi3_level && rep.h2_level && rep.pi2s_level;
  rep.status = all ? CheckStatus::passed : CheckStatus::failed;
  return rep;
}

}  // namespace tensorsq
