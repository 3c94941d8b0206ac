#include "tensorsq/finite_group.hpp"

#include <algorithm>
#include <deque>

#include "tensorsq/abelian_structure.hpp"
#include "tensorsq/permkernel.hpp"

namespace tensorsq {

namespace {

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw cap_exceeded("group order exceeds 64 bits");
  return r;
}

}  // namespace

StabilizerChain::StabilizerChain(u32 degree, const std::vector<Permutation>& gens)
    : degree_(degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw group_error("generator degree mismatch");
    if (!g.is_identity()) insert_strong(g);
  }
  close();
}

void StabilizerChain::rebuild_orbit(Level& lv) const {
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.transversal.emplace(lv.base_point, Permutation::identity(degree_));
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    u32 u = lv.orbit[i];
    for (const auto& s : lv.gens) {
      u32 v = s[u];
      if (!lv.transversal.count(v)) {
        lv.orbit.push_back(v);
        lv.transversal.emplace(v, lv.transversal.at(u) * s);
      }
    }
  }
}

std::size_t StabilizerChain::strip(std::size_t start, Permutation& p) const {
  for (std::size_t j = start; j < levels_.size(); ++j) {
    const Level& lv = levels_[j];
    u32 x = p[lv.base_point];
    if (x == lv.base_point) continue;
    auto it = lv.transversal.find(x);
    if (it == lv.transversal.end()) return j;
    p = p * it->second.inverse();
  }
  return levels_.size();
}

void StabilizerChain::insert_strong(Permutation g) {
  std::size_t l = 0;
  while (l < levels_.size() && g[levels_[l].base_point] == levels_[l].base_point) ++l;
  if (l == levels_.size()) {
    Level lv;
    for (u32 i = 0; i < degree_; ++i)
      if (g[i] != i) {
        lv.base_point = i;
        break;
      }
    levels_.push_back(std::move(lv));
  }
  for (std::size_t j = 0; j <= l; ++j) {
    levels_[j].gens.push_back(g);
    rebuild_orbit(levels_[j]);
  }
}

void StabilizerChain::close() {
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t j = 0; j < levels_.size() && !dirty; ++j) {
      const Level& lv = levels_[j];
      for (std::size_t oi = 0; oi < lv.orbit.size() && !dirty; ++oi) {
        u32 p = lv.orbit[oi];
        const Permutation& tp = lv.transversal.at(p);
        for (const auto& s : lv.gens) {
          Permutation sch = tp * s * lv.transversal.at(s[p]).inverse();
          if (strip(j + 1, sch); !sch.is_identity()) {
            insert_strong(std::move(sch));
            dirty = true;
            break;
          }
        }
      }
    }
  }
}

u64 StabilizerChain::order() const {
  u64 n = 1;
  for (const auto& lv : levels_) n = checked_mul(n, lv.orbit.size());
  return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation r = p;
  return strip(0, r) == levels_.size() && r.is_identity();
}

std::vector<Permutation> StabilizerChain::elements(u64 limit) const {
  if (order() > limit) throw cap_exceeded("group too large to enumerate");
  std::vector<Permutation> elems{Permutation::identity(degree_)};
  for (std::size_t level = levels_.size(); level-- > 0;) {
    const Level& lv = levels_[level];
    std::vector<Permutation> next;
    next.reserve(elems.size() * lv.orbit.size());
    for (u32 p : lv.orbit) {
      const Permutation& t = lv.transversal.at(p);
      for (const auto& h : elems) next.push_back(h * t);
    }
    elems = std::move(next);
  }
  return elems;
}

struct FiniteGroup::Table {
  std::vector<Permutation> elems;
  std::unordered_map<Permutation, u32, PermHash> index;
  std::vector<u32> inv;
  std::vector<u32> gen_idx;
  std::vector<std::uint16_t> mul;
  bool has_mul = false;
  u32 n = 0;
};

FiniteGroup::FiniteGroup() : degree_(1) {}

FiniteGroup::FiniteGroup(u32 degree, std::vector<Permutation> generators) : degree_(degree) {
  if (degree == 0) throw group_error("degree must be positive");
  for (auto& g : generators) {
    if (g.degree() != degree) throw group_error("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
    gens_.push_back(std::move(g));
  }
}

const StabilizerChain& FiniteGroup::chain() const {
  if (!chain_) chain_ = std::make_shared<StabilizerChain>(degree_, gens_);
  return *chain_;
}

u64 FiniteGroup::order() const { return chain().order(); }

bool FiniteGroup::contains(const Permutation& p) const { return chain().contains(p); }

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

const FiniteGroup::Table& FiniteGroup::table() const {
  if (!table_) {
    auto t = std::make_shared<Table>();
    t->elems = chain().elements(kEnumLimit);
    t->n = static_cast<u32>(t->elems.size());
    t->index.reserve(t->n * 2);
    for (u32 i = 0; i < t->n; ++i) t->index.emplace(t->elems[i], i);
    t->inv.resize(t->n);
    for (u32 i = 0; i < t->n; ++i) t->inv[i] = t->index.at(t->elems[i].inverse());
    for (const auto& g : gens_) t->gen_idx.push_back(t->index.at(g));
    if (t->n <= kTableLimit) {
      t->mul.resize(std::size_t(t->n) * t->n);
      for (u32 i = 0; i < t->n; ++i)
        for (u32 j = 0; j < t->n; ++j)
          t->mul[std::size_t(i) * t->n + j] =
              static_cast<std::uint16_t>(t->index.at(t->elems[i] * t->elems[j]));
      t->has_mul = true;
    }
    table_ = std::move(t);
  }
  return *table_;
}

const std::vector<Permutation>& FiniteGroup::elements() const { return table().elems; }

u32 FiniteGroup::element_index(const Permutation& p) const {
  const Table& t = table();
  auto it = t.index.find(p);
  if (it == t.index.end()) throw group_error("element not in group");
  return it->second;
}

u32 FiniteGroup::mul(u32 a, u32 b) const {
  const Table& t = table();
  if (t.has_mul) return t.mul[std::size_t(a) * t.n + b];
  return t.index.at(t.elems[a] * t.elems[b]);
}

u32 FiniteGroup::inv(u32 a) const { return table().inv[a]; }

u64 FiniteGroup::element_order_idx(u32 a) const {
  u64 k = 1;
  u32 x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

const std::vector<u32>& FiniteGroup::generator_indices() const { return table().gen_idx; }

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup{g, FiniteGroup(g.degree(), {}), true};
}

Subgroup subgroup_generated(const FiniteGroup& g, std::vector<Permutation> gens) {
  for (const auto& s : gens)
    if (!g.contains(s)) throw group_error("generator not in parent group");
  FiniteGroup sub(g.degree(), std::move(gens));
  Subgroup out{g, sub, false};
  out.normal = is_normal_in(g, sub);
  return out;
}

bool is_normal_in(const FiniteGroup& g, const FiniteGroup& sub) {
  for (const auto& p : g.generators())
    for (const auto& s : sub.generators())
      if (!sub.contains(p * s * p.inverse())) return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& g, std::vector<Permutation> gens) {
  std::vector<Permutation> cur;
  for (auto& x : gens) {
    if (x.is_identity()) continue;
    if (std::find(cur.begin(), cur.end(), x) == cur.end()) cur.push_back(std::move(x));
  }
  FiniteGroup sub(g.degree(), cur);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (const auto& p : g.generators()) {
        Permutation c = p * cur[i] * p.inverse();
        if (!sub.contains(c)) {
          cur.push_back(std::move(c));
          sub = FiniteGroup(g.degree(), cur);
          grew = true;
        }
      }
  }
  return Subgroup{g, sub, true};
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, std::move(comms));
}

GroupHomomorphism::GroupHomomorphism(FiniteGroup domain, FiniteGroup codomain,
                                     std::vector<Permutation> images)
    : dom_(std::move(domain)), cod_(std::move(codomain)), img_gens_(std::move(images)) {
  if (img_gens_.size() != dom_.generators().size())
    throw group_error("one image per domain generator required");
  for (const auto& p : img_gens_)
    if (!cod_.contains(p)) throw group_error("image not in codomain");
}

const std::vector<u32>& GroupHomomorphism::element_images() const {
  if (!elem_img_) {
    const u32 n = dom_.size_u32();
    auto img = std::make_shared<std::vector<u32>>(n, UINT32_MAX);
    std::vector<u32> cod_gen_idx;
    for (const auto& p : img_gens_) cod_gen_idx.push_back(cod_.element_index(p));
    const auto& dom_gen_idx = dom_.generator_indices();
    (*img)[0] = 0;
    std::deque<u32> queue{0};
    while (!queue.empty()) {
      u32 x = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < dom_gen_idx.size(); ++j) {
        u32 y = dom_.mul(x, dom_gen_idx[j]);
        if ((*img)[y] != UINT32_MAX) continue;
        (*img)[y] = cod_.mul((*img)[x], cod_gen_idx[j]);
        queue.push_back(y);
      }
    }
    elem_img_ = std::move(img);
  }
  return *elem_img_;
}

u32 GroupHomomorphism::apply_idx(u32 i) const { return element_images()[i]; }

Permutation GroupHomomorphism::apply(const Permutation& x) const {
  return cod_.elements()[element_images()[dom_.element_index(x)]];
}

void GroupHomomorphism::verify(u64 product_check_limit) const {
  if (dom_.order() > product_check_limit)
    throw group_error("domain too large for full product check");
  const auto& img = element_images();
  const u32 n = dom_.size_u32();
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b)
      if (img[dom_.mul(a, b)] != cod_.mul(img[a], img[b]))
        throw group_error("generator images do not extend to a homomorphism");
}

Subgroup GroupHomomorphism::kernel() const {
  const auto& img = element_images();
  std::vector<Permutation> gens;
  FiniteGroup cur(dom_.degree(), {});
  for (u32 i = 0; i < img.size(); ++i) {
    if (img[i] != 0) continue;
    const Permutation& p = dom_.elements()[i];
    if (!cur.contains(p)) {
      gens.push_back(p);
      cur = FiniteGroup(dom_.degree(), gens);
    }
  }
  return Subgroup{dom_, cur, true};
}

Subgroup GroupHomomorphism::image() const { return subgroup_generated(cod_, img_gens_); }

bool GroupHomomorphism::is_surjective() const { return image().order() == cod_.order(); }

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!n.normal) throw group_error("quotient by a non-normal subgroup");
  if (n.sub.degree() != g.degree()) throw group_error("degree mismatch");
  std::vector<u32> n_idx;
  for (const auto& p : n.sub.elements()) n_idx.push_back(g.element_index(p));

  // cosets are keyed by the smallest element index they contain
  auto coset_key = [&](u32 x) {
    u32 best = UINT32_MAX;
    for (u32 nn : n_idx) best = std::min(best, g.mul(nn, x));
    return best;
  };

  std::unordered_map<u32, u32> key_to_coset;
  std::vector<u32> rep;
  rep.push_back(coset_key(0));
  key_to_coset.emplace(rep[0], 0);
  const auto& gen_idx = g.generator_indices();
  for (u32 c = 0; c < rep.size(); ++c)
    for (u32 gj : gen_idx) {
      u32 k = coset_key(g.mul(rep[c], gj));
      if (!key_to_coset.count(k)) {
        key_to_coset.emplace(k, static_cast<u32>(rep.size()));
        rep.push_back(k);
      }
    }

  const u32 ncosets = static_cast<u32>(rep.size());
  std::vector<Permutation> qgens;
  for (u32 gj : gen_idx) {
    std::vector<u32> m(ncosets);
    for (u32 c = 0; c < ncosets; ++c) m[c] = key_to_coset.at(coset_key(g.mul(rep[c], gj)));
    qgens.emplace_back(std::move(m));
  }

  FiniteGroup q(std::max<u32>(ncosets, 1), qgens);
  GroupHomomorphism proj(g, q, qgens);
  return Quotient{std::move(q), std::move(proj)};
}

AbelianInvariants abelian_invariants_of_group(const FiniteGroup& g) {
  if (!g.is_abelian()) throw group_error("group is not abelian");
  const u32 n = g.size_u32();
  return abelian_invariants_blackbox(n, 0, [&](u32 a, u32 b) { return g.mul(a, b); });
}

AbelianInvariants abelian_invariants_of_quotient(const FiniteGroup& g, const Subgroup& n) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!n.sub.contains(commutator(gens[i], gens[j])))
        throw group_error("quotient is not abelian");
  Quotient q = quotient_group(g, n);
  return abelian_invariants_of_group(q.group);
}

AbelianInvariants abelianization(const FiniteGroup& g) {
  return abelian_invariants_of_quotient(g, derived_subgroup(g));
}

ElementAuto automorphism_from_images(const FiniteGroup& g, const std::vector<u32>& gen_images) {
  const u32 n = g.size_u32();
  const auto& gen_idx = g.generator_indices();
  if (gen_images.size() != gen_idx.size()) throw group_error("one image per generator required");
  std::vector<u32> img(n, UINT32_MAX);
  img[0] = 0;
  std::deque<u32> queue{0};
  while (!queue.empty()) {
    u32 x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gen_idx.size(); ++j) {
      u32 y = g.mul(x, gen_idx[j]);
      if (img[y] != UINT32_MAX) continue;
      img[y] = g.mul(img[x], gen_images[j]);
      queue.push_back(y);
    }
  }
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b)
      if (img[g.mul(a, b)] != g.mul(img[a], img[b]))
        throw group_error("images do not define an endomorphism");
  std::vector<bool> seen(n, false);
  for (u32 v : img) {
    if (seen[v]) throw group_error("endomorphism is not bijective");
    seen[v] = true;
  }
  return img;
}

std::vector<ElementAuto> all_automorphisms(const FiniteGroup& g, u64 limit) {
  const u32 n = g.size_u32();
  const auto& gen_idx = g.generator_indices();
  std::vector<std::vector<u32>> candidates;
  u64 total = 1;
  for (u32 gi : gen_idx) {
    std::vector<u32> c;
    u64 ord = g.element_order_idx(gi);
    for (u32 e = 0; e < n; ++e)
      if (g.element_order_idx(e) == ord) c.push_back(e);
    total = checked_mul(total, c.size());
    candidates.push_back(std::move(c));
  }
  if (total > limit) throw cap_exceeded("automorphism search space too large");

  std::vector<ElementAuto> out;
  std::vector<u32> images(gen_idx.size());
  for (u64 it = 0; it < total; ++it) {
    u64 v = it;
    for (std::size_t j = gen_idx.size(); j-- > 0;) {
      images[j] = candidates[j][v % candidates[j].size()];
      v /= candidates[j].size();
    }
    try {
      out.push_back(automorphism_from_images(g, images));
    } catch (const group_error&) {
    }
  }
  return out;
}

SemidirectResult semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                                    const std::vector<ElementAuto>& action) {
  const u32 nn = n.size_u32();
  if (action.size() != h.generators().size())
    throw group_error("one automorphism per generator of the acting group required");
  for (const auto& a : action) {
    if (a.size() != nn) throw group_error("automorphism size mismatch");
    for (u32 x = 0; x < nn; ++x)
      for (u32 y = 0; y < nn; ++y)
        if (a[n.mul(x, y)] != n.mul(a[x], a[y]))
          throw group_error("action generator is not an automorphism");
  }

  // extend to all of H, left-to-right: phi(x*g) = phi(x) then phi(g)
  const u32 nh = h.size_u32();
  if (nh > 4096) throw cap_exceeded("acting group too large");
  const auto& h_gen_idx = h.generator_indices();
  std::vector<ElementAuto> phi(nh);
  std::vector<bool> have(nh, false);
  ElementAuto ident(nn);
  for (u32 i = 0; i < nn; ++i) ident[i] = i;
  phi[0] = ident;
  have[0] = true;
  std::deque<u32> queue{0};
  while (!queue.empty()) {
    u32 x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < h_gen_idx.size(); ++j) {
      u32 y = h.mul(x, h_gen_idx[j]);
      if (have[y]) continue;
      ElementAuto comp(nn);
      pk::gather_map(comp.data(), phi[x].data(), action[j].data(), nn);
      phi[y] = std::move(comp);
      have[y] = true;
      queue.push_back(y);
    }
  }
  // well-definedness across all (element, generator) edges
  for (u32 x = 0; x < nh; ++x)
    for (std::size_t j = 0; j < h_gen_idx.size(); ++j) {
      u32 y = h.mul(x, h_gen_idx[j]);
      ElementAuto comp(nn);
      pk::gather_map(comp.data(), phi[x].data(), action[j].data(), nn);
      if (comp != phi[y]) throw group_error("action does not respect the relations of H");
    }

  const u32 degree = nn + h.degree();
  std::vector<Permutation> gen_perms;
  std::vector<Permutation> n_embed_perms, h_embed_perms;
  for (u32 gi : n.generator_indices()) {
    std::vector<u32> img(degree);
    for (u32 x = 0; x < nn; ++x) img[x] = n.mul(x, gi);
    for (u32 p = 0; p < h.degree(); ++p) img[nn + p] = nn + p;
    Permutation perm(std::move(img));
    gen_perms.push_back(perm);
    n_embed_perms.push_back(perm);
  }
  for (std::size_t j = 0; j < h.generators().size(); ++j) {
    const Permutation& hg = h.generators()[j];
    std::vector<u32> img(degree);
    for (u32 x = 0; x < nn; ++x) img[x] = action[j][x];
    for (u32 p = 0; p < h.degree(); ++p) img[nn + p] = nn + hg[p];
    Permutation perm(std::move(img));
    gen_perms.push_back(perm);
    h_embed_perms.push_back(perm);
  }

  FiniteGroup g(degree, gen_perms);
  if (g.order() != checked_mul(n.order(), h.order()))
    throw group_error("semidirect product has wrong order");

  GroupHomomorphism embed_n(n, g, n_embed_perms);
  GroupHomomorphism embed_h(h, g, h_embed_perms);
  std::vector<Permutation> proj_imgs;
  for (std::size_t i = 0; i < n.generators().size(); ++i)
    proj_imgs.push_back(h.identity());
  for (const auto& hg : h.generators()) proj_imgs.push_back(hg);
  GroupHomomorphism project_h(g, h, proj_imgs);
  return SemidirectResult{std::move(g), std::move(embed_n), std::move(embed_h),
                          std::move(project_h)};
}

namespace {

u64 hash_sorted(const std::vector<u32>& v) {
  u64 h = 1469598103934665603ull;
  for (u32 x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

struct ComplementSearch {
  const FiniteGroup& g;
  u64 m;  // target order
  std::vector<bool> in_n;
  std::vector<u64> elem_order;
  // closure hash -> smallest continuation bound it was explored with
  std::unordered_map<u64, u32> seen;
  std::vector<u32> chosen;
  std::optional<std::vector<u32>> found;

  // closure of base + cand under right multiplication by all chosen gens
  std::vector<u32> close(const std::vector<u32>& base, u32 cand) {
    std::vector<u32> elems = base;
    std::vector<bool> in(g.size_u32(), false);
    for (u32 x : elems) in[x] = true;
    if (!in[cand]) {
      elems.push_back(cand);
      in[cand] = true;
    }
    std::vector<u32> gens = chosen;
    gens.push_back(cand);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (u32 s : gens) {
        u32 y = g.mul(elems[i], s);
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
        }
        if (elems.size() > m) return elems;  // prune early
      }
    }
    return elems;
  }

  void dfs(const std::vector<u32>& closure, u32 min_next) {
    if (found) return;
    if (closure.size() == m) {
      found = chosen;
      return;
    }
    for (u32 cand = min_next; cand < g.size_u32(); ++cand) {
      if (found) return;
      if (in_n[cand]) continue;
      if (m % elem_order[cand] != 0) continue;
      bool already = std::binary_search(closure.begin(), closure.end(), cand);
      if (already) continue;
      chosen.push_back(cand);
      std::vector<u32> next = close(closure, cand);
      bool ok = next.size() <= m && m % next.size() == 0;
      if (ok)
        for (u32 x : next)
          if (x != 0 && in_n[x]) {
            ok = false;
            break;
          }
      if (ok) {
        std::sort(next.begin(), next.end());
        u64 hsh = hash_sorted(next);
        auto it = seen.find(hsh);
        if (it == seen.end() || cand + 1 < it->second) {
          seen[hsh] = cand + 1;
          dfs(next, cand + 1);
        }
      }
      chosen.pop_back();
    }
  }
};

}  // namespace

std::optional<Subgroup> find_complement(const FiniteGroup& g, const Subgroup& n, u64 order_bound) {
  if (g.order() > order_bound) throw cap_exceeded("group exceeds the complement search bound");
  const u64 m = g.order() / n.order();
  if (m == 1) return trivial_subgroup(g);

  ComplementSearch cs{g, m, {}, {}, {}, {}, {}};
  const u32 ng = g.size_u32();
  cs.in_n.assign(ng, false);
  for (const auto& p : n.sub.elements()) cs.in_n[g.element_index(p)] = true;
  cs.elem_order.resize(ng);
  for (u32 i = 0; i < ng; ++i) cs.elem_order[i] = g.element_order_idx(i);

  cs.dfs({0}, 1);
  if (!cs.found) return std::nullopt;
  std::vector<Permutation> gens;
  for (u32 i : *cs.found) gens.push_back(g.elements()[i]);
  return subgroup_generated(g, std::move(gens));
}

ActionPair make_action_pair(const FiniteGroup& g, const FiniteGroup& h,
                            const std::vector<ElementAuto>& g_gen_on_h,
                            const std::vector<ElementAuto>& h_gen_on_g) {
  auto build = [](const FiniteGroup& actor, const FiniteGroup& space,
                  const std::vector<ElementAuto>& gen_maps) {
    const u32 na = actor.size_u32(), ns = space.size_u32();
    if (gen_maps.size() != actor.generators().size())
      throw group_error("one action map per generator required");
    for (const auto& m : gen_maps) {
      if (m.size() != ns) throw group_error("action map size mismatch");
      for (u32 x = 0; x < ns; ++x)
        for (u32 y = 0; y < ns; ++y)
          if (m[space.mul(x, y)] != space.mul(m[x], m[y]))
            throw group_error("action map is not an automorphism");
    }
    const auto& gen_idx = actor.generator_indices();
    std::vector<std::vector<u32>> rows(na);
    std::vector<bool> have(na, false);
    rows[0].resize(ns);
    for (u32 i = 0; i < ns; ++i) rows[0][i] = i;
    have[0] = true;
    std::deque<u32> queue{0};
    while (!queue.empty()) {
      u32 x = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < gen_idx.size(); ++j) {
        u32 y = actor.mul(x, gen_idx[j]);
        if (have[y]) continue;
        // left action: row(x*g) sends v to row(x)[gen(v)]
        rows[y].resize(ns);
        pk::gather_map(rows[y].data(), gen_maps[j].data(), rows[x].data(), ns);
        have[y] = true;
        queue.push_back(y);
      }
    }
    // well-definedness across all edges
    std::vector<u32> tmp(ns);
    for (u32 x = 0; x < na; ++x)
      for (std::size_t j = 0; j < gen_idx.size(); ++j) {
        u32 y = actor.mul(x, gen_idx[j]);
        pk::gather_map(tmp.data(), gen_maps[j].data(), rows[x].data(), ns);
        if (tmp != rows[y]) throw group_error("action does not respect the actor's relations");
      }
    return rows;
  };

  ActionPair p{g, h, build(g, h, g_gen_on_h), build(h, g, h_gen_on_g)};
  return p;
}

ActionPair conjugation_pair(const FiniteGroup& g) {
  const u32 n = g.size_u32();
  std::vector<ElementAuto> maps;
  for (u32 gi : g.generator_indices()) {
    ElementAuto m(n);
    for (u32 x = 0; x < n; ++x) m[x] = g.conj(gi, x);
    maps.push_back(std::move(m));
  }
  return make_action_pair(g, g, maps, maps);
}

CompatibilityReport check_compatible_actions(const ActionPair& p) {
  const u32 ng = p.g.size_u32(), nh = p.h.size_u32();
  auto cyc_g = [&](u32 i) { return p.g.elements()[i].cycle_string(); };
  auto cyc_h = [&](u32 i) { return p.h.elements()[i].cycle_string(); };

  // action on H: (h.g) acting on h2 must equal h (g (h^-1 . h2 . h))
  for (u32 gi = 0; gi < ng; ++gi)
    for (u32 hi = 0; hi < nh; ++hi)
      for (u32 h2 = 0; h2 < nh; ++h2) {
        u32 lhs = p.act_gh[p.act_hg[hi][gi]][h2];
        u32 inner = p.h.conj(p.h.inv(hi), h2);
        u32 rhs = p.h.conj(hi, p.act_gh[gi][inner]);
        if (lhs != rhs)
          return CompatibilityReport{
              false, CompatibilityWitness{"h-side", cyc_h(hi), cyc_g(gi), cyc_h(h2),
                                          cyc_h(lhs), cyc_h(rhs)}};
      }
  // action on G: (g.h) acting on g2 must equal g (h (g^-1 . g2 . g))
  for (u32 hi = 0; hi < nh; ++hi)
    for (u32 gi = 0; gi < ng; ++gi)
      for (u32 g2 = 0; g2 < ng; ++g2) {
        u32 lhs = p.act_hg[p.act_gh[gi][hi]][g2];
        u32 inner = p.g.conj(p.g.inv(gi), g2);
        u32 rhs = p.g.conj(gi, p.act_hg[hi][inner]);
        if (lhs != rhs)
          return CompatibilityReport{
              false, CompatibilityWitness{"g-side", cyc_g(gi), cyc_h(hi), cyc_g(g2),
                                          cyc_g(lhs), cyc_g(rhs)}};
      }
  return CompatibilityReport{true, std::nullopt};
}

}  // namespace tensorsq
