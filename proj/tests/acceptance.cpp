// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tensorsq/catalog.hpp"
#include "tensorsq/cli.hpp"
#include "tensorsq/named_groups.hpp"
#include "tensorsq/tensor_square.hpp"
#include "tensorsq/theorems.hpp"

using namespace tensorsq;

namespace {

struct Criterion {
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;
};

std::vector<std::string> g_bound_failures;
std::vector<std::string> g_battery_failures;
std::mt19937 g_rng(20240913);

void expect(Criterion& c, bool ok, const std::string& note) {
  if (!ok) {
    c.pass = false;
    c.notes.push_back(note);
  }
}

bool subset(const std::vector<u32>& a, const std::vector<u32>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

AbelianInvariants inv(std::vector<u64> f) { return invariants_from_orders(std::move(f)); }

// structural battery run on every tensor square the suite computes
void battery(const std::string& name, const TensorSquare& ts) {
  auto fail = [&](const std::string& what) { g_battery_failures.push_back(name + ": " + what); };

  std::set<u32> image(ts.kappa.begin(), ts.kappa.end());
  if (image.size() != ts.derived_ids.size() ||
      !std::equal(image.begin(), image.end(), ts.derived_ids.begin()))
    fail("commutator map image differs from the derived subgroup");

  const CosetTable& tab = ts.square.table();
  bool central = true;
  for (u32 gen = 0; gen < tab.ngens() && central; ++gen) {
    u32 pg = tab.act_col(0, 2 * gen);
    for (u32 j : ts.j_points)
      if (ts.square.mul(j, pg) != ts.square.mul(pg, j)) {
        central = false;
        break;
      }
  }
  if (!central) fail("kernel of the commutator map is not central");

  if (ts.order() != ts.j_order() * ts.derived_order())
    fail("tensor order is not kernel order times derived order");

  if (ts.derived_ids.size() <= 64) {
    for (u32 x : ts.derived_ids)
      if (ts.lambda(x, x) != 0) {
        fail("diagonal pairing nontrivial on a derived element");
        break;
      }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, ts.derived_ids.size() - 1);
    for (int i = 0; i < 200; ++i)
      if (ts.lambda(ts.derived_ids[pick(g_rng)], ts.derived_ids[pick(g_rng)]) != 0) {
        fail("diagonal pairing nontrivial on a derived element");
        break;
      }
  }

  std::uniform_int_distribution<u32> any(0, ts.group.size_u32() - 1);
  std::uniform_int_distribution<std::size_t> der(0, ts.derived_ids.size() - 1);
  for (int i = 0; i < 200; ++i) {
    u32 x = ts.derived_ids[der(g_rng)];
    u32 a = any(g_rng);
    if (ts.square.mul(ts.lambda(x, a), ts.lambda(a, x)) != 0) {
      fail("symmetrized pairing nontrivial against a derived element");
      break;
    }
  }

  if (!subset(ts.delta_points, ts.nabla_points) || !subset(ts.nabla_points, ts.j_points))
    fail("diagonal subgroups are not nested inside the kernel");
}

struct Computed {
  TensorSquare ts;
  HomotopyInvariants hi;
};

Computed process(const std::string& name, const FiniteGroup& g, u64 cap = 24) {
  TensorSquareOptions opt;
  opt.group_cap = cap;
  Computed c{tensor_square(g, opt), {}};
  c.hi = homotopy_invariants(c.ts);
  battery(name, c.ts);
  if (green_bound_check(g, c.hi.pi2s).status != CheckStatus::passed)
    g_bound_failures.push_back(name);
  return c;
}

// ascending invariant factor chains d1 | d2 | ... with product n
void chains_rec(u64 n, u64 prev, std::vector<u64>& cur, std::vector<std::vector<u64>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (u64 d = 2; d <= n; ++d)
    if (n % d == 0 && (prev == 0 || d % prev == 0)) {
      cur.push_back(d);
      chains_rec(n / d, d, cur, out);
      cur.pop_back();
    }
}

std::string chain_name(const std::vector<u64>& chain) {
  if (chain.empty()) return "C1";
  std::string s;
  for (u64 d : chain) {
    if (!s.empty()) s += "x";
    s += "C" + std::to_string(d);
  }
  return s;
}

FiniteGroup chain_group(const std::vector<u64>& chain) {
  if (chain.empty()) return cyclic_group(1);
  FiniteGroup g = cyclic_group(u32(chain[0]));
  for (std::size_t i = 1; i < chain.size(); ++i) g = direct_product(g, cyclic_group(u32(chain[i])));
  return g;
}

std::string run_cli_text(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  run_cli(args, out, err);
  return out.str();
}

const char* kFrob21 = "perm:(0 1 2 3 4 5 6);(1 2 4)(3 6 5)";

}  // namespace

int main() {
  std::vector<Criterion> crit(10);
  crit[1].title = "catalog family values reproduced through the presentation route in budget";
  crit[2].title = "abelian presentation output equals the closed form calculus";
  crit[3].title = "stable invariants split as homology plus elementary two torsion";
  crit[4].title = "odd diagonal order groups admit the splitting witness";
  crit[5].title = "split extension order identities hold and the section verifies";
  crit[6].title = "stable order bound holds for every computed group";
  crit[7].title = "tensor square structural battery has zero violations";
  crit[8].title = "conjugation actions compatible; twisted pair yields a witness";
  crit[9].title = "two runs produce byte identical reports";

  std::vector<std::pair<std::string, HomotopyInvariants>> stable_pool;

  {
    Criterion& c = crit[1];
    struct Row {
      const char* name;
      std::optional<AbelianInvariants> pi3, pi2s, h2;
      double budget_s;
    };
    const Row rows[] = {
        {"S3", inv({2}), inv({2}), std::nullopt, 60.0},
        {"S4", inv({2, 2}), inv({2, 2}), inv({2}), 600.0},
        {"D6", std::nullopt, inv({2}), std::nullopt, 60.0},
        {"D10", std::nullopt, inv({2}), std::nullopt, 60.0},
        {"D8", std::nullopt, inv({2, 2, 2}), std::nullopt, 60.0},
        {"D12", std::nullopt, inv({2, 2, 2}), std::nullopt, 60.0},
        {"D16", std::nullopt, inv({2, 2, 2}), std::nullopt, 60.0},
        {"Q8", std::nullopt, inv({2, 2}), std::nullopt, 60.0},
    };
    for (const Row& r : rows) {
      auto t0 = std::chrono::steady_clock::now();
      Computed comp = process(r.name, make_named_group(r.name));
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (r.pi3) expect(c, comp.hi.pi3 == *r.pi3, std::string(r.name) + " pi3 " + comp.hi.pi3.str());
      if (r.pi2s)
        expect(c, comp.hi.pi2s == *r.pi2s, std::string(r.name) + " pi2s " + comp.hi.pi2s.str());
      if (r.h2) expect(c, comp.hi.h2 == *r.h2, std::string(r.name) + " h2 " + comp.hi.h2.str());
      expect(c, dt <= r.budget_s, std::string(r.name) + " over time budget");
      stable_pool.emplace_back(r.name, comp.hi);
    }
  }

  {
    Criterion& c = crit[2];
    std::vector<std::vector<u64>> chains;
    std::vector<u64> cur;
    for (u64 n = 1; n <= 16; ++n) chains_rec(n, 0, cur, chains);
    expect(c, chains.size() == 25,
           "expected 25 abelian isomorphism types, got " + std::to_string(chains.size()));
    for (const std::vector<u64>& chain : chains) {
      std::string name = chain_name(chain);
      FiniteGroup g = chain_group(chain);
      Computed comp = process(name, g, 16);
      HomotopyInvariants cf = homotopy_invariants(g, SquareMethod::closed_form);
      expect(c, comp.hi.pi3 == cf.pi3, name + " pi3 routes disagree");
      expect(c, comp.hi.pi2s == cf.pi2s, name + " pi2s routes disagree");
      expect(c, comp.hi.h2 == cf.h2, name + " h2 routes disagree");
      expect(c, comp.hi.exterior_order == cf.exterior_order, name + " exterior orders disagree");
      expect(c, comp.hi.symmetric_order == cf.symmetric_order, name + " symmetric orders disagree");
      stable_pool.emplace_back(name, comp.hi);
    }
  }

  Computed frob = process("C7:C3", make_named_group(kFrob21));
  {
    Criterion& c = crit[3];
    Computed a4 = process("A4", make_named_group("A4"));
    stable_pool.emplace_back("A4", a4.hi);
    stable_pool.emplace_back("C7:C3", frob.hi);
    for (const auto& [name, hi] : stable_pool)
      expect(c, hi.pi2s == pi2s_closed_form(hi.gab, hi.h2), name + " stable formula mismatch");
  }

  {
    Criterion& c = crit[4];
    std::vector<std::pair<std::string, FiniteGroup>> odd;
    for (const char* s : {"C3", "C5", "C7", "C9", "C3xC3", "C15"})
      odd.emplace_back(s, make_named_group(s));
    for (auto& [name, g] : odd) {
      Computed comp = process(name, g);
      SplittingWitness w = odd_splitting(comp.ts);
      expect(c, w.status == CheckStatus::passed, name + " splitting not verified");
      expect(c, w.homomorphism && w.lands_in_diagonal && w.fixes_diagonal, name + " witness map");
      expect(c, w.nabla_equals_delta, name + " diagonal subgroups differ");
      expect(c, comp.hi.pi2s == comp.hi.h2, name + " stable differs from homology");
    }
    SplittingWitness w = odd_splitting(frob.ts);
    expect(c, w.status == CheckStatus::passed && w.homomorphism && w.nabla_equals_delta,
           "C7:C3 splitting not verified");
    expect(c, frob.hi.pi2s == frob.hi.h2, "C7:C3 stable differs from homology");
  }

  {
    Criterion& c = crit[5];
    for (const char* spec : {"sdp(C3,C2,inversion)", "sdp(C4,C2,inversion)",
                             "sdp(C2xC2,C3,cycle)", "sdp(C3,C2,trivial)"}) {
      ParsedGroupSpec pg = parse_group_spec(spec);
      expect(c, pg.semidirect.has_value(), std::string(spec) + " did not keep its pieces");
      if (!pg.semidirect) continue;
      DecompositionReport r = verify_semidirect_decomposition(pg.semidirect->n, pg.semidirect->h,
                                                              pg.semidirect->action);
      expect(c, r.status == CheckStatus::passed, std::string(spec) + " " + r.detail);
      expect(c,
             r.tensor_identity && r.exterior_identity && r.nabla_identity && r.delta_identity &&
                 r.symmetric_identity,
             std::string(spec) + " order identity failed");
      expect(c, r.section_is_homomorphism && r.section_splits,
             std::string(spec) + " section failed");
      Computed comp = process(spec, pg.group);
      stable_pool.emplace_back(spec, comp.hi);
    }
  }

  {
    Criterion& c = crit[6];
    for (const std::string& name : g_bound_failures) expect(c, false, name + " exceeds the bound");
  }

  {
    Criterion& c = crit[7];
    for (const std::string& note : g_battery_failures) expect(c, false, note);
  }

  {
    Criterion& c = crit[8];
    for (const ExpectedRecord& r : catalog_entries()) {
      FiniteGroup g = cyclic_group(1);
      try {
        g = make_named_group(r.name);
      } catch (const cap_exceeded&) {
        continue;
      }
      if (g.order() > 24) continue;
      CompatibilityReport rep = check_compatible_actions(conjugation_pair(g));
      expect(c, rep.compatible && !rep.witness, r.name + " conjugation pair not compatible");
    }
    FiniteGroup c2 = cyclic_group(2);
    FiniteGroup s3 = symmetric_group(3);
    u32 t = s3.element_index(Permutation::from_cycles(3, {{0, 1}}));
    ElementAuto twist(s3.size_u32());
    for (u32 x = 0; x < s3.size_u32(); ++x) twist[x] = s3.conj(t, x);
    ElementAuto id2{0, 1};
    CompatibilityReport rep = check_compatible_actions(make_action_pair(c2, s3, {twist}, {id2, id2}));
    expect(c, !rep.compatible, "twisted pair reported compatible");
    expect(c, rep.witness.has_value(), "twisted pair gave no witness");
    if (rep.witness)
      expect(c,
             !rep.witness->outer.empty() && !rep.witness->actor.empty() &&
                 !rep.witness->operand.empty() && rep.witness->lhs != rep.witness->rhs,
             "witness triple is not concrete");
  }

  {
    Criterion& c = crit[9];
    std::vector<std::string> args{"compute", "--group", "S4",   "--verify", "all",
                                  "--check-catalog", "--json",  "-", "--no-timing"};
    std::string a = run_cli_text(args);
    std::string b = run_cli_text(args);
    expect(c, !a.empty() && a == b, "repeat single group runs differ");
    std::vector<std::string> batch{"compute", "--group", "S3", "--group", "C2xC4", "--group",
                                   "Q8", "--parallel", "--json", "-", "--no-timing"};
    std::string p = run_cli_text(batch);
    std::string q = run_cli_text(batch);
    expect(c, !p.empty() && p == q, "repeat batch runs differ");
  }

  bool all = true;
  for (int i = 1; i <= 9; ++i) {
    std::printf("[%d/9] %s  %s\n", i, crit[i].pass ? "PASS" : "FAIL", crit[i].title.c_str());
    for (const std::string& note : crit[i].notes) std::printf("       - %s\n", note.c_str());
    all = all && crit[i].pass;
  }
  return all ? 0 : 1;
}
