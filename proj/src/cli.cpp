#include "tensorsq/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <thread>

#include "tensorsq/catalog.hpp"
#include "tensorsq/named_groups.hpp"
#include "tensorsq/tensor_square.hpp"
#include "tensorsq/theorems.hpp"

namespace tensorsq {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CliOptions {
  std::vector<std::string> groups;
  std::string method = "auto";
  u64 max_cells = TensorSquareOptions{}.max_cells;
  u64 group_cap = 128;
  bool check_catalog = false;
  std::vector<std::string> verify;
  std::string json_path;
  std::string dump_path;
  bool no_timing = false;
  bool parallel = false;
};

struct GroupOutcome {
  int code = 0;
  ordered_json report;
};

ordered_json inv_json(const AbelianInvariants& a) {
  ordered_json j;
  j["rank"] = a.rank;
  j["factors"] = a.factors;
  return j;
}

const char* method_name(SquareMethod m) {
  switch (m) {
    case SquareMethod::presentation: return "presentation";
    case SquareMethod::closed_form: return "closed-form";
    default: return "auto";
  }
}

SquareMethod parse_method(const std::string& s) {
  if (s == "presentation") return SquareMethod::presentation;
  if (s == "closed-form") return SquareMethod::closed_form;
  return SquareMethod::automatic;
}

bool wants(const std::vector<std::string>& ids, const char* id) {
  for (const std::string& s : ids)
    if (s == id || s == "all") return true;
  return false;
}

ordered_json split_json(const DecompositionReport& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["group_order"] = r.group_order;
  j["kernel_orders"] = {{"tensor", r.kernel_tensor},
                        {"exterior", r.kernel_exterior},
                        {"nabla", r.kernel_nabla},
                        {"delta", r.kernel_delta},
                        {"symmetric", r.kernel_symmetric}};
  j["order_identities"] = {{"tensor", r.tensor_identity},
                           {"exterior", r.exterior_identity},
                           {"nabla", r.nabla_identity},
                           {"delta", r.delta_identity},
                           {"symmetric", r.symmetric_identity}};
  j["section_is_homomorphism"] = r.section_is_homomorphism;
  j["section_splits"] = r.section_splits;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

ordered_json odd_json(const SplittingWitness& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["diagonal_exponent"] = r.diagonal_exponent;
  j["homomorphism"] = r.homomorphism;
  j["lands_in_diagonal"] = r.lands_in_diagonal;
  j["fixes_diagonal"] = r.fixes_diagonal;
  j["nabla_equals_delta"] = r.nabla_equals_delta;
  j["order_identity"] = r.order_identity;
  j["stable_matches_homology"] = r.stable_matches_homology;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

ordered_json complement_json(const ComplementReport& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["nabla_matches"] = r.nabla_matches;
  j["delta_matches"] = r.delta_matches;
  j["order_identity"] = r.order_identity;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

ordered_json bound_json(const BoundReport& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  ordered_json fac = ordered_json::array();
  for (const auto& [p, a] : r.factorization) fac.push_back({{"prime", p}, {"multiplicity", a}});
  j["factorization"] = fac;
  j["rank"] = r.rank;
  j["even_factors"] = r.even_factors;
  j["bound"] = r.bound.str();
  j["measured"] = r.measured.str();
  return j;
}

void dump_presentation(const FiniteGroup& g, u64 group_cap, const std::string& path) {
  FpGroup fp = tensor_square_presentation(g, group_cap);
  std::vector<std::string> names = tensor_symbol_names(g);
  std::ofstream f(path);
  if (!f) throw group_error("cannot open '" + path + "' for writing");
  f << "symbols " << fp.ngens << "\n";
  for (const std::string& s : names) f << s << "\n";
  f << "relators " << fp.relators.size() << "\n";
  for (const Word& w : fp.relators) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      u32 gen = u32(std::abs(w[i])) - 1;
      if (i) f << ' ';
      f << names[gen];
      if (w[i] < 0) f << "^-1";
    }
    f << "\n";
  }
}

// conjugation action of a complement on a normal subgroup, one automorphism
// per complement generator
std::vector<ElementAuto> conjugation_action(const FiniteGroup& n, const FiniteGroup& h) {
  std::vector<ElementAuto> action;
  for (const Permutation& hg : h.generators()) {
    std::vector<u32> images;
    for (const Permutation& ng : n.generators())
      images.push_back(n.element_index(conjugate(hg, ng)));
    action.push_back(automorphism_from_images(n, images));
  }
  return action;
}

DecompositionReport split_check(const ParsedGroupSpec& pg, const TensorSquareOptions& topt) {
  if (pg.semidirect)
    return verify_semidirect_decomposition(pg.semidirect->n, pg.semidirect->h,
                                           pg.semidirect->action, topt);
  Subgroup der = derived_subgroup(pg.group);
  std::optional<Subgroup> comp = find_complement(pg.group, der);
  if (!comp) {
    DecompositionReport r;
    r.status = CheckStatus::not_applicable;
    r.detail = "no complement to the derived subgroup within the search bound";
    return r;
  }
  return verify_semidirect_decomposition(der.sub, comp->sub,
                                         conjugation_action(der.sub, comp->sub), topt);
}

GroupOutcome run_one(const CliOptions& opt, const std::string& spec) {
  GroupOutcome out;
  ordered_json& rep = out.report;
  rep["schema"] = 1;
  rep["group"] = spec;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ParsedGroupSpec pg = parse_group_spec(spec);
    const ExpectedRecord* rec = catalog_find(spec);
    SquareMethod method = parse_method(opt.method);
    TensorSquareOptions topt;
    topt.group_cap = opt.group_cap;
    topt.max_cells = opt.max_cells;

    rep["order"] = pg.group.order();

    bool lookup_only = false;
    if (method == SquareMethod::closed_form && !pg.group.is_abelian()) {
      if (!rec)
        throw group_error("closed-form method needs an abelian group or a catalog entry: '" +
                          spec + "'");
      lookup_only = true;
    } else if (method == SquareMethod::automatic && rec && !rec->computable) {
      lookup_only = true;
    }
    if (opt.check_catalog && !rec) throw group_error("no catalog entry for '" + spec + "'");

    if (!opt.dump_path.empty()) dump_presentation(pg.group, opt.group_cap, opt.dump_path);

    if (lookup_only) {
      rep["method"] = "lookup";
      rep["abelianization"] = inv_json(abelianization(pg.group));
      rep["pi3"] = rec->pi3 ? inv_json(*rec->pi3) : ordered_json(nullptr);
      rep["pi2s"] = rec->pi2s ? inv_json(*rec->pi2s) : ordered_json(nullptr);
      rep["h2"] = rec->h2 ? inv_json(*rec->h2) : ordered_json(nullptr);
      rep["orders"] = nullptr;
      if (!opt.verify.empty())
        rep["verify"] = {{"skipped", "tensor square not computed in lookup mode"}};
      if (opt.check_catalog)
        rep["catalog"] = {{"name", rec->name},
                          {"computable", rec->computable},
                          {"note", rec->note},
                          {"computed", false},
                          {"matched", true}};
    } else {
      std::optional<TensorSquare> ts;
      auto need_ts = [&]() -> const TensorSquare& {
        if (!ts) ts = tensor_square(pg.group, topt);
        return *ts;
      };
      HomotopyInvariants hi;
      if (method == SquareMethod::presentation ||
          (method == SquareMethod::automatic && !pg.group.is_abelian()))
        hi = homotopy_invariants(need_ts());
      else
        hi = homotopy_invariants(pg.group, method, topt);

      rep["method"] = method_name(hi.method_used);
      rep["abelianization"] = inv_json(hi.gab);
      rep["pi3"] = inv_json(hi.pi3);
      rep["pi2s"] = inv_json(hi.pi2s);
      rep["h2"] = inv_json(hi.h2);
      rep["orders"] = {{"group", hi.group_order},       {"derived", hi.derived_order},
                       {"tensor", hi.tensor_order},     {"exterior", hi.exterior_order},
                       {"symmetric", hi.symmetric_order}, {"nabla", hi.nabla_order},
                       {"delta", hi.delta_order},       {"j", hi.j_order}};

      if (!opt.verify.empty()) {
        ordered_json ver;
        bool any_failed = false;
        auto note = [&](const char* id, CheckStatus st, ordered_json j) {
          ver[id] = std::move(j);
          if (st == CheckStatus::failed) any_failed = true;
        };
        if (wants(opt.verify, "split")) {
          DecompositionReport r = split_check(pg, topt);
          note("split", r.status, split_json(r));
        }
        if (wants(opt.verify, "complement")) {
          ComplementReport r = verify_complement_case(need_ts());
          note("complement", r.status, complement_json(r));
        }
        if (wants(opt.verify, "odd")) {
          SplittingWitness r = odd_splitting(need_ts());
          note("odd", r.status, odd_json(r));
        }
        if (wants(opt.verify, "bound")) {
          BoundReport r = green_bound_check(pg.group, hi.pi2s);
          note("bound", r.status, bound_json(r));
        }
        rep["verify"] = std::move(ver);
        if (any_failed) out.code = 2;
      }

      if (opt.check_catalog) {
        ordered_json expected;
        bool matched = true;
        auto compare = [&](const char* field, const std::optional<AbelianInvariants>& want,
                           const AbelianInvariants& got) {
          if (!want) return;
          expected[field] = inv_json(*want);
          if (!(*want == got)) matched = false;
        };
        compare("pi3", rec->pi3, hi.pi3);
        compare("pi2s", rec->pi2s, hi.pi2s);
        compare("h2", rec->h2, hi.h2);
        rep["catalog"] = {{"name", rec->name},     {"computable", rec->computable},
                          {"note", rec->note},     {"computed", true},
                          {"expected", expected},  {"matched", matched}};
        if (!matched) out.code = 2;
      }
    }
  } catch (const cap_exceeded& e) {
    rep["error"] = {{"type", "resource-cap"}, {"message", e.what()}};
    out.code = 3;
  } catch (const std::exception& e) {
    rep["error"] = {{"type", "input"}, {"message", e.what()}};
    out.code = 1;
  }
  if (!opt.no_timing) {
    auto t1 = std::chrono::steady_clock::now();
    rep["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  }
  return out;
}

std::string summary_line(const ordered_json& rep) {
  std::string s = rep["group"].get<std::string>();
  if (rep.contains("error")) {
    s += ": error, " + rep["error"]["message"].get<std::string>();
    return s;
  }
  s += ": order " + std::to_string(rep["order"].get<u64>());
  s += ", method " + rep["method"].get<std::string>();
  auto show = [&](const char* field) {
    if (!rep.contains(field) || rep[field].is_null()) return std::string("?");
    std::vector<u64> f = rep[field]["factors"].get<std::vector<u64>>();
    AbelianInvariants a{rep[field]["rank"].get<u32>(), f};
    return a.str();
  };
  s += ", pi3 " + show("pi3") + ", pi2s " + show("pi2s") + ", h2 " + show("h2");
  if (rep.contains("verify") && !rep["verify"].contains("skipped"))
    for (auto& [id, v] : rep["verify"].items())
      s += ", verify " + id + " " + v["status"].get<std::string>();
  if (rep.contains("catalog"))
    s += rep["catalog"]["matched"].get<bool>() ? ", catalog matched" : ", catalog MISMATCH";
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliOptions opt;
  CLI::App app{"nonabelian tensor square and stable homotopy calculator"};
  app.require_subcommand(1);
  CLI::App* compute = app.add_subcommand("compute", "compute invariants for named groups");
  compute->add_option("--group", opt.groups, "group spec, repeatable for batch runs")
      ->required();
  compute->add_option("--method", opt.method, "computation route")
      ->check(CLI::IsMember({"auto", "presentation", "closed-form"}));
  compute->add_option("--max-cells", opt.max_cells, "coset table cell limit");
  compute->add_option("--group-cap", opt.group_cap,
                      "largest group order accepted for the presentation route");
  compute->add_flag("--check-catalog", opt.check_catalog,
                    "compare computed invariants against stored values");
  compute->add_option("--verify", opt.verify, "identity checks to run")
      ->check(CLI::IsMember({"split", "complement", "odd", "bound", "all"}));
  compute->add_option("--json", opt.json_path, "write the JSON report to a path, or - for stdout");
  compute->add_option("--dump-presentation", opt.dump_path,
                      "write the tensor presentation to a file");
  compute->add_flag("--no-timing", opt.no_timing, "omit timing from the report");
  compute->add_flag("--parallel", opt.parallel, "run batch group specs on separate threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  if (!opt.dump_path.empty() && opt.groups.size() != 1) {
    err << "--dump-presentation needs exactly one --group\n";
    return 1;
  }

  std::vector<GroupOutcome> outcomes(opt.groups.size());
  if (opt.parallel && opt.groups.size() > 1) {
    std::vector<std::thread> pool;
    pool.reserve(opt.groups.size());
    for (std::size_t i = 0; i < opt.groups.size(); ++i)
      pool.emplace_back([&, i] { outcomes[i] = run_one(opt, opt.groups[i]); });
    for (std::thread& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < opt.groups.size(); ++i) outcomes[i] = run_one(opt, opt.groups[i]);
  }

  int code = 0;
  for (const GroupOutcome& o : outcomes) code = std::max(code, o.code);

  ordered_json doc;
  if (outcomes.size() == 1) {
    doc = outcomes[0].report;
  } else {
    doc = ordered_json::array();
    for (const GroupOutcome& o : outcomes) doc.push_back(o.report);
  }
  std::string text = doc.dump(2) + "\n";

  if (opt.json_path == "-") {
    out << text;
  } else {
    if (!opt.json_path.empty()) {
      std::ofstream f(opt.json_path);
      if (!f) {
        err << "cannot open '" << opt.json_path << "' for writing\n";
        return std::max(code, 1);
      }
      f << text;
    }
    for (const GroupOutcome& o : outcomes) out << summary_line(o.report) << "\n";
  }
  return code;
}

}  // namespace tensorsq
