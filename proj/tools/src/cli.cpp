#include "painleve_cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "painleve/derive/derive.hpp"
#include "painleve/error.hpp"
#include "painleve/maps/flow.hpp"
#include "painleve/numerics/flow.hpp"
#include "painleve/verify/checks.hpp"
#include "painleve/verify/limits.hpp"
#include "painleve/verify/reduction.hpp"
#include "painleve/verify/suite.hpp"

namespace painleve::cli {

namespace {

using json = nlohmann::ordered_json;

// Pinned numerical acceptance bounds.
constexpr double kCommutationBound = 1e-6;
constexpr double kOrderLow = 4.5;
constexpr double kOrderHigh = 5.5;

struct Globals {
  bool json = false;
  bool timing = true;
  std::uint64_t seed = 1;
  int order = kDefaultOrder;
  unsigned jobs = 1;
  std::string mode = "exact";
};

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

// Prints the reports (text or a versioned JSON manifest) and returns the
// exit code: pass iff every check passed.
int emit(const Globals& g, const std::string& command, const std::vector<CheckReport>& rs, std::ostream& out,
         const json& extra = json::object()) {
  bool ok = all_passed(rs);
  if (g.json) {
    json m;
    m["schema"] = 1;
    m["tool"] = "painleve";
    m["version"] = kToolVersion;
    m["command"] = command;
    m["seed"] = g.seed;
    m["order"] = g.order;
    m["mode"] = g.mode;
    for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
    m["status"] = ok ? "pass" : "fail";
    m["checks"] = to_json(rs, g.timing);
    out << m.dump(2) << "\n";
  } else {
    std::size_t pass = 0, fail = 0, inc = 0;
    for (const auto& r : rs) {
      std::string tag = r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "INCONCLUSIVE";
      out << std::left << std::setw(13) << tag << r.check_id;
      if (r.mode == CheckMode::probabilistic) out << " [probabilistic]";
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
      if (r.residual && r.status != Status::pass) out << "             residual " << r.residual->to_string() << "\n";
      (r.status == Status::pass ? pass : r.status == Status::fail ? fail : inc)++;
    }
    out << rs.size() << " checks: " << pass << " pass, " << fail << " fail, " << inc << " inconclusive\n";
  }
  return ok ? kExitPass : kExitFail;
}

RatExpr number(double v) { return RatExpr(Scalar(mpq_class(v))); }

json system_summary(const HamiltonianSystem& sys) {
  json j;
  j["id"] = to_string(sys.id);
  j["label"] = sys.label;
  j["dof"] = sys.dof;
  j["generators"] = generators(sys.id).size();
  j["charts"] = charts(sys.id).size();
  j["phi"] = phi_map(sys.id).has_value();
  return j;
}

int cmd_list(const Globals& g, std::ostream& out) {
  json j;
  for (SystemId id : all_system_ids()) j["systems"].push_back(system_summary(get_system(id)));
  for (const auto& d : degenerations()) j["degenerations"].push_back({{"name", d.name}, {"source", to_string(d.source)}, {"target", to_string(d.target)}});
  for (const auto& c : coincidences()) j["coincidences"].push_back({{"name", c.name}, {"source", to_string(c.source)}, {"target", to_string(c.target)}});
  for (const auto& r : scalar_reductions()) j["reductions"].push_back({{"name", r.name}, {"system", to_string(r.system)}});
  for (const auto& p : problems()) j["problems"].push_back(p.name);
  for (Suite s : all_suites()) j["suites"].push_back(to_string(s));
  if (g.json) {
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  out << "systems:\n";
  for (const auto& s : j["systems"])
    out << "  " << std::left << std::setw(8) << s["id"].get<std::string>() << s["label"].get<std::string>() << "  dof "
        << s["dof"] << ", " << s["generators"] << " generators, " << s["charts"] << " charts\n";
  auto names = [&](const char* key) {
    out << key << ":";
    for (const auto& e : j[key]) out << " " << (e.is_string() ? e.get<std::string>() : e["name"].get<std::string>());
    out << "\n";
  };
  for (const char* k : {"degenerations", "coincidences", "reductions", "problems", "suites"}) names(k);
  return kExitPass;
}

json map_json(const BirationalMap& m) { return json::parse(to_json(m)); }

int cmd_show(const Globals& g, const std::string& system, const std::string& map, const std::string& chart,
             std::ostream& out) {
  const HamiltonianSystem& sys = get_system(parse_system_id(system));
  json j = system_summary(sys);
  j["hamiltonian"] = sys.hamiltonian.to_string();
  j["constraint"] = sys.constraint.to_string();
  j["degree_bound"] = sys.degree_bound;
  auto f = vector_field(sys);
  for (std::size_t k = 0; k < f.vars.size(); ++k) j["field"][f.vars[k].name()] = f.rhs[k].to_string();
  for (const auto& gen : generators(sys.id)) j["generator_names"].push_back(gen.name());
  for (const auto& c : charts(sys.id)) j["chart_names"].push_back(c.name());
  if (!map.empty()) {
    if (map == "phi") {
      auto phi = phi_map(sys.id);
      if (!phi) throw UnknownName("no phi for " + system);
      j["map"] = map_json(*phi);
    } else {
      j["map"] = map_json(generator(sys.id, map));
    }
  }
  if (!chart.empty()) {
    const BirationalMap* c = nullptr;
    for (const auto& r : charts(sys.id))
      if (r.name() == chart) c = &r;
    if (!c) throw UnknownName("chart '" + chart + "' of " + system);
    j["chart"] = map_json(*c);
    // The Hamiltonian in the chart, up to functions of t.
    j["chart_hamiltonian"] = c->target().reduce(pullback_hamiltonian(*c, sys.hamiltonian)).to_string();
  }
  if (g.json) {
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  out << j["id"].get<std::string>() << "  " << j["label"].get<std::string>() << "\n";
  out << "H = " << j["hamiltonian"].get<std::string>() << "\n";
  out << "constraint: " << j["constraint"].get<std::string>() << "\n";
  for (auto it = j["field"].begin(); it != j["field"].end(); ++it)
    out << "d" << it.key() << "/dt = " << it.value().get<std::string>() << "\n";
  if (j.contains("map")) out << "map: " << j["map"].dump() << "\n";
  if (j.contains("chart")) {
    out << "chart: " << j["chart"].dump() << "\n";
    out << "K = " << j["chart_hamiltonian"].get<std::string>() << "\n";
  }
  return kExitPass;
}

int cmd_verify(const Globals& g, const std::string& command, const std::string& system, const std::string& suites,
               std::ostream& out) {
  SuiteOptions o;
  o.mode = g.mode == "probabilistic" ? CheckMode::probabilistic : CheckMode::exact;
  o.seed = g.seed;
  o.order = g.order;
  o.stability_order = g.order + 2;
  o.jobs = g.jobs;
  std::vector<Suite> list = parse_suites(suites);
  std::vector<CheckReport> rs;
  std::vector<std::string> targets = system == "all" ? suite_targets() : std::vector<std::string>{system};
  for (const auto& t : targets) {
    auto part = run_suites(t, list, o);
    rs.insert(rs.end(), part.begin(), part.end());
  }
  return emit(g, command, rs, out);
}

int cmd_derive(const Globals& g, const std::string& command, const std::string& system, const std::string& prob,
               bool expect_infeasible, std::ostream& out) {
  json extra;
  std::vector<CheckReport> rs;
  if (!system.empty()) {
    SystemId id = parse_system_id(system);
    Derivation d = derive_system(id, g.jobs);
    if (d.hamiltonian) extra["hamiltonian"] = d.hamiltonian->to_string();
    extra["dimension"] = d.dimension();
    rs.push_back(timed_check(system + ".derivation.hamiltonian", [&] { return verify_rederivation(id, g.jobs); }));
    if (!g.json && d.hamiltonian)
      out << "H = " << d.hamiltonian->to_string() << "\nsolution space dimension " << d.dimension() << "\n";
    return emit(g, command, rs, out, extra);
  }
  CheckReport r = timed_check(prob + ".derivation.infeasible", [&] { return verify_infeasible(prob, g.jobs); });
  extra["expect_infeasible"] = expect_infeasible;
  if (!expect_infeasible) {
    // Plain convention: success means a Hamiltonian was found.
    Derivation d = derive_problem(prob, g.jobs);
    r.check_id = prob + ".derivation.solution";
    if (d.solution.consistent) {
      r.status = Status::pass;
      r.residual.reset();
      r.detail = "solution space dimension " + std::to_string(d.dimension());
      extra["hamiltonian"] = d.hamiltonian->to_string();
    } else {
      r.status = Status::fail;
      r.residual = d.solution.certificate_value;
    }
  }
  rs.push_back(r);
  return emit(g, command, rs, out, extra);
}

int cmd_degenerate(const Globals& g, const std::string& command, const std::string& name, std::ostream& out) {
  const Degeneration& d = degeneration(name);
  std::string id = to_string(d.target) + ".degeneration." + d.name;
  return emit(g, command, {timed_check(id, [&] { return verify_degeneration(d, g.order, g.order + 2); })}, out);
}

int cmd_coincide(const Globals& g, const std::string& command, const std::string& name, std::ostream& out) {
  const Coincidence& c = coincidence(name);
  std::string base = to_string(c.source) + ".coincidence." + c.name;
  std::vector<CheckReport> rs{timed_check(base, [&] { return verify_coincidence(c); })};
  for (const auto& [gen, word] : c.induced)
    rs.push_back(timed_check(base + "." + gen, [&, gn = gen, w = word] { return verify_induced(c, gn, w); }));
  return emit(g, command, rs, out);
}

int cmd_weyl(const Globals& g, const std::string& command, const std::string& name, const std::string& gen,
             std::ostream& out) {
  const Degeneration& d = degeneration(name);
  std::vector<CheckReport> rs;
  for (const auto& s : d.subgroup) {
    if (!gen.empty() && s.name != gen) continue;
    rs.push_back(timed_check(to_string(d.target) + ".weyl." + d.name + "." + s.name,
                             [&] { return verify_weyl_generator(d, s, g.order); }));
  }
  if (rs.empty()) throw UnknownName("subgroup generator '" + gen + "' of " + name);
  return emit(g, command, rs, out);
}

int cmd_numeric(const Globals& g, const std::string& command, const std::string& system, const std::string& map,
                double tol, double t0, double t1, bool convergence, std::ostream& out) {
  SystemId id = parse_system_id(system);
  FlowConfig cfg = random_config(id, g.seed, t0, t1);
  cfg.integrator.rtol = cfg.integrator.atol = tol;
  std::vector<CheckReport> rs;
  if (!map.empty()) {
    const BirationalMap& m = map == "phi" ? *phi_map(id) : generator(id, map);
    rs.push_back(timed_check(system + ".numeric." + map, [&] {
      CheckReport r;
      r.seed = g.seed;
      r.mode = CheckMode::probabilistic;
      Commutation c = flow_commutation(m, cfg);
      std::ostringstream s;
      s << "deviation " << std::setprecision(3) << c.deviation << " at tolerance " << tol << " (bound "
        << kCommutationBound << ")";
      r.detail = s.str();
      if (c.deviation > kCommutationBound) {
        r.status = Status::fail;
        r.residual = number(c.deviation);
      }
      return r;
    }));
  }
  if (convergence) {
    rs.push_back(timed_check(system + ".numeric.order", [&] {
      CheckReport r;
      r.seed = g.seed;
      r.mode = CheckMode::probabilistic;
      double p = observed_order(cfg, 2);
      std::ostringstream s;
      s << "observed order " << std::setprecision(4) << p << " (window [" << kOrderLow << ", " << kOrderHigh << "])";
      r.detail = s.str();
      if (p < kOrderLow || p > kOrderHigh) {
        r.status = Status::fail;
        r.residual = number(p);
      }
      return r;
    }));
  }
  if (rs.empty()) throw CLI::ValidationError("numeric-check", "give --map and/or --convergence");
  return emit(g, command, rs, out);
}

int cmd_dump(const Globals& g, const std::string& system, double t0, double t1, int samples,
             const std::string& path, std::ostream& out) {
  SystemId id = parse_system_id(system);
  const HamiltonianSystem& sys = get_system(id);
  FlowConfig cfg = random_config(id, g.seed, t0, t1);
  std::vector<double> s;
  for (int k = 0; k <= samples; ++k) s.push_back(double(k) / samples);
  Trajectory tr = integrate(cfg, s);
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw Error("cannot write " + path);
  }
  std::ostream& o = path.empty() ? out : file;
  o << "t_re,t_im";
  for (Var v : sys.phase_vars) o << "," << v.name() << "_re," << v.name() << "_im";
  o << "\n" << std::setprecision(17);
  for (std::size_t k = 0; k < tr.samples.size(); ++k) {
    cplx t = cfg.t0 + tr.sample_s[k] * (cfg.t1 - cfg.t0);
    o << t.real() << "," << t.imag();
    for (const auto& z : tr.samples[k]) o << "," << z.real() << "," << z.imag();
    o << "\n";
  }
  if (tr.failed) {
    out << "# stopped: " << tr.message << "\n";
    return kExitFail;
  }
  return kExitPass;
}

}  // namespace

const std::vector<CoverageItem>& coverage_manifest() {
  static const std::vector<CoverageItem> items = {
      {"stated systems follow from their Hamiltonians", "verify --system all --suite transcription"},
      {"B3 extended affine Weyl symmetry", "verify --system B3 --suite backlund,relations,phi"},
      {"B3 characterized by its holomorphy charts", "verify --system B3 --suite holomorphy,derivation"},
      {"PVI degenerates to B3", "degenerate --name D4toB3"},
      {"PVI subgroup converges to the B3 group", "weyl-limit --name D4toB3"},
      {"B3 coincides with A3", "coincide --name B3toA3"},
      {"A3 reduces to PV", "verify --system A3 --suite reduction"},
      {"G2 symmetry", "verify --system G2 --suite backlund,relations,phi"},
      {"G2 characterized by its charts", "verify --system G2 --suite holomorphy,derivation"},
      {"B3 degenerates to G2", "degenerate --name B3toG2"},
      {"B3 subgroup converges to the G2 group", "weyl-limit --name B3toG2"},
      {"G2 coincides with A2", "coincide --name G2toA2"},
      {"A2 reduces to PIV", "verify --system A2 --suite reduction"},
      {"D32 symmetry", "verify --system D32 --suite backlund,relations"},
      {"D32 characterized by its charts", "verify --system D32 --suite holomorphy,derivation"},
      {"B3 degenerates to D32", "degenerate --name B3toD32"},
      {"B3 subgroup converges to the D32 group", "weyl-limit --name B3toD32"},
      {"D32 coincides with C2", "coincide --name D32toC2"},
      {"C2 reduces to PIII", "verify --system C2 --suite reduction"},
      {"A22 symmetry", "verify --system A22 --suite backlund,relations"},
      {"A22 characterized by its charts", "verify --system A22 --suite holomorphy,derivation"},
      {"G2 degenerates to A22", "degenerate --name G2toA22"},
      {"G2 subgroup converges to the A22 group", "weyl-limit --name G2toA22"},
      {"A22 coincides with A1", "coincide --name A22toA1"},
      {"A1 reduces to PII; A22 scalar equation", "verify --system A1 --suite reduction"},
      {"A22 scalar equation for q = x", "verify --system A22 --suite reduction"},
      {"B5 symmetry", "verify --system B5 --suite backlund,relations,phi"},
      {"B5 characterized by its charts", "verify --system B5 --suite holomorphy,derivation"},
      {"B5 coincides with D5", "coincide --name B5toD5"},
      {"D5 representation", "verify --system D5 --suite backlund,relations"},
      {"D52 symmetry", "verify --system D52 --suite backlund,relations"},
      {"D52 characterized by its charts", "verify --system D52 --suite holomorphy,derivation"},
      {"B5 degenerates to D52", "degenerate --name B5toD52"},
      {"B5 subgroup converges to the D52 group", "weyl-limit --name B5toD52"},
      {"D52 coincides with B4", "coincide --name D52toB4"},
      {"B4 representation", "verify --system B4 --suite backlund,relations"},
      {"PVI symmetry", "verify --system PVI_D4 --suite backlund,relations"},
      {"G2-type representation in four variables", "verify --system G2-4v --suite relations"},
      {"no polynomial system for the G2-type representation", "derive --problem G2-4v --expect-infeasible"},
      {"A22-type representation in four variables", "verify --system A22-4v --suite relations"},
      {"no polynomial system for the A22-type representation", "derive --problem A22-4v --expect-infeasible"},
  };
  return items;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic and numerical checks for Painleve-type Hamiltonian systems", "painleve"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable report");
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--order", g.order, "eps truncation order")->check(CLI::Range(1, 40))->capture_default_str();
  app.add_option("--jobs", g.jobs, "parallel checks")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--mode", g.mode, "exact or probabilistic")
      ->check(CLI::IsMember({"exact", "probabilistic"}))
      ->capture_default_str();
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit timing fields from JSON");

  std::string system, map, chart, suites = "all", name, gen, prob, out_path;
  bool expect_infeasible = false, convergence = false;
  double tol = 1e-10, t0 = 1.0, t1 = 2.0;
  int samples = 100;

  auto* list = app.add_subcommand("list", "systems, schemes, coincidences, reductions and problems");
  auto* show = app.add_subcommand("show", "Hamiltonian, field and maps of a system");
  show->add_option("--system", system)->required();
  show->add_option("--map", map, "generator name or phi");
  show->add_option("--chart", chart, "chart name; prints the chart Hamiltonian");
  auto* verify = app.add_subcommand("verify", "run check suites");
  verify->add_option("--system", system, "system id, problem name or all")->required();
  verify->add_option("--suite", suites, "comma-separated suites or all")->capture_default_str();
  auto* derive_cmd = app.add_subcommand("derive", "solve for the Hamiltonian from the charts");
  auto* dsys = derive_cmd->add_option("--system", system);
  auto* dprob = derive_cmd->add_option("--problem", prob);
  dsys->excludes(dprob);
  derive_cmd->add_flag("--expect-infeasible", expect_infeasible, "exit 0 when no Hamiltonian exists");
  auto* degen = app.add_subcommand("degenerate", "check a degeneration scheme");
  degen->add_option("--name", name)->required();
  auto* coin = app.add_subcommand("coincide", "check a coincidence and its induced generators");
  coin->add_option("--name", name)->required();
  auto* weyl = app.add_subcommand("weyl-limit", "check subgroup words against the limit group");
  weyl->add_option("--name", name)->required();
  weyl->add_option("--generator", gen);
  auto* num = app.add_subcommand("numeric-check", "flow commutation and integrator order");
  num->add_option("--system", system)->required();
  num->add_option("--map", map);
  num->add_option("--tol", tol)->check(CLI::PositiveNumber)->capture_default_str();
  num->add_option("--t0", t0)->capture_default_str();
  num->add_option("--t1", t1)->capture_default_str();
  num->add_flag("--convergence", convergence);
  auto* dump = app.add_subcommand("dump", "CSV trajectory from a seeded point");
  dump->add_option("--system", system)->required();
  dump->add_option("--t0", t0)->capture_default_str();
  dump->add_option("--t1", t1)->capture_default_str();
  dump->add_option("--samples", samples)->check(CLI::Range(1, 1000000))->capture_default_str();
  dump->add_option("--out", out_path);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (*derive_cmd && system.empty() && prob.empty())
      throw CLI::RequiredError("--system or --problem");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  g.timing = !no_timing;
  std::string command = joined(args);

  try {
    if (*list) return cmd_list(g, out);
    if (*show) return cmd_show(g, system, map, chart, out);
    if (*verify) return cmd_verify(g, command, system, suites, out);
    if (*derive_cmd) return cmd_derive(g, command, system, prob, expect_infeasible, out);
    if (*degen) return cmd_degenerate(g, command, name, out);
    if (*coin) return cmd_coincide(g, command, name, out);
    if (*weyl) return cmd_weyl(g, command, name, gen, out);
    if (*num) return cmd_numeric(g, command, system, map, tol, t0, t1, convergence, out);
    if (*dump) return cmd_dump(g, system, t0, t1, samples, out_path, out);
  } catch (const UnknownSystem& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownName& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace painleve::cli
