#include "painleve/verify/suite.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "painleve/derive/derive.hpp"
#include "painleve/error.hpp"
#include "painleve/verify/checks.hpp"
#include "painleve/verify/limits.hpp"
#include "painleve/verify/reduction.hpp"

namespace painleve {

namespace {

using Job = std::function<std::vector<CheckReport>()>;

Job single(std::string id, std::function<CheckReport()> body) {
  return [id = std::move(id), body = std::move(body)] { return std::vector<CheckReport>{timed_check(id, body)}; };
}

CheckReport transcription_report(const HamiltonianSystem& sys) {
  CheckReport r;
  VectorField f = vector_field(sys);
  if (!check_degree(sys)) {
    r.status = Status::fail;
    r.residual = sys.hamiltonian;
    r.detail = "Hamiltonian exceeds its degree bound";
    return r;
  }
  if (!sys.field_is_displayed) {
    r.detail = "only the Hamiltonian is stated; field derived from it";
    return r;
  }
  for (std::size_t k = 0; k < f.rhs.size(); ++k) {
    RatExpr d = sys.constraint.reduce(f.rhs[k] - sys.displayed_field[k]);
    if (d.is_zero()) continue;
    r.status = Status::fail;
    r.residual = d;
    r.detail = "d" + sys.phase_vars[k].name() + "/dt differs from the stated equation";
    return r;
  }
  r.detail = "Hamilton's equations match the stated system";
  return r;
}

void system_jobs(SystemId id, Suite s, const SuiteOptions& opts, std::vector<Job>& jobs) {
  const std::string sys_name = to_string(id);
  const std::string base = sys_name + "." + to_string(s) + ".";
  const HamiltonianSystem& sys = get_system(id);
  switch (s) {
    case Suite::transcription:
      jobs.push_back(single(base + "field", [&sys] { return transcription_report(sys); }));
      break;
    case Suite::backlund:
      for (const auto& g : generators(id))
        jobs.push_back(single(base + g.name(), [&sys, &g] { return verify_backlund(sys, g); }));
      break;
    case Suite::relations: {
      RelationOptions ro;
      ro.allow_probabilistic = opts.mode == CheckMode::probabilistic;
      ro.seed = opts.seed;
      std::string prefix = sys_name + ".relations";
      jobs.push_back([id, ro, prefix] { return verify_relations(presentation(id), generators(id), prefix, ro); });
      break;
    }
    case Suite::holomorphy:
      for (const auto& c : charts(id))
        jobs.push_back(single(base + c.name(), [&sys, &c] { return verify_holomorphy(sys, c); }));
      break;
    case Suite::phi:
      if (!phi_map(id)) break;
      jobs.push_back(single(base + "equivariance", [&sys, id] { return verify_backlund(sys, *phi_map(id)); }));
      jobs.push_back(single(base + "conjugation", [id] { return verify_phi_conjugation(id); }));
      break;
    case Suite::coincidence:
      for (const auto& c : coincidences()) {
        if (c.source != id) continue;
        jobs.push_back(single(base + c.name, [&c] { return verify_coincidence(c); }));
        for (const auto& [name, word] : c.induced)
          jobs.push_back(single(base + c.name + "." + name, [&c, n = name, w = word] { return verify_induced(c, n, w); }));
      }
      break;
    case Suite::degeneration:
      for (const auto& d : degenerations()) {
        if (d.target != id) continue;
        jobs.push_back(single(base + d.name, [&d, opts] { return verify_degeneration(d, opts.order, opts.stability_order); }));
      }
      break;
    case Suite::weyl:
      for (const auto& d : degenerations()) {
        if (d.target != id) continue;
        for (const auto& g : d.subgroup)
          jobs.push_back(single(base + d.name + "." + g.name, [&d, &g, opts] { return verify_weyl_generator(d, g, opts.order); }));
      }
      break;
    case Suite::derivation:
      if (sys.characterized) jobs.push_back(single(base + "hamiltonian", [id] { return verify_rederivation(id); }));
      break;
    case Suite::reduction:
      for (const auto& red : scalar_reductions()) {
        if (red.system != id) continue;
        jobs.push_back(single(base + red.name, [&red] { return verify_scalar_reduction(red); }));
      }
      break;
  }
}

void problem_jobs(const ProblemSpec& p, Suite s, const SuiteOptions& opts, std::vector<Job>& jobs) {
  // Problems have no Hamiltonian: relation lists and the search for one.
  if (s == Suite::derivation) {
    jobs.push_back(single(p.name + ".derivation.infeasible", [&p] { return verify_infeasible(p.name); }));
    return;
  }
  if (s != Suite::relations) return;
  RelationOptions ro;
  ro.allow_probabilistic = opts.mode == CheckMode::probabilistic;
  ro.seed = opts.seed;
  jobs.push_back([&p, ro] { return verify_relations(p.presentation, p.generators, p.name + ".relations", ro); });
}

}  // namespace

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> all = {Suite::transcription, Suite::backlund,     Suite::relations,
                                         Suite::holomorphy,    Suite::phi,          Suite::coincidence,
                                         Suite::degeneration,  Suite::weyl,         Suite::reduction,
                                         Suite::derivation};
  return all;
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::transcription: return "transcription";
    case Suite::backlund: return "backlund";
    case Suite::relations: return "relations";
    case Suite::holomorphy: return "holomorphy";
    case Suite::phi: return "phi";
    case Suite::coincidence: return "coincidence";
    case Suite::degeneration: return "degeneration";
    case Suite::weyl: return "weyl";
    case Suite::reduction: return "reduction";
    case Suite::derivation: return "derivation";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view list) {
  std::vector<Suite> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(pos, comma - pos);
    pos = comma + 1;
    if (item == "all") return all_suites();
    bool found = false;
    for (Suite s : all_suites())
      if (to_string(s) == item) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        found = true;
      }
    if (!found) throw UnknownName("suite '" + std::string(item) + "'");
  }
  // Canonical order regardless of how they were listed.
  std::vector<Suite> sorted;
  for (Suite s : all_suites())
    if (std::find(out.begin(), out.end(), s) != out.end()) sorted.push_back(s);
  return sorted;
}

std::vector<std::string> suite_targets() {
  std::vector<std::string> out;
  for (SystemId id : all_system_ids()) out.push_back(to_string(id));
  for (const auto& p : problems()) out.push_back(p.name);
  return out;
}

std::vector<CheckReport> run_suites(std::string_view target, const std::vector<Suite>& suites,
                                    const SuiteOptions& opts) {
  std::vector<Job> jobs;
  const ProblemSpec* prob = nullptr;
  for (const auto& p : problems())
    if (p.name == target) prob = &p;
  std::optional<SystemId> id;
  if (!prob) id = parse_system_id(target);
  for (Suite s : suites) {
    if (prob)
      problem_jobs(*prob, s, opts, jobs);
    else
      system_jobs(*id, s, opts, jobs);
  }

  std::vector<std::vector<CheckReport>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < jobs.size();) results[k] = jobs[k]();
  };
  unsigned n = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<CheckReport> out;
  for (auto& rs : results)
    for (auto& r : rs) out.push_back(std::move(r));
  return out;
}

}  // namespace painleve
