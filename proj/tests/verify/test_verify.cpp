#include "doctest.h"
#include "painleve/exactalg.hpp"
#include "painleve/verify/checks.hpp"
#include "painleve/verify/limits.hpp"
#include "painleve/verify/reduction.hpp"
#include "painleve/verify/suite.hpp"

using namespace painleve;

namespace {

BirationalMap with_image(const BirationalMap& m, const char* var, const RatExpr& e) {
  Bindings im = m.images();
  im[Var::of(var)] = e;
  return BirationalMap(m.name() + "*", m.source(), m.target(), im);
}

const HamiltonianSystem& b3() { return get_system(SystemId::B3); }

const SubgroupGenerator& subgroup_gen(const Degeneration& d, const char* name) {
  for (const auto& g : d.subgroup)
    if (g.name == name) return g;
  FAIL("no subgroup generator " << name);
  throw;
}

}  // namespace

TEST_CASE("backlund: generators pass, a mutated shift fails") {
  CHECK(verify_backlund(b3(), generator(SystemId::B3, "s0")).passed());
  CHECK(verify_backlund(b3(), BirationalMap::identity(space_of(SystemId::B3))).passed());

  BirationalMap broken = with_image(generator(SystemId::B3, "s0"), "y", rx("y-a1/(x-1)"));
  CheckReport r = verify_backlund(b3(), broken);
  CHECK(r.status == Status::fail);
  REQUIRE(r.residual);
  CHECK_FALSE(r.residual->is_zero());
}

TEST_CASE("relations: stated lists of the type-B presentations hold") {
  auto b3_reports = verify_relations(presentation(SystemId::B3), generators(SystemId::B3), "B3.relations");
  CHECK(b3_reports.size() == 10);  // 4 squares and 6 pair words
  CHECK(all_passed(b3_reports));
  bool saw = false;
  for (const auto& r : b3_reports) saw |= r.check_id == "B3.relations.(s2s3)^4";
  CHECK(saw);

  auto b4 = verify_relations(presentation(SystemId::B4), generators(SystemId::B4), "B4.relations");
  CHECK(all_passed(b4));
  auto d5 = verify_relations(presentation(SystemId::D5), generators(SystemId::D5), "D5.relations");
  CHECK(all_passed(d5));
}

TEST_CASE("relations: a word that is not a relation fails") {
  GroupPresentation gp = presentation(SystemId::B3);
  gp.relations = {{"(s0 s2)^2", Word::parse("(s0 s2)^2")}};
  auto rs = verify_relations(gp, generators(SystemId::B3), "B3.relations");
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].status == Status::fail);
  CHECK(rs[0].residual);

  // The probabilistic path never reports a false pass: a moved point is
  // confirmed exactly.
  RelationOptions ro;
  ro.probabilistic_above = 0;
  auto rp = verify_relations(gp, generators(SystemId::B3), "B3.relations", ro);
  CHECK(rp[0].status == Status::fail);
  CHECK(rp[0].mode == CheckMode::exact);
}

TEST_CASE("relations: the order-four generator of the G2-extension squares to the sign flip") {
  const ProblemSpec& p = problem("G2-4v");
  auto rs = verify_relations(p.presentation, p.generators, p.name + ".relations");
  BirationalMap sq = evaluate_word(p.generators, Word::parse("s4 s4"));
  for (Var v : p.space.phase) CHECK(sq.image(v) == -RatExpr::var(v));
  CHECK(sq.image(p.space.time) == -RatExpr::var(p.space.time));
  for (Var a : p.space.params) CHECK(sq.image(a) == RatExpr::var(a));

  // Words free of s4 are honest identities; every word with s4 reduces to
  // that flip and is reported as a failure.
  for (std::size_t k = 0; k < rs.size(); ++k) {
    CAPTURE(rs[k].check_id);
    bool has_s4 = false;
    for (const auto& l : p.presentation.relations[k].word.letters) has_s4 |= l.gen == "s4";
    CHECK(rs[k].passed() == !has_s4);
  }
  CHECK(all_passed(verify_relations(problem("A22-4v").presentation, problem("A22-4v").generators, "x")));
}

TEST_CASE("holomorphy: charts pass, an uncompensated inversion fails") {
  const auto& r0 = charts(SystemId::B3)[0];
  CheckReport r = verify_holomorphy(b3(), r0);
  CHECK(r.passed());
  CHECK(r.detail.find("Hamiltonian polynomial") != std::string::npos);
  CHECK(verify_holomorphy(get_system(SystemId::B5), charts(SystemId::B5)[5]).passed());

  PhaseSpace s = space_of(SystemId::B3);
  BirationalMap inv_x = BirationalMap::from_strings("1/x", s, s, {{"x", "1/x"}});
  CheckReport bad = verify_holomorphy(b3(), inv_x);
  CHECK(bad.status == Status::fail);
  CHECK(bad.residual);
}

TEST_CASE("degenerations tend to the target systems") {
  for (const char* name : {"D4toB3", "B3toG2", "B5toD52"}) {
    CAPTURE(name);
    CHECK(verify_degeneration(degeneration(name)).passed());
  }
  // Dropping the time rescaling leaves a pole in eps.
  Degeneration d = degeneration("D4toB3");
  Var t = space_of(SystemId::PVI_D4).time;
  d.substitution = with_image(d.substitution, t.name().c_str(), d.substitution.image(t) * RatExpr::var(d.eps));
  CheckReport r = timed_check("mut", [&] { return verify_degeneration(d); });
  CHECK_FALSE(r.passed());
}

TEST_CASE("subgroup words converge to the target generators") {
  CHECK(verify_weyl_generator(degeneration("D4toB3"), subgroup_gen(degeneration("D4toB3"), "S3")).passed());
  CHECK(verify_weyl_generator(degeneration("B3toG2"), subgroup_gen(degeneration("B3toG2"), "S2")).passed());
  CHECK(verify_weyl_generator(degeneration("G2toA22"), subgroup_gen(degeneration("G2toA22"), "S1")).passed());

  // The eps-limit of S3 acting on the parameters, read off the conjugated action.
  ConjugatedAction a = conjugated_action(degeneration("D4toB3"), subgroup_gen(degeneration("D4toB3"), "S3"), 4);
  CHECK(a.sigma.coeff(1) == rx("-1"));
  CHECK(a.sigma.coeff(0).is_zero());

  // The wrong square root of -1 for eps breaks the match.
  SubgroupGenerator g = subgroup_gen(degeneration("B3toG2"), "S2");
  g.zeta = -g.zeta;
  CHECK_FALSE(timed_check("mut", [&] { return verify_weyl_generator(degeneration("B3toG2"), g); }).passed());
}

TEST_CASE("coincidences carry one system onto the other") {
  for (const char* name : {"B3toA3", "B5toD5", "D52toB4"}) {
    CAPTURE(name);
    CHECK(verify_coincidence(coincidence(name)).passed());
  }
  Coincidence c = coincidence("B3toA3");
  Var x = c.change.target().phase[0];
  c.change = with_image(c.change, x.name().c_str(), -c.change.image(x));
  CHECK(timed_check("mut", [&] { return verify_coincidence(c); }).status != Status::pass);

  // The induced-generator check names a working word when the stored one fails.
  const Coincidence& g2 = coincidence("G2toA2");
  CheckReport s0 = verify_induced(g2, "S0", Word::parse("s2 s1 s2"));
  CHECK(s0.status == Status::fail);
  CHECK(s0.detail.find("s2^-1 s1 s2") != std::string::npos);
  CHECK(verify_induced(g2, "S0", Word::parse("s2^-1 s1 s2")).passed());
}

TEST_CASE("scalar reductions") {
  for (const char* name : {"PV", "PIV", "PIII", "PII", "A22-q"}) {
    CAPTURE(name);
    CHECK(verify_scalar_reduction(scalar_reduction(name)).passed());
  }
  ScalarReduction red = scalar_reduction("PII");
  red.rhs = "2*q^3+tau*q+b1";
  CheckReport r = verify_scalar_reduction(red);
  CHECK(r.status == Status::fail);
  CHECK(r.detail.find("eliminant gives") != std::string::npos);
}

TEST_CASE("report invariants hold across every suite") {
  SuiteOptions o;
  o.mode = CheckMode::probabilistic;
  for (const auto& target : suite_targets()) {
    for (const auto& r : run_suites(target, all_suites(), o)) {
      CAPTURE(r.check_id);
      CHECK(r.check_id.rfind(target + ".", 0) == 0);
      if (r.status == Status::fail) CHECK(r.residual.has_value());
      if (r.status == Status::pass && r.mode == CheckMode::exact) CHECK_FALSE(r.residual.has_value());
    }
  }
}

TEST_CASE("suite runs are deterministic and independent of the job count") {
  SuiteOptions o;
  o.seed = 7;
  o.mode = CheckMode::probabilistic;
  auto a = to_json(run_suites("B3", all_suites(), o), false).dump();
  o.jobs = 3;
  auto b = to_json(run_suites("B3", all_suites(), o), false).dump();
  CHECK(a == b);
}

TEST_CASE("suite names") {
  CHECK(parse_suites("all").size() == all_suites().size());
  auto s = parse_suites("holomorphy,backlund");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Suite::backlund);
  CHECK_THROWS_AS(parse_suites("backlund,nope"), UnknownName);
  CHECK_THROWS_AS(run_suites("NOPE", all_suites()), UnknownSystem);
}

TEST_CASE("report json") {
  CheckReport r;
  r.check_id = "B3.relations.x";
  r.status = Status::fail;
  r.residual = rx("x-1");
  auto j = to_json(r, false);
  CHECK(j["status"] == "fail");
  CHECK(j["mode"] == "exact");
  CHECK(j.contains("residual"));
  CHECK_FALSE(j.contains("seconds"));
  CHECK(to_json(r)["seconds"].is_number());
}
