#include <random>

#include "doctest.h"
#include "painleve/exactalg.hpp"
#include "painleve/maps/library.hpp"

using namespace painleve;

TEST_CASE("every generator and chart is symplectic and respects the constraint") {
  for (SystemId id : all_system_ids()) {
    CAPTURE(to_string(id));
    for (const auto& g : generators(id)) {
      CAPTURE(g.name());
      CHECK(symplectic_check(g));
      CHECK(constraint_defect(g).is_zero());
    }
    for (const auto& r : charts(id)) {
      CAPTURE(r.name());
      CHECK(symplectic_check(r));
    }
  }
}

TEST_CASE("reflections act as involutions on the parameters") {
  for (SystemId id : all_system_ids()) {
    CAPTURE(to_string(id));
    for (const auto& g : generators(id)) {
      if (!reflected_root(g)) continue;
      CAPTURE(g.name());
      BirationalMap sq = compose(g, g);
      for (Var p : g.source().params) CHECK(g.source().reduce(sq.image(p) - RatExpr::var(p)).is_zero());
    }
  }
}

TEST_CASE("inverse composes to the identity") {
  for (SystemId id : all_system_ids()) {
    CAPTURE(to_string(id));
    for (const auto& g : generators(id)) {
      CAPTURE(g.name());
      BirationalMap inv = inverse_of(g);
      CHECK(is_identity(compose(g, inv)));
      CHECK(is_identity(compose(inv, g)));
    }
  }
  for (const auto& c : coincidences()) {
    CAPTURE(c.name);
    BirationalMap inv = inverse_of(c.change);
    CHECK(is_identity(compose(c.change, inv)));
  }
}

TEST_CASE("compose is associative on random triples") {
  std::mt19937_64 rng(20261015);
  for (SystemId id : {SystemId::B3, SystemId::G2, SystemId::A3, SystemId::B5}) {
    const auto& gens = generators(id);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 4; ++trial) {
      const auto& a = gens[pick(rng)];
      const auto& b = gens[pick(rng)];
      const auto& c = gens[pick(rng)];
      CAPTURE(a.name() + " " + b.name() + " " + c.name());
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
}

TEST_CASE("coincidence changes are symplectic and carry constraints across") {
  for (const auto& c : coincidences()) {
    CAPTURE(c.name);
    CHECK(symplectic_check(c.change));
    CHECK(constraint_defect(c.change).is_zero());
  }
}

TEST_CASE("phi is the pulled-back diagram automorphism") {
  std::vector<std::pair<SystemId, std::string>> cases = {
      {SystemId::B3, "B3toA3"}, {SystemId::G2, "G2toA2"}, {SystemId::B5, "B5toD5"}};
  for (const auto& [id, name] : cases) {
    CAPTURE(name);
    auto phi = phi_map(id);
    REQUIRE(phi);
    const Coincidence& c = coincidence(name);
    BirationalMap cinv = inverse_of(c.change);
    const BirationalMap& pi = find_generator(generators(c.target), "pi");
    BirationalMap pulled = compose(c.change, compose(pi, cinv));
    BirationalMap pulled_inv = compose(c.change, compose(inverse_of(pi), cinv));
    bool match = differing_images(*phi, pulled).empty() || differing_images(*phi, pulled_inv).empty();
    CHECK(match);
  }
}

TEST_CASE("divisor labels of B3") {
  auto labels = divisor_labels(SystemId::B3);
  REQUIRE(labels.size() == 3);
  CHECK(labels[0].expr == rx("x-1"));
  CHECK_FALSE(labels[1].expr.has_value());
  CHECK(labels[2].expr == rx("y"));
  // Their Poisson reflections reproduce s0 and s2.
  PhaseSpace s = space_of(SystemId::B3);
  CHECK(poisson_reflection(s, *labels[0].expr, rx("a0")).image(Var::of("y")) ==
        generator(SystemId::B3, "s0").image(Var::of("y")));
  CHECK(poisson_reflection(s, *labels[2].expr, rx("a2")).image(Var::of("x")) ==
        generator(SystemId::B3, "s2").image(Var::of("x")));
}

TEST_CASE("relation words are over declared generators") {
  for (SystemId id : all_system_ids()) {
    CAPTURE(to_string(id));
    GroupPresentation gp = presentation(id);
    for (const auto& r : gp.relations)
      for (const auto& l : r.word.letters) {
        CAPTURE(r.label);
        CHECK(std::find(gp.generators.begin(), gp.generators.end(), l.gen) != gp.generators.end());
      }
  }
}

TEST_CASE("word parsing") {
  Word w = Word::parse("(s2 s3)^2");
  CHECK(w.to_string() == "s2 s3 s2 s3");
  CHECK(Word::parse("(s0 pi)^-1").to_string() == "pi^-1 s0^-1");
  CHECK_THROWS_AS(Word::parse("(s0"), ParseError);
  CHECK_THROWS_AS(Word::parse(""), ParseError);
}

TEST_CASE("map serialization") {
  std::string j = to_json(generator(SystemId::B3, "s0"));
  CHECK(j.find("\"name\"") != std::string::npos);
  CHECK(j.find("\"images\"") != std::string::npos);
  CHECK(j.find("\"params\"") != std::string::npos);
}
