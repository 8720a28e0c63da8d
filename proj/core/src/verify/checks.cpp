#include "painleve/verify/checks.hpp"

#include <algorithm>
#include <random>

#include "painleve/exactalg.hpp"
#include "painleve/maps/flow.hpp"

namespace painleve {

std::string compact_label(const std::string& label) {
  std::string out;
  for (char c : label)
    if (c != ' ') out += c;
  return out;
}

CheckReport verify_equivariance(const BirationalMap& m, const std::vector<RatExpr>& source_field,
                                const std::vector<RatExpr>& target_field) {
  CheckReport r;
  auto res = equivariance_residual(m, source_field, target_field);
  for (std::size_t k = 0; k < res.size(); ++k) {
    if (res[k].is_zero()) continue;
    r.status = Status::fail;
    r.residual = res[k];
    r.detail = "component d" + m.target().phase[k].name() + "/dt differs";
    return r;
  }
  return r;
}

CheckReport verify_backlund(const HamiltonianSystem& sys, const BirationalMap& m) {
  auto field = vector_field(sys).rhs;
  return verify_equivariance(m, field, field);
}

std::vector<CheckReport> verify_relations(const GroupPresentation& pres, const std::vector<BirationalMap>& gens,
                                          const std::string& prefix, const RelationOptions& opts) {
  std::vector<CheckReport> out;
  std::mt19937_64 rng(opts.seed);
  for (const auto& rel : pres.relations) {
    out.push_back(timed_check(prefix + "." + compact_label(rel.label), [&] {
      CheckReport r;
      r.seed = opts.seed;
      if (opts.allow_probabilistic && rel.word.length() > opts.probabilistic_above) {
        if (word_fixes_random_points(gens, rel.word, rng, opts.trials)) {
          r.mode = CheckMode::probabilistic;
          r.detail = std::to_string(opts.trials) + " random points fixed";
          return r;
        }
        r.detail = "a random point moved; confirmed exactly: ";
      }
      BirationalMap m = evaluate_word(gens, rel.word);
      IdentityCheck ic = identity_check(m);
      if (ic.modulo_constraint) {
        r.detail += ic.without_constraint ? "identity" : "identity modulo the constraint only";
        return r;
      }
      r.status = Status::fail;
      Var v = ic.offending.front();
      r.residual = m.image(v) - RatExpr::var(v);
      r.detail += "image of " + v.name() + " is not " + v.name();
      bool params_fixed = true;
      for (Var p : m.source().params)
        if (std::find(ic.offending.begin(), ic.offending.end(), p) != ic.offending.end()) params_fixed = false;
      if (params_fixed) {
        r.detail += "; parameters are fixed, the word acts on the variables as (";
        std::vector<Var> moved = m.source().phase;
        moved.push_back(m.source().time);
        for (std::size_t k = 0; k < moved.size(); ++k)
          r.detail += (k ? ", " : "") + moved[k].name() + " -> " + m.image(moved[k]).to_string();
        r.detail += ")";
      }
      return r;
    }));
  }
  return out;
}

CheckReport verify_holomorphy(const HamiltonianSystem& sys, const BirationalMap& chart) {
  CheckReport r;
  BirationalMap inv = inverse_of(chart);
  auto field = transform_field(chart, inv, vector_field(sys).rhs);
  VarMask phase = 0;
  for (Var v : chart.target().phase) phase |= mask_of(v);
  for (std::size_t k = 0; k < field.size(); ++k) {
    if ((field[k].den().vars() & phase) == 0) continue;
    r.status = Status::fail;
    r.residual = field[k];
    r.detail = "pole in d" + chart.target().phase[k].name() + "/dt";
    return r;
  }
  try {
    RatExpr k = chart.target().reduce(pullback_hamiltonian(chart, sys.hamiltonian));
    bool poly = (k.den().vars() & phase) == 0;
    r.detail = poly ? "Hamiltonian polynomial in the chart" : "field polynomial, Hamiltonian has poles";
  } catch (const Error& e) {
    r.detail = std::string("field polynomial; Hamiltonian not reconstructed: ") + e.what();
  }
  return r;
}

CheckReport verify_coincidence(const Coincidence& c) {
  const auto& src = get_system(c.source);
  const auto& dst = get_system(c.target);
  CheckReport r = verify_equivariance(c.change, vector_field(src).rhs, vector_field(dst).rhs);
  if (!r.passed()) return r;
  RatExpr defect = constraint_defect(c.change);
  if (!defect.is_zero()) {
    r.status = Status::fail;
    r.residual = defect;
    r.detail = "parameter dictionary does not carry the constraint across";
  }
  return r;
}

CheckReport verify_induced(const Coincidence& c, const std::string& target_gen, const Word& w) {
  CheckReport r;
  BirationalMap word = evaluate_word(generators(c.source), w);
  BirationalMap conj = compose(inverse_of(c.change), compose(word, c.change));
  const BirationalMap& g = generator(c.target, target_gen);
  auto diff = differing_images(g, conj);
  if (diff.empty()) return r;
  r.status = Status::fail;
  r.residual = g.image(diff.front()) - conj.image(diff.front());
  r.detail = "image of " + diff.front().name() + " differs";
  // Letters of order four make a bare conjugation word easy to misprint;
  // report the first single-letter inversion that does work.
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    Word alt = w;
    alt.letters[k].exp = -alt.letters[k].exp;
    BirationalMap m = evaluate_word(generators(c.source), alt);
    if (differing_images(g, compose(inverse_of(c.change), compose(m, c.change))).empty()) {
      r.detail += "; the word " + alt.to_string() + " induces " + target_gen;
      break;
    }
  }
  return r;
}

CheckReport verify_phi_conjugation(SystemId id) {
  CheckReport r;
  auto phi = phi_map(id);
  if (!phi) throw UnknownName("no phi for " + to_string(id));
  const Coincidence* c = nullptr;
  for (const auto& cc : coincidences())
    if (cc.source == id) c = &cc;
  if (!c) throw UnknownName("no coincidence from " + to_string(id));
  BirationalMap cinv = inverse_of(c->change);
  const BirationalMap& pi = generator(c->target, "pi");
  auto d1 = differing_images(*phi, compose(c->change, compose(pi, cinv)));
  if (d1.empty()) {
    r.detail = "phi = pi pulled back by " + c->name;
    return r;
  }
  BirationalMap pulled_inv = compose(c->change, compose(inverse_of(pi), cinv));
  auto d2 = differing_images(*phi, pulled_inv);
  if (d2.empty()) {
    r.detail = "phi = pi^-1 pulled back by " + c->name;
    return r;
  }
  r.status = Status::fail;
  r.residual = phi->image(d1.front()) - compose(c->change, compose(pi, cinv)).image(d1.front());
  r.detail = "image of " + d1.front().name() + " differs";
  return r;
}

}  // namespace painleve
