#include "painleve/verify/limits.hpp"

#include "painleve/exactalg.hpp"
#include "painleve/maps/flow.hpp"

namespace painleve {

namespace {

Bindings to_new_names(const Degeneration& d) {
  Bindings back;
  for (const auto& [nv, e] : target_renaming(d)) back.emplace(vars_in(e.vars()).front(), RatExpr::var(nv));
  return back;
}

BirationalMap substitution_inverse(const Degeneration& d) { return inverse(d.substitution, {d.eps}); }

// First coefficient of `s` that is nonzero modulo the constraint, checked
// through the truncation order, or nullopt when all vanish.
std::optional<std::pair<int, RatExpr>> first_nonzero(const EpsSeries& s, const PhaseSpace& space) {
  if (s.is_zero_to_order()) return std::nullopt;
  for (int k = s.min_order(); k <= s.order(); ++k) {
    RatExpr c = space.reduce(s.coeff(k));
    if (!c.is_zero()) return std::make_pair(k, c);
  }
  return std::nullopt;
}

}  // namespace

std::vector<RatExpr> degenerated_field(const Degeneration& d) {
  BirationalMap inv = substitution_inverse(d);
  return transform_field(inv, d.substitution, vector_field(get_system(d.source)).rhs);
}

CheckReport verify_degeneration(const Degeneration& d, int order, int stability_order) {
  auto field = degenerated_field(d);
  Bindings back = to_new_names(d);
  auto target = vector_field(get_system(d.target)).rhs;
  const PhaseSpace& ns = d.new_space;

  auto run = [&](int n) {
    CheckReport r;
    for (std::size_t k = 0; k < field.size(); ++k) {
      EpsSeries s = eps_expand(field[k], d.eps, n);
      std::string comp = "d" + ns.phase[k].name() + "/d" + ns.time.name();
      if (s.valuation() < 0) {
        r.status = Status::fail;
        r.residual = s.coeff(s.valuation());
        r.detail = comp + " has an eps^" + std::to_string(s.valuation()) + " term";
        return r;
      }
      RatExpr diff = ns.reduce(s.coeff(0) - target[k].substitute(back));
      if (!diff.is_zero()) {
        r.status = Status::fail;
        r.residual = diff;
        r.detail = comp + " limit differs from the target system";
        return r;
      }
    }
    r.detail = "limit equals " + to_string(d.target) + " through order " + std::to_string(n);
    return r;
  };
  CheckReport a = run(order);
  CheckReport b = run(stability_order);
  if (a.status != b.status)
    throw TruncationUnstable(d.name + ": verdict at order " + std::to_string(order) + " differs from order " +
                             std::to_string(stability_order));
  return a;
}

namespace {

EpsSeries sigma_series(const Degeneration& d, const SubgroupGenerator& g, const RatExpr& rho, int order) {
  RatExpr eps = RatExpr::var(d.eps);
  int k = d.eps_power;
  if (k == 1) return eps_expand(rho * eps, d.eps, order);
  RatExpr zk = RatExpr(g.zeta).pow(k);
  EpsSeries base = eps_expand(rho / zk, d.eps, order);
  if (base.valuation() != 0 || base.coeff(0) != RatExpr(1))
    throw BadConstantTerm(g.name + ": rho / zeta^k does not start with 1, wrong branch");
  return binomial_series(base, mpq_class(1, k), order) * EpsSeries::monomial(RatExpr(g.zeta), 1, order);
}

}  // namespace

ConjugatedAction conjugated_action(const Degeneration& d, const SubgroupGenerator& g, int order) {
  BirationalMap inv = substitution_inverse(d);
  BirationalMap w = evaluate_word(generators(d.source), g.word);
  RatExpr eps = RatExpr::var(d.eps);

  // eps^k is a function of the old parameters, so S(eps)^k = rho eps^k.
  RatExpr rho = d.new_space.reduce(apply(d.substitution, apply(w, d.eps_value)) / eps.pow(d.eps_power));

  Var sigma = Var::of("sigma");
  Bindings eps_to_sigma{{d.eps, RatExpr::var(sigma)}};
  std::vector<std::pair<Var, RatExpr>> imgs;
  for (Var v : d.new_space.coordinates()) {
    if (v == d.eps) continue;
    RatExpr img = apply(w, inv.image(v)).substitute(eps_to_sigma);
    imgs.emplace_back(v, d.new_space.reduce(apply(d.substitution, img)));
  }

  // sigma sits in denominators, so it is carried to a higher order than the
  // images need.
  for (int extra = 8;; extra += 8) {
    ConjugatedAction out;
    out.sigma = sigma_series(d, g, rho, order + extra);
    std::map<Var, EpsSeries> bind{{sigma, out.sigma}};
    try {
      for (const auto& [v, img] : imgs) {
        out.coords.push_back(v);
        out.images.push_back(eps_expand(img, d.eps, order, bind));
      }
    } catch (const TruncationUnstable&) {
      if (extra >= 64) throw;
      continue;
    }
    out.sigma = out.sigma.truncated(order);
    out.coords.push_back(d.eps);
    out.images.push_back(out.sigma);
    return out;
  }
}

CheckReport verify_weyl_generator(const Degeneration& d, const SubgroupGenerator& g, int order) {
  CheckReport r;
  ConjugatedAction act = conjugated_action(d, g, order);
  const PhaseSpace& ns = d.new_space;
  auto image_of = [&](Var v) -> const EpsSeries& {
    for (std::size_t i = 0; i < act.coords.size(); ++i)
      if (act.coords[i] == v) return act.images[i];
    throw UnknownName("no new coordinate " + v.name());
  };

  // Stated eps-dependent images, exact through the truncation order.
  std::map<Var, EpsSeries> ubind;
  if (!g.u_base.empty()) {
    int uo = order + 16;
    ubind.emplace(Var::of("u"), binomial_series(eps_expand(parse_infix(g.u_base), d.eps, uo), g.u_exponent, uo));
  }
  for (const auto& [name, text] : g.expected) {
    Var v = Var::lookup(name);
    EpsSeries want = eps_expand(parse_infix(text), d.eps, order, ubind);
    if (auto bad = first_nonzero(image_of(v) - want, ns)) {
      r.status = Status::fail;
      r.residual = bad->second;
      r.detail = g.name + "(" + name + ") differs from the stated action at eps^" + std::to_string(bad->first);
      return r;
    }
  }

  std::string notes;
  for (const auto& [name, text] : g.limit_expected) {
    Var v = Var::lookup(name);
    EpsSeries want = eps_expand(parse_infix(text), d.eps, order, ubind);
    const EpsSeries& got = image_of(v);
    RatExpr diff = ns.reduce(got.coeff(0) - want.coeff(0));
    if (!diff.is_zero() || got.valuation() < 0) {
      r.status = Status::fail;
      r.residual = diff;
      r.detail = g.name + "(" + name + ") limit differs from the stated action";
      return r;
    }
    if (auto bad = first_nonzero(got - want, ns))
      notes += "; " + g.name + "(" + name + ") as stated holds at eps -> 0 only, first correction at eps^" +
               std::to_string(bad->first) + ": " + bad->second.to_string();
  }

  // Limit against the target generator.
  const BirationalMap& tg = generator(d.target, g.limit_of);
  Bindings ren = target_renaming(d);
  Bindings back = to_new_names(d);
  for (std::size_t i = 0; i < act.coords.size(); ++i) {
    Var v = act.coords[i];
    if (v == d.eps) continue;
    const EpsSeries& s = act.images[i];
    if (s.valuation() < 0) {
      r.status = Status::fail;
      r.residual = s.coeff(s.valuation());
      r.detail = g.name + "(" + v.name() + ") diverges as eps -> 0";
      return r;
    }
    Var tv = vars_in(ren.at(v).vars()).front();
    RatExpr want = tg.image(tv).substitute(back);
    RatExpr diff = ns.reduce(s.coeff(0) - want);
    if (!diff.is_zero()) {
      r.status = Status::fail;
      r.residual = diff;
      r.detail = g.name + "(" + v.name() + ") does not tend to " + g.limit_of + "(" + tv.name() + ")";
      return r;
    }
  }
  r.detail = g.name + " = " + g.word.to_string() + " tends to " + g.limit_of + "; " + g.name +
             "(eps) = " + act.sigma.to_string(d.eps) + notes;
  return r;
}

}  // namespace painleve
