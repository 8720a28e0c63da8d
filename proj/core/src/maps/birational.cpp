#include "painleve/maps/birational.hpp"

#include <algorithm>
#include <bit>
#include <json.hpp>

#include "painleve/error.hpp"
#include "painleve/exactalg/infix.hpp"

namespace painleve {

bool ParamAction::is_identity() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!offset[i].is_zero()) return false;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      bool diag = rows[i] == cols[j];
      if (diag ? !matrix[i][j].is_one() : !matrix[i][j].is_zero()) return false;
    }
  }
  return true;
}

BirationalMap::BirationalMap(std::string name, PhaseSpace source, PhaseSpace target, Bindings images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
  for (const auto& [v, e] : images)
    if (!target_.has(v)) throw Error("map " + name_ + ": image given for non-coordinate " + v.name());
  for (Var v : target_.coordinates()) {
    auto it = images.find(v);
    if (it != images.end()) {
      images_.emplace(v, it->second);
    } else if (source_.has(v)) {
      images_.emplace(v, RatExpr::var(v));
    } else {
      throw Error("map " + name_ + ": no image for " + v.name());
    }
  }
}

BirationalMap BirationalMap::identity(const PhaseSpace& space) { return BirationalMap("id", space, space, {}); }

BirationalMap BirationalMap::from_strings(std::string name, PhaseSpace source, PhaseSpace target,
                                          const std::vector<std::pair<std::string, std::string>>& images) {
  Bindings b;
  for (const auto& [v, text] : images) b[Var::lookup(v)] = parse_infix(text);
  return BirationalMap(std::move(name), std::move(source), std::move(target), std::move(b));
}

const RatExpr& BirationalMap::image(Var v) const {
  auto it = images_.find(v);
  if (it == images_.end()) throw Error("map " + name_ + " has no coordinate " + v.name());
  return it->second;
}

Bindings BirationalMap::var_images() const {
  Bindings b;
  for (Var v : target_.phase) b.emplace(v, image(v));
  return b;
}

std::optional<ParamAction> BirationalMap::param_action() const {
  ParamAction pa;
  pa.rows = target_.params;
  pa.rows.insert(pa.rows.end(), target_.extra.begin(), target_.extra.end());
  pa.cols = source_.params;
  pa.cols.insert(pa.cols.end(), source_.extra.begin(), source_.extra.end());
  for (Var r : pa.rows) {
    const RatExpr& img = image(r);
    if (!img.is_polynomial()) return std::nullopt;
    std::vector<Scalar> row;
    RatExpr rest = img;
    for (Var c : pa.cols) {
      RatExpr d = img.diff(c);
      auto k = d.constant_value();
      if (!k) return std::nullopt;
      row.push_back(*k);
      rest -= RatExpr(*k) * RatExpr::var(c);
    }
    auto off = rest.constant_value();
    if (!off) return std::nullopt;
    pa.matrix.push_back(std::move(row));
    pa.offset.push_back(*off);
  }
  return pa;
}

BirationalMap BirationalMap::renamed(std::string name) const {
  BirationalMap m = *this;
  m.name_ = std::move(name);
  return m;
}

BirationalMap BirationalMap::with_target(PhaseSpace target) const {
  BirationalMap m = *this;
  m.target_ = std::move(target);
  return m;
}

BirationalMap BirationalMap::with_inverse(const BirationalMap& inv) const {
  BirationalMap m = *this;
  m.inverse_ = std::make_shared<const BirationalMap>(inv);
  return m;
}

bool BirationalMap::operator==(const BirationalMap& o) const {
  return source_.name == o.source_.name && target_.name == o.target_.name && images_ == o.images_;
}

RatExpr apply(const BirationalMap& m, const RatExpr& e) { return e.substitute(m.images()); }

BirationalMap compose(const BirationalMap& a, const BirationalMap& b, std::size_t max_terms) {
  if (a.target().name != b.source().name)
    throw IncompatibleComposition(a.name() + " lands in " + a.target().name + " but " + b.name() + " starts in " +
                                  b.source().name);
  Bindings out;
  for (Var v : b.target().coordinates()) {
    RatExpr e = b.image(v).substitute(a.images());
    if (e.size() > max_terms)
      throw ExpressionTooLarge("composing " + a.name() + " with " + b.name() + " gives " +
                               std::to_string(e.size()) + " terms");
    out.emplace(v, std::move(e));
  }
  return BirationalMap(a.name() + "*" + b.name(), a.source(), b.target(), std::move(out));
}

BirationalMap compose_all(const std::vector<BirationalMap>& maps) {
  if (maps.empty()) throw Error("compose_all of an empty word");
  BirationalMap acc = maps.front();
  for (std::size_t k = 1; k < maps.size(); ++k) acc = compose(acc, maps[k]);
  return acc;
}

IdentityCheck identity_check(const BirationalMap& m) {
  IdentityCheck r;
  auto src = m.source().coordinates();
  auto dst = m.target().coordinates();
  std::sort(src.begin(), src.end());
  std::sort(dst.begin(), dst.end());
  if (src != dst) {
    r.offending = m.target().coordinates();
    return r;
  }
  r.without_constraint = true;
  for (Var v : m.target().coordinates()) {
    const RatExpr& img = m.image(v);
    RatExpr self = RatExpr::var(v);
    if (img != self) r.without_constraint = false;
    if (m.source().reduce(img) != m.source().reduce(self)) r.offending.push_back(v);
  }
  r.modulo_constraint = r.offending.empty();
  return r;
}

bool is_identity(const BirationalMap& m) { return identity_check(m).modulo_constraint; }

std::vector<Var> differing_images(const BirationalMap& a, const BirationalMap& b) {
  std::vector<Var> out;
  for (Var v : a.target().coordinates()) {
    if (!b.target().has(v)) {
      out.push_back(v);
      continue;
    }
    if (!a.source().reduce(a.image(v) - b.image(v)).is_zero()) out.push_back(v);
  }
  return out;
}

BirationalMap inverse(const BirationalMap& m, const std::vector<Var>& kept) {
  auto is_kept = [&](Var v) { return std::find(kept.begin(), kept.end(), v) != kept.end(); };
  std::vector<Var> unknowns;
  VarMask unknown_mask = 0;
  for (Var v : m.source().coordinates()) {
    if (is_kept(v)) continue;
    unknowns.push_back(v);
    unknown_mask |= mask_of(v);
  }

  // Target symbols get scratch names whenever they clash with a source name.
  std::vector<Var> tcoords;
  for (Var v : m.target().coordinates())
    if (!is_kept(v)) tcoords.push_back(v);
  bool clash = std::any_of(tcoords.begin(), tcoords.end(), [&](Var v) { return m.source().has(v); });
  Bindings from_scratch;
  std::vector<std::pair<Var, RatExpr>> eqs;
  int k = 0;
  for (Var v : tcoords) {
    Var sym = v;
    if (clash) {
      sym = scratch_var(k++);
      from_scratch.emplace(sym, RatExpr::var(v));
    }
    eqs.emplace_back(sym, m.image(v));
  }

  Bindings solved;
  std::vector<bool> used(eqs.size(), false);
  bool progress = true;
  while (solved.size() < unknowns.size() && progress) {
    progress = false;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (used[i]) continue;
      RatExpr r = eqs[i].second.substitute(solved);
      VarMask left = r.vars() & unknown_mask;
      for (const auto& [u, e] : solved) left &= ~mask_of(u);
      if (left == 0) {
        used[i] = true;
        continue;
      }
      if (std::popcount(left) != 1) continue;
      Var u = vars_in(left).front();
      if (r.num().degree(u) > 1 || r.den().degree(u) > 1) continue;
      auto nc = r.num().coefficients(u);
      auto dc = r.den().coefficients(u);
      RatExpr a = nc.size() > 1 ? RatExpr(nc[1]) : RatExpr();
      RatExpr b = nc.empty() ? RatExpr() : RatExpr(nc[0]);
      RatExpr c = dc.size() > 1 ? RatExpr(dc[1]) : RatExpr();
      RatExpr d = dc.empty() ? RatExpr() : RatExpr(dc[0]);
      RatExpr lhs = RatExpr::var(eqs[i].first);
      // lhs (c u + d) = a u + b
      RatExpr den = lhs * c - a;
      if (den.is_zero()) continue;
      solved.emplace(u, (b - lhs * d) / den);
      used[i] = true;
      progress = true;
    }
  }
  if (solved.size() < unknowns.size()) {
    std::string missing;
    for (Var u : unknowns)
      if (!solved.count(u)) missing += " " + u.name();
    throw NotInvertible("map " + m.name() + " is not triangular in:" + missing);
  }

  Bindings images;
  for (Var u : unknowns) images.emplace(u, clash ? solved.at(u).substitute(from_scratch) : solved.at(u));
  PhaseSpace src = m.target();
  for (Var v : kept)
    if (!src.has(v)) src.extra.push_back(v);
  return BirationalMap(m.name() + "^-1", std::move(src), m.source(), std::move(images));
}

BirationalMap inverse_of(const BirationalMap& m) {
  if (const BirationalMap* h = m.inverse_hint()) {
    if (!is_identity(compose(m, *h))) throw NotInvertible("inverse candidate for " + m.name() + " fails to compose to the identity");
    return *h;
  }
  return inverse(m);
}

std::vector<std::vector<RatExpr>> phase_jacobian(const BirationalMap& m) {
  std::vector<std::vector<RatExpr>> j;
  for (Var tv : m.target().phase) {
    std::vector<RatExpr> row;
    const RatExpr& img = m.image(tv);
    for (Var sv : m.source().phase) row.push_back(m.source().reduce(img.diff(sv)));
    j.push_back(std::move(row));
  }
  return j;
}

bool symplectic_check(const BirationalMap& m) {
  if (m.source().phase.size() != m.target().phase.size()) return false;
  auto j = phase_jacobian(m);
  std::size_t n = j.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      RatExpr s;
      for (std::size_t p = 0; p + 1 < n; p += 2) s += j[p][a] * j[p + 1][b] - j[p + 1][a] * j[p][b];
      s = m.source().reduce(s);
      bool canonical_pair = (a % 2 == 0) && b == a + 1;
      if (s != RatExpr(canonical_pair ? 1 : 0)) return false;
    }
  }
  return true;
}

BirationalMap poisson_reflection(const PhaseSpace& space, const RatExpr& f, const RatExpr& a, std::string name) {
  Bindings images;
  if (!a.is_zero()) {
    RatExpr s = a / f;
    for (std::size_t p = 0; p + 1 < space.phase.size(); p += 2) {
      Var q = space.phase[p], mom = space.phase[p + 1];
      images[q] = RatExpr::var(q) + s * f.diff(mom);
      images[mom] = RatExpr::var(mom) - s * f.diff(q);
    }
  }
  return BirationalMap(std::move(name), space, space, std::move(images));
}

RatExpr constraint_defect(const BirationalMap& m) {
  if (!m.target().constraint || m.target().constraint->terms.empty()) return RatExpr();
  const ParamConstraint& c = *m.target().constraint;
  return m.source().reduce(apply(m, c.lhs() - RatExpr(c.rhs)));
}

std::string to_json(const BirationalMap& m) {
  nlohmann::ordered_json j;
  j["name"] = m.name();
  j["source"] = m.source().name;
  j["target"] = m.target().name;
  nlohmann::ordered_json imgs = nlohmann::ordered_json::object();
  for (Var v : m.target().phase) imgs[v.name()] = m.image(v).to_string();
  j["images"] = imgs;
  j["time"] = m.time_image().to_string();
  if (auto pa = m.param_action()) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < pa->rows.size(); ++i) {
      nlohmann::ordered_json row;
      row["param"] = pa->rows[i].name();
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < pa->cols.size(); ++c)
        if (!pa->matrix[i][c].is_zero()) coeffs[pa->cols[c].name()] = pa->matrix[i][c].to_string();
      row["coeffs"] = coeffs;
      row["offset"] = pa->offset[i].to_string();
      rows.push_back(row);
    }
    j["params"] = rows;
  } else {
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (Var v : m.target().params) p[v.name()] = m.image(v).to_string();
    for (Var v : m.target().extra) p[v.name()] = m.image(v).to_string();
    j["params"] = p;
  }
  return j.dump();
}

}  // namespace painleve
