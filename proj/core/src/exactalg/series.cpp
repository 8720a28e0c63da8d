#include "painleve/exactalg/series.hpp"

#include <algorithm>

#include "painleve/error.hpp"

namespace painleve {

EpsSeries::EpsSeries(int min_order, std::vector<RatExpr> coeffs, int order)
    : min_order_(min_order), order_(order), coeffs_(std::move(coeffs)) {
  int keep = order_ - min_order_ + 1;
  if (keep < 0) keep = 0;
  if (static_cast<int>(coeffs_.size()) > keep) coeffs_.resize(static_cast<std::size_t>(keep));
  normalize();
}

void EpsSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_order_ += static_cast<int>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) min_order_ = order_ + 1;
}

EpsSeries EpsSeries::constant(const RatExpr& c, int order) { return EpsSeries(0, {c}, order); }

EpsSeries EpsSeries::monomial(const RatExpr& c, int k, int order) { return EpsSeries(k, {c}, order); }

RatExpr EpsSeries::coeff(int k) const {
  if (k > order_) throw TruncationUnstable("coefficient of eps^" + std::to_string(k) + " beyond order " + std::to_string(order_));
  int idx = k - min_order_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return RatExpr();
  return coeffs_[static_cast<std::size_t>(idx)];
}

EpsSeries EpsSeries::truncated(int order) const {
  return EpsSeries(min_order_, coeffs_, std::min(order, order_));
}

EpsSeries EpsSeries::operator-() const {
  return map([](const RatExpr& x) { return -x; });
}

EpsSeries EpsSeries::operator+(const EpsSeries& o) const {
  int ord = std::min(order_, o.order_);
  int lo = std::min(valuation(), o.valuation());
  if (lo > ord) return EpsSeries(ord + 1, {}, ord);
  std::vector<RatExpr> c(static_cast<std::size_t>(ord - lo + 1));
  for (int k = lo; k <= ord; ++k) c[static_cast<std::size_t>(k - lo)] = coeff(k) + o.coeff(k);
  return EpsSeries(lo, std::move(c), ord);
}

EpsSeries EpsSeries::operator-(const EpsSeries& o) const { return *this + (-o); }

EpsSeries EpsSeries::operator*(const EpsSeries& o) const {
  int va = valuation(), vb = o.valuation();
  if (coeffs_.empty() || o.coeffs_.empty()) {
    int ord = std::min(va + o.order_, vb + order_);
    return EpsSeries(ord + 1, {}, ord);
  }
  int ord = std::min(va + o.order_, vb + order_);
  int lo = va + vb;
  if (lo > ord) return EpsSeries(ord + 1, {}, ord);
  std::vector<RatExpr> c(static_cast<std::size_t>(ord - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      std::size_t n = i + j;
      if (n >= c.size()) break;
      c[n] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return EpsSeries(lo, std::move(c), ord);
}

EpsSeries EpsSeries::scaled(const RatExpr& s) const {
  return map([&](const RatExpr& x) { return x * s; });
}

EpsSeries EpsSeries::inverse() const {
  if (coeffs_.empty()) throw NotLaurentExpandable("inverse of a series that vanishes to order " + std::to_string(order_));
  int v = min_order_;
  int rel = order_ - v;  // relative precision
  RatExpr inv0 = coeffs_[0].inverse();
  std::vector<RatExpr> b(static_cast<std::size_t>(rel + 1));
  b[0] = inv0;
  for (int n = 1; n <= rel; ++n) {
    RatExpr s;
    for (int k = 1; k <= n && k < static_cast<int>(coeffs_.size()); ++k)
      s += coeffs_[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
    b[static_cast<std::size_t>(n)] = -(s * inv0);
  }
  return EpsSeries(-v, std::move(b), -v + rel);
}

EpsSeries EpsSeries::operator/(const EpsSeries& o) const { return *this * o.inverse(); }

EpsSeries EpsSeries::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  EpsSeries r = constant(RatExpr(1), order_ + 1000);
  EpsSeries base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

RatExpr EpsSeries::to_ratexpr(Var eps) const {
  RatExpr sum;
  RatExpr e = RatExpr::var(eps);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) sum += coeffs_[k] * e.pow(min_order_ + static_cast<int>(k));
  return sum;
}

std::string EpsSeries::to_string(Var eps) const {
  std::string s = "(+";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    s += " (* " + coeffs_[k].to_string() + " (^ " + eps.name() + " " + std::to_string(min_order_ + static_cast<int>(k)) + "))";
  }
  s += " (O (^ " + eps.name() + " " + std::to_string(order_ + 1) + ")))";
  return s;
}

EpsSeries binomial_series(const EpsSeries& base, const mpq_class& c, int order) {
  if (base.valuation() < 0 || base.coeff(0) != RatExpr(1))
    throw BadConstantTerm("binomial series needs constant term 1");
  int ord = std::min(order, base.order());
  // n g_n = sum_{k=1}^{n} (c k - (n - k)) f_k g_{n-k}, from (1+u) g' = c u' g.
  std::vector<RatExpr> f(static_cast<std::size_t>(ord + 1));
  for (int k = 0; k <= ord; ++k) f[static_cast<std::size_t>(k)] = base.coeff(k);
  std::vector<RatExpr> g(static_cast<std::size_t>(ord + 1));
  g[0] = RatExpr(1);
  for (int n = 1; n <= ord; ++n) {
    RatExpr s;
    for (int k = 1; k <= n; ++k) {
      if (f[static_cast<std::size_t>(k)].is_zero()) continue;
      mpq_class w = c * k - (n - k);
      if (sgn(w) == 0) continue;
      s += f[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(n - k)] * RatExpr(Scalar(w));
    }
    g[static_cast<std::size_t>(n)] = s * RatExpr::rational(1, n);
  }
  return EpsSeries(0, std::move(g), ord);
}

namespace {

EpsSeries poly_series(const MultiPoly& p, Var eps, const std::map<Var, EpsSeries>& sb, int work) {
  for (const auto& [s, ser] : sb) {
    if (!(p.vars() & mask_of(s))) continue;
    std::vector<MultiPoly> cs = p.coefficients(s);
    EpsSeries sum = EpsSeries(work + 1, {}, work);
    EpsSeries power = EpsSeries::constant(RatExpr(1), work);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (k) power = (power * ser).truncated(work);
      if (cs[k].is_zero()) continue;
      sum = sum + (poly_series(cs[k], eps, sb, work) * power).truncated(work);
    }
    return sum.truncated(work);
  }
  std::vector<MultiPoly> cs = p.coefficients(eps);
  std::vector<RatExpr> c;
  c.reserve(cs.size());
  for (auto& x : cs) c.emplace_back(std::move(x));
  return EpsSeries(0, std::move(c), work);
}

}  // namespace

EpsSeries eps_expand(const RatExpr& e, Var eps, int order, const std::map<Var, EpsSeries>& series_bindings) {
  auto weight = [&](const MultiPoly& p) {
    unsigned w = p.degree(eps);
    for (const auto& [s, ser] : series_bindings) w += p.degree(s) * static_cast<unsigned>(std::max(0, ser.valuation()));
    return static_cast<int>(w);
  };
  int work = order + 2 * weight(e.den()) + 2;
  for (int attempt = 0; attempt < 4; ++attempt) {
    EpsSeries n = poly_series(e.num(), eps, series_bindings, work);
    EpsSeries d = poly_series(e.den(), eps, series_bindings, work);
    if (d.is_zero_to_order()) {
      throw NotLaurentExpandable("denominator vanishes to order " + std::to_string(work));
    }
    EpsSeries r = n / d;
    if (r.order() >= order) return r.truncated(order);
    work += order - r.order() + 2;
  }
  throw TruncationUnstable("could not reach requested expansion order");
}

}  // namespace painleve
