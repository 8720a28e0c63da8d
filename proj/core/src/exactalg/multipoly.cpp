#include "painleve/exactalg/multipoly.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>

#include "painleve/error.hpp"

namespace painleve {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::of(Var v, unsigned k) {
  Monomial m;
  if (k > 255) throw ExpressionTooLarge("exponent overflow");
  m.e[v.id()] = static_cast<std::uint8_t>(k);
  m.deg = static_cast<std::uint16_t>(k);
  return m;
}

VarMask Monomial::vars() const {
  VarMask mask = 0;
  if (deg == 0) return 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i]) mask |= VarMask{1} << i;
  return mask;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e[i]) + o.e[i];
    if (s > 255) throw ExpressionTooLarge("exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  if (o.deg > deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (o.e[i] > e[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  r.deg = static_cast<std::uint16_t>(deg - o.deg);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::min(e[i], o.e[i]);
    d += r.e[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r = *this;
  r.deg = static_cast<std::uint16_t>(r.deg - r.e[v.id()]);
  r.e[v.id()] = 0;
  return r;
}

Monomial Monomial::with(Var v, unsigned k) const {
  Monomial r = without(v);
  if (k > 255) throw ExpressionTooLarge("exponent overflow");
  r.e[v.id()] = static_cast<std::uint8_t>(k);
  r.deg = static_cast<std::uint16_t>(r.deg + k);
  return r;
}

// ---- budget -----------------------------------------------------------------

namespace {
std::atomic<std::size_t> g_budget{2'000'000};
}

std::size_t monomial_budget() { return g_budget.load(); }
void set_monomial_budget(std::size_t n) { g_budget.store(n); }

void check_budget(std::size_t n, const char* where) {
  if (n > g_budget.load())
    throw ExpressionTooLarge(std::string(where) + ": " + std::to_string(n) + " terms exceeds budget");
}

// ---- Point ------------------------------------------------------------------

const Scalar& Point::at(Var x) const {
  if (!v[x.id()]) throw Error("no value for indeterminate " + x.name());
  return *v[x.id()];
}

// ---- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.push_back({Monomial::one(), c});
}

MultiPoly MultiPoly::var(Var v) { return monomial(Monomial::of(v), Scalar(1)); }

MultiPoly MultiPoly::monomial(const Monomial& m, Scalar c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.m, b.m) > 0; });
  MultiPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
    } else {
      if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
  return p;
}

MultiPoly MultiPoly::from_sorted(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Scalar MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return Scalar(0);
}

VarMask MultiPoly::vars() const {
  VarMask m = 0;
  for (const auto& t : terms_) m |= t.m.vars();
  return m;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.m.e[v.id()]);
  return d;
}

unsigned MultiPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = 255;
  for (const auto& t : terms_) d = std::min<unsigned>(d, t.m.e[v.id()]);
  return d;
}

unsigned MultiPoly::degree_in(VarMask mask) const {
  unsigned best = 0;
  for (const auto& t : terms_) {
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (mask >> i & 1) d += t.m.e[i];
    best = std::max(best, d);
  }
  return best;
}

Monomial MultiPoly::min_monomial() const {
  if (terms_.empty()) return Monomial::one();
  Monomial m = terms_.front().m;
  for (const auto& t : terms_) {
    if (m.is_one()) break;
    m = m.gcd(t.m);
  }
  return m;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.c.negate();
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = grlex_compare(a[i].m, b[j].m);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().c.negate();
    } else {
      Scalar c = a[i].c;
      if (subtract) {
        c -= b[j].c;
      } else {
        c += b[j].c;
      }
      if (!c.is_zero()) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, false);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, true);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (a.size() == 1) return b.shifted(a.terms_[0].m).scaled(a.terms_[0].c);
  if (b.size() == 1) return a.shifted(b.terms_[0].m).scaled(b.terms_[0].c);
  check_budget(a.size() * b.size() / 64, "multiply");
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 16));
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial m = s.m * t.m;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, s.c * t.c);
      } else {
        it->second += s.c * t.c;
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  check_budget(out.size(), "multiply");
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return grlex_compare(x.m, y.m) > 0; });
  return MultiPoly::from_sorted(std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(Scalar(1));
  MultiPoly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::scaled(const Scalar& s) const {
  if (s.is_zero()) return MultiPoly();
  if (s.is_one()) return *this;
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.c *= s;
  return r;
}

MultiPoly MultiPoly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.m = t.m * m;
  return r;
}

MultiPoly MultiPoly::divided_by_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  MultiPoly r(*this);
  for (auto& t : r.terms_) {
    if (!t.m.divisible_by(m)) throw NotDivisible("monomial division");
    t.m = t.m / m;
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty() || terms_.front().c.is_one()) return *this;
  return scaled(terms_.front().c.inverse());
}

MultiPoly MultiPoly::diff(Var v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned k = t.m.e[v.id()];
    if (k == 0) continue;
    Monomial m = t.m;
    m.e[v.id()] = static_cast<std::uint8_t>(k - 1);
    m.deg = static_cast<std::uint16_t>(m.deg - 1);
    out.push_back({m, t.c * Scalar(static_cast<long>(k))});
  }
  // Lowering the same exponent by one keeps the relative grlex order.
  return MultiPoly::from_sorted(std::move(out));
}

std::vector<MultiPoly> MultiPoly::coefficients(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    unsigned k = t.m.e[v.id()];
    buckets[k].push_back({t.m.without(v), t.c});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  // Removing the same power of v from every term of a bucket keeps grlex
  // order (the degree drops uniformly and lex order on the rest is unchanged).
  for (auto& b : buckets) out.push_back(MultiPoly::from_sorted(std::move(b)));
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& c, Var v) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (const auto& t : c[k].terms()) out.push_back({t.m.with(v, static_cast<unsigned>(k)), t.c});
  }
  return from_terms(std::move(out));
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& b) const {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (is_zero()) return MultiPoly();
  if (b.is_constant()) return scaled(b.terms_[0].c.inverse());
  if (b.size() == 1) {
    const Term& bt = b.terms_[0];
    MultiPoly r(*this);
    Scalar inv = bt.c.inverse();
    for (auto& t : r.terms_) {
      if (!t.m.divisible_by(bt.m)) return std::nullopt;
      t.m = t.m / bt.m;
      t.c *= inv;
    }
    return r;
  }
  // Cheap rejections on per-variable degree ranges.
  VarMask bv = b.vars();
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!(bv >> i & 1)) continue;
    Var v(static_cast<std::uint16_t>(i));
    if (degree(v) < b.degree(v)) return std::nullopt;
    if (min_degree(v) < b.min_degree(v)) return std::nullopt;
  }
  if (total_degree() < b.total_degree()) return std::nullopt;

  std::map<Monomial, Scalar, MonomialGreater> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.m, t.c);
  const Term& lb = b.terms_.front();
  Scalar lb_inv = lb.c.inverse();
  std::vector<Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!it->first.divisible_by(lb.m)) return std::nullopt;
    Monomial qm = it->first / lb.m;
    Scalar qc = it->second * lb_inv;
    for (const auto& bt : b.terms_) {
      Monomial m = qm * bt.m;
      Scalar prod = qc * bt.c;
      auto jt = rem.find(m);
      if (jt == rem.end()) {
        prod.negate();
        rem.emplace(m, std::move(prod));
      } else {
        jt->second -= prod;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
    q.push_back({qm, std::move(qc)});
    if (q.size() > monomial_budget()) throw ExpressionTooLarge("division quotient");
  }
  return MultiPoly::from_sorted(std::move(q));
}

MultiPoly MultiPoly::operator/(const MultiPoly& b) const {
  auto q = divide_exact(b);
  if (!q) throw NotDivisible("polynomial division is not exact");
  return std::move(*q);
}

Scalar MultiPoly::eval(const Point& pt) const {
  VarMask used = vars();
  std::array<std::vector<Scalar>, kMaxVars> powers;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!(used >> i & 1)) continue;
    Var v(static_cast<std::uint16_t>(i));
    const Scalar& base = pt.at(v);
    unsigned d = degree(v);
    auto& pw = powers[i];
    pw.reserve(d + 1);
    pw.emplace_back(1);
    for (unsigned k = 1; k <= d; ++k) pw.push_back(pw.back() * base);
  }
  Scalar sum(0);
  for (const auto& t : terms_) {
    Scalar term = t.c;
    for (std::size_t i = 0; i < kMaxVars && t.m.deg; ++i)
      if (t.m.e[i]) term *= powers[i][t.m.e[i]];
    sum += term;
  }
  return sum;
}

std::optional<std::uint64_t> MultiPoly::eval_mod(const ModPoint& pt, const ModContext& ctx) const {
  const std::uint64_t p = ctx.p;
  std::uint64_t sum = 0;
  for (const auto& t : terms_) {
    auto c = t.c.mod_p(ctx);
    if (!c) return std::nullopt;
    std::uint64_t term = *c;
    if (t.m.deg) {
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (t.m.e[i]) term = mulmod(term, powmod(pt[i], t.m.e[i], p), p);
    }
    sum += term;
    if (sum >= p) sum -= p;
  }
  return sum;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].m != o.terms_[k].m || terms_[k].c != o.terms_[k].c) return false;
  }
  return true;
}

namespace {
std::string term_string(const Term& t) {
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned k = t.m.e[i];
    if (!k) continue;
    const std::string& n = Var(static_cast<std::uint16_t>(i)).name();
    factors.push_back(k == 1 ? n : "(^ " + n + " " + std::to_string(k) + ")");
  }
  if (factors.empty()) return t.c.to_string();
  if (!t.c.is_one()) factors.insert(factors.begin(), t.c.to_string());
  if (factors.size() == 1) return factors[0];
  std::string s = "(*";
  for (auto& f : factors) s += " " + f;
  return s + ")";
}
}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  if (terms_.size() == 1) return term_string(terms_[0]);
  std::string s = "(+";
  for (const auto& t : terms_) s += " " + term_string(t);
  return s + ")";
}

std::size_t MultiPoly::hash() const {
  std::size_t h = terms_.size();
  MonomialHash mh;
  for (const auto& t : terms_) h = h * 1000003u ^ (mh(t.m) + 31 * t.c.hash());
  return h;
}

}  // namespace painleve
