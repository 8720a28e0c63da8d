#include "painleve/exactalg/scalar.hpp"

#include <functional>
#include <vector>

#include "painleve/error.hpp"

namespace painleve {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

const ModContext& ModContext::standard() {
  static const ModContext ctx = [] {
    ModContext c;
    c.p = 998244353;  // 119 * 2^23 + 1, primitive root 3
    std::uint64_t zeta8 = powmod(3, (c.p - 1) / 8, c.p);
    c.i = mulmod(zeta8, zeta8, c.p);
    c.sqrt2 = (zeta8 + invmod(zeta8, c.p)) % c.p;
    return c;
  }();
  return ctx;
}

namespace {
const mpq_class& zero_q() {
  static const mpq_class z(0);
  return z;
}
}  // namespace

Scalar::Scalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d) : a_(std::move(a)) {
  set_ext(std::move(b), std::move(c), std::move(d));
}

Scalar::Scalar(const Scalar& o) : a_(o.a_) {
  if (o.ext_) ext_ = std::make_unique<Ext>(*o.ext_);
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this == &o) return *this;
  a_ = o.a_;
  if (o.ext_) {
    if (ext_) {
      *ext_ = *o.ext_;
    } else {
      ext_ = std::make_unique<Ext>(*o.ext_);
    }
  } else {
    ext_.reset();
  }
  return *this;
}

Scalar Scalar::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::imag_unit() { return Scalar(0, 1, 0, 0); }
Scalar Scalar::sqrt2() { return Scalar(0, 0, 1, 0); }

const mpq_class& Scalar::b() const { return ext_ ? ext_->b : zero_q(); }
const mpq_class& Scalar::c() const { return ext_ ? ext_->c : zero_q(); }
const mpq_class& Scalar::d() const { return ext_ ? ext_->d : zero_q(); }

void Scalar::set_ext(mpq_class b, mpq_class c, mpq_class d) {
  if (sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0) {
    ext_.reset();
    return;
  }
  if (!ext_) ext_ = std::make_unique<Ext>();
  ext_->b = std::move(b);
  ext_->c = std::move(c);
  ext_->d = std::move(d);
}

void Scalar::trim() {
  if (ext_ && sgn(ext_->b) == 0 && sgn(ext_->c) == 0 && sgn(ext_->d) == 0) ext_.reset();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (o.ext_) {
    if (!ext_) {
      ext_ = std::make_unique<Ext>(*o.ext_);
    } else {
      ext_->b += o.ext_->b;
      ext_->c += o.ext_->c;
      ext_->d += o.ext_->d;
      trim();
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (o.ext_) {
    if (!ext_) {
      ext_ = std::make_unique<Ext>(Ext{-o.ext_->b, -o.ext_->c, -o.ext_->d});
    } else {
      ext_->b -= o.ext_->b;
      ext_->c -= o.ext_->c;
      ext_->d -= o.ext_->d;
      trim();
    }
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!ext_ && !o.ext_) {
    a_ *= o.a_;
    return *this;
  }
  if (!o.ext_) {
    a_ *= o.a_;
    ext_->b *= o.a_;
    ext_->c *= o.a_;
    ext_->d *= o.a_;
    trim();
    return *this;
  }
  const mpq_class& a = a_;
  const mpq_class& b = this->b();
  const mpq_class& c = this->c();
  const mpq_class& d = this->d();
  const mpq_class& e = o.a_;
  const mpq_class& f = o.ext_->b;
  const mpq_class& g = o.ext_->c;
  const mpq_class& h = o.ext_->d;
  mpq_class r1 = a * e - b * f + 2 * (c * g - d * h);
  mpq_class ri = a * f + b * e + 2 * (c * h + d * g);
  mpq_class rs = a * g + c * e - b * h - d * f;
  mpq_class ris = a * h + d * e + b * g + c * f;
  a_ = std::move(r1);
  set_ext(std::move(ri), std::move(rs), std::move(ris));
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero scalar");
  if (!ext_) return Scalar(mpq_class(1) / a_);
  // z = u + i v with u, v in Q(sqrt2); 1/z = (u - i v) / (u^2 + v^2).
  const mpq_class& a = a_;
  const mpq_class& b = ext_->b;
  const mpq_class& c = ext_->c;
  const mpq_class& d = ext_->d;
  mpq_class e = a * a + b * b + 2 * (c * c + d * d);
  mpq_class f = 2 * (a * c + b * d);
  mpq_class norm = e * e - 2 * f * f;
  // 1/(e + f sqrt2) = (e - f sqrt2) / norm
  Scalar inv_n(e / norm, 0, -f / norm, 0);
  Scalar conj_z(a, -b, c, -d);
  return conj_z * inv_n;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (!o.ext_) {
    if (sgn(o.a_) == 0) throw ZeroDenominator("division by zero scalar");
    a_ /= o.a_;
    if (ext_) {
      ext_->b /= o.a_;
      ext_->c /= o.a_;
      ext_->d /= o.a_;
    }
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.negate();
  return r;
}

void Scalar::negate() {
  a_ = -a_;
  if (ext_) {
    ext_->b = -ext_->b;
    ext_->c = -ext_->c;
    ext_->d = -ext_->d;
  }
}

Scalar Scalar::conj() const {
  if (!ext_) return *this;
  return Scalar(a_, -ext_->b, ext_->c, -ext_->d);
}

bool Scalar::operator==(const Scalar& o) const {
  if (a_ != o.a_) return false;
  if (!ext_ || !o.ext_) return !ext_ && !o.ext_;
  return ext_->b == o.ext_->b && ext_->c == o.ext_->c && ext_->d == o.ext_->d;
}

std::complex<double> Scalar::to_complex() const {
  const double s2 = 1.4142135623730950488;
  double re = a_.get_d();
  double im = 0;
  if (ext_) {
    re += ext_->c.get_d() * s2;
    im += ext_->b.get_d() + ext_->d.get_d() * s2;
  }
  return {re, im};
}

namespace {
std::optional<std::uint64_t> q_mod(const mpq_class& q, std::uint64_t p) {
  unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return mulmod(num, invmod(den, p), p);
}
}  // namespace

std::optional<std::uint64_t> Scalar::mod_p(const ModContext& ctx) const {
  auto r = q_mod(a_, ctx.p);
  if (!r || !ext_) return r;
  auto b = q_mod(ext_->b, ctx.p);
  auto c = q_mod(ext_->c, ctx.p);
  auto d = q_mod(ext_->d, ctx.p);
  if (!b || !c || !d) return std::nullopt;
  std::uint64_t p = ctx.p;
  std::uint64_t is = mulmod(ctx.i, ctx.sqrt2, p);
  std::uint64_t v = (*r + mulmod(*b, ctx.i, p)) % p;
  v = (v + mulmod(*c, ctx.sqrt2, p)) % p;
  v = (v + mulmod(*d, is, p)) % p;
  return v;
}

namespace {
std::string q_str(const mpq_class& q) { return q.get_str(); }

void push_part(std::vector<std::string>& parts, const mpq_class& q, const char* unit) {
  if (sgn(q) == 0) return;
  std::string u = unit ? unit : "";
  if (u.empty()) {
    parts.push_back(q_str(q));
  } else if (q == 1) {
    parts.push_back(u.find(' ') == std::string::npos ? u : "(* " + u + ")");
  } else {
    parts.push_back("(* " + q_str(q) + " " + u + ")");
  }
}
}  // namespace

std::string Scalar::to_string() const {
  if (!ext_) return q_str(a_);
  std::vector<std::string> parts;
  push_part(parts, a_, nullptr);
  push_part(parts, ext_->b, "i");
  push_part(parts, ext_->c, "sqrt2");
  push_part(parts, ext_->d, "i sqrt2");
  if (parts.size() == 1) return parts[0];
  std::string s = "(+";
  for (auto& p : parts) s += " " + p;
  return s + ")";
}

std::size_t Scalar::hash() const {
  auto hq = [](const mpq_class& q) -> std::size_t {
    std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t()) + 1) << 7;
    h ^= mpz_get_ui(q.get_den_mpz_t()) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return h;
  };
  std::size_t h = hq(a_);
  if (ext_) {
    h ^= hq(ext_->b) * 3 + hq(ext_->c) * 5 + hq(ext_->d) * 7;
  }
  return h;
}

Scalar Scalar::random(std::mt19937_64& rng, bool full_field) {
  std::uniform_int_distribution<long> num(-997, 997);
  std::uniform_int_distribution<long> den(1, 61);
  auto rq = [&] {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  if (!full_field) return Scalar(rq());
  return Scalar(rq(), rq(), rq(), rq());
}

}  // namespace painleve
