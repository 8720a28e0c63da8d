#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>

namespace painleve {

// Images of i and sqrt2 in a prime field F_p with p = 1 mod 8.
struct ModContext {
  std::uint64_t p = 0;
  std::uint64_t i = 0;
  std::uint64_t sqrt2 = 0;
  static const ModContext& standard();
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// Element a + b*i + c*sqrt2 + d*i*sqrt2 of Q(i, sqrt2). The irrational parts
// are only allocated when nonzero, since almost every coefficient in practice
// is rational.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d);
  Scalar(const Scalar& o);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  static Scalar rational(long num, long den);
  static Scalar imag_unit();
  static Scalar sqrt2();

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const;
  const mpq_class& c() const;
  const mpq_class& d() const;

  bool is_zero() const { return !ext_ && sgn(a_) == 0; }
  bool is_one() const { return !ext_ && a_ == 1; }
  bool is_minus_one() const { return !ext_ && a_ == -1; }
  bool is_rational() const { return !ext_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  void negate();

  Scalar inverse() const;
  // Complex conjugation (i -> -i), with sqrt2 taken real.
  Scalar conj() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::complex<double> to_complex() const;
  // Image in F_p; nullopt when a denominator is divisible by p.
  std::optional<std::uint64_t> mod_p(const ModContext& ctx) const;

  // Canonical s-expression text.
  std::string to_string() const;
  std::size_t hash() const;

  // Random element with small rational parts. Irrational parts are included
  // when `full_field` is set.
  static Scalar random(std::mt19937_64& rng, bool full_field);

 private:
  struct Ext {
    mpq_class b, c, d;
  };
  void set_ext(mpq_class b, mpq_class c, mpq_class d);
  void trim();

  mpq_class a_;
  std::unique_ptr<Ext> ext_;
};

inline Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
inline Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
inline Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
inline Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

}  // namespace painleve
