#ifndef NCGB_SCALAR_HPP
#define NCGB_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncgb {

/// Exact rational number, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Residue modulo a machine-word modulus, stored in [0, modulus).
///
/// The modulus travels with the value so that polynomials over different
/// residue rings can never be combined silently.
class Zp {
 public:
  Zp() = default;
  Zp(std::uint64_t value, std::uint32_t modulus)
      : value_(static_cast<std::uint32_t>(value % modulus)), modulus_(modulus) {}

  /// Reduces a signed integer into [0, modulus).
  static Zp from_signed(std::int64_t value, std::uint32_t modulus) {
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    return Zp(static_cast<std::uint64_t>(r), modulus);
  }

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Zp operator-() const {
    return Zp(value_ == 0 ? 0 : modulus_ - value_, modulus_, Raw{});
  }
  Zp& operator+=(Zp o) {
    std::uint64_t s = std::uint64_t(value_) + o.value_;
    if (s >= modulus_) s -= modulus_;
    value_ = static_cast<std::uint32_t>(s);
    return *this;
  }
  Zp& operator-=(Zp o) {
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_);
    return *this;
  }
  Zp& operator*=(Zp o) {
    value_ = static_cast<std::uint32_t>(std::uint64_t(value_) * o.value_ % modulus_);
    return *this;
  }
  Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, Zp b) { return a += b; }
  friend Zp operator-(Zp a, Zp b) { return a -= b; }
  friend Zp operator*(Zp a, Zp b) { return a *= b; }
  friend Zp operator/(Zp a, Zp b) { return a /= b; }
  friend bool operator==(Zp a, Zp b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  /// Multiplicative inverse by the extended Euclidean algorithm.
  /// Throws std::domain_error when the value is not a unit.
  Zp inverse() const;

 private:
  struct Raw {};
  Zp(std::uint32_t value, std::uint32_t modulus, Raw) : value_(value), modulus_(modulus) {}

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

// Uniform scalar interface used by the generic polynomial code.

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(const Zp& c) { return c.is_zero(); }

inline bool is_one(const Rational& c) { return c == 1; }
inline bool is_one(const Zp& c) { return c.value() == 1 % c.modulus(); }

inline Rational inverse(const Rational& c) {
  if (sgn(c) == 0) throw std::domain_error("inverse of zero rational");
  return Rational(1) / c;
}
inline Zp inverse(const Zp& c) { return c.inverse(); }

/// The field a scalar lives in, as an opaque tag: 0 for the rationals,
/// otherwise the modulus.
inline std::uint32_t field_tag(const Rational&) { return 0; }
inline std::uint32_t field_tag(const Zp& c) { return c.modulus(); }

/// The unit of the field `like` lives in.
inline Rational one_like(const Rational&) { return Rational(1); }
inline Zp one_like(const Zp& c) { return Zp(1, c.modulus()); }

std::string to_string(const Rational& c);
std::string to_string(const Zp& c);

/// Field descriptors used to construct constants of a given field.
struct RationalField {
  using Element = Rational;
  Element one() const { return Rational(1); }
  Element zero() const { return Rational(0); }
  Element from_int(long v) const { return Rational(v); }
  std::uint32_t tag() const { return 0; }
};

struct PrimeField {
  using Element = Zp;
  std::uint32_t modulus = 0;
  Element one() const { return Zp(1, modulus); }
  Element zero() const { return Zp(0, modulus); }
  Element from_int(long v) const { return Zp::from_signed(v, modulus); }
  std::uint32_t tag() const { return modulus; }
};

/// (a/b) mod n. Throws std::domain_error if gcd(b, n) != 1.
Zp reduce_rational(const Rational& c, std::uint32_t modulus);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace ncgb

#endif
