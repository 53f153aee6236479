#include "ncgb/scalar.hpp"

namespace ncgb {

Zp Zp::inverse() const {
  if (modulus_ == 0) throw std::domain_error("residue without modulus");
  std::int64_t r0 = modulus_, r1 = value_;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw std::domain_error("residue " + std::to_string(value_) +
                                       " is not invertible modulo " +
                                       std::to_string(modulus_));
  return from_signed(t0, modulus_);
}

std::string to_string(const Rational& c) { return c.get_str(); }

std::string to_string(const Zp& c) { return std::to_string(c.value()); }

Zp reduce_rational(const Rational& c, std::uint32_t modulus) {
  if (modulus < 2) throw std::domain_error("modulus must be at least 2");
  mpz_class m(modulus);
  mpz_class den = c.get_den() % m;
  mpz_class g = gcd(den, m);
  if (g != 1)
    throw std::domain_error("denominator of " + c.get_str() + " is not invertible modulo " +
                            std::to_string(modulus));
  mpz_class num = c.get_num() % m;
  if (num < 0) num += m;
  Zp n(num.get_ui(), modulus);
  Zp d(den.get_ui(), modulus);
  return n * d.inverse();
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace ncgb
