#include "ncgb/polynomial.hpp"

namespace ncgb {

std::uint64_t& arithmetic_ops() {
  thread_local std::uint64_t counter = 0;
  return counter;
}

Polynomial<Zp> reduce_mod(const Polynomial<Rational>& f, std::uint32_t modulus) {
  std::vector<Term<Zp>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Zp c;
    try {
      c = reduce_rational(t.coeff, modulus);
    } catch (const std::domain_error& e) {
      throw ReductionUndefined(e.what(), t.coeff);
    }
    if (!c.is_zero()) out.push_back({t.word, c});
  }
  return Polynomial<Zp>::from_sorted(std::move(out));
}

}  // namespace ncgb
