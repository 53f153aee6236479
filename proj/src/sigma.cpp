#include "ncgb/sigma.hpp"

namespace ncgb {

ModuleElement<Zp> reduce_mod(const ModuleElement<Rational>& alpha, std::uint32_t modulus) {
  std::vector<ModuleTerm<Zp>> out;
  out.reserve(alpha.size());
  for (const auto& t : alpha.terms()) {
    Zp c;
    try {
      c = reduce_rational(t.coeff, modulus);
    } catch (const std::domain_error& e) {
      throw ReductionUndefined(e.what(), t.coeff);
    }
    if (!c.is_zero()) out.push_back({t.mono, c});
  }
  return ModuleElement<Zp>::from_sorted(std::move(out));
}

}  // namespace ncgb
