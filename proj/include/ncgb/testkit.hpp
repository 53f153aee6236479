#ifndef NCGB_TESTKIT_HPP
#define NCGB_TESTKIT_HPP

#include "ncgb/module_order.hpp"
#include "ncgb/polynomial.hpp"
#include "ncgb/sigma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncgb {

/// F_n, a_n = F_{n-1}/F_n, b_n = F_{n+1}/F_n and
/// g_n = xy^n x + a_n y^n x - b_n xy^n - y^n over the letters x = 0, y = 1.
struct FibonacciWitness {
  explicit FibonacciWitness(unsigned n, const MonomialOrder& ord = MonomialOrder(2));

  unsigned n;
  Integer F;
  Rational a, b;
  Polynomial<Rational> g;
};

Integer fibonacci(unsigned n);

/// Where an oracle check failed.
struct OracleFailure {
  std::string what;
};

/// The six Fibonacci identities for 1 <= m, n <= max_n.
bool check_fib_identities(unsigned max_n, OracleFailure* failure = nullptr);
/// g_{n+1} = -1/b_n (g_n y (x - 1) - (x + a_n) y^n g_1) for 1 <= n <= max_n.
bool check_recursion(unsigned max_n, OracleFailure* failure = nullptr);
/// For 1 <= m, n <= max_mn: s_{m,n} = g_m y^n x - xy^m g_n has the closed
/// form, the two substitutions by g_n and g_m bring it to
/// -(a_n + b_m) g_{m+n}.
bool check_spoly_reduction(unsigned max_mn, OracleFailure* failure = nullptr);

struct OracleEntry {
  ModuleMonomial sig;
  Polynomial<Rational> poly;
  ModuleElement<Rational> label;
};

struct OracleBasis {
  std::vector<OracleEntry> elements;
  std::vector<ModuleMonomial> syzygies;
  std::vector<ModuleElement<Rational>> syzygy_labels;
};

/// Reduced signature basis by linear algebra: every module monomial below
/// the bound, ascending, is evaluated and reduced against an echelon basis
/// of the evaluations of all smaller ones, labels tracked throughout.
/// Returns nullopt when more than `budget` monomials would be needed.
std::optional<OracleBasis> brute_force_sig_labels(const std::vector<Polynomial<Rational>>& gens,
                                                  const SigBound& bound, const ModuleOrder& mord,
                                                  std::size_t budget = 4000);

}  // namespace ncgb

#endif
