#include "ncgb/testkit.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ncgb {

namespace {

constexpr Letter X = 0;
constexpr Letter Y = 1;

Word xw() { return Word{X}; }
Word yw(std::size_t n) { return Word::power(Y, n); }

Polynomial<Rational> poly(std::vector<Term<Rational>> terms, const MonomialOrder& ord) {
  return Polynomial<Rational>::from_terms(std::move(terms), ord);
}

bool fail(OracleFailure* f, std::string what) {
  if (f) f->what = std::move(what);
  return false;
}

}  // namespace

Integer fibonacci(unsigned n) {
  Integer a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    Integer t = a + b;
    a = b;
    b = t;
  }
  return a;
}

FibonacciWitness::FibonacciWitness(unsigned n_, const MonomialOrder& ord) : n(n_) {
  if (n == 0) throw std::invalid_argument("Fibonacci witness index starts at 1");
  F = fibonacci(n);
  a = Rational(fibonacci(n - 1), F);
  b = Rational(fibonacci(n + 1), F);
  a.canonicalize();
  b.canonicalize();
  Word yn = yw(n);
  g = poly({{xw() * yn * xw(), 1}, {yn * xw(), a}, {xw() * yn, -b}, {yn, -1}}, ord);
}

bool check_fib_identities(unsigned max_n, OracleFailure* failure) {
  if (max_n < 2) throw std::invalid_argument("check_fib_identities needs max_n >= 2");
  std::vector<Rational> a(2 * max_n + 2), b(2 * max_n + 2);
  for (unsigned k = 1; k < a.size(); ++k) {
    FibonacciWitness w(k);
    a[k] = w.a;
    b[k] = w.b;
  }
  auto where = [](int item, unsigned m, unsigned n) {
    return "item " + std::to_string(item) + " at m=" + std::to_string(m) + ", n=" + std::to_string(n);
  };
  for (unsigned n = 1; n <= max_n; ++n) {
    if (a[n + 1] * b[n] != 1) return fail(failure, where(1, 0, n));
    if (a[n] + 1 != b[n]) return fail(failure, where(2, 0, n));
    if (b[n] + 1 != b[n] * b[n + 1]) return fail(failure, where(3, 0, n));
    for (unsigned m = 1; m <= max_n; ++m) {
      if (a[m] + b[n] != a[n] + b[m]) return fail(failure, where(4, m, n));
      if (a[m] * a[n] + 1 != (a[n] + b[m]) * a[m + n]) return fail(failure, where(5, m, n));
      if (b[m] * b[n] + 1 != (a[n] + b[m]) * b[m + n]) return fail(failure, where(6, m, n));
    }
  }
  return true;
}

bool check_recursion(unsigned max_n, OracleFailure* failure) {
  if (max_n < 1) throw std::invalid_argument("check_recursion needs max_n >= 1");
  const MonomialOrder ord(2);
  const FibonacciWitness g1(1, ord);
  const Polynomial<Rational> zero;
  for (unsigned n = 1; n <= max_n; ++n) {
    const FibonacciWitness gn(n, ord), gn1(n + 1, ord);
    // g_n y (x - 1) = g_n·yx - g_n·y
    auto t = poly_combine(zero, Rational(1), Word{}, gn.g, Word{Y, X}, ord);
    t = poly_combine(t, Rational(-1), Word{}, gn.g, Word{Y}, ord);
    // - (x + a_n) y^n g_1
    t = poly_combine(t, Rational(-1), xw() * yw(n), g1.g, Word{}, ord);
    t = poly_combine(t, Rational(-gn.a), yw(n), g1.g, Word{}, ord);
    auto rhs = poly_combine(zero, Rational(-1 / gn.b), Word{}, t, Word{}, ord);
    if (!(rhs == gn1.g)) return fail(failure, "recursion at n=" + std::to_string(n));
  }
  return true;
}

bool check_spoly_reduction(unsigned max_mn, OracleFailure* failure) {
  if (max_mn < 1) throw std::invalid_argument("check_spoly_reduction needs max_mn >= 1");
  const MonomialOrder ord(2);
  const Polynomial<Rational> zero;
  std::vector<FibonacciWitness> w;
  for (unsigned k = 1; k <= 2 * max_mn; ++k) w.emplace_back(k, ord);
  auto G = [&](unsigned k) -> const FibonacciWitness& { return w[k - 1]; };
  for (unsigned m = 1; m <= max_mn; ++m) {
    for (unsigned n = 1; n <= max_mn; ++n) {
      const std::string at = " at m=" + std::to_string(m) + ", n=" + std::to_string(n);
      const auto& gm = G(m);
      const auto& gn = G(n);
      const Word x = xw(), ym = yw(m), yn = yw(n), ymn = yw(m + n);
      auto s = poly_combine(zero, Rational(1), Word{}, gm.g, yn * x, ord);
      s = poly_combine(s, Rational(-1), x * ym, gn.g, Word{}, ord);
      auto closed = poly({{x * ymn * x, -(gn.a + gm.b)},
                          {ym * x * yn * x, gm.a},
                          {x * ym * x * yn, gn.b},
                          {ymn * x, -1},
                          {x * ymn, 1}},
                         ord);
      if (!(s == closed)) return fail(failure, "closed form of the S-polynomial" + at);
      // a_m y^m x y^n x reduced by g_n, b_n x y^m x y^n by g_m
      auto r = poly_combine(s, Rational(-gm.a), ym, gn.g, Word{}, ord);
      if (r.coefficient(ym * x * yn * x)) return fail(failure, "first substitution" + at);
      r = poly_combine(r, Rational(-gn.b), Word{}, gm.g, yn, ord);
      if (r.coefficient(x * ym * x * yn)) return fail(failure, "second substitution" + at);
      auto expected = poly({{x * ymn * x, -(gn.a + gm.b)},
                            {ymn * x, -(gm.a * gn.a + 1)},
                            {x * ymn, gm.b * gn.b + 1},
                            {ymn, gm.a + gn.b}},
                           ord);
      if (!(r == expected)) return fail(failure, "reduced S-polynomial" + at);
      const auto& gmn = m + n <= w.size() ? G(m + n) : FibonacciWitness(m + n, ord);
      auto multiple = poly_combine(zero, Rational(-(gn.a + gm.b)), Word{}, gmn.g, Word{}, ord);
      if (!(r == multiple)) return fail(failure, "multiple of g_{m+n}" + at);
    }
  }
  return true;
}

namespace {

struct Row {
  Polynomial<Rational> poly;
  ModuleElement<Rational> label;
};

}  // namespace

std::optional<OracleBasis> brute_force_sig_labels(const std::vector<Polynomial<Rational>>& gens,
                                                  const SigBound& bound, const ModuleOrder& mord,
                                                  std::size_t budget) {
  if (gens.size() != mord.rank()) throw std::domain_error("rank mismatch");
  const auto& ord = mord.monomial_order();
  std::vector<ModuleMonomial> monos;
  const auto cap = bound.degree_cap(mord);
  // Counting first keeps the enumeration itself inside the budget.
  if (cap >= 0) {
    std::vector<double> words(static_cast<std::size_t>(cap) + 1, 0.0);
    words[0] = 1;
    for (std::int64_t d = 1; d <= cap; ++d)
      for (std::size_t v = 0; v < ord.num_vars(); ++v) {
        auto w = ord.weight(static_cast<Letter>(v));
        if (w <= d) words[d] += words[d - w];
      }
    double total = 0;
    for (auto gd : mord.generator_degrees())
      for (std::int64_t d1 = 0; d1 <= cap - gd; ++d1)
        for (std::int64_t d2 = 0; d1 + d2 <= cap - gd; ++d2) total += words[d1] * words[d2];
    if (total > static_cast<double>(budget)) return std::nullopt;
  }
  for (auto& m : mord.monomials_up_to_degree(cap))
    if (bound.admits(m, mord)) monos.push_back(std::move(m));
  if (monos.size() > budget) return std::nullopt;
  std::sort(monos.begin(), monos.end(), [&](const ModuleMonomial& u, const ModuleMonomial& v) { return mord.less(u, v); });

  std::map<Word, Row, std::function<bool(const Word&, const Word&)>> pivots(
      [&](const Word& u, const Word& v) { return ord.less(u, v); });
  struct Lead {
    ModuleMonomial sig;
    Word lm;
  };
  std::vector<Lead> leads;
  OracleBasis out;
  const Rational one = 1;
  for (const auto& mu : monos) {
    Polynomial<Rational> r = shift(mu.left, gens[mu.component], mu.right);
    ModuleElement<Rational> label = ModuleElement<Rational>::monomial(one, mu);
    // Eliminate pivot terms from the top down.
    std::size_t from = 0;
    while (true) {
      const auto& ts = r.terms();
      std::size_t k = from;
      while (k < ts.size() && !pivots.count(ts[k].word)) ++k;
      if (k == ts.size()) break;
      const Row& row = pivots.at(ts[k].word);
      const Rational c = -ts[k].coeff / row.poly.leading_coeff();
      r = poly_combine(r, c, Word{}, row.poly, Word{}, ord);
      label = module_combine(label, c, Word{}, row.label, Word{}, mord);
      from = k;
    }
    if (r.is_zero()) {
      bool minimal = std::none_of(out.syzygies.begin(), out.syzygies.end(),
                                  [&](const ModuleMonomial& s) { return mu.divisible_by(s, nullptr, nullptr); });
      if (minimal) {
        out.syzygies.push_back(mu);
        out.syzygy_labels.push_back(label);
      }
      continue;
    }
    const Word lm = r.leading_word();
    bool multiple = false;
    Word a, b;
    for (const auto& l : leads) {
      if (mu.divisible_by(l.sig, &a, &b) && concat(a, l.lm, b) == lm) {
        multiple = true;
        break;
      }
    }
    leads.push_back({mu, lm});
    if (!multiple) {
      auto [monic, lc] = make_monic(r);
      out.elements.push_back(OracleEntry{mu, monic, module_scale(label, Rational(1 / lc))});
    }
    pivots.emplace(lm, Row{std::move(r), std::move(label)});
  }
  return out;
}

}  // namespace ncgb
