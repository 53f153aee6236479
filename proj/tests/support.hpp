#ifndef NCGB_TESTS_SUPPORT_HPP
#define NCGB_TESTS_SUPPORT_HPP

#include "ncgb/text_io.hpp"

#include <random>
#include <string>

namespace ncgb::test {

inline const Alphabet& xy() {
  static const Alphabet a({"x", "y"});
  return a;
}

inline const MonomialOrder& deglex2() {
  static const MonomialOrder o(2);
  return o;
}

inline Polynomial<Rational> P(const std::string& s, const Alphabet& a = xy(),
                              const MonomialOrder& o = deglex2()) {
  return parse_polynomial(s, a, o);
}

inline Word W(const std::string& s, const Alphabet& a = xy()) { return parse_word(s, a); }

inline ModuleMonomial S(const std::string& s, std::size_t rank = 1, const Alphabet& a = xy()) {
  return parse_signature(s, a, rank);
}

inline std::string str(const Polynomial<Rational>& f, const Alphabet& a = xy()) {
  return format_polynomial(f, a);
}
inline std::string str(const Polynomial<Zp>& f, const Alphabet& a = xy()) {
  return format_polynomial(f, a);
}

inline Problem problem_file(const std::string& name) {
  return load_problem(std::string(NCGB_PROBLEM_DIR) + "/" + name);
}

inline Problem fib_problem() {
  return parse_problem("vars x y\norder deglex x y\nmodorder dopot\ngens\nxyx - xy - y\nend\n");
}

/// Random polynomial with small rational coefficients.
inline Polynomial<Rational> random_poly(std::mt19937_64& rng, std::size_t terms, std::size_t max_len,
                                        const MonomialOrder& o = deglex2()) {
  std::uniform_int_distribution<int> len(0, static_cast<int>(max_len)), letter(0, static_cast<int>(o.num_vars()) - 1),
      num(-9, 9), den(1, 6);
  std::vector<Term<Rational>> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    Word w;
    for (int k = len(rng); k > 0; --k) w.push_back(static_cast<Letter>(letter(rng)));
    Rational c(num(rng), den(rng));
    c.canonicalize();
    ts.push_back({w, c});
  }
  return Polynomial<Rational>::from_terms(std::move(ts), o);
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, std::size_t vars = 2) {
  std::uniform_int_distribution<int> len(0, static_cast<int>(max_len)), letter(0, static_cast<int>(vars) - 1);
  Word w;
  for (int k = len(rng); k > 0; --k) w.push_back(static_cast<Letter>(letter(rng)));
  return w;
}

}  // namespace ncgb::test

#endif
