#ifndef NCGB_TEXT_IO_HPP
#define NCGB_TEXT_IO_HPP

#include "ncgb/engine.hpp"
#include "ncgb/module_order.hpp"
#include "ncgb/polynomial.hpp"
#include "ncgb/sigma.hpp"
#include "ncgb/word.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncgb {

/// Syntax error with a 1-based line and column (line 0 when the input was
/// a single expression).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

std::string format_word(const Word& w, const Alphabet& alpha);
/// Canonical form: terms descending, no '+' before the first term, `c*m`
/// for coefficients other than 1 and -1.
std::string format_polynomial(const Polynomial<Rational>& f, const Alphabet& alpha);
std::string format_polynomial(const Polynomial<Zp>& f, const Alphabet& alpha);
/// `a*e<i>*b` with `1` for empty words and 1-based components.
std::string format_signature(const ModuleMonomial& m, const Alphabet& alpha);
std::string format_module_element(const ModuleElement<Rational>& a, const Alphabet& alpha);

Word parse_word(std::string_view text, const Alphabet& alpha);
Polynomial<Rational> parse_polynomial(std::string_view text, const Alphabet& alpha,
                                      const MonomialOrder& ord);
/// Throws ParseError for malformed text or a component above `rank`.
ModuleMonomial parse_signature(std::string_view text, const Alphabet& alpha, std::size_t rank);
ModuleElement<Rational> parse_module_element(std::string_view text, const Alphabet& alpha,
                                             std::size_t rank, const ModuleOrder& mord);

/// A parsed problem file.
struct Problem {
  Alphabet alphabet;
  MonomialOrder order{1};
  ModuleOrderKind kind = ModuleOrderKind::DegreeOverPositionOverTerm;
  TieSide side = TieSide::Left;
  std::vector<Polynomial<Rational>> gens;
  /// From the `bound` line, if present.
  std::optional<SigBound> bound;

  ModuleOrder module_order() const;
};

/// Throws ParseError on syntax errors, unknown keys, unknown variables,
/// zero generators, zero denominators and non-positive weights.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

/// One element per line, `sig=... ; poly=...` (plus ` ; label=...` for
/// labeled bases), ascending, then a `syz:` line and one syzygy signature
/// per line.
std::string format_basis(const SigBasis<Rational>& basis, const Alphabet& alpha);
SigBasis<Rational> parse_basis(std::string_view text, const Problem& problem);

}  // namespace ncgb

#endif
