#include "ncgb/text_io.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ncgb {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(line ? "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + msg
                              : "column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::string format_word(const Word& w, const Alphabet& alpha) {
  if (w.empty()) return "1";
  std::string out;
  const bool juxt = alpha.single_char();
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!juxt && !out.empty()) out += '*';
    out += alpha.name(w[i]);
    if (j - i >= 2) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

template <class K>
std::string format_terms(const std::vector<std::pair<std::string, K>>& terms,
                         bool (*negative)(const K&), std::string (*magnitude)(const K&),
                         bool (*unit)(const K&)) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    const bool neg = negative(c);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (mono == "1") {
      out += magnitude(c);
    } else if (unit(c)) {
      out += mono;
    } else {
      out += magnitude(c) + "*" + mono;
    }
  }
  return out;
}

bool q_negative(const Rational& c) { return sgn(c) < 0; }
std::string q_magnitude(const Rational& c) { return Rational(abs(c)).get_str(); }
bool q_unit(const Rational& c) { return abs(c) == 1; }
bool z_negative(const Zp&) { return false; }
std::string z_magnitude(const Zp& c) { return std::to_string(c.value()); }
bool z_unit(const Zp& c) { return c.value() == 1; }

}  // namespace

std::string format_polynomial(const Polynomial<Rational>& f, const Alphabet& alpha) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& t : f.terms()) terms.emplace_back(format_word(t.word, alpha), t.coeff);
  return format_terms<Rational>(terms, q_negative, q_magnitude, q_unit);
}

std::string format_polynomial(const Polynomial<Zp>& f, const Alphabet& alpha) {
  std::vector<std::pair<std::string, Zp>> terms;
  for (const auto& t : f.terms()) terms.emplace_back(format_word(t.word, alpha), t.coeff);
  return format_terms<Zp>(terms, z_negative, z_magnitude, z_unit);
}

std::string format_signature(const ModuleMonomial& m, const Alphabet& alpha) {
  return format_word(m.left, alpha) + "*e" + std::to_string(m.component + 1) + "*" +
         format_word(m.right, alpha);
}

std::string format_module_element(const ModuleElement<Rational>& a, const Alphabet& alpha) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& t : a.terms()) terms.emplace_back(format_signature(t.mono, alpha), t.coeff);
  return format_terms<Rational>(terms, q_negative, q_magnitude, q_unit);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t col0)
      : s_(text), line_(line), col0_(col0) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, line_, col0_ + i_ + 1); }

  std::string digits() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected digits");
    return std::string(s_.substr(start, i_ - start));
  }

  /// Longest variable name at the cursor, or -1.
  int variable(const Alphabet& alpha) {
    skip_ws();
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < alpha.size(); ++v) {
      const auto& n = alpha.name(static_cast<Letter>(v));
      if (n.size() > best_len && s_.substr(i_, n.size()) == n) {
        best = static_cast<int>(v);
        best_len = n.size();
      }
    }
    if (best >= 0) i_ += best_len;
    return best;
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_alpha() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_, col0_;
};

std::size_t parse_exponent(Cursor& c) {
  if (!c.accept('^')) return 1;
  auto d = c.digits();
  if (d.size() > 6) c.error("exponent too large");
  return static_cast<std::size_t>(std::stoul(d));
}

/// Monomial factors until a term boundary.
Word parse_monomial(Cursor& c, const Alphabet& alpha, bool allow_empty) {
  Word w;
  bool any = false;
  while (true) {
    char ch = c.peek();
    if (ch == '\0' || ch == '+' || ch == '-' || ch == ';' || ch == ',') break;
    if (any && ch == '*') {
      c.accept('*');
      ch = c.peek();
    }
    if (ch == '1') {
      c.accept('1');
      parse_exponent(c);
      any = true;
      continue;
    }
    int v = c.variable(alpha);
    if (v < 0) c.error(c.at_alpha() ? "unknown variable" : "expected a variable");
    std::size_t k = parse_exponent(c);
    for (std::size_t r = 0; r < k; ++r) w.push_back(static_cast<Letter>(v));
    any = true;
  }
  if (!any && !allow_empty) c.error("expected a monomial");
  return w;
}

Rational parse_coefficient(Cursor& c) {
  std::string num = c.digits();
  std::string den = "1";
  if (c.accept('/')) den = c.digits();
  Integer n(num), d(den);
  if (d == 0) c.error("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Polynomial<Rational> parse_polynomial_at(std::string_view text, const Alphabet& alpha,
                                         const MonomialOrder& ord, std::size_t line,
                                         std::size_t col0) {
  Cursor c(text, line, col0);
  std::vector<Term<Rational>> terms;
  if (c.done()) c.error("empty polynomial");
  bool first = true;
  while (!c.done()) {
    Rational sign = 1;
    if (c.accept('+')) {
    } else if (c.accept('-')) {
      sign = -1;
    } else if (!first) {
      c.error("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    Word w;
    if (c.at_digit()) {
      coeff = parse_coefficient(c);
      if (c.accept('*')) {
        w = parse_monomial(c, alpha, false);
      } else {
        w = parse_monomial(c, alpha, true);
      }
    } else {
      w = parse_monomial(c, alpha, false);
    }
    terms.push_back({std::move(w), coeff * sign});
  }
  return Polynomial<Rational>::from_terms(std::move(terms), ord);
}

ModuleMonomial parse_signature_at(std::string_view text, const Alphabet& alpha, std::size_t rank,
                                  std::size_t line, std::size_t col0) {
  std::vector<std::pair<std::size_t, std::size_t>> tokens;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '*') {
      tokens.emplace_back(start, i - start);
      start = i + 1;
    }
  }
  auto trim = [&](std::pair<std::size_t, std::size_t> t) {
    auto s = text.substr(t.first, t.second);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto is_unit = [](std::string_view s) {
    if (s.size() < 2 || s[0] != 'e') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t at = tokens.size();
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (is_unit(trim(tokens[k]))) {
      if (at != tokens.size()) throw ParseError("more than one module unit", line, col0 + tokens[k].first + 1);
      at = k;
    }
  }
  if (at == tokens.size()) throw ParseError("expected a module unit e<i>", line, col0 + 1);
  auto unit = trim(tokens[at]);
  unsigned long idx = std::stoul(std::string(unit.substr(1)));
  if (idx < 1 || idx > rank)
    throw ParseError("module component out of range", line, col0 + tokens[at].first + 1);
  auto side = [&](std::size_t from, std::size_t to) {
    if (from >= to) return Word{};
    std::size_t s = tokens[from].first;
    std::size_t e = tokens[to - 1].first + tokens[to - 1].second;
    Cursor c(text.substr(s, e - s), line, col0 + s);
    Word w = parse_monomial(c, alpha, true);
    if (!c.done()) c.error("unexpected character in signature");
    return w;
  };
  return {side(0, at), static_cast<std::uint32_t>(idx - 1), side(at + 1, tokens.size())};
}

ModuleElement<Rational> parse_module_element_at(std::string_view text, const Alphabet& alpha,
                                                std::size_t rank, const ModuleOrder& mord,
                                                std::size_t line, std::size_t col0) {
  std::vector<ModuleTerm<Rational>> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '0' && text.substr(i).find_first_not_of("0 \t") == std::string_view::npos)
    return {};
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", line, col0 + i + 1);
    }
    first = false;
    skip();
    std::size_t end = i;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string_view term = text.substr(i, end - i);
    Rational coeff = 1;
    // A leading coefficient is digits optionally followed by /digits and '*',
    // and is distinguished from the word `1` by the following unit token.
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    if (k > 0) {
      std::size_t m = k;
      if (m < term.size() && term[m] == '/') {
        ++m;
        while (m < term.size() && std::isdigit(static_cast<unsigned char>(term[m]))) ++m;
      }
      if (m < term.size() && term[m] == '*') {
        std::string_view rest = term.substr(m + 1);
        std::size_t star = rest.find('*');
        std::string_view next = rest.substr(0, star);
        bool next_is_unit = next.size() >= 2 && next[0] == 'e' &&
                            next.substr(1).find_first_not_of("0123456789") == std::string_view::npos;
        // "c*e1*..." or "c*a*e1*..." where c is not the empty word "1"
        bool coefficient = term.substr(0, m) != "1" || !next_is_unit;
        if (term.substr(0, m) == "1" && rest.find('*') != std::string_view::npos && !next_is_unit)
          coefficient = true;
        if (coefficient && rest.find('e') != std::string_view::npos) {
          Cursor c(term.substr(0, m), line, col0 + i);
          coeff = parse_coefficient(c);
          term = rest;
          i += m + 1;
        }
      }
    }
    terms.push_back({parse_signature_at(term, alpha, rank, line, col0 + i), coeff * sign});
    i = end;
  }
  return ModuleElement<Rational>::from_terms(std::move(terms), mord);
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alpha) {
  Cursor c(text, 0, 0);
  Word w = parse_monomial(c, alpha, false);
  if (!c.done()) c.error("unexpected character in monomial");
  return w;
}

Polynomial<Rational> parse_polynomial(std::string_view text, const Alphabet& alpha,
                                      const MonomialOrder& ord) {
  return parse_polynomial_at(text, alpha, ord, 0, 0);
}

ModuleMonomial parse_signature(std::string_view text, const Alphabet& alpha, std::size_t rank) {
  return parse_signature_at(text, alpha, rank, 0, 0);
}

ModuleElement<Rational> parse_module_element(std::string_view text, const Alphabet& alpha,
                                             std::size_t rank, const ModuleOrder& mord) {
  return parse_module_element_at(text, alpha, rank, mord, 0, 0);
}

ModuleOrder Problem::module_order() const {
  std::vector<std::int64_t> degs;
  for (const auto& g : gens) degs.push_back(order.degree(g.leading_word()));
  return ModuleOrder(order, std::move(degs), kind, side);
}

namespace {

struct Line {
  std::size_t number;
  std::size_t offset;
  std::string_view text;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_name(std::string_view n) {
  if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
  for (char c : n)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  if (n.size() >= 2 && n[0] == 'e' && n.substr(1).find_first_not_of("0123456789") == std::string_view::npos)
    return false;
  return true;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  std::vector<Line> lines;
  {
    std::size_t start = 0, number = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view l = text.substr(start, end - start);
      auto hash = l.find('#');
      if (hash != std::string_view::npos) l = l.substr(0, hash);
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      lines.push_back({number, 0, l});
      ++number;
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  std::optional<std::vector<std::string>> vars;
  std::optional<Line> order_line, weights_line, modorder_line, bound_line, field_line;
  std::vector<Line> gen_lines;
  bool in_gens = false, saw_gens = false;
  for (const auto& l : lines) {
    auto words = split_ws(l.text);
    if (words.empty()) continue;
    if (in_gens) {
      if (words.size() == 1 && words[0] == "end") {
        in_gens = false;
        continue;
      }
      gen_lines.push_back(l);
      continue;
    }
    const std::string_view key = words[0];
    auto once = [&](bool seen) {
      if (seen) throw ParseError("duplicate key '" + std::string(key) + "'", l.number, 1);
    };
    if (key == "vars") {
      once(vars.has_value());
      vars.emplace();
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!valid_name(words[i]))
          throw ParseError("invalid variable name '" + std::string(words[i]) + "'", l.number,
                           static_cast<std::size_t>(words[i].data() - l.text.data()) + 1);
        vars->emplace_back(words[i]);
      }
      if (vars->empty()) throw ParseError("no variables declared", l.number, 1);
    } else if (key == "field") {
      once(field_line.has_value());
      field_line = l;
      if (words.size() != 2 || words[1] != "Q")
        throw ParseError("only 'field Q' is supported", l.number, 1);
    } else if (key == "order") {
      once(order_line.has_value());
      order_line = l;
    } else if (key == "weights") {
      once(weights_line.has_value());
      weights_line = l;
    } else if (key == "modorder") {
      once(modorder_line.has_value());
      modorder_line = l;
    } else if (key == "bound") {
      once(bound_line.has_value());
      bound_line = l;
    } else if (key == "gens") {
      once(saw_gens);
      saw_gens = true;
      in_gens = true;
      if (words.size() > 1) throw ParseError("generators go on the lines after 'gens'", l.number, 1);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", l.number,
                       static_cast<std::size_t>(key.data() - l.text.data()) + 1);
    }
  }
  if (in_gens) throw ParseError("missing 'end' after generators", lines.back().number, 1);
  if (!vars) throw ParseError("missing 'vars'", 1, 1);
  if (!saw_gens || gen_lines.empty()) throw ParseError("missing generators", 1, 1);

  Problem p;
  try {
    p.alphabet = Alphabet(*vars);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
  const std::size_t n = p.alphabet.size();

  std::vector<Letter> prec(n);
  std::iota(prec.begin(), prec.end(), Letter{0});
  if (order_line) {
    auto words = split_ws(order_line->text);
    if (words.size() < 2 || words[1] != "deglex")
      throw ParseError("only 'order deglex' is supported", order_line->number, 1);
    if (words.size() > 2) {
      if (words.size() - 2 != n)
        throw ParseError("precedence must list every variable once", order_line->number, 1);
      for (std::size_t i = 2; i < words.size(); ++i) {
        int v = p.alphabet.find(words[i]);
        if (v < 0)
          throw ParseError("unknown variable '" + std::string(words[i]) + "'", order_line->number,
                           static_cast<std::size_t>(words[i].data() - order_line->text.data()) + 1);
        prec[i - 2] = static_cast<Letter>(v);
      }
    }
  }
  std::vector<std::int64_t> weights(n, 1);
  if (weights_line) {
    auto words = split_ws(weights_line->text);
    if (words.size() - 1 != n)
      throw ParseError("need one weight per variable", weights_line->number, 1);
    std::vector<Rational> ws;
    Integer lcm = 1;
    for (std::size_t i = 1; i < words.size(); ++i) {
      Cursor c(words[i], weights_line->number,
               static_cast<std::size_t>(words[i].data() - weights_line->text.data()));
      Rational q = parse_coefficient(c);
      if (!c.done()) c.error("malformed weight");
      if (sgn(q) <= 0) c.error("weights must be positive");
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
      ws.push_back(q);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Rational scaled = ws[i] * lcm;
      if (!scaled.get_num().fits_slong_p() || scaled.get_num() > 1000000)
        throw ParseError("weight too large", weights_line->number, 1);
      weights[i] = scaled.get_num().get_si();
    }
  }
  try {
    p.order = MonomialOrder(prec, weights);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), order_line ? order_line->number : 1, 1);
  }

  if (modorder_line) {
    auto words = split_ws(modorder_line->text);
    if (words.size() < 2 || words.size() > 3)
      throw ParseError("expected 'modorder dopot|dotop [left|right]'", modorder_line->number, 1);
    if (words[1] == "dopot")
      p.kind = ModuleOrderKind::DegreeOverPositionOverTerm;
    else if (words[1] == "dotop")
      p.kind = ModuleOrderKind::DegreeOverTermOverPosition;
    else
      throw ParseError("unknown module ordering '" + std::string(words[1]) + "'",
                       modorder_line->number, 1);
    if (words.size() == 3) {
      if (words[2] == "left")
        p.side = TieSide::Left;
      else if (words[2] == "right")
        p.side = TieSide::Right;
      else
        throw ParseError("expected 'left' or 'right'", modorder_line->number, 1);
    }
  }

  for (const auto& l : gen_lines) {
    std::size_t start = 0;
    while (start <= l.text.size()) {
      std::size_t comma = l.text.find(',', start);
      if (comma == std::string_view::npos) comma = l.text.size();
      std::string_view piece = l.text.substr(start, comma - start);
      if (piece.find_first_not_of(" \t") != std::string_view::npos) {
        auto f = parse_polynomial_at(piece, p.alphabet, p.order, l.number, start);
        if (f.is_zero()) throw ParseError("zero generator", l.number, start + 1);
        p.gens.push_back(std::move(f));
      }
      if (comma == l.text.size()) break;
      start = comma + 1;
    }
  }

  if (bound_line) {
    auto words = split_ws(bound_line->text);
    std::string_view t = bound_line->text;
    auto pos = t.find("bound");
    std::string_view rest = t.substr(pos + 5);
    if (words.size() == 3 && words[1] == "sig-degree") {
      Cursor c(words[2], bound_line->number,
               static_cast<std::size_t>(words[2].data() - t.data()));
      auto d = c.digits();
      if (!c.done() || d.size() > 9) c.error("malformed signature degree");
      p.bound = SigBound::sig_degree(std::stoll(d));
    } else if (words.size() >= 2) {
      p.bound = SigBound::below(parse_signature_at(rest, p.alphabet, p.gens.size(),
                                                   bound_line->number, pos + 5));
    } else {
      throw ParseError("expected 'bound sig-degree D' or 'bound <signature>'", bound_line->number, 1);
    }
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string format_basis(const SigBasis<Rational>& basis, const Alphabet& alpha) {
  std::string out;
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const auto& e = basis.elements[i];
    out += "sig=" + format_signature(e.sig, alpha) + " ; poly=" + format_polynomial(e.poly, alpha);
    if (basis.strong) out += " ; label=" + format_module_element(basis.labels.at(i), alpha);
    out += '\n';
  }
  out += "syz:\n";
  for (std::size_t i = 0; i < basis.syzygies.size(); ++i) {
    out += "sig=" + format_signature(basis.syzygies[i], alpha);
    if (basis.strong) out += " ; label=" + format_module_element(basis.syzygy_labels.at(i), alpha);
    out += '\n';
  }
  return out;
}

SigBasis<Rational> parse_basis(std::string_view text, const Problem& problem) {
  const auto mord = problem.module_order();
  const std::size_t rank = problem.gens.size();
  SigBasis<Rational> b;
  bool in_syz = false, any_label = false, any_plain = false;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    const std::size_t lineno = number++;
    const bool last = end == text.size();
    start = end + 1;
    auto hash = l.find('#');
    if (hash != std::string_view::npos) l = l.substr(0, hash);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (l.find_first_not_of(" \t") == std::string_view::npos) {
      if (last) break;
      continue;
    }
    auto first = l.find_first_not_of(" \t");
    if (l.substr(first).rfind("syz:", 0) == 0) {
      if (in_syz) throw ParseError("duplicate 'syz:' block", lineno, 1);
      in_syz = true;
      if (last) break;
      continue;
    }
    std::vector<std::pair<std::size_t, std::string_view>> fields;
    std::size_t fs = 0;
    while (fs <= l.size()) {
      std::size_t semi = l.find(';', fs);
      if (semi == std::string_view::npos) semi = l.size();
      fields.emplace_back(fs, l.substr(fs, semi - fs));
      if (semi == l.size()) break;
      fs = semi + 1;
    }
    std::optional<ModuleMonomial> sig;
    std::optional<Polynomial<Rational>> poly;
    std::optional<ModuleElement<Rational>> label;
    for (auto [off, f] : fields) {
      auto eq = f.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected key=value", lineno, off + 1);
      std::string_view key = f.substr(0, eq);
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.front()))) key.remove_prefix(1);
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
      std::string_view val = f.substr(eq + 1);
      const std::size_t col = off + eq + 1;
      if (key == "sig" && !sig) {
        sig = parse_signature_at(val, problem.alphabet, rank, lineno, col);
      } else if (key == "poly" && !poly && !in_syz) {
        poly = parse_polynomial_at(val, problem.alphabet, problem.order, lineno, col);
      } else if (key == "label" && !label) {
        label = parse_module_element_at(val, problem.alphabet, rank, mord, lineno, col);
      } else {
        throw ParseError("unexpected field '" + std::string(key) + "'", lineno, off + 1);
      }
    }
    if (!sig) throw ParseError("missing sig=", lineno, 1);
    if (!in_syz && !poly) throw ParseError("missing poly=", lineno, 1);
    (label ? any_label : any_plain) = true;
    if (in_syz) {
      b.syzygies.push_back(*sig);
      if (label) b.syzygy_labels.push_back(std::move(*label));
    } else {
      b.elements.push_back({std::move(*poly), *sig});
      if (label) b.labels.push_back(std::move(*label));
    }
    if (last) break;
  }
  if (!in_syz) throw ParseError("missing 'syz:' block", number, 1);
  if (any_label && any_plain) throw ParseError("labels given for some entries only", number, 1);
  b.strong = any_label;
  return b;
}

}  // namespace ncgb
