#ifndef NCGB_POLYNOMIAL_HPP
#define NCGB_POLYNOMIAL_HPP

#include "ncgb/monomial_order.hpp"
#include "ncgb/scalar.hpp"
#include "ncgb/word.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncgb {

/// Counts polynomial-level arithmetic operations on the calling thread.
/// Used to certify that leading-data algorithms do no arithmetic.
std::uint64_t& arithmetic_ops();

template <class K>
struct Term {
  Word word;
  K coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Raised when a rational object cannot be mapped into Z_N because some
/// denominator shares a factor with N.
class ReductionUndefined : public std::domain_error {
 public:
  ReductionUndefined(const std::string& what, Rational coefficient)
      : std::domain_error(what), coefficient_(std::move(coefficient)) {}
  const Rational& coefficient() const { return coefficient_; }

 private:
  Rational coefficient_;
};

/// Element of K<X>: a finite sum of nonzero terms with pairwise distinct
/// words, stored in descending order for the order it was built with.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;

  /// Builds from arbitrary terms: sorts, merges equal words, drops zeros.
  static Polynomial from_terms(std::vector<Term<K>> terms, const MonomialOrder& ord) {
    std::sort(terms.begin(), terms.end(), [&](const Term<K>& s, const Term<K>& t) {
      return ord.less(t.word, s.word);
    });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().word == t.word) {
        p.terms_.back().coeff += t.coeff;
        if (ncgb::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!ncgb::is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Terms already sorted descending, distinct, nonzero.
  static Polynomial from_sorted(std::vector<Term<K>> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial monomial(K c, Word w) {
    Polynomial p;
    if (!ncgb::is_zero(c)) p.terms_.push_back({std::move(w), std::move(c)});
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<K>>& terms() const { return terms_; }
  const Term<K>& leading_term() const { return terms_.front(); }
  const Word& leading_word() const { return terms_.front().word; }
  const K& leading_coeff() const { return terms_.front().coeff; }

  /// Coefficient of `w`, or nullopt when w is not in the support.
  std::optional<K> coefficient(const Word& w) const {
    for (const auto& t : terms_)
      if (t.word == w) return t.coeff;
    return std::nullopt;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term<K>> terms_;
};

template <class K>
void require_same_field(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (f.is_zero() || g.is_zero()) return;
  if (field_tag(f.leading_coeff()) != field_tag(g.leading_coeff()))
    throw std::domain_error("polynomials over different coefficient fields");
}

/// LM(f), or nullopt for the zero polynomial (the sentinel below every word).
template <class K>
std::optional<Word> leading_monomial(const Polynomial<K>& f) {
  if (f.is_zero()) return std::nullopt;
  return f.leading_word();
}

/// Compares leading monomials including the zero sentinel.
inline std::strong_ordering compare_lm(const std::optional<Word>& u,
                                       const std::optional<Word>& v,
                                       const MonomialOrder& ord) {
  if (!u && !v) return std::strong_ordering::equal;
  if (!u) return std::strong_ordering::less;
  if (!v) return std::strong_ordering::greater;
  return ord.compare(*u, *v);
}

/// f + c·(a·g·b). The shifted terms of g stay sorted because the order is
/// compatible with two-sided multiplication, so this is a single merge.
template <class K>
Polynomial<K> poly_combine(const Polynomial<K>& f, const K& c, const Word& a,
                           const Polynomial<K>& g, const Word& b, const MonomialOrder& ord) {
  require_same_field(f, g);
  ++arithmetic_ops();
  if (is_zero(c) || g.is_zero()) return f;
  std::vector<Term<K>> out;
  out.reserve(f.size() + g.size());
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  std::size_t i = 0, j = 0;
  Word shifted;
  bool have_shifted = false;
  while (i < ft.size() || j < gt.size()) {
    if (j < gt.size() && !have_shifted) {
      shifted = concat(a, gt[j].word, b);
      have_shifted = true;
    }
    if (j >= gt.size()) {
      out.push_back(ft[i++]);
      continue;
    }
    if (i >= ft.size()) {
      out.push_back({std::move(shifted), c * gt[j].coeff});
      ++j;
      have_shifted = false;
      continue;
    }
    auto cmp = ord.compare(ft[i].word, shifted);
    if (cmp > 0) {
      out.push_back(ft[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(shifted), c * gt[j].coeff});
      ++j;
      have_shifted = false;
    } else {
      K s = ft[i].coeff + c * gt[j].coeff;
      if (!is_zero(s)) out.push_back({std::move(shifted), std::move(s)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return Polynomial<K>::from_sorted(std::move(out));
}

template <class K>
Polynomial<K> add(const Polynomial<K>& f, const Polynomial<K>& g, const MonomialOrder& ord) {
  if (g.is_zero()) return f;
  return poly_combine(f, one_like(g.leading_coeff()), Word{}, g, Word{}, ord);
}

template <class K>
Polynomial<K> subtract(const Polynomial<K>& f, const Polynomial<K>& g,
                       const MonomialOrder& ord) {
  if (g.is_zero()) return f;
  return poly_combine(f, -one_like(g.leading_coeff()), Word{}, g, Word{}, ord);
}

template <class K>
Polynomial<K> scale(const Polynomial<K>& f, const K& c) {
  ++arithmetic_ops();
  if (is_zero(c)) return {};
  std::vector<Term<K>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.word, t.coeff * c});
  return Polynomial<K>::from_sorted(std::move(out));
}

/// a·f·b.
template <class K>
Polynomial<K> shift(const Word& a, const Polynomial<K>& f, const Word& b) {
  std::vector<Term<K>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({concat(a, t.word, b), t.coeff});
  return Polynomial<K>::from_sorted(std::move(out));
}

template <class K>
Polynomial<K> multiply(const Polynomial<K>& f, const Polynomial<K>& g,
                       const MonomialOrder& ord) {
  require_same_field(f, g);
  ++arithmetic_ops();
  std::vector<Term<K>> out;
  out.reserve(f.size() * g.size());
  for (const auto& s : f.terms())
    for (const auto& t : g.terms()) out.push_back({s.word * t.word, s.coeff * t.coeff});
  return Polynomial<K>::from_terms(std::move(out), ord);
}

/// (f / lc(f), lc(f)). Throws std::domain_error on f = 0.
template <class K>
std::pair<Polynomial<K>, K> make_monic(const Polynomial<K>& f) {
  if (f.is_zero()) throw std::domain_error("make_monic: zero polynomial");
  K c = f.leading_coeff();
  if (is_one(c)) return {f, c};
  return {scale(f, inverse(c)), c};
}

/// Coefficient-wise reduction of a rational polynomial into Z_N.
/// Throws ReductionUndefined when a denominator is not invertible mod N.
Polynomial<Zp> reduce_mod(const Polynomial<Rational>& f, std::uint32_t modulus);

}  // namespace ncgb

#endif
