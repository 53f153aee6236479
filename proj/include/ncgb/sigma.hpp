#ifndef NCGB_SIGMA_HPP
#define NCGB_SIGMA_HPP

#include "ncgb/module_order.hpp"
#include "ncgb/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace ncgb {

template <class K>
struct ModuleTerm {
  ModuleMonomial mono;
  K coeff;
  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

/// Element of the free bimodule: finitely many nonzero coefficients on
/// module monomials, stored descending so the signature is the first term.
template <class K>
class ModuleElement {
 public:
  ModuleElement() = default;

  static ModuleElement from_terms(std::vector<ModuleTerm<K>> terms, const ModuleOrder& mord) {
    std::sort(terms.begin(), terms.end(), [&](const ModuleTerm<K>& s, const ModuleTerm<K>& t) {
      return mord.less(t.mono, s.mono);
    });
    ModuleElement e;
    for (auto& t : terms) {
      if (!e.terms_.empty() && e.terms_.back().mono == t.mono) {
        e.terms_.back().coeff += t.coeff;
        if (ncgb::is_zero(e.terms_.back().coeff)) e.terms_.pop_back();
      } else if (!ncgb::is_zero(t.coeff)) {
        e.terms_.push_back(std::move(t));
      }
    }
    return e;
  }

  static ModuleElement from_sorted(std::vector<ModuleTerm<K>> terms) {
    ModuleElement e;
    e.terms_ = std::move(terms);
    return e;
  }

  static ModuleElement monomial(K c, ModuleMonomial m) {
    ModuleElement e;
    if (!ncgb::is_zero(c)) e.terms_.push_back({std::move(m), std::move(c)});
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<ModuleTerm<K>>& terms() const { return terms_; }
  const ModuleTerm<K>& leading_term() const { return terms_.front(); }
  const K& leading_coeff() const { return terms_.front().coeff; }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::vector<ModuleTerm<K>> terms_;
};

/// sig(alpha). Throws std::domain_error for alpha = 0.
template <class K>
const ModuleMonomial& signature_of(const ModuleElement<K>& alpha) {
  if (alpha.is_zero()) throw std::domain_error("signature of the zero module element");
  return alpha.leading_term().mono;
}

/// alpha + c·(v·beta·w), a single merge.
template <class K>
ModuleElement<K> module_combine(const ModuleElement<K>& alpha, const K& c, const Word& v,
                                const ModuleElement<K>& beta, const Word& w,
                                const ModuleOrder& mord) {
  if (is_zero(c) || beta.is_zero()) return alpha;
  std::vector<ModuleTerm<K>> out;
  out.reserve(alpha.size() + beta.size());
  const auto& at = alpha.terms();
  const auto& bt = beta.terms();
  std::size_t i = 0, j = 0;
  while (i < at.size() || j < bt.size()) {
    if (j >= bt.size()) {
      out.push_back(at[i++]);
      continue;
    }
    ModuleMonomial shifted = mul_module_monomial(v, bt[j].mono, w);
    if (i >= at.size()) {
      out.push_back({std::move(shifted), c * bt[j].coeff});
      ++j;
      continue;
    }
    auto cmp = mord.compare(at[i].mono, shifted);
    if (cmp > 0) {
      out.push_back(at[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(shifted), c * bt[j].coeff});
      ++j;
    } else {
      K s = at[i].coeff + c * bt[j].coeff;
      if (!is_zero(s)) out.push_back({std::move(shifted), std::move(s)});
      ++i;
      ++j;
    }
  }
  return ModuleElement<K>::from_sorted(std::move(out));
}

template <class K>
ModuleElement<K> module_scale(const ModuleElement<K>& alpha, const K& c) {
  if (is_zero(c)) return {};
  std::vector<ModuleTerm<K>> out;
  out.reserve(alpha.size());
  for (const auto& t : alpha.terms()) out.push_back({t.mono, t.coeff * c});
  return ModuleElement<K>::from_sorted(std::move(out));
}

/// v·alpha·w.
template <class K>
ModuleElement<K> module_shift(const Word& v, const ModuleElement<K>& alpha, const Word& w) {
  std::vector<ModuleTerm<K>> out;
  out.reserve(alpha.size());
  for (const auto& t : alpha.terms()) out.push_back({mul_module_monomial(v, t.mono, w), t.coeff});
  return ModuleElement<K>::from_sorted(std::move(out));
}

/// alpha·(w·g): right action of a polynomial.
template <class K>
ModuleElement<K> module_times_right(const ModuleElement<K>& alpha, const Word& w,
                                    const Polynomial<K>& g, const ModuleOrder& mord) {
  std::vector<ModuleTerm<K>> out;
  for (const auto& t : alpha.terms())
    for (const auto& s : g.terms())
      out.push_back({{t.mono.left, t.mono.component, concat(t.mono.right, w, s.word)},
                     t.coeff * s.coeff});
  return ModuleElement<K>::from_terms(std::move(out), mord);
}

/// (f·w)·beta: left action of a polynomial.
template <class K>
ModuleElement<K> module_times_left(const Polynomial<K>& f, const Word& w,
                                   const ModuleElement<K>& beta, const ModuleOrder& mord) {
  std::vector<ModuleTerm<K>> out;
  for (const auto& s : f.terms())
    for (const auto& t : beta.terms())
      out.push_back({{concat(s.word, w, t.mono.left), t.mono.component, t.mono.right},
                     s.coeff * t.coeff});
  return ModuleElement<K>::from_terms(std::move(out), mord);
}

/// The bar homomorphism: sum of c·a·f_i·b over the terms of alpha.
/// Throws std::domain_error when a component exceeds the generator count.
template <class K>
Polynomial<K> evaluate_label(const ModuleElement<K>& alpha, const std::vector<Polynomial<K>>& gens,
                             const MonomialOrder& ord) {
  std::map<Word, K, DescendingWords> acc(DescendingWords{&ord});
  for (const auto& t : alpha.terms()) {
    if (t.mono.component >= gens.size())
      throw std::domain_error("label component out of range");
    const auto& f = gens[t.mono.component];
    if (!f.is_zero() && field_tag(f.leading_coeff()) != field_tag(t.coeff))
      throw std::domain_error("label and generators over different fields");
    ++arithmetic_ops();
    for (const auto& s : f.terms()) {
      Word w = concat(t.mono.left, s.word, t.mono.right);
      auto [it, inserted] = acc.try_emplace(std::move(w), t.coeff * s.coeff);
      if (!inserted) {
        it->second += t.coeff * s.coeff;
        if (is_zero(it->second)) acc.erase(it);
      }
    }
  }
  std::vector<Term<K>> out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc) out.push_back({w, c});
  return Polynomial<K>::from_sorted(std::move(out));
}

/// Evaluation of the single module monomial a·e_i·b.
template <class K>
Polynomial<K> evaluate_monomial(const ModuleMonomial& mu, const std::vector<Polynomial<K>>& gens) {
  if (mu.component >= gens.size()) throw std::domain_error("signature component out of range");
  return shift(mu.left, gens[mu.component], mu.right);
}

/// A polynomial with its module witness. bar(label) = poly is enforced by
/// the checked constructor.
template <class K>
struct LabeledPolynomial {
  Polynomial<K> poly;
  ModuleElement<K> label;

  /// Throws std::invalid_argument if bar(label) != poly.
  static LabeledPolynomial make(Polynomial<K> f, ModuleElement<K> alpha,
                                const std::vector<Polynomial<K>>& gens, const MonomialOrder& ord) {
    if (!(evaluate_label(alpha, gens, ord) == f))
      throw std::invalid_argument("label does not evaluate to the polynomial");
    return {std::move(f), std::move(alpha)};
  }

  /// The labeled generator f_i^[e_i].
  static LabeledPolynomial generator(std::uint32_t i, const std::vector<Polynomial<K>>& gens) {
    const auto& f = gens.at(i);
    if (f.is_zero()) throw std::domain_error("zero generator");
    return {f, ModuleElement<K>::monomial(one_like(f.leading_coeff()), ModuleMonomial::unit(i))};
  }
};

/// A polynomial together with a single signature.
template <class K>
struct SigPolynomial {
  Polynomial<K> poly;
  ModuleMonomial sig;
  friend bool operator==(const SigPolynomial&, const SigPolynomial&) = default;
};

ModuleElement<Zp> reduce_mod(const ModuleElement<Rational>& alpha, std::uint32_t modulus);

}  // namespace ncgb

#endif
