#ifndef NCGB_MONOMIAL_ORDER_HPP
#define NCGB_MONOMIAL_ORDER_HPP

#include "ncgb/word.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace ncgb {

/// Weighted degree-lexicographic ordering on words: words are compared by
/// weighted degree first, ties are broken left-lexicographically on the
/// declared variable precedence.
///
/// Weights are positive integers here; rational weights are scaled to a
/// common denominator by the problem parser, which preserves the ordering.
class MonomialOrder {
 public:
  /// Plain degree-lexicographic order on `num_vars` letters with
  /// letter 0 < letter 1 < ...
  explicit MonomialOrder(std::size_t num_vars);

  /// `precedence` lists letters from smallest to largest and must be a
  /// permutation of 0..n-1. `weights[i]` is the weight of letter i.
  MonomialOrder(std::vector<Letter> precedence, std::vector<std::int64_t> weights);

  std::size_t num_vars() const { return rank_.size(); }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  /// Letters from smallest to largest.
  const std::vector<Letter>& precedence() const { return precedence_; }
  bool unit_weights() const { return unit_weights_; }

  std::int64_t weight(Letter l) const { return weights_[l]; }
  std::int64_t degree(const Word& w) const;

  std::strong_ordering compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

  /// Compares the concatenations u1·u2 and v1·v2 without building them.
  std::strong_ordering compare_concat(const Word& u1, const Word& u2, const Word& v1,
                                      const Word& v2) const;

  /// Left-lexicographic comparison on precedence only, for words of equal
  /// weighted degree.
  std::strong_ordering compare_lex(std::string_view u, std::string_view v) const;

  /// The smallest word of weighted degree exactly `deg`, if any exists.
  bool smallest_word_of_degree(std::int64_t deg, Word& out) const;

  /// All words with weighted degree <= max_deg, in no particular order.
  std::vector<Word> words_up_to(std::int64_t max_deg) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.precedence_ == b.precedence_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<Letter> precedence_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::int64_t> weights_;
  bool unit_weights_ = true;
  bool identity_rank_ = true;
};

/// Orders words descending; used as a map comparator.
struct DescendingWords {
  const MonomialOrder* order;
  bool operator()(const Word& u, const Word& v) const { return order->less(v, u); }
};

}  // namespace ncgb

#endif
