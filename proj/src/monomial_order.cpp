#include "ncgb/monomial_order.hpp"

#include <numeric>
#include <stdexcept>

namespace ncgb {

MonomialOrder::MonomialOrder(std::size_t num_vars)
    : MonomialOrder([&] {
        std::vector<Letter> p(num_vars);
        std::iota(p.begin(), p.end(), Letter{0});
        return p;
      }(),
                    std::vector<std::int64_t>(num_vars, 1)) {}

MonomialOrder::MonomialOrder(std::vector<Letter> precedence, std::vector<std::int64_t> weights)
    : precedence_(std::move(precedence)), rank_(precedence_.size(), 0), weights_(std::move(weights)) {
  const std::size_t n = precedence_.size();
  if (n == 0) throw std::invalid_argument("monomial order needs at least one variable");
  if (n > kMaxAlphabetSize) throw std::invalid_argument("too many variables");
  if (weights_.size() != n) throw std::invalid_argument("one weight per variable required");
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    Letter l = precedence_[r];
    if (l >= n || seen[l]) throw std::invalid_argument("precedence is not a permutation");
    seen[l] = true;
    rank_[l] = static_cast<std::uint8_t>(r);
    if (l != r) identity_rank_ = false;
  }
  for (auto w : weights_) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    if (w != 1) unit_weights_ = false;
  }
}

std::int64_t MonomialOrder::degree(const Word& w) const {
  if (unit_weights_) return static_cast<std::int64_t>(w.size());
  std::int64_t d = 0;
  for (char c : w.raw()) d += weights_[static_cast<Letter>(c)];
  return d;
}

std::strong_ordering MonomialOrder::compare_lex(std::string_view u, std::string_view v) const {
  if (identity_rank_) {
    int c = u.compare(v);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i])
      return rank_[static_cast<Letter>(u[i])] <=> rank_[static_cast<Letter>(v[i])];
  }
  return u.size() <=> v.size();
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const {
  if (unit_weights_) {
    if (u.size() != v.size()) return u.size() <=> v.size();
  } else {
    auto du = degree(u), dv = degree(v);
    if (du != dv) return du <=> dv;
  }
  return compare_lex(u.raw(), v.raw());
}

std::strong_ordering MonomialOrder::compare_concat(const Word& u1, const Word& u2, const Word& v1,
                                                   const Word& v2) const {
  std::int64_t du = degree(u1) + degree(u2), dv = degree(v1) + degree(v2);
  if (du != dv) return du <=> dv;
  const std::size_t nu = u1.size() + u2.size(), nv = v1.size() + v2.size();
  auto at_u = [&](std::size_t i) { return i < u1.size() ? u1[i] : u2[i - u1.size()]; };
  auto at_v = [&](std::size_t i) { return i < v1.size() ? v1[i] : v2[i - v1.size()]; };
  const std::size_t n = std::min(nu, nv);
  for (std::size_t i = 0; i < n; ++i) {
    Letter a = at_u(i), b = at_v(i);
    if (a != b) return rank_[a] <=> rank_[b];
  }
  return nu <=> nv;
}

bool MonomialOrder::smallest_word_of_degree(std::int64_t deg, Word& out) const {
  out = Word{};
  if (deg < 0) return false;
  if (deg == 0) return true;
  if (unit_weights_) {
    out = Word::power(precedence_[0], static_cast<std::size_t>(deg));
    return true;
  }
  std::vector<bool> reachable(static_cast<std::size_t>(deg) + 1, false);
  reachable[0] = true;
  for (std::int64_t d = 1; d <= deg; ++d)
    for (auto w : weights_)
      if (w <= d && reachable[d - w]) {
        reachable[d] = true;
        break;
      }
  if (!reachable[deg]) return false;
  std::int64_t left = deg;
  while (left > 0) {
    for (Letter l : precedence_) {
      auto w = weights_[l];
      if (w <= left && reachable[left - w]) {
        out.push_back(l);
        left -= w;
        break;
      }
    }
  }
  return true;
}

std::vector<Word> MonomialOrder::words_up_to(std::int64_t max_deg) const {
  std::vector<Word> out;
  if (max_deg < 0) return out;
  out.push_back(Word{});
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::int64_t d = degree(out[i]);
    for (Letter l = 0; l < num_vars(); ++l) {
      if (d + weights_[l] <= max_deg) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

}  // namespace ncgb
