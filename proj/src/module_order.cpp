#include "ncgb/module_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncgb {

ModuleOrder::ModuleOrder(MonomialOrder order, std::vector<std::int64_t> generator_degrees,
                         ModuleOrderKind kind, TieSide side)
    : order_(std::move(order)), gen_degrees_(std::move(generator_degrees)), kind_(kind), side_(side) {
  if (gen_degrees_.empty()) throw std::invalid_argument("module order needs rank >= 1");
  if (kind_ == ModuleOrderKind::PositionOverTerm && gen_degrees_.size() >= 2)
    throw std::invalid_argument("position-over-term ordering is not fair for rank >= 2");
}

std::strong_ordering ModuleOrder::compare_same_degree_terms(const ModuleMonomial& m,
                                                            const ModuleMonomial& n) const {
  if (side_ == TieSide::Left) return order_.compare(m.left, n.left);
  return order_.compare(m.right, n.right);
}

std::strong_ordering ModuleOrder::compare(const ModuleMonomial& m, const ModuleMonomial& n) const {
  if (m.component >= rank() || n.component >= rank())
    throw std::domain_error("module monomial component out of range");
  if (kind_ != ModuleOrderKind::PositionOverTerm) {
    auto dm = degree(m), dn = degree(n);
    if (dm != dn) return dm <=> dn;
  }
  if (kind_ == ModuleOrderKind::DegreeOverTermOverPosition) {
    auto c = order_.compare_concat(m.left, m.right, n.left, n.right);
    if (c != 0) return c;
    if (m.component != n.component) return m.component <=> n.component;
  } else {
    if (m.component != n.component) return m.component <=> n.component;
    auto c = order_.compare_concat(m.left, m.right, n.left, n.right);
    if (c != 0) return c;
  }
  return compare_same_degree_terms(m, n);
}

std::optional<ModuleMonomial> ModuleOrder::smallest_of_degree(std::int64_t deg) const {
  std::optional<ModuleMonomial> best;
  for (std::uint32_t i = 0; i < rank(); ++i) {
    Word u;
    if (!order_.smallest_word_of_degree(deg - gen_degrees_[i], u)) continue;
    ModuleMonomial cand = side_ == TieSide::Left ? ModuleMonomial{Word{}, i, u}
                                                 : ModuleMonomial{u, i, Word{}};
    if (!best || less(cand, *best)) best = cand;
  }
  return best;
}

std::vector<ModuleMonomial> ModuleOrder::monomials_up_to_degree(std::int64_t max_deg) const {
  std::vector<ModuleMonomial> out;
  std::int64_t min_gen = *std::min_element(gen_degrees_.begin(), gen_degrees_.end());
  auto words = order_.words_up_to(max_deg - min_gen);
  for (std::uint32_t i = 0; i < rank(); ++i) {
    for (const auto& u : words) {
      if (order_.degree(u) + gen_degrees_[i] > max_deg) continue;
      for (std::size_t k = 0; k <= u.size(); ++k)
        out.push_back({u.prefix(k), i, u.drop_front(k)});
    }
  }
  return out;
}

std::vector<ModuleMonomial> monomials_below(const ModuleMonomial& sigma, const ModuleOrder& mord) {
  auto all = mord.monomials_up_to_degree(mord.degree(sigma));
  std::vector<ModuleMonomial> out;
  for (auto& m : all)
    if (mord.less(m, sigma)) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(),
            [&](const ModuleMonomial& a, const ModuleMonomial& b) { return mord.less(a, b); });
  return out;
}

}  // namespace ncgb
