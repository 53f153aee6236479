#ifndef NCGB_MODULE_ORDER_HPP
#define NCGB_MODULE_ORDER_HPP

#include "ncgb/monomial_order.hpp"
#include "ncgb/word.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace ncgb {

/// A bimodule monomial a·e_i·b. Components are 0-based internally and
/// printed 1-based.
struct ModuleMonomial {
  Word left;
  std::uint32_t component = 0;
  Word right;

  static ModuleMonomial unit(std::uint32_t i) { return {Word{}, i, Word{}}; }

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;

  /// Whether this equals a·d·b for some words a, b; if so, writes them.
  bool divisible_by(const ModuleMonomial& d, Word* a = nullptr, Word* b = nullptr) const {
    if (d.component != component || !left.has_suffix(d.left) || !right.has_prefix(d.right))
      return false;
    if (a) *a = left.drop_back(d.left.size());
    if (b) *b = right.drop_front(d.right.size());
    return true;
  }

  std::size_t hash() const {
    return left.hash() * 31 + right.hash() * 17 + component;
  }
};

/// v·mu·w.
inline ModuleMonomial mul_module_monomial(const Word& v, const ModuleMonomial& mu, const Word& w) {
  return {v * mu.left, mu.component, mu.right * w};
}

struct ModuleMonomialHash {
  std::size_t operator()(const ModuleMonomial& m) const { return m.hash(); }
};

enum class ModuleOrderKind {
  /// Degree, then component, then product ab, then a (or b).
  DegreeOverPositionOverTerm,
  /// Degree, then product ab, then component, then a (or b).
  DegreeOverTermOverPosition,
  /// Component first. Only fair for rank 1, rejected otherwise.
  PositionOverTerm,
};

enum class TieSide { Left, Right };

/// Fair bimodule ordering induced by a monomial order, generator degrees
/// and a component precedence e_1 < ... < e_r.
class ModuleOrder {
 public:
  /// Throws std::invalid_argument for PositionOverTerm with rank >= 2
  /// (not fair) and for an empty generator list.
  ModuleOrder(MonomialOrder order, std::vector<std::int64_t> generator_degrees,
              ModuleOrderKind kind = ModuleOrderKind::DegreeOverPositionOverTerm,
              TieSide side = TieSide::Left);

  const MonomialOrder& monomial_order() const { return order_; }
  std::size_t rank() const { return gen_degrees_.size(); }
  ModuleOrderKind kind() const { return kind_; }
  TieSide side() const { return side_; }
  const std::vector<std::int64_t>& generator_degrees() const { return gen_degrees_; }

  /// deg(a f_i b) = deg(a) + deg(f_i) + deg(b).
  std::int64_t degree(const ModuleMonomial& m) const {
    return order_.degree(m.left) + gen_degrees_[m.component] + order_.degree(m.right);
  }

  /// Throws std::domain_error when a component is out of range.
  std::strong_ordering compare(const ModuleMonomial& m, const ModuleMonomial& n) const;
  bool less(const ModuleMonomial& m, const ModuleMonomial& n) const {
    return compare(m, n) < 0;
  }

  /// The smallest module monomial of signature degree exactly `deg`, if one
  /// exists (with non-unit weights some degrees are not attained).
  std::optional<ModuleMonomial> smallest_of_degree(std::int64_t deg) const;

  /// Every module monomial of degree <= max_deg.
  std::vector<ModuleMonomial> monomials_up_to_degree(std::int64_t max_deg) const;

 private:
  std::strong_ordering compare_same_degree_terms(const ModuleMonomial& m,
                                                 const ModuleMonomial& n) const;

  MonomialOrder order_;
  std::vector<std::int64_t> gen_degrees_;
  ModuleOrderKind kind_;
  TieSide side_;
};

/// Exactly the module monomials strictly below sigma, ascending.
std::vector<ModuleMonomial> monomials_below(const ModuleMonomial& sigma, const ModuleOrder& mord);

/// The signature bound of a computation: either an explicit module monomial
/// sigma (admitting everything strictly below it) or a signature degree D
/// (admitting everything of degree < D, i.e. below the smallest monomial of
/// degree D).
class SigBound {
 public:
  /// Admits nothing.
  SigBound() = default;
  static SigBound below(ModuleMonomial sigma) { return SigBound(std::move(sigma)); }
  static SigBound sig_degree(std::int64_t d) { return SigBound(d); }

  bool is_degree() const { return !sigma_.has_value(); }
  std::int64_t degree() const { return degree_; }
  const std::optional<ModuleMonomial>& monomial() const { return sigma_; }

  bool admits(const ModuleMonomial& m, const ModuleOrder& mord) const {
    if (sigma_) return mord.less(m, *sigma_);
    return mord.degree(m) < degree_;
  }
  /// Largest degree an admitted monomial can have.
  std::int64_t degree_cap(const ModuleOrder& mord) const {
    return sigma_ ? mord.degree(*sigma_) : degree_ - 1;
  }

  friend bool operator==(const SigBound&, const SigBound&) = default;

 private:
  explicit SigBound(ModuleMonomial s) : sigma_(std::move(s)) {}
  explicit SigBound(std::int64_t d) : degree_(d) {}

  std::optional<ModuleMonomial> sigma_;
  std::int64_t degree_ = 0;
};

}  // namespace ncgb

template <>
struct std::hash<ncgb::ModuleMonomial> {
  std::size_t operator()(const ncgb::ModuleMonomial& m) const noexcept { return m.hash(); }
};

#endif
