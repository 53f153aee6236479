#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <algorithm>

using namespace ncgb;
using namespace ncgb::test;

namespace {

ModuleOrder fib_mord(ModuleOrderKind k = ModuleOrderKind::DegreeOverPositionOverTerm, TieSide s = TieSide::Left) {
  return ModuleOrder(deglex2(), {3}, k, s);
}

std::size_t pow_count(std::size_t k) { return (k + 1) << k; }

}  // namespace

TEST_CASE("compare_monomials examples") {
  const auto& o = deglex2();
  CHECK(o.compare(W("1"), W("x")) < 0);
  CHECK(o.compare(W("xy"), W("y^2")) < 0);
  CHECK(o.compare(W("y^3x"), W("xy^3")) > 0);
  CHECK(o.compare(W("xyx"), W("xyx")) == 0);
}

TEST_CASE("precedence and weights") {
  MonomialOrder yx({1, 0}, {1, 1});
  CHECK(yx.compare(W("x"), W("y")) > 0);
  MonomialOrder heavy({0, 1}, {3, 1});
  CHECK(heavy.degree(W("xy")) == 4);
  CHECK(heavy.compare(W("x"), W("y^2")) > 0);
  CHECK(heavy.compare(W("x"), W("y^3")) < 0);
  CHECK_THROWS_AS(MonomialOrder({0, 0}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MonomialOrder({0, 1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("monomial order is total, compatible and well founded on samples") {
  std::mt19937_64 rng(3);
  for (const MonomialOrder& o : {MonomialOrder(2), MonomialOrder({1, 0}, {2, 1})}) {
    for (int i = 0; i < 300; ++i) {
      Word u = random_word(rng, 5), v = random_word(rng, 5), a = random_word(rng, 2), b = random_word(rng, 2);
      auto c = o.compare(u, v);
      CHECK((c == 0) == (u == v));
      CHECK(o.compare(v, u) == (0 <=> c));
      if (c < 0) CHECK(o.less(concat(a, u, b), concat(a, v, b)));
      if (!u.empty()) CHECK(o.less(Word{}, u));
      CHECK(o.compare_concat(a, u, b, v) == o.compare(a * u, b * v));
    }
    std::vector<Word> sample;
    for (int i = 0; i < 50; ++i) sample.push_back(random_word(rng, 5));
    Word m = sample[0];
    for (const auto& w : sample)
      if (o.less(w, m)) m = w;
    CHECK(m == *std::min_element(sample.begin(), sample.end(), [&](const Word& a, const Word& b) { return o.less(a, b); }));
  }
}

TEST_CASE("compare_module_monomials examples") {
  auto mord = fib_mord();
  CHECK(mord.compare(S("1*e1*1"), S("y*e1*1")) < 0);
  CHECK(mord.compare(S("1*e1*x"), S("x*e1*1")) < 0);
  CHECK(mord.compare(S("1*e1*yx"), S("xy*e1*1")) > 0);
  CHECK_THROWS_AS(mord.compare(S("1*e2*1", 2), S("1*e1*1")), std::domain_error);
}

TEST_CASE("right side variant compares the right factor") {
  auto mord = fib_mord(ModuleOrderKind::DegreeOverPositionOverTerm, TieSide::Right);
  CHECK(mord.compare(S("1*e1*x"), S("x*e1*1")) > 0);
}

TEST_CASE("DoPoT versus DoToP on two components") {
  ModuleOrder dopot(deglex2(), {1, 1}, ModuleOrderKind::DegreeOverPositionOverTerm);
  ModuleOrder dotop(deglex2(), {1, 1}, ModuleOrderKind::DegreeOverTermOverPosition);
  // y*e1 and x*e2: same degree, products y vs x
  CHECK(dopot.compare(S("y*e1*1", 2), S("x*e2*1", 2)) < 0);
  CHECK(dotop.compare(S("y*e1*1", 2), S("x*e2*1", 2)) > 0);
  CHECK(dotop.compare(S("x*e1*1", 2), S("x*e2*1", 2)) < 0);
}

TEST_CASE("position over term is rejected for rank two") {
  CHECK_THROWS_AS(ModuleOrder(deglex2(), {1, 1}, ModuleOrderKind::PositionOverTerm), std::invalid_argument);
  CHECK_NOTHROW(ModuleOrder(deglex2(), {1}, ModuleOrderKind::PositionOverTerm));
  CHECK_THROWS_AS(ModuleOrder(deglex2(), {}), std::invalid_argument);
}

TEST_CASE("module order is total and bimodule compatible on samples") {
  std::mt19937_64 rng(5);
  for (auto kind : {ModuleOrderKind::DegreeOverPositionOverTerm, ModuleOrderKind::DegreeOverTermOverPosition})
    for (auto side : {TieSide::Left, TieSide::Right}) {
      ModuleOrder mord(deglex2(), {3, 2}, kind, side);
      for (int i = 0; i < 300; ++i) {
        ModuleMonomial m{random_word(rng, 3), static_cast<std::uint32_t>(rng() % 2), random_word(rng, 3)};
        ModuleMonomial n{random_word(rng, 3), static_cast<std::uint32_t>(rng() % 2), random_word(rng, 3)};
        auto c = mord.compare(m, n);
        CHECK((c == 0) == (m == n));
        CHECK(mord.compare(n, m) == (0 <=> c));
        Word v = random_word(rng, 2), w = random_word(rng, 2);
        if (c < 0) CHECK(mord.less(mul_module_monomial(v, m, w), mul_module_monomial(v, n, w)));
      }
    }
}

TEST_CASE("monomials_below examples") {
  auto mord = fib_mord();
  auto s5 = mord.smallest_of_degree(5);
  REQUIRE(s5.has_value());
  auto below = monomials_below(*s5, mord);
  CHECK(below.size() == 5);
  CHECK(monomials_below(S("1*e1*1"), mord).empty());
  auto bx = monomials_below(S("x*e1*1"), mord);
  std::vector<ModuleMonomial> expect = {S("1*e1*1")};
  for (auto& m : mord.monomials_up_to_degree(4))
    if (mord.degree(m) == 4 && mord.less(m, S("x*e1*1"))) expect.push_back(m);
  std::sort(expect.begin(), expect.end(), [&](auto& a, auto& b) { return mord.less(a, b); });
  CHECK(bx == expect);
  CHECK(std::is_sorted(below.begin(), below.end(), [&](auto& a, auto& b) { return mord.less(a, b); }));
}

TEST_CASE("monomials_below matches the closed count and is monotone") {
  auto mord = fib_mord();
  std::size_t prev = 0;
  for (int d = 3; d <= 8; ++d) {
    auto s = mord.smallest_of_degree(d);
    REQUIRE(s.has_value());
    auto below = monomials_below(*s, mord);
    std::size_t expect = 0;
    for (int k = 0; k + 3 < d; ++k) expect += pow_count(static_cast<std::size_t>(k));
    CHECK(below.size() == expect);
    CHECK(below.size() >= prev);
    prev = below.size();
    for (const auto& m : below) CHECK(mord.less(m, *s));
  }
}

TEST_CASE("sig-degree bound admits exactly degrees below D") {
  auto mord = fib_mord();
  auto b = SigBound::sig_degree(6);
  CHECK(b.admits(S("xy*e1*1"), mord));
  CHECK_FALSE(b.admits(S("1*e1*yxx"), mord));
  CHECK(b.degree_cap(mord) == 5);
  auto s6 = *mord.smallest_of_degree(6);
  for (auto& m : mord.monomials_up_to_degree(7)) CHECK(b.admits(m, mord) == mord.less(m, s6));
}
