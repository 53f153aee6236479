#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace ncgb;
using namespace ncgb::test;

TEST_CASE("word basics") {
  Word w = W("xyx");
  CHECK(w.size() == 3);
  CHECK(W("1").empty());
  CHECK(W("xy") * W("x") == w);
  CHECK(w.prefix(2) == W("xy"));
  CHECK(w.suffix(1) == W("x"));
  CHECK(w.drop_front(1) == W("yx"));
  CHECK(w.drop_back(1) == W("xy"));
  CHECK(W("xxx").occurrences(W("xx")) == std::vector<std::size_t>{0, 1});
  CHECK(w.has_prefix(W("xy")));
  CHECK(w.has_suffix(W("yx")));
  CHECK(concat(W("x"), W("1"), W("y")) == W("xy"));
}

TEST_CASE("concatenation is associative with identity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word a = random_word(rng, 4), b = random_word(rng, 4), c = random_word(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * Word{} == a);
    CHECK(Word{} * a == a);
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({""}), std::invalid_argument);
  Alphabet a({"x1", "x2"});
  CHECK_FALSE(a.single_char());
  CHECK(a.find("x2") == 1);
  CHECK(a.find("x3") == -1);
}

TEST_CASE("Zp field axioms") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u, 65521u, 2147483647u}) {
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (int i = 0; i < 200; ++i) {
      Zp a(d(rng), p), b(d(rng), p), c(d(rng), p);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Zp(0, p));
      CHECK(a + (-a) == Zp(0, p));
      if (!a.is_zero()) CHECK(a * a.inverse() == Zp(1, p));
    }
  }
  CHECK_THROWS_AS(Zp(0, 7).inverse(), std::domain_error);
}

TEST_CASE("rational field axioms") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> n(-50, 50), d(1, 30);
  for (int i = 0; i < 200; ++i) {
    Rational a(n(rng), d(rng)), b(n(rng), d(rng)), c(n(rng), d(rng));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!is_zero(a)) CHECK(a * inverse(a) == 1);
    CHECK(a.get_den() > 0);
  }
}

TEST_CASE("is_prime") {
  std::vector<std::uint64_t> small;
  for (std::uint64_t n = 0; n < 200; ++n)
    if (is_prime(n)) small.push_back(n);
  std::vector<std::uint64_t> sieve;
  for (std::uint64_t n = 2; n < 200; ++n) {
    bool pr = true;
    for (std::uint64_t k = 2; k * k <= n; ++k)
      if (n % k == 0) pr = false;
    if (pr) sieve.push_back(n);
  }
  CHECK(small == sieve);
  CHECK(is_prime(2147483647u));
  CHECK_FALSE(is_prime(2147483649u));
}

TEST_CASE("poly_combine examples") {
  const auto& o = deglex2();
  Polynomial<Rational> zero;
  auto g1 = P("xyx - xy - y");
  CHECK(poly_combine(zero, Rational(1), Word{}, g1, Word{}, o) == g1);
  auto f = P("xy^2x");
  CHECK(poly_combine(f, Rational(-1), Word{}, f, Word{}, o).is_zero());
  auto g = P("y^2x - xy^2");
  CHECK(str(poly_combine(zero, Rational(1), W("x"), g, W("y"), o)) == "xy^2xy - x^2y^3");
}

TEST_CASE("poly_combine rejects mixed fields") {
  Polynomial<Zp> f = Polynomial<Zp>::monomial(Zp(1, 5), W("x"));
  Polynomial<Zp> g = Polynomial<Zp>::monomial(Zp(1, 7), W("y"));
  CHECK_THROWS_AS(poly_combine(f, Zp(1, 5), Word{}, g, Word{}, deglex2()), std::domain_error);
}

TEST_CASE("poly_combine agrees with naive expansion") {
  std::mt19937_64 rng(17);
  const auto& o = deglex2();
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(rng, 4, 3);
    auto g = random_poly(rng, 4, 3);
    Word a = random_word(rng, 2), b = random_word(rng, 2);
    Rational c(static_cast<long>(rng() % 7) - 3, 2);
    c.canonicalize();
    auto got = poly_combine(f, c, a, g, b, o);
    std::vector<Term<Rational>> naive(f.terms().begin(), f.terms().end());
    for (const auto& t : g.terms()) naive.push_back({concat(a, t.word, b), c * t.coeff});
    CHECK(got == Polynomial<Rational>::from_terms(naive, o));
    // linear in g
    auto g2 = random_poly(rng, 3, 3);
    auto lhs = poly_combine(Polynomial<Rational>{}, c, a, add(g, g2, o), b, o);
    auto rhs = add(poly_combine(Polynomial<Rational>{}, c, a, g, b, o),
                   poly_combine(Polynomial<Rational>{}, c, a, g2, b, o), o);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("leading monomial") {
  CHECK(*leading_monomial(P("xyx - xy - y")) == W("xyx"));
  CHECK_FALSE(leading_monomial(Polynomial<Rational>{}).has_value());
  CHECK(*leading_monomial(P("y^3x - xy^3")) == W("y^3x"));
  CHECK(*leading_monomial(P("xy^3 - y^3x")) == W("y^3x"));
  CHECK(compare_lm(std::nullopt, W("1"), deglex2()) < 0);
}

TEST_CASE("LM is multiplicative") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(rng, 4, 3);
    if (f.is_zero()) continue;
    Word a = random_word(rng, 3), b = random_word(rng, 3);
    CHECK(shift(a, f, b).leading_word() == concat(a, f.leading_word(), b));
  }
}

TEST_CASE("make_monic") {
  auto [m, c] = make_monic(P("2*xy - 4*y"));
  CHECK(str(m) == "xy - 2*y");
  CHECK(c == 2);
  auto g1 = P("xyx - xy - y");
  auto [m1, c1] = make_monic(g1);
  CHECK(m1 == g1);
  CHECK(c1 == 1);
  auto f7 = Polynomial<Zp>::monomial(Zp::from_signed(-3, 7), W("y^2x"));
  auto [m7, c7] = make_monic(f7);
  CHECK(str(m7) == "y^2x");
  CHECK(c7 == Zp(4, 7));
  CHECK_THROWS_AS(make_monic(Polynomial<Rational>{}), std::domain_error);
}

TEST_CASE("reduce_mod") {
  auto g2 = P("xy^2x + y^2x - 2*xy^2 - y^2");
  CHECK(str(reduce_mod(g2, 2)) == "xy^2x + y^2x + y^2");
  auto g3 = P("xy^3x + 1/2*y^3x - 3/2*xy^3 - y^3");
  CHECK_THROWS_AS(reduce_mod(g3, 2), ReductionUndefined);
  try {
    reduce_mod(g3, 2);
  } catch (const ReductionUndefined& e) {
    CHECK(std::string(e.what()).find("1/2") != std::string::npos);
  }
  CHECK(str(reduce_mod(P("3*xy + 2*y + 1"), 5)) == "3*xy + 2*y + 1");
  CHECK(str(reduce_mod(P("1/3*x"), 7)) == "5*x");
}

TEST_CASE("reduce_mod is a ring homomorphism") {
  std::mt19937_64 rng(23);
  const auto& o = deglex2();
  const std::uint32_t p = 1000003;
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(rng, 4, 3);
    auto g = random_poly(rng, 4, 3);
    CHECK(reduce_mod(add(f, g, o), p) == add(reduce_mod(f, p), reduce_mod(g, p), o));
    CHECK(reduce_mod(multiply(f, g, o), p) == multiply(reduce_mod(f, p), reduce_mod(g, p), o));
  }
}

TEST_CASE("reduce_rational") {
  CHECK(reduce_rational(Rational(-1, 3), 5) == Zp(3, 5));
  CHECK_THROWS_AS(reduce_rational(Rational(1, 4), 2), std::domain_error);
}
