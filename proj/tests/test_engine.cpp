#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgb/testkit.hpp"
#include "support.hpp"

#include <algorithm>

using namespace ncgb;
using namespace ncgb::test;

namespace {

const ModuleOrder& fib_mord() {
  static const ModuleOrder m(deglex2(), {3});
  return m;
}

std::vector<Polynomial<Rational>> fib_gens() { return {P("xyx - xy - y")}; }

SigBasis<Rational> fib_basis(std::int64_t d, bool strong = false) {
  EngineOptions o;
  o.strong = strong;
  return compute_sig_basis(fib_gens(), SigBound::sig_degree(d), fib_mord(), o);
}

std::vector<Problem> shipped() {
  return {problem_file("fib.prob"), problem_file("cyclic4.prob"), problem_file("eco3.prob")};
}

}  // namespace

TEST_CASE("word ambiguities of the Fibonacci leading monomial") {
  auto amb = word_ambiguities(W("xyx"), W("xyx"), true);
  REQUIRE(amb.size() == 2);
  CHECK(amb[0] != amb[1]);
  for (const auto& a : amb) {
    CHECK(concat(a.a, W("xyx"), a.b) == W("xyxyx"));
    CHECK(concat(a.c, W("xyx"), a.d) == W("xyxyx"));
  }
  bool first = false, second = false;
  for (const auto& a : amb) {
    if (a.a == W("1") && a.b == W("yx") && a.c == W("xy") && a.d == W("1")) first = true;
    if (a.a == W("xy") && a.b == W("1") && a.c == W("1") && a.d == W("yx")) second = true;
  }
  CHECK(first);
  CHECK(second);
}

TEST_CASE("word ambiguities examples") {
  CHECK(word_ambiguities(W("xx"), W("yy"), false).empty());
  auto inc = word_ambiguities(W("xyx"), W("y"), false);
  REQUIRE(inc.size() == 1);
  CHECK(inc[0].a.empty());
  CHECK(inc[0].b.empty());
  CHECK(inc[0].c == W("x"));
  CHECK(inc[0].d == W("x"));
  CHECK(word_ambiguities(W("xy"), W("xy"), false).size() == 1);
  CHECK(word_ambiguities(W("xy"), W("xy"), true).empty());
}

TEST_CASE("ambiguities are consistent alignments without duplicates") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    Word p = random_word(rng, 5), q = random_word(rng, 5);
    if (p.empty() || q.empty()) continue;
    auto amb = word_ambiguities(p, q, false);
    for (std::size_t k = 0; k < amb.size(); ++k) {
      CHECK(concat(amb[k].a, p, amb[k].b) == concat(amb[k].c, q, amb[k].d));
      for (std::size_t l = k + 1; l < amb.size(); ++l) CHECK_FALSE(amb[k] == amb[l]);
    }
  }
}

TEST_CASE("enumerate_ambiguities on polynomials") {
  SigPolynomial<Rational> g1{fib_gens()[0], S("1*e1*1")};
  auto amb = enumerate_ambiguities(g1, 0, g1, 0, fib_mord());
  REQUIRE(amb.size() == 2);
  for (const auto& a : amb) {
    CHECK(a.lma == W("xyxyx"));
    CHECK(a.regular);
    CHECK(a.siga == (fib_mord().less(a.sig_p, a.sig_q) ? a.sig_q : a.sig_p));
  }
  SigPolynomial<Rational> zero{{}, S("y*e1*1")};
  CHECK_THROWS_AS(enumerate_ambiguities(g1, 0, zero, 1, fib_mord()), std::domain_error);
}

TEST_CASE("is_covered examples") {
  Ambiguity amb;
  amb.lma = W("xyxyx");
  amb.siga = S("xy*e1*1");
  LeadingData none;
  none.elements.push_back({S("1*e1*1"), W("xyx")});
  SyzygySet syz(1);
  syz.insert(S("y*e1*1"));
  CHECK(is_covered(amb, none, syz, fib_mord()));

  LeadingData direct = none;
  direct.elements.push_back({S("xy*e1*1"), W("xy^2")});
  CHECK(is_covered(amb, direct, SyzygySet(1), fib_mord()));

  LeadingData high = none;
  high.elements.push_back({S("xy*e1*1"), W("y^5")});
  CHECK_FALSE(is_covered(amb, high, SyzygySet(1), fib_mord()));

  Ambiguity far = amb;
  far.siga = S("x*e1*1");
  LeadingData other;
  other.elements.push_back({S("y*e1*1"), W("x")});
  CHECK_FALSE(is_covered(far, other, SyzygySet(1), fib_mord()));
}

TEST_CASE("regular_sig_reduce examples") {
  SigBasis<Rational> basis;
  basis.elements.push_back({fib_gens()[0], S("1*e1*1")});
  auto r = regular_sig_reduce(SigPolynomial<Rational>{fib_gens()[0], S("y*e1*1")}, basis, fib_mord());
  CHECK(r.poly.is_zero());
  CHECK(r.sig == S("y*e1*1"));
  auto same = regular_sig_reduce(SigPolynomial<Rational>{fib_gens()[0], S("1*e1*1")}, basis, fib_mord());
  CHECK(same.poly == fib_gens()[0]);
  SigPolynomial<Rational> disjoint{P("y^2 + x"), S("y^2*e1*1")};
  CHECK(regular_sig_reduce(disjoint, basis, fib_mord()) == disjoint);
}

TEST_CASE("compute_sig_basis trivial inputs") {
  Problem p = parse_problem("vars x y\norder deglex x y\nmodorder dopot\ngens\nxy - 1\nend\n");
  auto b = compute_sig_basis(p.gens, SigBound::sig_degree(10), p.module_order());
  REQUIRE(b.elements.size() == 1);
  CHECK(b.elements[0].poly == P("xy - 1"));
  CHECK(b.elements[0].sig == S("1*e1*1"));

  Problem q = parse_problem("vars x y\norder deglex x y\ngens\nx\nend\n");
  auto c = compute_sig_basis(q.gens, SigBound::sig_degree(6), q.module_order());
  REQUIRE(c.elements.size() == 1);
  CHECK(c.elements[0].poly == P("x"));
  CHECK(check_cover_criterion(c.leading_data(), 1, SigBound::sig_degree(6), q.module_order()).ok);

  CHECK_THROWS_AS(compute_sig_basis(std::vector<Polynomial<Rational>>{Polynomial<Rational>{}}, SigBound::sig_degree(4),
                                    fib_mord()),
                  std::domain_error);
}

TEST_CASE("Fibonacci up to sig-degree 6") {
  auto b = fib_basis(6);
  REQUIRE(b.elements.size() == 2);
  CHECK(b.elements[0].poly == P("xyx - xy - y"));
  CHECK(b.elements[1].poly == P("xy^2x + y^2x - 2*xy^2 - y^2"));
  CHECK(b.elements[0].sig == S("1*e1*1"));
  CHECK(b.elements[1].sig == S("1*e1*yx"));
}

TEST_CASE("Fibonacci elements follow the closed form") {
  auto b = fib_basis(10);
  REQUIRE(b.elements.size() >= 4);
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    FibonacciWitness w(static_cast<unsigned>(i + 1));
    CHECK(b.elements[i].poly == w.g);
  }
  SigBasis<Rational> eight = fib_basis(8);
  CHECK(check_cover_criterion(eight.leading_data(), 1, SigBound::sig_degree(8), fib_mord()).ok);
}

TEST_CASE("mod 2 leading data diverges from the rational one") {
  auto q = fib_basis(8);
  std::vector<Polynomial<Zp>> g2 = {reduce_mod(fib_gens()[0], 2)};
  auto p2 = compute_sig_basis(g2, SigBound::sig_degree(8), fib_mord());
  CHECK_FALSE(p2.leading_data() == q.leading_data());
  std::vector<Polynomial<Zp>> g5 = {reduce_mod(fib_gens()[0], 5)};
  CHECK(compute_sig_basis(g5, SigBound::sig_degree(8), fib_mord()).leading_data() == q.leading_data());
  CHECK_FALSE(compute_sig_basis(g5, SigBound::sig_degree(11), fib_mord()).leading_data() ==
              fib_basis(11).leading_data());
}

TEST_CASE("engine matches the brute-force label oracle") {
  int compared = 0;
  for (const auto& pr : shipped()) {
    auto mord = pr.module_order();
    for (std::int64_t d = 4; d <= 6; ++d) {
      auto bound = SigBound::sig_degree(d);
      auto oracle = brute_force_sig_labels(pr.gens, bound, mord, 20000);
      if (!oracle) continue;
      auto b = compute_sig_basis(pr.gens, bound, mord);
      REQUIRE(b.elements.size() == oracle->elements.size());
      for (std::size_t i = 0; i < b.elements.size(); ++i) {
        CHECK(b.elements[i].sig == oracle->elements[i].sig);
        CHECK(b.elements[i].poly == oracle->elements[i].poly);
      }
      CHECK(b.syzygies == oracle->syzygies);
      ++compared;
    }
  }
  CHECK(compared >= 8);
}

TEST_CASE("strong mode labels evaluate to their polynomials") {
  for (const auto& pr : shipped()) {
    auto mord = pr.module_order();
    EngineOptions o;
    o.strong = true;
    auto b = compute_sig_basis(pr.gens, SigBound::sig_degree(6), mord, o);
    REQUIRE(b.labels.size() == b.elements.size());
    const auto& ord = mord.monomial_order();
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      CHECK(evaluate_label(b.labels[i], pr.gens, ord) == b.elements[i].poly);
      CHECK(signature_of(b.labels[i]) == b.elements[i].sig);
    }
    for (std::size_t i = 0; i < b.syzygies.size(); ++i) {
      CHECK(evaluate_label(b.syzygy_labels[i], pr.gens, ord).is_zero());
      CHECK(signature_of(b.syzygy_labels[i]) == b.syzygies[i]);
    }
    auto plain = compute_sig_basis(pr.gens, SigBound::sig_degree(6), mord);
    CHECK(plain.elements == b.elements);
    CHECK(plain.syzygies == b.syzygies);
  }
}

TEST_CASE("queue policies give the same reduced basis") {
  for (const auto& pr : shipped()) {
    EngineOptions alt;
    alt.policy = QueuePolicy::Alternative;
    auto bound = SigBound::sig_degree(7);
    auto a = compute_sig_basis(pr.gens, bound, pr.module_order());
    auto b = compute_sig_basis(pr.gens, bound, pr.module_order(), alt);
    CHECK(a.same_basis(b));
  }
}

TEST_CASE("equal signatures give proportional polynomials") {
  for (const auto& pr : shipped()) {
    EngineOptions o;
    o.check_rigidity = true;
    auto b = compute_sig_basis(pr.gens, SigBound::sig_degree(7), pr.module_order(), o);
    CHECK(b.stats.rigidity_checks > 0);
    CHECK(b.stats.rigidity_violations == 0);
  }
}

TEST_CASE("at most one element per signature and ascending order") {
  for (const auto& pr : shipped()) {
    auto mord = pr.module_order();
    auto b = compute_sig_basis(pr.gens, SigBound::sig_degree(7), mord);
    for (std::size_t i = 1; i < b.elements.size(); ++i) CHECK(mord.less(b.elements[i - 1].sig, b.elements[i].sig));
    for (const auto& e : b.elements) CHECK(e.poly.leading_coeff() == 1);
  }
}

TEST_CASE("enlarging the bound keeps earlier elements") {
  for (const auto& pr : shipped()) {
    auto mord = pr.module_order();
    auto small = compute_sig_basis(pr.gens, SigBound::sig_degree(5), mord);
    auto large = compute_sig_basis(pr.gens, SigBound::sig_degree(7), mord);
    for (const auto& e : small.elements)
      CHECK(std::find(large.elements.begin(), large.elements.end(), e) != large.elements.end());
  }
}

TEST_CASE("explicit signature bounds") {
  auto b = compute_sig_basis(fib_gens(), SigBound::below(S("1*e1*yx")), fib_mord());
  CHECK(b.elements.size() == 1);
  auto c = compute_sig_basis(fib_gens(), SigBound::below(S("x*e1*yx")), fib_mord());
  CHECK(c.elements.size() == 2);
}

TEST_CASE("variants: DoToP, right tie side and weights") {
  Problem p = problem_file("cyclic4.prob");
  for (auto kind : {ModuleOrderKind::DegreeOverPositionOverTerm, ModuleOrderKind::DegreeOverTermOverPosition})
    for (auto side : {TieSide::Left, TieSide::Right}) {
      std::vector<std::int64_t> degs;
      for (const auto& g : p.gens) degs.push_back(p.order.degree(g.leading_word()));
      ModuleOrder mord(p.order, degs, kind, side);
      auto bound = SigBound::sig_degree(6);
      auto b = compute_sig_basis(p.gens, bound, mord);
      CHECK(check_cover_criterion(b.leading_data(), p.gens.size(), bound, mord).ok);
      auto oracle = brute_force_sig_labels(p.gens, bound, mord, 20000);
      REQUIRE(oracle.has_value());
      REQUIRE(b.elements.size() == oracle->elements.size());
      for (std::size_t i = 0; i < b.elements.size(); ++i) CHECK(b.elements[i].poly == oracle->elements[i].poly);
    }
  Problem w = parse_problem("vars x y\norder deglex x y\nweights 2 1\ngens\nxyx - xy - y\nend\n");
  auto mord = w.module_order();
  auto b = compute_sig_basis(w.gens, SigBound::sig_degree(9), mord);
  auto oracle = brute_force_sig_labels(w.gens, SigBound::sig_degree(9), mord, 20000);
  REQUIRE(oracle.has_value());
  REQUIRE(b.elements.size() == oracle->elements.size());
  for (std::size_t i = 0; i < b.elements.size(); ++i) CHECK(b.elements[i].poly == oracle->elements[i].poly);
}

TEST_CASE("interreduce") {
  auto b = fib_basis(8);
  std::vector<SigPolynomial<Rational>> raw = b.elements;
  auto again = interreduce(raw, b.syzygies, b.bound, fib_mord());
  CHECK(again.elements == b.elements);
  CHECK(again.syzygies == b.syzygies);

  // a scaled copy at a higher signature whose leading monomial reduces away
  raw = {{fib_gens()[0], S("1*e1*1")}, {scale(fib_gens()[0], Rational(2)), S("x*e1*1")}};
  auto r = interreduce(raw, {}, SigBound::sig_degree(5), fib_mord());
  REQUIRE(r.elements.size() == 1);
  CHECK(r.elements[0].poly == fib_gens()[0]);
  CHECK(std::find(r.syzygies.begin(), r.syzygies.end(), S("x*e1*1")) != r.syzygies.end());

  auto s = interreduce(std::vector<SigPolynomial<Rational>>{{fib_gens()[0], S("1*e1*1")}},
                       {S("x*e1*y"), S("xx*e1*yy"), S("y*e1*1")}, SigBound::sig_degree(9), fib_mord());
  CHECK(s.syzygies.size() == 2);
  CHECK(std::find(s.syzygies.begin(), s.syzygies.end(), S("xx*e1*yy")) == s.syzygies.end());
}

TEST_CASE("cover criterion") {
  auto b = fib_basis(8);
  auto bound = SigBound::sig_degree(8);
  auto ld = b.leading_data();
  CHECK(check_cover_criterion(ld, 1, bound, fib_mord()).ok);

  auto cut = ld;
  cut.elements.erase(cut.elements.begin() + 1);
  auto rep = check_cover_criterion(cut, 1, bound, fib_mord());
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.failures.empty());
  bool cites = false;
  for (const auto& f : rep.failures)
    if (f.condition == 3 && f.first == 0 && f.second == 0) cites = true;
  CHECK(cites);

  LeadingData empty;
  CHECK(check_cover_criterion(empty, 1, bound, fib_mord()).failures.at(0).condition == 1);
}

TEST_CASE("cover check does no polynomial arithmetic") {
  for (const auto& pr : shipped()) {
    auto bound = SigBound::sig_degree(7);
    auto ld = compute_sig_basis(pr.gens, bound, pr.module_order()).leading_data();
    const auto before = arithmetic_ops();
    auto rep = check_cover_criterion(ld, pr.gens.size(), bound, pr.module_order());
    CHECK(arithmetic_ops() == before);
    CHECK(rep.ok);
    CHECK(rep.ambiguities_checked + rep.trivial_syzygies_checked > 0);
  }
}

TEST_CASE("sig_verification_test soundness") {
  auto bound = SigBound::sig_degree(8);
  auto good = fib_basis(8);
  auto gens = fib_gens();
  CHECK(sig_verification_test(good, gens, bound, fib_mord()).ok);
  CHECK(sig_verification_test(good, gens, bound, fib_mord(), VerifyMode::probabilistic(1000003)).ok);

  auto perturbed = good;
  perturbed.elements[1].poly = P("xy^2x + y^2x - 3*xy^2 - y^2");
  auto r1 = sig_verification_test(perturbed, gens, bound, fib_mord());
  CHECK_FALSE(r1.ok);
  CHECK(r1.failed_step == 2);
  CHECK_FALSE(sig_verification_test(perturbed, gens, bound, fib_mord(), VerifyMode::probabilistic(1000003)).ok);

  auto swapped = good;
  std::swap(swapped.elements[1].sig, swapped.elements[2].sig);
  CHECK_FALSE(sig_verification_test(swapped, gens, bound, fib_mord()).ok);

  auto deleted = good;
  deleted.elements.erase(deleted.elements.begin() + 1);
  auto r3 = sig_verification_test(deleted, gens, bound, fib_mord());
  CHECK_FALSE(r3.ok);

  auto violated = good;
  // x*e1*1 with LM x*xyx is a multiple of (xyx, e1) in leading data
  violated.elements.insert(violated.elements.begin() + 1, {P("x^2yx"), S("x*e1*1")});
  auto r4 = sig_verification_test(violated, gens, bound, fib_mord());
  CHECK_FALSE(r4.ok);
  CHECK(r4.failed_step == 1);

  CHECK_THROWS_AS(sig_verification_test(good, gens, bound, fib_mord(), VerifyMode::probabilistic(1000003), {1000003}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sig_verification_test(good, gens, bound, fib_mord(), VerifyMode::probabilistic(1000004)),
                  std::invalid_argument);
}

TEST_CASE("verification on shipped examples agrees across modes") {
  for (const auto& pr : shipped()) {
    auto bound = SigBound::sig_degree(7);
    auto b = compute_sig_basis(pr.gens, bound, pr.module_order());
    CHECK(sig_verification_test(b, pr.gens, bound, pr.module_order()).ok);
    CHECK(sig_verification_test(b, pr.gens, bound, pr.module_order(), VerifyMode::probabilistic(2147483629)).ok);
    CHECK(sig_verification_test(b, pr.gens, bound, pr.module_order(), {}, {}, 3).ok);
  }
}

TEST_CASE("verification_test on labeled candidates") {
  auto bound = SigBound::sig_degree(8);
  auto good = fib_basis(8, true);
  CHECK(verification_test(good, fib_gens(), bound, fib_mord()).ok);
  auto scaled = good;
  scaled.labels[1] = module_scale(scaled.labels[1], Rational(2));
  CHECK_FALSE(verification_test(scaled, fib_gens(), bound, fib_mord()).ok);
  SigBasis<Rational> empty;
  empty.strong = true;
  CHECK_FALSE(verification_test(empty, fib_gens(), bound, fib_mord()).ok);
}

TEST_CASE("duplicate generators become syzygy signatures") {
  std::vector<Polynomial<Rational>> gens = {fib_gens()[0], fib_gens()[0]};
  ModuleOrder mord(deglex2(), {3, 3});
  auto b = compute_sig_basis(gens, SigBound::sig_degree(6), mord);
  CHECK(std::find(b.syzygies.begin(), b.syzygies.end(), S("1*e2*1", 2)) != b.syzygies.end());
  CHECK(b.elements.size() == 2);
}

TEST_CASE("two elements with one signature fail the precondition") {
  auto good = fib_basis(8);
  auto dup = good;
  dup.elements.insert(dup.elements.begin() + 1, {P("xy^2x + y^2x - 2*xy^2 - y^2 + x"), dup.elements[1].sig});
  auto r = sig_verification_test(dup, fib_gens(), SigBound::sig_degree(8), fib_mord());
  CHECK_FALSE(r.ok);
  CHECK(r.failed_step == 1);
}
