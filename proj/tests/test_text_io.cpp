#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace ncgb;
using namespace ncgb::test;

namespace {

const char* kFib =
    "# Fibonacci ideal\n"
    "vars x y\n"
    "order deglex x y\n"
    "modorder dopot\n"
    "gens\n"
    "xyx - xy - y\n"
    "end\n"
    "bound sig-degree 8\n";

std::string with_gen(const std::string& g) { return "vars x y\ngens\n" + g + "\nend\n"; }

}  // namespace

TEST_CASE("format and parse polynomials") {
  CHECK(str(P("xyx - xy - y")) == "xyx - xy - y");
  CHECK(str(P("y + xyx - y - xy - y")) == "xyx - xy - y");
  CHECK(str(P("-1/2*x + 3")) == "-1/2*x + 3");
  CHECK(str(P("x*y*y*x")) == "xy^2x");
  CHECK(str(P("0")) == "0");
  CHECK(str(P("2/4*y^3")) == "1/2*y^3");
  CHECK(format_signature(S("xy*e1*1"), xy()) == "xy*e1*1");
  Alphabet long_names({"x1", "x2"});
  MonomialOrder o2(2);
  auto f = parse_polynomial("x1*x2^2 - x2", long_names, o2);
  CHECK(format_polynomial(f, long_names) == "x1*x2^2 - x2");
}

TEST_CASE("polynomial text round trip") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(rng, 5, 4);
    CHECK(P(str(f)) == f);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(P("x + z"), ParseError);
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("7/0*x"), ParseError);
  try {
    P("x + z");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(S("1*e2*1"), ParseError);
  CHECK_THROWS_AS(S("x*y"), ParseError);
}

TEST_CASE("parse_problem") {
  auto p = parse_problem(kFib);
  CHECK(p.gens.size() == 1);
  CHECK(p.gens[0] == P("xyx - xy - y"));
  REQUIRE(p.bound.has_value());
  CHECK(*p.bound == SigBound::sig_degree(8));
  CHECK(p.module_order().generator_degrees() == std::vector<std::int64_t>{3});

  CHECK_THROWS_AS(parse_problem(with_gen("0")), ParseError);
  CHECK_THROWS_AS(parse_problem(with_gen("x - x")), ParseError);
  CHECK_THROWS_AS(parse_problem(with_gen("7/0*x")), ParseError);
  CHECK_THROWS_AS(parse_problem(with_gen("x + w")), ParseError);
  CHECK_THROWS_AS(parse_problem("vars x y\nweights 1 0\ngens\nx\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars x y\nweights 1 -1\ngens\nx\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars x y\ncolour red\ngens\nx\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars x y\ngens\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars x x\ngens\nx\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars x e1\ngens\nx\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars x y\nfield F7\ngens\nx\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars x y\nvars x y\ngens\nx\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars x y\ngens\nend\n"), ParseError);
  try {
    parse_problem("vars x y\ngens\nx + w\nend\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("problem options") {
  auto p = parse_problem("vars a b\nfield Q\norder deglex b a\nweights 1/2 1\nmodorder dotop right\ngens\na, b - 1\nend\n"
                         "bound 1*e2*ab\n");
  CHECK(p.gens.size() == 2);
  CHECK(p.kind == ModuleOrderKind::DegreeOverTermOverPosition);
  CHECK(p.side == TieSide::Right);
  CHECK(p.order.weight(0) == 1);
  CHECK(p.order.weight(1) == 2);
  REQUIRE(p.bound.has_value());
  CHECK_FALSE(p.bound->is_degree());
}

TEST_CASE("basis files round trip") {
  auto pr = parse_problem(kFib);
  auto mord = pr.module_order();
  for (bool strong : {false, true}) {
    EngineOptions o;
    o.strong = strong;
    auto b = compute_sig_basis(pr.gens, *pr.bound, mord, o);
    auto text = format_basis(b, pr.alphabet);
    auto back = parse_basis(text, pr);
    CHECK(back.elements == b.elements);
    CHECK(back.syzygies == b.syzygies);
    CHECK(back.strong == strong);
    if (strong) CHECK(back.labels == b.labels);
    CHECK(format_basis(back, pr.alphabet) == text);
  }
  auto b = compute_sig_basis(pr.gens, SigBound::sig_degree(6), mord);
  CHECK(format_basis(b, pr.alphabet).rfind("sig=1*e1*1 ; poly=xyx - xy - y\n", 0) == 0);
  CHECK_THROWS_AS(parse_basis("sig=1*e1*1 ; poly=xyx - xy - y\n", pr), ParseError);
}

TEST_CASE("shipped problem files load") {
  for (const char* name : {"fib.prob", "cyclic4.prob", "eco3.prob"}) {
    auto p = problem_file(name);
    CHECK_FALSE(p.gens.empty());
    CHECK(p.bound.has_value());
  }
  CHECK_THROWS(problem_file("missing.prob"));
}
