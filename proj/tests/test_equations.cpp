#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "incorp/conformance.hpp"
#include "incorp/equations.hpp"
#include "incorp/generators.hpp"
#include "incorp/simplifier.hpp"

using namespace incorp;
using namespace incorp::equations;

static_assert(Simplifier<EquationSimplifier>);
static_assert(PrintableSimplifier<EquationSimplifier>);

namespace {

Equation eq(const std::string& text) {
  Signature sig;
  return parse_equation(text, sig);
}

std::vector<Equation> set_of(std::initializer_list<const char*> lines) {
  std::vector<Equation> out;
  Signature sig;
  for (const char* line : lines) out.push_back(parse_equation(line, sig));
  return out;
}

// occurs as a subterm, including at the root
bool occurs_in(const GroundTerm& needle, const GroundTerm& t) {
  if (t == needle) return true;
  for (const GroundTerm& a : t.args)
    if (occurs_in(needle, a)) return true;
  return false;
}

}  // namespace

TEST_CASE("equations orient the larger side to the left") {
  Equation e = eq("(= a (f a))");
  CHECK(print_equation(e) == "(= (f a) a)");
  CHECK(e.usable());
}

TEST_CASE("equal-size equations orient by term order and are inert") {
  Equation e = eq("(= a b)");
  CHECK(print_equation(e) == "(= b a)");
  CHECK_FALSE(e.usable());
  // an inert equation rewrites nothing
  EquationSimplifier sim;
  CHECK_FALSE(rewritable(sim, eq("(= (f b) b)"), {e}));
}

TEST_CASE("identical sides collapse to TRUE") {
  CHECK(eq("(= a a)").is_true());
  CHECK(eq("(= (f (g a b)) (f (g a b)))").is_true());
  CHECK(print_equation(Equation::truth()) == "$T");
  CHECK(eq("$T").is_true());
}

TEST_CASE("equation scount sums the symbols of both sides") {
  CHECK(equation_scount(eq("(= (f a) a)")) == 3);
  CHECK(equation_scount(eq("(= (g (f a) b) a)")) == 5);
  CHECK(equation_scount(Equation::truth()) == 0);
}

TEST_CASE("normalize rewrites innermost-leftmost to a fixpoint") {
  std::vector<Equation> rules = set_of({"(= (f a) a)"});
  GroundTerm t{"f", {GroundTerm{"f", {GroundTerm{"a", {}}}}}};  // f(f(a))
  std::int64_t steps = 0;
  GroundTerm nf = normalize(t, rules, &steps);
  CHECK(nf == GroundTerm{"a", {}});
  CHECK(steps == 2);
  CHECK(steps <= term_size(t));
}

TEST_CASE("normalize tries rules in set order, first match wins") {
  std::vector<Equation> rules = set_of({"(= (f a) a)", "(= (f a) b)"});
  GroundTerm t{"f", {GroundTerm{"a", {}}}};
  CHECK(normalize(t, rules) == GroundTerm{"a", {}});
}

TEST_CASE("eq_simplify collapses joinable sides to TRUE") {
  std::vector<Equation> rules = set_of({"(= (f a) a)"});
  CHECK(eq_simplify(eq("(= (h (f a)) (h a))"), rules).is_true());
}

TEST_CASE("eq_simplify reorients when normalization shrinks the lhs") {
  std::vector<Equation> rules = set_of({"(= (g b) b)"});
  // g(b) = f(a): lhs normalizes to b, so the result flips to (= (f a) b)
  Equation e = eq("(= (g b) (f a))");
  CHECK(print_equation(eq_simplify(e, rules)) == "(= (f a) b)");
}

TEST_CASE("eq_simplify returns inert elements unchanged") {
  Equation e = eq("(= (g a b) (f a))");
  std::vector<Equation> rules = set_of({"(= (f b) b)"});
  CHECK(eq_simplify(e, rules) == e);
  CHECK(eq_simplify(Equation::truth(), rules).is_true());
}

TEST_CASE("equation parsing reports malformed input with positions") {
  Signature sig;
  CHECK_THROWS_AS(parse_equation("(= a)", sig), parse_error);
  CHECK_THROWS_AS(parse_equation("(= a b", sig), parse_error);
  CHECK_THROWS_AS(parse_equation("(= a b) c", sig), parse_error);
  CHECK_THROWS_AS(parse_equation("(= (f) a)", sig), parse_error);
  CHECK_THROWS_AS(parse_equation("(= [a] b)", sig), parse_error);
  CHECK_THROWS_AS(parse_equation("a b", sig), parse_error);
}

TEST_CASE("equation parsing enforces arity consistency") {
  Signature sig;
  parse_equation("(= (f a) a)", sig);
  CHECK(sig.at("f") == 1);
  CHECK_THROWS_AS(parse_equation("(= (f a b) a)", sig), parse_error);
  CHECK_THROWS_AS(parse_equation("(= (a b) b)", sig), parse_error);
}

TEST_CASE("equation files round-trip and report line numbers") {
  std::istringstream in("# rules\n(= (f a) a)\n\n(= b a)\n");
  Signature sig;
  std::vector<Equation> set = read_equation_set(in, sig);
  REQUIRE(set.size() == 2);
  std::ostringstream out;
  write_equation_set(out, set);
  CHECK(out.str() == "(= (f a) a)\n(= b a)\n");

  std::istringstream bad("(= (f a) a)\n(= (f a b) b)\n");
  Signature sig2;
  try {
    read_equation_set(bad, sig2);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("eq_eval compares interpretations of both sides") {
  // carrier {0,1}, a -> 0, f = negation
  std::map<std::string, Operation> ops;
  ops.emplace("a", Operation{0, {0}});
  ops.emplace("f", Operation{1, {1, 0}});
  FiniteAlgebra alg(2, std::move(ops));
  CHECK_FALSE(eq_eval(eq("(= (f a) a)"), alg));
  CHECK(eq_eval(eq("(= (f (f a)) a)"), alg));
  CHECK(eq_eval(Equation::truth(), alg));
}

TEST_CASE("eq_eval rejects signature mismatches") {
  std::map<std::string, Operation> ops;
  ops.emplace("a", Operation{0, {0}});
  FiniteAlgebra alg(2, std::move(ops));
  CHECK_THROWS_AS(eq_eval(eq("(= (f a) a)"), alg), signature_error);
  std::map<std::string, Operation> ops2;
  ops2.emplace("a", Operation{0, {0}});
  ops2.emplace("f", Operation{2, {0, 0, 0, 0}});
  FiniteAlgebra alg2(2, std::move(ops2));
  CHECK_THROWS_AS(eq_eval(eq("(= (f a) a)"), alg2), signature_error);
}

TEST_CASE("algebra files round-trip") {
  std::istringstream in("# a two-element algebra\ncarrier 2\nop a 0 1\nop f 1 1 0\nop g 2 0 1 1 0\n");
  FiniteAlgebra alg = parse_algebra(in);
  CHECK(alg.carrier() == 2);
  std::ostringstream out;
  write_algebra(out, alg);
  CHECK(out.str() == "carrier 2\nop a 0 1\nop f 1 1 0\nop g 2 0 1 1 0\n");
  std::istringstream again(out.str());
  FiniteAlgebra alg2 = parse_algebra(again);
  CHECK(alg2.operations().at("g").table == std::vector<std::int64_t>{0, 1, 1, 0});
}

TEST_CASE("algebra parsing validates shape and values") {
  std::istringstream missing("op a 0 0\n");
  CHECK_THROWS_AS(parse_algebra(missing), parse_error);
  std::istringstream short_table("carrier 2\nop f 1 1\n");
  CHECK_THROWS_AS(parse_algebra(short_table), parse_error);
  std::istringstream out_of_range("carrier 2\nop a 0 2\n");
  CHECK_THROWS_AS(parse_algebra(out_of_range), parse_error);
  std::istringstream dup("carrier 2\nop a 0 0\nop a 0 1\n");
  CHECK_THROWS_AS(parse_algebra(dup), parse_error);
}

TEST_CASE("random equations round-trip through print and parse") {
  EquationGenerator gen;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng(mix_seed(201, 0, i));
    Equation e = gen.random_element(rng);
    Signature sig;
    CHECK(parse_equation(print_equation(e), sig) == e);
  }
}

TEST_CASE("normal forms contain no usable lhs and never grow") {
  EquationGenerator gen;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(mix_seed(202, 0, i));
    std::vector<Equation> rules = gen.random_set(rng);
    GroundTerm t = gen.random_term(rng, 4);
    std::int64_t steps = 0;
    GroundTerm nf = normalize(t, rules, &steps);
    CHECK(term_size(nf) <= term_size(t));
    CHECK(steps <= term_size(t));
    for (const Equation& r : rules) {
      if (!r.usable()) continue;
      CHECK_FALSE(occurs_in(r.lhs(), nf));
    }
  }
}

TEST_CASE("eq_simplify preserves truth in models of the simplifier set") {
  EquationSimplifier sim;
  EquationGenerator gen;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(mix_seed(203, 0, i));
    Equation x = gen.random_element(rng);
    std::vector<Equation> y = gen.random_set(rng);
    Equation z = eq_simplify(x, y);
    for (int k = 0; k < 16; ++k) {
      FiniteAlgebra alg = gen.random_interpretation(rng);
      if (!ceval_list(sim, y, alg)) continue;
      REQUIRE(eq_eval(z, alg) == eq_eval(x, alg));
    }
  }
}
