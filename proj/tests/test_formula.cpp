#include <random>

#include "doctest.h"
#include "eqlog/formula.hpp"
#include "oracle.hpp"

using namespace eqlog;

TEST_CASE("parsing desugars negation and verum") {
  FormulaPtr f = parse("~p -> q");
  REQUIRE(f->kind() == Formula::Kind::Implies);
  CHECK(struct_equal(f, Formula::implies(Formula::neg(Formula::atom("p")), Formula::atom("q"))));
  CHECK(struct_equal(parse("T"), Formula::implies(Formula::bot(), Formula::bot())));
  CHECK(struct_equal(parse("top"), parse("T")));
  CHECK(struct_equal(parse("not p"), parse("~p")));
  CHECK(struct_equal(parse("bot"), parse("_|_")));
}

TEST_CASE("precedence and associativity") {
  CHECK(struct_equal(parse("p -> q -> r"),
                     Formula::implies(Formula::atom("p"),
                                      Formula::implies(Formula::atom("q"), Formula::atom("r")))));
  CHECK(struct_equal(parse("p & q | r"),
                     Formula::disj(Formula::conj(Formula::atom("p"), Formula::atom("q")),
                                   Formula::atom("r"))));
  CHECK(struct_equal(parse("p | q & r"),
                     Formula::disj(Formula::atom("p"),
                                   Formula::conj(Formula::atom("q"), Formula::atom("r")))));
  CHECK(struct_equal(parse("~p & q"), parse("(~p) & q")));
  CHECK(struct_equal(parse("p & q & r"), parse("(p & q) & r")));
  CHECK(struct_equal(parse("p | q -> r"), parse("(p | q) -> r")));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse("p -> -> q"), ParseError);
  try {
    parse("p -> -> q");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(parse("(p & q"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("p @ q"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p &"), ParseError);
}

TEST_CASE("atoms are sorted and distinct") {
  Signature s = atoms_of(*parse("~p -> q"));
  CHECK(s.atoms() == std::vector<std::string>{"p", "q"});
  CHECK(atoms_of(*parse("_|_")).empty());
  CHECK(atoms_of(*parse("p | p")).atoms() == std::vector<std::string>{"p"});
  CHECK(atoms_of(*parse("q & p | z")).atoms() == std::vector<std::string>{"p", "q", "z"});
}

TEST_CASE("subformulas lists children before parents") {
  FormulaPtr f = parse("p & q");
  auto subs = subformulas(f);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0]->kind() == Formula::Kind::Atom);
  CHECK(subs[1]->kind() == Formula::Kind::Atom);
  CHECK(struct_equal(subs[2], f));

  CHECK(subformulas(parse("_|_")).size() == 1);
  FormulaPtr g = parse("(p -> q) & ~r");
  CHECK(subformulas(g).size() == g->node_count());
}

TEST_CASE("rendering re-sugars and uses minimal parentheses") {
  CHECK(render(parse("~p -> q")) == "~p -> q");
  CHECK(render(parse("p & q | r")) == "p & q | r");
  CHECK(render(parse("(p | q) & r")) == "(p | q) & r");
  CHECK(render(parse("p -> (q -> r)")) == "p -> q -> r");
  CHECK(render(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(render(parse("~(p & q)")) == "~(p & q)");
  CHECK(render(parse("~~p")) == "~~p");
  CHECK(render(parse("T")) == "T");
  CHECK(render(parse("_|_")) == "_|_");
  CHECK(render(parse("p & (q & r)")) == "p & (q & r)");
}

TEST_CASE("parse after render is the identity on random trees") {
  std::mt19937 rng(123);
  std::vector<std::string> atoms{"p", "q", "r"};
  for (int trial = 0; trial < 500; ++trial) {
    FormulaPtr f = oracle::random_formula(rng, atoms, 13);
    CHECK(struct_equal(parse(render(f)), f));
  }
}
