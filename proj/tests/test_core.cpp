#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "linres/core.hpp"

using namespace linres;

TEST_CASE("checked arithmetic rejects overflow") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), OverflowError);
  CHECK_THROWS_AS(checked_neg(INT64_MIN), OverflowError);
  CHECK(checked_abs(-7) == 7);
}

TEST_CASE("linear forms canonicalize") {
  LinearForm f = LinearForm::of({{3, -1}, {1, 2}, {3, 1}});
  CHECK(f.terms == std::vector<std::pair<int, Int>>{{1, 2}});
  CHECK(f.coef(1) == 2);
  CHECK(f.coef(3) == 0);
  CHECK(LinearForm::of({{2, 5}, {2, -5}}).empty());
  CHECK_THROWS_AS(LinearForm::of({{0, 1}}), DomainError);

  LinearForm g = LinearForm::of({{1, 2}, {2, -3}});
  CHECK(g.max_abs_coef() == 3);
  CHECK(g.max_var() == 2);
  CHECK(g.unary_size() == 5);
  CHECK(g.positive_sum() == 2);
  CHECK(g.negative_sum() == -3);
}

TEST_CASE("equation arithmetic") {
  LinearEquation a = LinearEquation::make({{1, 2}, {3, -1}}, 4);
  LinearEquation b = LinearEquation::make({{1, -2}, {2, 1}}, 1);
  LinearEquation sum = eq_add(a, b);
  CHECK(sum == LinearEquation::make({{2, 1}, {3, -1}}, 5));
  LinearEquation diff = eq_sub(a, b);
  CHECK(diff == LinearEquation::make({{1, 4}, {2, -1}, {3, -1}}, 3));
  CHECK(eq_negate(a) == LinearEquation::make({{1, -2}, {3, 1}}, -4));
  CHECK(eq_scale(a, 3) == LinearEquation::make({{1, 6}, {3, -3}}, 12));
  CHECK(eq_scale(a, 0) == LinearEquation::constant(0));
  CHECK(eq_sub(a, a) == LinearEquation::constant(0));

  CHECK(a.unary_size() == 7);
  CHECK(LinearEquation::unit(5, 1).is_clause_literal());
  CHECK(LinearEquation::unit(5, 0).is_clause_literal());
  CHECK_FALSE(LinearEquation::make({{5, 2}}, 0).is_clause_literal());
  CHECK_FALSE(LinearEquation::make({{5, -1}}, 0).is_clause_literal());
  CHECK_FALSE(LinearEquation::unit(5, 2).is_clause_literal());
  CHECK_FALSE(LinearEquation::constant(0).is_clause_literal());
}

TEST_CASE("disjunctions are duplicate-free sets with stable order") {
  Disjunction d;
  CHECK(d.insert(LinearEquation::unit(2, 1)));
  CHECK(d.insert(LinearEquation::unit(1, 0)));
  CHECK_FALSE(d.insert(LinearEquation::unit(2, 1)));
  CHECK(d.count() == 2);
  CHECK(d.eqs[0] == LinearEquation::unit(2, 1));  // insertion order kept

  Disjunction e({LinearEquation::unit(1, 0), LinearEquation::unit(2, 1)});
  CHECK(d == e);  // set semantics
  CHECK(d.same_set(e));
  Disjunction f = e.without_index(0);
  CHECK(f.count() == 1);
  CHECK(f.subset_of(e));
  CHECK_FALSE(e.subset_of(f));
  CHECK(d.union_with(f) == d);
  CHECK(d.unary_size() == 3);
  CHECK(d.max_var() == 2);
}

TEST_CASE("evaluation") {
  // x1 + 2·x2 = 3 under x1=1, x2=1
  LinearEquation e = LinearEquation::make({{1, 1}, {2, 2}}, 3);
  CHECK(eval(e, Assignment::from_mask(0b11, 2)));
  CHECK_FALSE(eval(e, Assignment::from_mask(0b01, 2)));
  Disjunction d({e, LinearEquation::unit(1, 0)});
  CHECK(eval(d, Assignment::from_mask(0b10, 2)));   // x1=0 satisfies the unit
  CHECK_FALSE(eval(d, Assignment::from_mask(0b01, 2)));
  CHECK_FALSE(eval(Disjunction{}, Assignment::from_mask(0, 2)));
  CHECK_THROWS_AS(eval(LinearEquation::unit(7, 1), Assignment::from_mask(0, 2)), DomainError);
}

TEST_CASE("attainable values match brute force") {
  std::mt19937_64 rng(20260815);
  std::uniform_int_distribution<int> nvars(0, 5), coef(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = nvars(rng);
    std::vector<std::pair<int, Int>> terms;
    for (int v = 1; v <= n; ++v) {
      int c = coef(rng);
      if (c != 0) terms.emplace_back(v, c);
    }
    LinearForm f = LinearForm::of(terms);
    std::set<Int> brute;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
      brute.insert(f.eval_bits(Assignment::from_mask(mask, n).bits));
    auto fast = attainable_values(f);
    CHECK(std::vector<Int>(brute.begin(), brute.end()) == fast);
  }
}

TEST_CASE("semantic implication finds countermodels") {
  // x1=1 ∨ x2=1 and x1=0 together imply x2=1
  std::vector<Disjunction> prem;
  prem.push_back(Disjunction({LinearEquation::unit(1, 1), LinearEquation::unit(2, 1)}));
  prem.push_back(Disjunction::single(LinearEquation::unit(1, 0)));
  auto r = semantically_implies(prem, Disjunction::single(LinearEquation::unit(2, 1)), 2);
  CHECK(r.implied);

  auto r2 = semantically_implies(prem, Disjunction::single(LinearEquation::unit(2, 0)), 2);
  CHECK_FALSE(r2.implied);
  REQUIRE(r2.countermodel.has_value());
  for (auto& p : prem) CHECK(eval(p, *r2.countermodel));
  CHECK_FALSE(eval(Disjunction::single(LinearEquation::unit(2, 0)), *r2.countermodel));

  // empty premise set: target must be valid
  auto r3 = semantically_implies({}, Disjunction({LinearEquation::unit(1, 0), LinearEquation::unit(1, 1)}), 1);
  CHECK(r3.implied);
  CHECK_THROWS_AS(semantically_implies({}, Disjunction{}, 30, 24), TooManyVariables);
}

TEST_CASE("clause translation") {
  Clause c{{1, -2, 3}};
  Disjunction d = translate_clause(c);
  CHECK(d == Disjunction({LinearEquation::unit(1, 1), LinearEquation::unit(2, 0),
                          LinearEquation::unit(3, 1)}));
  // translation preserves truth on every assignment
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    Assignment a = Assignment::from_mask(mask, 3);
    CHECK(eval(c, a) == eval(d, a));
  }
  CHECK_THROWS_AS(translate_clause(Clause{{0}}), DomainError);
}

TEST_CASE("DIMACS parsing") {
  std::istringstream in("c a comment\np cnf 3 2\n1 -2 0\n2 3 0\n");
  Cnf f = parse_dimacs(in);
  CHECK(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0].lits == std::vector<int>{1, -2});
  CHECK(f.clauses[1].lits == std::vector<int>{2, 3});

  std::istringstream bad1("p cnf 2 1\n1 3 0\n");
  CHECK_THROWS_AS(parse_dimacs(bad1), ParseError);
  std::istringstream bad2("1 2 0\n");
  CHECK_THROWS_AS(parse_dimacs(bad2), ParseError);
  std::istringstream bad3("p cnf 2 2\n1 0\n");
  CHECK_THROWS_AS(parse_dimacs(bad3), ParseError);
}

TEST_CASE("equation text round-trips") {
  CHECK(to_string(LinearEquation::make({{1, 2}, {3, -1}}, 4)) == "1:2 3:-1 = 4");
  CHECK(to_string(LinearEquation::constant(5)) == "= 5");
  CHECK(parse_equation("1:2 3:-1 = 4") == LinearEquation::make({{1, 2}, {3, -1}}, 4));
  CHECK(parse_equation("= -3") == LinearEquation::constant(-3));
  CHECK(parse_equation("2:1 1:1 = 0") == LinearEquation::make({{1, 1}, {2, 1}}, 0));
  CHECK_THROWS_AS(parse_equation("1:2 4"), ParseError);
  CHECK_THROWS_AS(parse_equation("0:1 = 0"), ParseError);
  CHECK_THROWS_AS(parse_equation("1:x = 0"), ParseError);
  CHECK_THROWS_AS(parse_equation("= 1 2"), ParseError);

  Disjunction d({LinearEquation::unit(2, 1), LinearEquation::make({{1, 1}, {2, -2}}, 0)});
  CHECK(to_string(d) == "2:1 = 1 | 1:1 2:-2 = 0");
  CHECK(parse_disjunction(to_string(d)).eqs == d.eqs);
  CHECK(to_string(Disjunction{}) == "FALSE");
  CHECK(parse_disjunction("FALSE").empty());
  CHECK_THROWS_AS(parse_disjunction(""), ParseError);
  CHECK_THROWS_AS(parse_disjunction("1:1 = 0 |"), ParseError);

  // parse is the left inverse of print on random canonical data
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 4), nv(1, 6), cf(-9, 9), rv(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    Disjunction r;
    int k = len(rng);
    for (int i = 0; i < k; ++i) {
      std::vector<std::pair<int, Int>> t;
      int terms = len(rng);
      for (int j = 0; j < terms; ++j) t.emplace_back(nv(rng), cf(rng));
      r.insert(LinearEquation::make(t, rv(rng)));
    }
    std::string s = to_string(r);
    CHECK(to_string(parse_disjunction(s)) == s);
  }
}
