#include "doctest.h"
#include "linres/builder.hpp"

using namespace linres;

namespace {
LinearEquation eq(const char* s) { return parse_equation(s); }
Disjunction dj(const char* s) { return parse_disjunction(s); }
}  // namespace

TEST_CASE("builder emits checkable lines") {
  ProofBuilder b(3);
  int p0 = b.add_premise(dj("1:1 = 1 | 2:1 = 1"));
  int l0 = b.premise_line(p0);
  CHECK(b.premise_line(p0) == l0);  // cached
  int ax = b.axiom(2);
  CHECK(b.axiom(2) == ax);
  int r = b.res_eq(l0, eq("2:1 = 1"), ax, eq("2:1 = 0"), true);
  CHECK(b.at(r) == dj("1:1 = 1 | 2:1 = 1 | = 1"));
  int s = b.simp_eq(r, eq("= 1"));
  CHECK(b.at(s) == dj("1:1 = 1 | 2:1 = 1"));
  int w = b.weaken(s, eq("3:1 = 0"));
  CHECK(b.at(w) == dj("1:1 = 1 | 2:1 = 1 | 3:1 = 0"));
  CHECK(check_proof(b.proof()).ok());
}

TEST_CASE("builder rejects misuse") {
  ProofBuilder b(2);
  int ax = b.axiom(1);
  CHECK_THROWS_AS(b.axiom(3), std::logic_error);
  CHECK_THROWS_AS(b.res_eq(ax, eq("1:1 = 7"), ax, eq("1:1 = 0"), true), std::logic_error);
  CHECK_THROWS_AS(b.simp_eq(ax, eq("1:1 = 0")), std::logic_error);
  CHECK_THROWS_AS(b.weaken(ax, eq("5:1 = 0")), std::logic_error);
  CHECK_THROWS_AS(b.weaken_to(ax, dj("1:1 = 0")), std::logic_error);  // not a superset
}

TEST_CASE("weaken_to and simp_constants") {
  ProofBuilder b(3);
  int ax = b.axiom(1);
  int w = b.weaken_to(ax, dj("1:1 = 0 | 2:1 = 1 | 1:1 = 1 | 3:2 = 0"));
  CHECK(b.at(w) == dj("1:1 = 0 | 1:1 = 1 | 2:1 = 1 | 3:2 = 0"));
  CHECK(b.weaken_to(w, b.at(w)) == w);  // no-op returns the same line

  int c = b.weaken(w, eq("= 5"));
  c = b.weaken(c, eq("= -2"));
  int s = b.simp_constants(c);
  CHECK(b.at(s) == b.at(w));
  CHECK(check_proof(b.proof()).ok());
}

TEST_CASE("zero line") {
  ProofBuilder b(2);
  int z = b.zero_line();
  CHECK(b.at(z) == dj("= 0"));
  CHECK(b.zero_line() == z);
  CHECK(check_proof(b.proof()).ok());
}

TEST_CASE("flip and scale") {
  ProofBuilder b(4);
  int p = b.premise_line(b.add_premise(dj("1:1 2:1 = 1 | 3:1 = 0")));
  int f = b.flip_eq(p, eq("1:1 2:1 = 1"));
  CHECK(b.at(f) == dj("3:1 = 0 | 1:-1 2:-1 = -1"));
  int g = b.flip_eq(f, eq("1:-1 2:-1 = -1"));
  CHECK(b.at(g) == dj("3:1 = 0 | 1:1 2:1 = 1"));

  int s3 = b.scale_eq(g, eq("1:1 2:1 = 1"), 3);
  CHECK(b.at(s3) == dj("3:1 = 0 | 1:3 2:3 = 3"));
  int s1 = b.scale_eq(g, eq("1:1 2:1 = 1"), 1);
  CHECK(s1 == g);
  int s0 = b.scale_eq(g, eq("1:1 2:1 = 1"), 0);
  CHECK(b.at(s0) == dj("3:1 = 0 | = 0"));
  CHECK(check_proof(b.proof()).ok());
}

TEST_CASE("eliminate_singleton_vs") {
  ProofBuilder b(5);
  // P = A ∨ (z = 2), Q = B ∨ (z = 0) ∨ (z = 1) with z = x1+x2
  int P = b.premise_line(b.add_premise(dj("4:1 = 1 | 1:1 2:1 = 2")));
  int Q = b.premise_line(b.add_premise(dj("5:1 = 0 | 1:1 2:1 = 0 | 1:1 2:1 = 1")));
  int r = b.eliminate_singleton_vs(P, eq("1:1 2:1 = 2"), Q,
                                   {eq("1:1 2:1 = 0"), eq("1:1 2:1 = 1")});
  CHECK(b.at(r) == dj("4:1 = 1 | 5:1 = 0"));
  CHECK(check_proof(b.proof()).ok());

  SUBCASE("designated equation shared with P persists") {
    ProofBuilder c(5);
    int P2 = c.premise_line(c.add_premise(dj("1:1 2:1 = 0 | 1:1 2:1 = 2")));
    int Q2 = c.premise_line(c.add_premise(dj("5:1 = 0 | 1:1 2:1 = 0 | 1:1 2:1 = 1")));
    int r2 = c.eliminate_singleton_vs(P2, eq("1:1 2:1 = 2"), Q2,
                                      {eq("1:1 2:1 = 0"), eq("1:1 2:1 = 1")});
    CHECK(c.at(r2) == dj("1:1 2:1 = 0 | 5:1 = 0"));
    CHECK(check_proof(c.proof()).ok());
  }
  SUBCASE("misuse is rejected") {
    ProofBuilder c(5);
    int P2 = c.premise_line(c.add_premise(dj("1:1 2:1 = 2")));
    int Q2 = c.premise_line(c.add_premise(dj("1:1 2:1 = 0 | 3:1 = 1")));
    CHECK_THROWS_AS(c.eliminate_singleton_vs(P2, eq("1:1 2:1 = 2"), Q2, {eq("3:1 = 1")}),
                    std::logic_error);  // different form
    CHECK_THROWS_AS(c.eliminate_singleton_vs(P2, eq("1:1 2:1 = 2"), Q2, {}), std::logic_error);
    CHECK_THROWS_AS(c.eliminate_singleton_vs(P2, eq("1:1 2:1 = 2"), Q2, {eq("1:1 2:1 = 2")}),
                    std::logic_error);  // same value
  }
}
