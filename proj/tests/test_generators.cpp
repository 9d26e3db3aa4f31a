#include <sstream>

#include "doctest.h"
#include "linres/generators.hpp"
#include "linres/implcomplete.hpp"
#include "linres/proof.hpp"

using namespace linres;

namespace {

bool formula_unsat_brute(const Formula& f) {
  REQUIRE(f.num_vars <= 20);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
    Assignment a = Assignment::from_mask(mask, f.num_vars);
    bool all = true;
    for (const auto& d : f.premises)
      if (!eval(d, a)) {
        all = false;
        break;
      }
    if (all) return false;
  }
  return true;
}

void check_premises_match(const Proof& p, const Formula& f) {
  CHECK(p.num_vars == f.num_vars);
  REQUIRE(p.premises.size() == f.premises.size());
  for (std::size_t i = 0; i < f.premises.size(); ++i)
    CHECK(p.premises[i].same_set(f.premises[i]));
}

void check_refutes(const Proof& p, const Formula& f) {
  check_premises_match(p, f);
  CheckResult r = check_refutation(p);
  INFO(r.detail);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("php formula shape") {
  Formula f = php_formula(4, 3);
  PhpInstance inst = PhpInstance::make(4, 3);
  CHECK(f.num_vars == 12);
  CHECK(f.premises.size() == 22);  // 4 pigeon lines + 3 * C(4,2) hole lines
  CHECK(inst.num_premises() == 22);
  CHECK(inst.var(1, 1) == 1);
  CHECK(inst.var(2, 1) == 4);
  CHECK(inst.var(4, 3) == 12);

  for (int i = 1; i <= 4; ++i) {
    const Disjunction& d = f.premises[inst.pigeon_premise(i)];
    REQUIRE(d.count() == 3);
    for (int j = 1; j <= 3; ++j) CHECK(d.contains(LinearEquation::unit(inst.var(i, j), 1)));
  }
  for (int j = 1; j <= 3; ++j)
    for (int i1 = 1; i1 <= 4; ++i1)
      for (int i2 = i1 + 1; i2 <= 4; ++i2) {
        const Disjunction& d = f.premises[inst.hole_premise(i1, i2, j)];
        REQUIRE(d.count() == 2);
        CHECK(d.contains(LinearEquation::unit(inst.var(i1, j), 0)));
        CHECK(d.contains(LinearEquation::unit(inst.var(i2, j), 0)));
      }

  Formula tiny = php_formula(2, 1);
  CHECK(tiny.num_vars == 2);
  CHECK(tiny.premises.size() == 3);
}

TEST_CASE("php formula is jointly unsatisfiable") {
  CHECK(formula_unsat_brute(php_formula(3, 2)));
  CHECK(formula_unsat_brute(php_formula(2, 1)));
}

TEST_CASE("php refutations check") {
  for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {4, 3}}) {
    CAPTURE(m);
    Proof p = php_refutation(m, n);
    check_refutes(p, php_formula(m, n));
    AuditResult audit = semantic_audit(p);
    CHECK(audit.ok());
  }

  Proof p = php_refutation(4, 3);
  R0ProofResult r0 = r0_classify(p, R0Params{3, 1});
  INFO(r0.reason);
  CHECK(r0.ok);

  CHECK(check_refutation(php_refutation(5, 4)).ok());
}

TEST_CASE("php handles surplus pigeons") {
  Proof p = php_refutation(4, 2);
  check_refutes(p, php_formula(4, 2));
  CHECK(semantic_audit(p).ok());
  CHECK(r0_classify(p, R0Params{3, 1}).ok);
}

TEST_CASE("php rejects bad parameters") {
  CHECK_THROWS_AS(php_formula(1, 1), BadParams);
  CHECK_THROWS_AS(php_formula(3, 3), BadParams);
  CHECK_THROWS_AS(php_formula(2, 0), BadParams);
  CHECK_THROWS_AS(php_refutation(0, 0), BadParams);
}

TEST_CASE("graph builders") {
  Graph c3 = cycle_graph(3);
  CHECK(c3.n == 3);
  CHECK(c3.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

  Graph c5 = cycle_graph(5);
  CHECK(c5.edges.size() == 5);

  Graph circ = circulant_graph(7, {1, 2});
  CHECK(circ.n == 7);
  CHECK(circ.edges.size() == 14);
  std::vector<int> deg(8, 0);
  for (auto [u, v] : circ.edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int v = 1; v <= 7; ++v) CHECK(deg[v] == 4);

  CHECK_THROWS_AS(cycle_graph(2), BadGraph);
  CHECK_THROWS_AS(circulant_graph(5, {0}), BadGraph);
  CHECK_THROWS_AS(circulant_graph(5, {5}), BadGraph);
}

TEST_CASE("graph parse and print round-trip") {
  Graph g = circulant_graph(7, {1, 2});
  std::string text = print_graph(g);
  std::istringstream in(text);
  Graph back = parse_graph(in);
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);

  auto parse = [](const std::string& s) {
    std::istringstream is(s);
    return parse_graph(is);
  };
  Graph commented = parse("# a triangle\ngraph 3 2\n1 2\n\n2 3 # closing\n1 3\n");
  CHECK(commented.edges.size() == 3);

  CHECK_THROWS_AS(parse("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("graph 3\n"), ParseError);
  CHECK_THROWS_AS(parse("graph 3 2\n1\n"), ParseError);
  CHECK_THROWS_AS(parse("graph 3 2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse("graph 3 2\n1 1\n1 2\n2 3\n"), BadGraph);
  CHECK_THROWS_AS(parse("graph 3 2\n1 2\n2 1\n2 3\n1 3\n"), BadGraph);
  CHECK_THROWS_AS(parse("graph 3 2\n1 2\n2 3\n"), BadGraph);   // vertex degrees 1,2,1
  CHECK_THROWS_AS(parse("graph 3 2\n1 4\n2 3\n1 3\n"), BadGraph);
}

TEST_CASE("tseitin instance validation") {
  CHECK_THROWS_AS(TseitinInstance::make(cycle_graph(3), 1), BadParams);

  Graph path;  // not regular
  path.n = 3;
  path.edges = {{1, 2}, {2, 3}};
  CHECK_THROWS_AS(TseitinInstance::make(path, 2), BadGraph);

  Graph two_triangles;  // regular but disconnected
  two_triangles.n = 6;
  two_triangles.edges = {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}};
  CHECK_THROWS_AS(TseitinInstance::make(two_triangles, 2), BadGraph);

  // connected and regular, but n ≢ 1 (mod p)
  CHECK_THROWS_AS(TseitinInstance::make(cycle_graph(4), 2), BadGraph);

  Graph lonely;
  lonely.n = 1;
  CHECK_THROWS_AS(TseitinInstance::make(lonely, 2), BadGraph);
}

TEST_CASE("tseitin formula shape") {
  TseitinInstance inst = TseitinInstance::make(cycle_graph(3), 2);
  CHECK(inst.regularity == 2);
  CHECK(inst.arcs.size() == 6);
  CHECK(inst.num_vars() == 12);
  CHECK(inst.mod_family_size() == 2);  // 2^2 - 2^1
  CHECK(inst.num_premises() == 30);    // 6 + 6 + 12 + 6

  Formula f = tseitin_formula(inst);
  CHECK(f.num_vars == 12);
  REQUIRE(f.premises.size() == 30);

  // at-least-one line for arc (1,2)
  int rank12 = inst.arc_rank(1, 2);
  const Disjunction& al = f.premises[inst.atleast_premise(rank12)];
  REQUIRE(al.count() == 2);
  CHECK(al.contains(LinearEquation::unit(inst.var(1, 2, 0), 1)));
  CHECK(al.contains(LinearEquation::unit(inst.var(1, 2, 1), 1)));

  // at-most-one line for arc (1,2), values 0 and 1
  const Disjunction& am = f.premises[inst.atmost_premise(rank12, 0, 1)];
  REQUIRE(am.count() == 2);
  CHECK(am.contains(LinearEquation::unit(inst.var(1, 2, 0), 0)));
  CHECK(am.contains(LinearEquation::unit(inst.var(1, 2, 1), 0)));

  // opposite-arc link for edge (1,2), residue 1: x_{(1,2),1} = 1 forces
  // x_{(2,1),1} = 1 (since 2 - 1 = 1)
  const Disjunction& op = f.premises[inst.opposite_premise(0, 1, 0)];
  REQUIRE(op.count() == 2);
  CHECK(op.contains(LinearEquation::unit(inst.var(1, 2, 1), 1)));
  CHECK(op.contains(LinearEquation::unit(inst.var(2, 1, 1), 0)));

  // mod family at vertex 1: out-arcs (1,2) and (1,3); tuples with sum ≢ 1
  // mod 2 are (0,0) and (1,1)
  const Disjunction& m0 = f.premises[inst.mod_premise_base(1)];
  REQUIRE(m0.count() == 2);
  CHECK(m0.contains(LinearEquation::unit(inst.var(1, 2, 0), 0)));
  CHECK(m0.contains(LinearEquation::unit(inst.var(1, 3, 0), 0)));
  const Disjunction& m1 = f.premises[inst.mod_premise_base(1) + 1];
  CHECK(m1.contains(LinearEquation::unit(inst.var(1, 2, 1), 0)));
  CHECK(m1.contains(LinearEquation::unit(inst.var(1, 3, 1), 0)));

  CHECK(formula_unsat_brute(f));
}

TEST_CASE("tseitin refutations check") {
  TseitinInstance c3 = TseitinInstance::make(cycle_graph(3), 2);
  Proof p3 = tseitin_refutation(c3);
  check_refutes(p3, tseitin_formula(c3));
  CHECK(semantic_audit(p3).ok());

  TseitinInstance c5 = TseitinInstance::make(cycle_graph(5), 2);
  Proof p5 = tseitin_refutation(c5);
  check_refutes(p5, tseitin_formula(c5));

  TseitinInstance c7 = TseitinInstance::make(cycle_graph(7), 2);
  Proof p7 = tseitin_refutation(c7);
  CHECK(check_refutation(p7).ok());

  // the fragment parameters do not grow with the graph
  R0Measure m3 = r0_measure(p3);
  R0Measure m5 = r0_measure(p5);
  R0Measure m7 = r0_measure(p7);
  CHECK(m3.k == m5.k);
  CHECK(m5.k == m7.k);
  CHECK(m3.c == m5.c);
  CHECK(m5.c == m7.c);
}

TEST_CASE("tseitin refutation on a circulant graph mod 3") {
  TseitinInstance inst = TseitinInstance::make(circulant_graph(7, {1, 2}), 3);
  CHECK(inst.regularity == 4);
  Proof p = tseitin_refutation(inst);
  check_refutes(p, tseitin_formula(inst));
}

TEST_CASE("clique-coloring formula") {
  Formula f = clique_color_formula(3, 2, 1);
  CliqueColorInstance inst = CliqueColorInstance::make(3, 2, 1);
  CHECK(inst.num_vars() == 15);  // 6 edge vars + 6 clique vars + 3 coloring vars
  CHECK(f.num_vars == 15);
  // family sizes: 2, 6, 3, 12, 3, 0, 6
  REQUIRE(f.premises.size() == 32);

  // (i) each clique slot picks a vertex
  CHECK(f.premises[0].count() == 3);
  CHECK(f.premises[0].contains(LinearEquation::unit(inst.q_var(1, 1), 1)));
  // (iv) clique slots l=1,l'=2 on vertices i=1,j=2 force the edge
  const Disjunction& edge = f.premises[2 + 6 + 3];
  REQUIRE(edge.count() == 3);
  CHECK(edge.contains(LinearEquation::unit(inst.q_var(1, 1), 0)));
  CHECK(edge.contains(LinearEquation::unit(inst.q_var(2, 2), 0)));
  CHECK(edge.contains(LinearEquation::unit(inst.p_var(1, 2), 1)));
  // (vii) an edge forbids equal colors
  const Disjunction& last = f.premises.back();
  REQUIRE(last.count() == 3);
  CHECK(last.contains(LinearEquation::unit(inst.p_var(3, 2), 0)));
  CHECK(last.contains(LinearEquation::unit(inst.r_var(1, 3), 0)));
  CHECK(last.contains(LinearEquation::unit(inst.r_var(1, 2), 0)));

  CHECK(formula_unsat_brute(f));

  CHECK_THROWS_AS(clique_color_formula(2, 2, 2), BadParams);
  CHECK_THROWS_AS(clique_color_formula(3, 4, 1), BadParams);
  CHECK_THROWS_AS(clique_color_formula(3, 2, 0), BadParams);
}

TEST_CASE("p_var enumerates ordered pairs compactly") {
  CliqueColorInstance inst = CliqueColorInstance::make(4, 3, 2);
  std::vector<char> seen(4 * 3 + 1, 0);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      int v = inst.p_var(i, j);
      REQUIRE(v >= 1);
      REQUIRE(v <= 12);
      CHECK(!seen[v]);
      seen[v] = 1;
    }
}

TEST_CASE("generators are deterministic") {
  CHECK(print_formula(php_formula(3, 2)) == print_formula(php_formula(3, 2)));
  CHECK(print_proof(php_refutation(3, 2)) == print_proof(php_refutation(3, 2)));

  TseitinInstance a = TseitinInstance::make(cycle_graph(3), 2);
  TseitinInstance b = TseitinInstance::make(cycle_graph(3), 2);
  CHECK(print_proof(tseitin_refutation(a)) == print_proof(tseitin_refutation(b)));

  CHECK(print_formula(clique_color_formula(4, 3, 2)) ==
        print_formula(clique_color_formula(4, 3, 2)));
}
