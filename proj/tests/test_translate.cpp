#include <random>
#include <sstream>

#include "doctest.h"
#include "linres/generators.hpp"
#include "linres/rcp.hpp"
#include "linres/res2.hpp"
#include "linres/resolution.hpp"
#include "resolution_oracle.hpp"

using namespace linres;
namespace lt = linres::testing;

namespace {

ResolutionStep input_step(std::vector<int> lits) {
  ResolutionStep st;
  st.kind = ResolutionStep::Kind::Input;
  st.clause.lits = std::move(lits);
  return st;
}

ResolutionStep resolve_step(std::vector<int> lits, int a1, int a2, int pivot) {
  ResolutionStep st;
  st.kind = ResolutionStep::Kind::Resolve;
  st.clause.lits = std::move(lits);
  st.a1 = a1;
  st.a2 = a2;
  st.pivot = pivot;
  return st;
}

ResolutionStep weaken_step(std::vector<int> lits, int a1) {
  ResolutionStep st;
  st.kind = ResolutionStep::Kind::Weaken;
  st.clause.lits = std::move(lits);
  st.a1 = a1;
  return st;
}

}  // namespace

TEST_CASE("resolution trace parse and print round-trip") {
  std::string text =
      "# toy refutation\n"
      "1 1 2 0\n"
      "2 -1 0\n"
      "3 2 0 1 2 1\n"
      "4 -2 0\n"
      "5 0 3 4 2\n";
  std::istringstream in(text);
  ResolutionProof rp = parse_resolution(in);
  CHECK(rp.num_vars == 2);
  REQUIRE(rp.steps.size() == 5);
  CHECK(rp.steps[0].kind == ResolutionStep::Kind::Input);
  CHECK(rp.steps[2].kind == ResolutionStep::Kind::Resolve);
  CHECK(rp.steps[2].a1 == 0);
  CHECK(rp.steps[2].a2 == 1);
  CHECK(rp.steps[2].pivot == 1);
  CHECK(rp.steps[4].clause.lits.empty());
  validate(rp);

  std::string printed = print_resolution(rp);
  std::istringstream again(printed);
  CHECK(print_resolution(parse_resolution(again)) == printed);
}

TEST_CASE("resolution trace weakening records round-trip") {
  std::string text =
      "1 1 0\n"
      "2 1 -2 0 1 w\n";
  std::istringstream in(text);
  ResolutionProof rp = parse_resolution(in);
  REQUIRE(rp.steps.size() == 2);
  CHECK(rp.steps[1].kind == ResolutionStep::Kind::Weaken);
  CHECK(rp.steps[1].a1 == 0);
  validate(rp);
  CHECK(print_resolution(rp) == "1 1 0\n2 1 -2 0 1 w\n");
}

TEST_CASE("resolution parser rejects malformed traces") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_resolution(in), ParseError);
  };
  reject("2 1 0\n");                    // ids must start at 1
  reject("1 1 0\n3 -1 0\n");            // ids must be consecutive
  reject("1 1 2\n");                    // missing 0 terminator
  reject("1 0 1\n");                    // dangling antecedent
  reject("1 1 0\n2 0 1 x 1\n");         // malformed antecedent
  reject("1 1 0\n2 1 -2 0 1 w extra\n");  // trailing tokens
  reject("1 1 0\n2 1 1 0 1 1 1 junk\n");  // trailing tokens after resolution
}

TEST_CASE("resolution validation rejects broken steps") {
  auto bad = [](ResolutionProof rp) {
    CHECK_THROWS_AS(validate(rp), InvalidResolutionStep);
  };
  // forward antecedent
  {
    ResolutionProof rp;
    rp.num_vars = 1;
    rp.steps = {input_step({1}), resolve_step({}, 0, 1, 1)};
    bad(rp);
  }
  // pivot absent from an antecedent
  {
    ResolutionProof rp;
    rp.num_vars = 2;
    rp.steps = {input_step({1}), input_step({2}), resolve_step({}, 0, 1, 1)};
    bad(rp);
  }
  // stated clause is not the resolvent
  {
    ResolutionProof rp;
    rp.num_vars = 2;
    rp.steps = {input_step({1, 2}), input_step({-1}), resolve_step({}, 0, 1, 1)};
    bad(rp);
  }
  // literal out of range
  {
    ResolutionProof rp;
    rp.num_vars = 1;
    rp.steps = {input_step({3})};
    bad(rp);
  }
  // weakening may not drop literals
  {
    ResolutionProof rp;
    rp.num_vars = 2;
    rp.steps = {input_step({1, 2}), weaken_step({1}, 0)};
    bad(rp);
  }
}

TEST_CASE("input-only resolution proofs become premise tables") {
  ResolutionProof rp;
  rp.num_vars = 3;
  rp.steps = {input_step({1, -2}), input_step({3}), input_step({-1, -3})};
  Proof p = res_to_rlin(rp);
  CHECK(p.num_vars == 3);
  REQUIRE(p.premises.size() == 3);
  REQUIRE(p.lines.size() == 3);
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    CHECK(p.lines[i].just.rule == Rule::Premise);
    CHECK(p.lines[i].content == translate_clause(rp.steps[i].clause));
  }
  CHECK(check_proof(p).ok());
}

TEST_CASE("unit clash translates to a refutation") {
  ResolutionProof rp;
  rp.num_vars = 1;
  rp.steps = {input_step({1}), input_step({-1}), resolve_step({}, 0, 1, 1)};
  validate(rp);
  Proof p = res_to_rlin(rp);
  CHECK(check_refutation(p).ok());
  CHECK(p.lines.back().content.empty());
  CHECK(semantic_audit(p).ok());
}

TEST_CASE("resolution clash orientation does not matter") {
  // negative occurrence listed first in the step record
  ResolutionProof rp;
  rp.num_vars = 2;
  rp.steps = {input_step({-1, 2}), input_step({1}), resolve_step({2}, 0, 1, 1)};
  validate(rp);
  Proof p = res_to_rlin(rp);
  CHECK(check_proof(p).ok());
  CHECK(p.lines.back().content == translate_clause(rp.steps.back().clause));
}

TEST_CASE("tautological antecedents keep their leftover pivot literal") {
  // (x1 v x2) resolved with (-x2 v x2 v x3) on pivot 2 keeps x2 from the
  // second antecedent.
  ResolutionProof rp;
  rp.num_vars = 3;
  rp.steps = {input_step({1, 2}), input_step({-2, 2, 3}),
              resolve_step({1, 2, 3}, 0, 1, 2)};
  validate(rp);
  Proof p = res_to_rlin(rp);
  CHECK(check_proof(p).ok());
  CHECK(p.lines.back().content == translate_clause(rp.steps.back().clause));
}

TEST_CASE("clause weakening adds translated literals in stated order") {
  ResolutionProof rp;
  rp.num_vars = 3;
  rp.steps = {input_step({1}), weaken_step({1, -2, 3}, 0), weaken_step({3, 1, -2}, 1)};
  validate(rp);
  Proof p = res_to_rlin(rp);
  CHECK(check_proof(p).ok());
  // one premise line, two weakening lines; the no-op weakening adds nothing
  CHECK(p.lines.size() == 3);
  CHECK(p.lines.back().content == translate_clause(rp.steps[1].clause));
}

TEST_CASE("pigeonhole refutation from the exhaustive prover") {
  Cnf cnf = lt::php_cnf(3, 2);
  CHECK_FALSE(lt::cnf_satisfiable(cnf));
  auto rp = lt::saturate(cnf);
  REQUIRE(rp.has_value());
  validate(*rp);
  CHECK(rp->steps.back().clause.lits.empty());

  Proof p = res_to_rlin(*rp);
  Formula f = php_formula(3, 2);
  REQUIRE(p.premises.size() >= f.premises.size());
  for (std::size_t i = 0; i < f.premises.size(); ++i)
    CHECK(p.premises[i] == f.premises[i]);
  CHECK(check_refutation(p).ok());
  CHECK(semantic_audit(p).ok());
}

TEST_CASE("random unsatisfiable 3-CNFs translate and check") {
  std::mt19937 rng(20240817);
  for (int round = 0; round < 6; ++round) {
    Cnf cnf = lt::random_unsat_3cnf(rng);
    auto rp = lt::saturate(cnf);
    REQUIRE(rp.has_value());
    validate(*rp);
    Proof p = res_to_rlin(*rp);
    CHECK(p.premises.size() == cnf.clauses.size());
    CHECK(check_refutation(p).ok());
  }
}

// ---- Res(2) ----

namespace {

Res2Step r2_input(std::vector<std::vector<int>> terms) {
  Res2Step st;
  st.rule = Res2Rule::Input;
  for (auto& t : terms) st.stated.terms.push_back(make_term(std::move(t)));
  return st;
}

Res2Step r2_cut(int a1, int term_index, int a2, std::vector<std::vector<int>> terms) {
  Res2Step st;
  st.rule = Res2Rule::Cut;
  st.a1 = a1;
  st.term_index = term_index;
  st.a2 = a2;
  for (auto& t : terms) st.stated.terms.push_back(make_term(std::move(t)));
  return st;
}

Res2Step r2_and(int a1, int l1, int a2, int l2, std::vector<std::vector<int>> terms) {
  Res2Step st;
  st.rule = Res2Rule::AndIntro;
  st.a1 = a1;
  st.l1 = l1;
  st.a2 = a2;
  st.l2 = l2;
  for (auto& t : terms) st.stated.terms.push_back(make_term(std::move(t)));
  return st;
}

Res2Step r2_weaken(int a1, std::vector<int> added, std::vector<std::vector<int>> terms) {
  Res2Step st;
  st.rule = Res2Rule::Weaken;
  st.a1 = a1;
  st.added = make_term(std::move(added));
  for (auto& t : terms) st.stated.terms.push_back(make_term(std::move(t)));
  return st;
}

}  // namespace

TEST_CASE("term normalization and translation") {
  CHECK(make_term({2, 1}).lits == std::vector<int>{1, 2});
  CHECK(make_term({-3, 1}).lits == std::vector<int>{1, -3});
  CHECK(make_term({2, 2}).lits == std::vector<int>{2});
  CHECK_THROWS_AS(make_term({}), InvalidRes2Step);
  CHECK_THROWS_AS(make_term({1, -1}), InvalidRes2Step);
  CHECK_THROWS_AS(make_term({1, 2, 3}), InvalidRes2Step);
  CHECK_THROWS_AS(make_term({0}), InvalidRes2Step);

  CHECK(translate_term(make_term({1})) == LinearEquation::unit(1, 1));
  CHECK(translate_term(make_term({-1})) == LinearEquation::make({{1, -1}}, 0));
  CHECK(translate_term(make_term({1, 2})) == LinearEquation::make({{1, 1}, {2, 1}}, 2));
  CHECK(translate_term(make_term({1, -2})) == LinearEquation::make({{1, 1}, {2, -1}}, 1));
  CHECK(translate_term(make_term({-1, -2})) == LinearEquation::make({{1, -1}, {2, -1}}, 0));
}

TEST_CASE("term translation is injective") {
  std::vector<Term> all;
  for (int a = -3; a <= 3; ++a) {
    if (a == 0) continue;
    all.push_back(make_term({a}));
    for (int b = -3; b <= 3; ++b) {
      if (b == 0 || std::abs(a) == std::abs(b)) continue;
      all.push_back(make_term({a, b}));
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) continue;
      CHECK(translate_term(all[i]) != translate_term(all[j]));
    }
}

TEST_CASE("res2 conjunction introduction translates to one resolution step") {
  Res2Proof rp;
  rp.num_vars = 3;
  rp.steps = {r2_input({{1}, {3}}), r2_input({{2}}), r2_and(0, 1, 1, 2, {{3}, {1, 2}})};
  validate(rp);
  Proof p = res2_to_rlin(rp);
  CHECK(check_proof(p).ok());
  CHECK(p.lines.back().content == translate_dnf(rp.steps.back().stated));
  CHECK(semantic_audit(p).ok());
}

TEST_CASE("res2 cut on a single-literal term") {
  Res2Proof rp;
  rp.num_vars = 3;
  rp.steps = {r2_input({{1}, {3}}), r2_input({{-1}, {2}}), r2_cut(0, 0, 1, {{3}, {2}})};
  validate(rp);
  Proof p = res2_to_rlin(rp);
  CHECK(check_proof(p).ok());
  CHECK(p.lines.back().content == translate_dnf(rp.steps.back().stated));
  CHECK(semantic_audit(p).ok());
}

TEST_CASE("res2 cut on a pair refutes the clashing inputs") {
  Res2Proof rp;
  rp.num_vars = 2;
  rp.steps = {r2_input({{1, 2}}), r2_input({{-1}, {-2}}), r2_cut(0, 0, 1, {})};
  validate(rp);
  Proof p = res2_to_rlin(rp);
  CHECK(check_refutation(p).ok());
  CHECK(semantic_audit(p).ok());
}

TEST_CASE("res2 cut keeps side terms from both antecedents") {
  Res2Proof rp;
  rp.num_vars = 5;
  rp.steps = {r2_input({{1, -2}, {3}}), r2_input({{-1}, {2}, {4, 5}}),
              r2_cut(0, 0, 1, {{3}, {4, 5}})};
  validate(rp);
  Proof p = res2_to_rlin(rp);
  CHECK(check_proof(p).ok());
  CHECK(p.lines.back().content == translate_dnf(rp.steps.back().stated));
  CHECK(semantic_audit(p).ok());
}

TEST_CASE("res2 weakening adds a term or aliases a duplicate") {
  Res2Proof rp;
  rp.num_vars = 2;
  rp.steps = {r2_input({{1}}), r2_weaken(0, {-2}, {{1}, {-2}}), r2_weaken(1, {1}, {{1}, {-2}})};
  validate(rp);
  Proof p = res2_to_rlin(rp);
  CHECK(check_proof(p).ok());
  CHECK(p.lines.size() == 2);  // the duplicate weakening is a no-op
  CHECK(p.lines.back().content == translate_dnf(rp.steps.back().stated));
}

TEST_CASE("res2 refutation mixing every rule") {
  Res2Proof rp;
  rp.num_vars = 2;
  rp.steps = {r2_input({{1}}), r2_input({{2}}), r2_input({{-1}, {-2}}),
              r2_and(0, 1, 1, 2, {{1, 2}}), r2_cut(3, 0, 2, {})};
  validate(rp);
  Proof p = res2_to_rlin(rp);
  CHECK(check_refutation(p).ok());
  CHECK(semantic_audit(p).ok());
}

TEST_CASE("res2 validation rejects broken steps") {
  auto bad = [](Res2Proof rp) { CHECK_THROWS_AS(validate(rp), InvalidRes2Step); };
  // cut without the negated unit term
  {
    Res2Proof rp;
    rp.num_vars = 2;
    rp.steps = {r2_input({{1}}), r2_input({{2}}), r2_cut(0, 0, 1, {{2}})};
    bad(rp);
  }
  // cut with a wrong stated line
  {
    Res2Proof rp;
    rp.num_vars = 2;
    rp.steps = {r2_input({{1}, {2}}), r2_input({{-1}}), r2_cut(0, 0, 1, {})};
    bad(rp);
  }
  // conjunction literals on the same variable
  {
    Res2Proof rp;
    rp.num_vars = 1;
    rp.steps = {r2_input({{1}}), r2_input({{1}}), r2_and(0, 1, 1, 1, {{1}})};
    bad(rp);
  }
  // conjunction needs unit terms
  {
    Res2Proof rp;
    rp.num_vars = 3;
    rp.steps = {r2_input({{1, 3}}), r2_input({{2}}), r2_and(0, 1, 1, 2, {{1, 2}, {1, 3}})};
    bad(rp);
  }
  // weakening must state the union
  {
    Res2Proof rp;
    rp.num_vars = 2;
    rp.steps = {r2_input({{1}}), r2_weaken(0, {2}, {{2}})};
    bad(rp);
  }
  // forward antecedent
  {
    Res2Proof rp;
    rp.num_vars = 1;
    rp.steps = {r2_weaken(0, {1}, {{1}})};
    bad(rp);
  }
  // literal out of range
  {
    Res2Proof rp;
    rp.num_vars = 1;
    rp.steps = {r2_input({{2}})};
    bad(rp);
  }
}

TEST_CASE("res2 parse and print round-trip") {
  std::string text =
      "res2 1\n"
      "# clashing pair\n"
      "input 1 1&2\n"
      "input 2 -1;-2\n"
      "line 3 cut 1 1 2 : FALSE\n";
  std::istringstream in(text);
  Res2Proof rp = parse_res2(in);
  CHECK(rp.num_vars == 2);
  REQUIRE(rp.steps.size() == 3);
  CHECK(rp.steps[2].rule == Res2Rule::Cut);
  CHECK(rp.steps[2].a1 == 0);
  CHECK(rp.steps[2].term_index == 0);
  CHECK(rp.steps[2].a2 == 1);
  CHECK(rp.steps[2].stated.terms.empty());
  validate(rp);
  CHECK(check_refutation(res2_to_rlin(rp)).ok());

  std::string printed = print_res2(rp);
  std::istringstream again(printed);
  CHECK(print_res2(parse_res2(again)) == printed);
}

TEST_CASE("res2 parser round-trips and and weaken records") {
  std::string text =
      "res2 1\n"
      "input 1 1\n"
      "input 2 2\n"
      "line 3 and 1 1 2 2 : 1&2\n"
      "line 4 weaken 3 -3 : 1&2;-3\n";
  std::istringstream in(text);
  Res2Proof rp = parse_res2(in);
  validate(rp);
  CHECK(rp.num_vars == 3);
  CHECK(print_res2(rp) == text);
}

TEST_CASE("res2 parser rejects malformed files") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_res2(in), ParseError);
  };
  reject("");                                      // missing header
  reject("res2 2\ninput 1 1\n");                   // bad version
  reject("res2 1\ninput 2 1\n");                   // ids start at 1
  reject("res2 1\ninput 1 1\ninput 3 2\n");        // ids consecutive
  reject("res2 1\ninput 1 1&-1\n");                // clashing term
  reject("res2 1\ninput 1 1&2&3\n");               // oversized term
  reject("res2 1\ninput 1 \n");                    // missing disjunction
  reject("res2 1\ninput 1 1;\n");                  // dangling separator
  reject("res2 1\ninput 1 1\nline 2 frob 1 : 1\n");  // unknown rule
  reject("res2 1\ninput 1 1\nline 2 weaken 1 2 1;2\n");  // missing colon
  reject("res2 1\ninput 1 1\nline 2 weaken 1 2 : 1;2 junk\n");  // trailing tokens
}

namespace {

Inequality iq(std::vector<std::pair<int, Int>> terms, Int rhs) {
  return {LinearForm::of(std::move(terms)), rhs};
}

RcpStep rcp_input(std::vector<Inequality> line) {
  RcpStep st;
  st.rule = RcpRule::Input;
  st.stated = std::move(line);
  return st;
}

RcpStep rcp_axiom(RcpRule rule, int var) {
  RcpStep st;
  st.rule = rule;
  st.var = var;
  st.stated.push_back(rule == RcpRule::VarLower ? iq({{var, 1}}, 0) : iq({{var, -1}}, -1));
  return st;
}

RcpStep rcp_split(Inequality q) {
  RcpStep st;
  st.rule = RcpRule::Split;
  st.stated = {q, Inequality{form_scale(q.lhs, -1), 1 - q.rhs}};
  if (st.stated[0] == st.stated[1]) st.stated.pop_back();
  st.ineq = std::move(q);
  return st;
}

RcpStep rcp_add(int a1, int i1, int a2, int i2, std::vector<Inequality> stated) {
  RcpStep st;
  st.rule = RcpRule::Add;
  st.a1 = a1;
  st.i1 = i1;
  st.a2 = a2;
  st.i2 = i2;
  st.stated = std::move(stated);
  return st;
}

RcpStep rcp_weaken(int a1, Inequality q, std::vector<Inequality> stated) {
  RcpStep st;
  st.rule = RcpRule::Weaken;
  st.a1 = a1;
  st.ineq = std::move(q);
  st.stated = std::move(stated);
  return st;
}

RcpStep rcp_drop(int a1, int i1, std::vector<Inequality> stated) {
  RcpStep st;
  st.rule = RcpRule::DropFalse;
  st.a1 = a1;
  st.i1 = i1;
  st.stated = std::move(stated);
  return st;
}

RcpStep rcp_scale(RcpRule rule, int a1, int i1, Int c, std::vector<Inequality> stated) {
  RcpStep st;
  st.rule = rule;
  st.a1 = a1;
  st.i1 = i1;
  st.c = c;
  st.stated = std::move(stated);
  return st;
}

Disjunction rcp_line_image(const std::vector<Inequality>& line) {
  Disjunction d;
  for (const auto& q : line)
    for (const auto& e : ineq_to_disjunction(q).eqs) d.insert(e);
  return d;
}

// The translated proof must reproduce every input as a premise, check, and
// end in a line whose content is exactly the image of the final stated line.
void check_rcp_translation(const RcpProof& rp, bool expect_refutation = false) {
  validate(rp);
  Proof p = rcp_to_rlin(rp);
  std::size_t input_at = 0;
  for (const auto& st : rp.steps) {
    if (st.rule != RcpRule::Input) continue;
    REQUIRE(input_at < p.premises.size());
    CHECK(p.premises[input_at] == rcp_line_image(st.stated));
    ++input_at;
  }
  CHECK(input_at == p.premises.size());
  REQUIRE(!p.lines.empty());
  CHECK(p.lines.back().content == rcp_line_image(rp.steps.back().stated));
  if (expect_refutation)
    CHECK(check_refutation(p).ok());
  else
    CHECK(check_proof(p).ok());
  if (p.num_vars <= 10) CHECK(semantic_audit(p).ok());
}

}  // namespace

TEST_CASE("inequality images list every value from the threshold up") {
  auto image = [](const Inequality& q) { return to_string(ineq_to_disjunction(q)); };
  CHECK(image(iq({{1, 1}}, 1)) == "1:1 = 1");
  CHECK(image(iq({{1, 1}}, 0)) == "1:1 = 0 | 1:1 = 1");
  CHECK(image(iq({{1, -1}}, 0)) == "1:-1 = 0");
  CHECK(image(iq({{1, -1}}, -1)) == "1:-1 = -1 | 1:-1 = 0");
  CHECK(image(iq({{1, 2}, {2, 1}}, 2)) == "1:2 2:1 = 2 | 1:2 2:1 = 3");
  CHECK(image(iq({{1, 1}, {2, -1}}, -1)) ==
        "1:1 2:-1 = -1 | 1:1 2:-1 = 0 | 1:1 2:-1 = 1");
  CHECK(image(iq({{1, 1}}, 5)) == "1:1 = 5");  // hopeless threshold keeps one disjunct
  CHECK(image(iq({}, 1)) == "= 1");
  CHECK(image(iq({}, 0)) == "= 0");
  CHECK(image(iq({}, -3)) == "= 0");
}

TEST_CASE("inequality images agree with the inequality on every assignment") {
  std::mt19937 rng(20240818);
  for (int round = 0; round < 100; ++round) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, Int>> terms;
    for (int v = 1; v <= n; ++v) {
      Int c = static_cast<Int>(rng() % 7) - 3;
      if (c != 0) terms.emplace_back(v, c);
    }
    Inequality q = iq(std::move(terms), static_cast<Int>(rng() % 13) - 6);
    Disjunction d = ineq_to_disjunction(q);
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      Assignment a = Assignment::from_mask(mask, n);
      bool holds = q.lhs.eval_bits(a.bits) >= q.rhs;
      CHECK(holds == eval(d, a));
    }
  }
}

TEST_CASE("rcp validation accepts each rule and rejects broken steps") {
  RcpProof rp;
  rp.num_vars = 2;
  rp.steps = {
      rcp_input({iq({{1, 1}, {2, 1}}, 1)}),
      rcp_axiom(RcpRule::VarLower, 1),
      rcp_axiom(RcpRule::VarUpper, 2),
      rcp_split(iq({{1, 2}, {2, -1}}, 1)),
      rcp_add(0, 0, 2, 0, {iq({{1, 1}}, 0)}),
      rcp_weaken(4, iq({{2, 1}}, 2), {iq({{1, 1}}, 0), iq({{2, 1}}, 2)}),
      rcp_scale(RcpRule::Multiply, 0, 0, 3, {iq({{1, 3}, {2, 3}}, 3)}),
      rcp_scale(RcpRule::Divide, 6, 0, 3, {iq({{1, 1}, {2, 1}}, 1)}),
  };
  validate(rp);

  auto rejects = [&](RcpStep bad) {
    RcpProof copy = rp;
    copy.steps.push_back(std::move(bad));
    CHECK_THROWS_AS(validate(copy), InvalidRcpStep);
  };
  rejects(rcp_axiom(RcpRule::VarLower, 3));                // unknown variable
  rejects(rcp_add(0, 0, 2, 0, {iq({{1, 1}}, 1)}));         // wrong stated line
  rejects(rcp_add(0, 1, 2, 0, {iq({{1, 1}}, 0)}));         // index out of range
  rejects(rcp_add(9, 0, 2, 0, {iq({{1, 1}}, 0)}));         // forward antecedent
  rejects(rcp_drop(0, 0, {}));                                           // not the 0 >= 1 line
  rejects(rcp_scale(RcpRule::Multiply, 0, 0, -2, {iq({{1, -2}, {2, -2}}, -2)}));
  rejects(rcp_scale(RcpRule::Divide, 0, 0, 2, {iq({{1, 1}}, 1)}));       // indivisible coefficient
  RcpStep messy = rcp_input({iq({{1, 1}}, 0)});
  messy.stated[0].lhs.terms.emplace_back(1, 2);                          // non-canonical form
  rejects(messy);
}

TEST_CASE("rcp axioms translate to their images") {
  for (int var : {1, 3}) {
    RcpProof rp;
    rp.num_vars = 3;
    rp.steps = {rcp_axiom(RcpRule::VarLower, var)};
    check_rcp_translation(rp);
    rp.steps = {rcp_axiom(RcpRule::VarUpper, var)};
    check_rcp_translation(rp);
  }
}

TEST_CASE("rcp split covers both branch images") {
  for (Inequality q : {iq({{1, 1}, {2, 1}}, 1), iq({{1, 2}, {2, -1}}, 1), iq({{1, -2}}, -1),
                       iq({}, 1), iq({}, 0)}) {
    RcpProof rp;
    rp.num_vars = 2;
    rp.steps = {rcp_split(q)};
    check_rcp_translation(rp);
  }
}

TEST_CASE("rcp addition refutes a clashing unit pair") {
  RcpProof rp;
  rp.num_vars = 1;
  rp.steps = {
      rcp_input({iq({{1, 1}}, 1)}),
      rcp_input({iq({{1, -1}}, 0)}),
      rcp_add(0, 0, 1, 0, {iq({}, 1)}),
      rcp_drop(2, 0, {}),
  };
  check_rcp_translation(rp, true);
}

TEST_CASE("rcp addition chains through a covering constraint") {
  RcpProof rp;
  rp.num_vars = 2;
  rp.steps = {
      rcp_input({iq({{1, 1}, {2, 1}}, 1)}),
      rcp_input({iq({{1, -1}}, 0)}),
      rcp_input({iq({{2, -1}}, 0)}),
      rcp_add(0, 0, 1, 0, {iq({{2, 1}}, 1)}),
      rcp_add(3, 0, 2, 0, {iq({}, 1)}),
      rcp_drop(4, 0, {}),
  };
  check_rcp_translation(rp, true);
}

TEST_CASE("rcp addition discards sums past the reachable range") {
  RcpProof rp;
  rp.num_vars = 2;
  rp.steps = {
      rcp_input({iq({{1, 2}, {2, -1}}, 0)}),
      rcp_input({iq({{1, -1}}, 0)}),
      rcp_add(0, 0, 1, 0, {iq({{1, 1}, {2, -1}}, 0)}),
  };
  check_rcp_translation(rp);
}

TEST_CASE("rcp addition of opposite forms meets in constants") {
  RcpProof rp;
  rp.num_vars = 2;
  rp.steps = {
      rcp_input({iq({{1, 1}, {2, -1}}, -1)}),
      rcp_input({iq({{1, -1}, {2, 1}}, -1)}),
      rcp_add(0, 0, 1, 0, {iq({}, -2)}),
  };
  check_rcp_translation(rp);
}

TEST_CASE("rcp weakening and multiplication keep side inequalities") {
  RcpProof rp;
  rp.num_vars = 2;
  rp.steps = {
      rcp_input({iq({{1, 1}}, 1)}),
      rcp_weaken(0, iq({{2, 1}}, 0), {iq({{1, 1}}, 1), iq({{2, 1}}, 0)}),
      rcp_scale(RcpRule::Multiply, 1, 0, 2, {iq({{1, 2}}, 2), iq({{2, 1}}, 0)}),
      rcp_scale(RcpRule::Multiply, 2, 1, 0, {iq({{1, 2}}, 2), iq({}, 0)}),
  };
  check_rcp_translation(rp);
}

TEST_CASE("rcp division halves an even constraint") {
  RcpProof rp;
  rp.num_vars = 2;
  rp.steps = {
      rcp_input({iq({{1, 2}, {2, 2}}, 1)}),
      rcp_scale(RcpRule::Divide, 0, 0, 2, {iq({{1, 1}, {2, 1}}, 1)}),
  };
  check_rcp_translation(rp);
}

TEST_CASE("rcp division rounds the threshold up") {
  RcpProof rp;
  rp.num_vars = 1;
  rp.steps = {
      rcp_input({iq({{1, 2}}, 1)}),
      rcp_scale(RcpRule::Divide, 0, 0, 2, {iq({{1, 1}}, 1)}),
  };
  check_rcp_translation(rp);

  RcpProof neg;
  neg.num_vars = 2;
  neg.steps = {
      rcp_input({iq({{1, -3}, {2, 3}}, -2), iq({{2, 1}}, 1)}),
      rcp_scale(RcpRule::Divide, 0, 0, 3, {iq({{1, -1}, {2, 1}}, 0), iq({{2, 1}}, 1)}),
  };
  check_rcp_translation(neg);
}

TEST_CASE("rcp scalar one aliases multiplication and division") {
  RcpProof rp;
  rp.num_vars = 1;
  rp.steps = {
      rcp_input({iq({{1, 1}}, 0)}),
      rcp_scale(RcpRule::Multiply, 0, 0, 1, {iq({{1, 1}}, 0)}),
      rcp_scale(RcpRule::Divide, 1, 0, 1, {iq({{1, 1}}, 0)}),
  };
  check_rcp_translation(rp);
}

TEST_CASE("rcp division of a constant inequality") {
  RcpProof rp;
  rp.num_vars = 1;
  rp.steps = {
      rcp_input({iq({}, 3), iq({{1, 1}}, 0)}),
      rcp_scale(RcpRule::Divide, 0, 0, 2, {iq({}, 2), iq({{1, 1}}, 0)}),
      rcp_scale(RcpRule::Divide, 1, 0, 5, {iq({}, 1), iq({{1, 1}}, 0)}),
  };
  check_rcp_translation(rp);
}

TEST_CASE("rcp refutation using every axiom and rule") {
  RcpProof rp;
  rp.num_vars = 2;
  rp.steps = {
      rcp_input({iq({{1, 2}, {2, 2}}, 3)}),          // 1: 2x1+2x2 >= 3
      rcp_scale(RcpRule::Divide, 0, 0, 2,
                {iq({{1, 1}, {2, 1}}, 2)}),          // 2: x1+x2 >= 2
      rcp_axiom(RcpRule::VarUpper, 1),               // 3: -x1 >= -1
      rcp_axiom(RcpRule::VarUpper, 2),               // 4: -x2 >= -1
      rcp_add(1, 0, 2, 0, {iq({{2, 1}}, 1)}),        // 5: x2 >= 1
      rcp_add(4, 0, 3, 0, {iq({}, 0)}),              // 6: 0 >= 0
      rcp_axiom(RcpRule::VarLower, 1),               // 7: x1 >= 0
      rcp_split(iq({{1, 1}, {2, 1}}, 3)),            // 8: (x1+x2 >= 3) | (-x1-x2 >= -2)
      rcp_add(7, 0, 1, 0,
              {iq({{1, -1}, {2, -1}}, -2),
               iq({{1, 2}, {2, 2}}, 5)}),            // 9: side stays, sum hopeless
      rcp_scale(RcpRule::Multiply, 8, 0, 2,
                {iq({{1, -2}, {2, -2}}, -4),
                 iq({{1, 2}, {2, 2}}, 5)}),          // 10
      rcp_add(9, 0, 0, 0, {iq({}, -1), iq({{1, 2}, {2, 2}}, 5)}),  // 11
      rcp_add(10, 1, 10, 1, {iq({}, -1), iq({{1, 4}, {2, 4}}, 10)}),  // 12
      rcp_weaken(5, iq({}, 1), {iq({}, 0), iq({}, 1)}),               // 13
      rcp_drop(12, 1, {iq({}, 0)}),                                   // 14
  };
  check_rcp_translation(rp);
}

TEST_CASE("rcp file round-trip") {
  std::string tiny =
      "rcp 1\n"
      "input 1 >= 1\n"
      "line 2 rule3 1 1 : FALSE\n";
  {
    std::istringstream in(tiny);
    RcpProof rp = parse_rcp(in);
    validate(rp);
    CHECK(rp.num_vars == 0);
    CHECK(print_rcp(rp) == tiny);
    check_rcp_translation(rp, true);
  }
  std::string full =
      "rcp 1\n"
      "input 1 1:2 2:2 >= 1 | 2:1 >= 1\n"
      "input 2 1:-1 >= 0\n"
      "line 3 axiom1 2\n"
      "line 4 axiom2 1\n"
      "line 5 axiom3 1:1 2:-2 >= -1\n"
      "line 6 rule5 1 1 2 : 1:1 2:1 >= 1 | 2:1 >= 1\n"
      "line 7 rule1 6 1 2 1 : 2:1 >= 1\n"
      "line 8 rule2 7 1:1 >= 2 : 2:1 >= 1 | 1:1 >= 2\n"
      "line 9 rule4 8 2 3 : 2:1 >= 1 | 1:3 >= 6\n";
  std::istringstream in(full);
  RcpProof rp = parse_rcp(in);
  validate(rp);
  CHECK(rp.num_vars == 2);
  CHECK(print_rcp(rp) == full);
  check_rcp_translation(rp);
}

TEST_CASE("rcp parser tolerates comments and blank lines") {
  std::string text =
      "# refuting x1 >= 1 against -x1 >= 0\n"
      "rcp 1\n"
      "\n"
      "input 1 1:1 >= 1   # the unit\n"
      "input 2 1:-1 >= 0\n"
      "line 3 rule1 1 1 2 1 : >= 1\n"
      "line 4 rule3 3 1 : FALSE\n";
  std::istringstream in(text);
  RcpProof rp = parse_rcp(in);
  validate(rp);
  CHECK(rp.steps.size() == 4);
  check_rcp_translation(rp, true);
}

TEST_CASE("rcp parser rejects malformed files") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_rcp(in), ParseError);
  };
  reject("");                                                // missing header
  reject("rcp 2\ninput 1 1:1 >= 0\n");                       // bad version
  reject("rcp 1\ninput 2 1:1 >= 0\n");                       // ids start at 1
  reject("rcp 1\ninput 1 1:1 >= 0\ninput 3 1:1 >= 0\n");     // ids consecutive
  reject("rcp 1\ninput 1 1:1 > 0\n");                        // missing >=
  reject("rcp 1\ninput 1 1:1 >= 0 |\n");                     // dangling separator
  reject("rcp 1\ninput 1 1:1 >= 0 | | 1:1 >= 1\n");          // empty member
  reject("rcp 1\ninput 1 0:1 >= 0\n");                       // variable zero
  reject("rcp 1\ninput 1 1:1 >= 0\nline 2 frob 1\n");        // unknown rule
  reject("rcp 1\ninput 1 1:1 >= 0\nline 2 rule4 1 1 2 1:2 >= 0\n");  // missing colon
  reject("rcp 1\ninput 1 1:1 >= 0\nline 2 rule3 1 0 : FALSE\n");     // index zero
  reject("rcp 1\ninput 1 1:1 >= 0\nline 2 rule1 1 1 2 1 : = 0\n");   // forward antecedent
  reject("rcp 1\ninput 1 1:1 >= 0\nline 2 axiom1\n");        // missing variable
  reject("rcp 1\ninput 1 1:1 >= 0\nline 2 rule2 1 1:1 >= 1 :\n");    // missing stated line
}
