#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linres/core.hpp"

namespace linres {

enum class Rule { Axiom, Premise, Res, Weaken, Simp };

struct Justification {
  Rule rule = Rule::Axiom;
  int var = 0;           // Axiom: the variable h of (x_h=0) ∨ (x_h=1)
  int premise = -1;      // Premise: 0-based index into the premise table
  int a1 = -1, a2 = -1;  // antecedent line indices (0-based)
  int i1 = -1, i2 = -1;  // equation indices within the antecedents (0-based)
  bool subtract = false; // Res: false adds the equations, true subtracts
  LinearEquation weak_eq;

  static Justification axiom(int var);
  static Justification premise_ref(int premise);
  static Justification res(int a1, int i1, int a2, int i2, bool subtract);
  static Justification weaken(int a, LinearEquation e);
  static Justification simp(int a, int i);
};

struct ProofLine {
  Disjunction content;
  Justification just;
};

struct Proof {
  int num_vars = 0;
  std::vector<Disjunction> premises;
  std::vector<ProofLine> lines;
};

// Rule application on line contents. Preconditions (valid indices, a
// simplifiable equation for apply_simp) are the caller's job.
Disjunction apply_res(const Disjunction& a, std::size_t ia, const Disjunction& b, std::size_t ib,
                      bool subtract);
Disjunction apply_weaken(const Disjunction& a, const LinearEquation& e);
Disjunction apply_simp(const Disjunction& a, std::size_t ia);

enum class CheckCode {
  Ok,
  BadAntecedent,    // antecedent id missing or not strictly earlier
  IndexOutOfRange,  // equation index, premise index, or variable out of range
  BadAxiomShape,    // axiom line content is not (x_h=0) ∨ (x_h=1)
  NotSimplifiable,  // simp target is not (0 = k) with k ≠ 0
  LineMismatch,     // claimed content differs from the recomputed content
  NotARefutation,   // final line is not the empty disjunction
  NotR0Line,        // line does not fit the requested (k, c) fragment
};

struct CheckResult {
  CheckCode code = CheckCode::Ok;
  int line = -1;  // 0-based line index, or -1 when a premise is at fault
  std::string detail;
  bool ok() const { return code == CheckCode::Ok; }
};

std::string to_string(CheckCode code);

CheckResult check_line(const Proof& p, std::size_t idx);
CheckResult check_proof(const Proof& p, int jobs = 1);
// check_proof plus: the final line must be the empty disjunction.
CheckResult check_refutation(const Proof& p, int jobs = 1);

// Brute-force audit: every assignment satisfying all premises must satisfy
// every line. Throws TooManyVariables when num_vars exceeds the cap.
struct AuditResult {
  std::optional<int> bad_line;
  std::optional<Assignment> countermodel;
  bool ok() const { return !bad_line.has_value(); }
};
AuditResult semantic_audit(const Proof& p, int cap = 20);

// Fragment classification: a line fits (k, c) if its equations split into at
// most k groups, each either a set of equations sharing one linear form with
// all |coefficients| ≤ c, or a set of clause literals (x=0)/(x=1).
struct R0Params {
  int k = 1;
  Int c = 1;
};

struct R0LineResult {
  bool ok = false;
  int groups_needed = 0;  // minimal group count (meaningful even when !ok)
  std::string reason;
};
R0LineResult r0_classify_line(const Disjunction& d, const R0Params& params);

// Minimal group count ignoring k (the c bound still applies to form groups);
// -1 when no partition exists under c.
int r0_min_groups(const Disjunction& d, Int c);
// Exhaustive search over per-equation group choices; requires ≤ 16 equations.
int r0_min_groups_exhaustive(const Disjunction& d, Int c);

struct R0ProofResult {
  bool ok = false;
  int bad_line = -1;
  std::string reason;
};
R0ProofResult r0_classify(const Proof& p, const R0Params& params);

// Smallest (k, c) under which every line of the proof classifies.
struct R0Measure {
  int k = 0;
  Int c = 1;
};
R0Measure r0_measure(const Proof& p);

struct ProofStats {
  std::size_t num_lines = 0;
  std::size_t num_premises = 0;
  Int total_size = 0;     // Σ unary sizes over proof lines
  Int max_line_size = 0;
  Int max_abs_coef = 0;
  R0Measure r0;
};
ProofStats proof_stats(const Proof& p);

// Serialized proof format ("rlin 1"): header, premise table, then one record
// per line; ids are 1-based and consecutive, '#' starts a comment.
std::string print_proof(const Proof& p);
Proof parse_proof(std::istream& in);

struct Formula {
  int num_vars = 0;
  std::vector<Disjunction> premises;
};
std::string print_formula(const Formula& f);
Formula parse_formula(std::istream& in);  // "linform 1" format
// Accepts either the linform format or DIMACS CNF (clauses translated).
Formula parse_formula_auto(std::istream& in);

}  // namespace linres
