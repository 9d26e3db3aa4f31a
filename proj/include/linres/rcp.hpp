#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linres/proof.hpp"

namespace linres {

struct InvalidRcpStep : DomainError {
  using DomainError::DomainError;
};

// a·x ≥ rhs with integer coefficients over 0/1 variables.
struct Inequality {
  LinearForm lhs;
  Int rhs = 0;
  bool operator==(const Inequality&) const = default;
};

// (a·x = rhs) ∨ (a·x = rhs+1) ∨ … up to the largest value the form takes on
// 0/1 assignments (at least one disjunct is always listed); the variable-free
// inequality maps to (0 = rhs) when it is false and (0 = 0) when it holds.
Disjunction ineq_to_disjunction(const Inequality& q);

enum class RcpRule {
  Input,
  VarLower,   // x_i ≥ 0
  VarUpper,   // -x_i ≥ -1
  Split,      // (a ≥ a0) ∨ (-a ≥ 1-a0)
  Add,        // A∨L1, B∨L2 ⊢ A∨B∨(L1+L2)
  Weaken,     // A ⊢ A∨L
  DropFalse,  // A∨(0 ≥ 1) ⊢ A
  Multiply,   // A∨(a ≥ a0) ⊢ A∨(ca ≥ ca0), c ≥ 0
  Divide,     // A∨(ca ≥ a0) ⊢ A∨(a ≥ ⌈a0/c⌉), c ≥ 1
};

struct RcpStep {
  RcpRule rule = RcpRule::Input;
  std::vector<Inequality> stated;  // the full line, duplicates collapsed
  int var = 0;                     // VarLower/VarUpper
  Inequality ineq;                 // Split: the split inequality; Weaken: the added one
  int a1 = -1, a2 = -1;            // 0-based antecedent steps
  int i1 = -1, i2 = -1;            // 0-based indices into the antecedents' lines
  Int c = 0;                       // Multiply/Divide scalar
};

struct RcpProof {
  int num_vars = 0;
  std::vector<RcpStep> steps;
};

void validate(const RcpProof& rp);  // throws InvalidRcpStep

// Simulates the proof line by line; every translated line is exactly the
// union of its inequalities' disjunctions.
Proof rcp_to_rlin(const RcpProof& rp);

RcpProof parse_rcp(std::istream& in);
std::string print_rcp(const RcpProof& rp);

}  // namespace linres
