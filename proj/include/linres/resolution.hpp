#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linres/builder.hpp"

namespace linres {

struct InvalidResolutionStep : DomainError {
  using DomainError::DomainError;
};

// A resolution proof over CNF clauses. Every step states its clause; clauses
// are literal sets (DIMACS signs, duplicates collapse).
struct ResolutionStep {
  enum class Kind { Input, Resolve, Weaken };
  Kind kind = Kind::Input;
  Clause clause;         // the stated clause of this line
  int a1 = -1, a2 = -1;  // Resolve antecedents; Weaken uses a1 (0-based)
  int pivot = 0;         // Resolve pivot variable (positive index)
};

struct ResolutionProof {
  int num_vars = 0;
  std::vector<ResolutionStep> steps;
};

// Structural validation: antecedents strictly earlier, pivot positive in one
// antecedent and negative in the other, resolvent/weakening clauses as
// stated. Throws InvalidResolutionStep.
void validate(const ResolutionProof& rp);

// Clause translation of every line; Resolve becomes one subtracting
// resolution on (x=1)/(x=0) plus one simplification of (0=1); Weaken becomes
// one weakening per added literal.
Proof res_to_rlin(const ResolutionProof& rp);

// Trace format: one step per line. `<id> <lit…> 0` states an input clause,
// `<id> <lit…> 0 <ant1> <ant2> <pivot>` a resolution, and
// `<id> <lit…> 0 <ant> w` a weakening; ids are 1-based and consecutive.
ResolutionProof parse_resolution(std::istream& in);
std::string print_resolution(const ResolutionProof& rp);

}  // namespace linres
