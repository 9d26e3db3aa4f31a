#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linres/proof.hpp"

namespace linres {

struct InvalidRes2Step : DomainError {
  using DomainError::DomainError;
};

// A conjunction of one or two literals over distinct variables (DIMACS
// encoding), kept sorted by variable index.
struct Term {
  std::vector<int> lits;
  bool operator==(const Term&) const = default;
};

// Normalizes (sorts, collapses duplicate literals) and rejects empty terms,
// terms with more than two literals, zero literals, and clashing literals on
// one variable.
Term make_term(std::vector<int> lits);

// A disjunction of terms; the empty list is the constant FALSE.
struct TwoDnf {
  std::vector<Term> terms;
};

enum class Res2Rule { Input, Cut, AndIntro, Weaken };

struct Res2Step {
  Res2Rule rule = Res2Rule::Input;
  TwoDnf stated;
  int a1 = -1, a2 = -1;  // 0-based antecedent steps
  int term_index = -1;   // Cut: position of the cut term within antecedent a1
  int l1 = 0, l2 = 0;    // AndIntro: the two conjoined literals
  Term added;            // Weaken: the new term
};

struct Res2Proof {
  int num_vars = 0;
  std::vector<Res2Step> steps;
};

// x ↦ (x = 1), ¬x ↦ (-x = 0); a pair translates to the sum of its parts, so
// distinct normalized terms map to distinct equations.
LinearEquation translate_term(const Term& t);
Disjunction translate_dnf(const TwoDnf& d);

void validate(const Res2Proof& rp);  // throws InvalidRes2Step

// Simulates the proof line by line; Cut steps expand into a case analysis
// over the cut term's variables.
Proof res2_to_rlin(const Res2Proof& rp);

Res2Proof parse_res2(std::istream& in);
std::string print_res2(const Res2Proof& rp);

}  // namespace linres
