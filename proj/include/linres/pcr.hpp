#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linres/proof.hpp"

namespace linres {

using Rational = boost::multiprecision::cpp_rational;

struct InvalidPcrStep : DomainError {
  using DomainError::DomainError;
};

struct SizeBudgetExceeded : DomainError {
  using DomainError::DomainError;
};

// PCR works over twin variables: equation variable i contributes x_i
// (code 2i) and its complement x̄_i (code 2i+1).
inline int pcr_var(int i) { return 2 * i; }
inline int pcr_twin(int i) { return 2 * i + 1; }
inline int pcr_var_index(int code) { return code / 2; }
inline bool pcr_is_twin(int code) { return code % 2 != 0; }

// Power product over variable codes; factors sorted by code, exponents ≥ 1.
struct Monomial {
  std::vector<std::pair<int, int>> factors;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse polynomial with exact rational coefficients; no zero terms stored.
struct Polynomial {
  std::map<Monomial, Rational> terms;

  bool zero() const { return terms.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms.size(); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial poly_constant(const Rational& c);
Polynomial poly_variable(int code);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Rational& c);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
// Evaluates with x̄_i read as 1 − x_i.
Rational poly_eval(const Polynomial& p, const Assignment& a);

// form − rhs over plain variables.
Polynomial equation_poly(const LinearEquation& e);
// Π of the equation polynomials; the empty disjunction is 1.
Polynomial disjunction_poly(const Disjunction& d);

enum class PcrRule { Premise, SquareAxiom, TwinAxiom, Product, Addition };

struct PcrStep {
  PcrRule rule = PcrRule::Premise;
  Polynomial stated;
  int premise = -1;      // Premise: index into the premise table
  int var = 0;           // SquareAxiom/Product: variable code
  int index = 0;         // TwinAxiom: equation variable index
  int a1 = -1, a2 = -1;  // Product: a1; Addition: both
  Rational alpha, beta;  // Addition
};

struct PcrProof {
  int num_vars = 0;  // equation variables; codes range over 2..2*num_vars+1
  std::vector<Polynomial> premises;
  std::vector<PcrStep> steps;
};

CheckResult pcr_check(const PcrProof& pp);
// pcr_check plus: the final line must be the constant 1.
CheckResult pcr_check_refutation(const PcrProof& pp);

// Line-by-line simulation; line i's polynomial is exactly
// disjunction_poly(p.lines[i].content). monomial_cap bounds the total monomial
// count across premises and stated lines; wide lines multiply out to
// exponentially many monomials, so oversized translations throw
// SizeBudgetExceeded instead of exhausting memory.
PcrProof rlin_to_pcr(const Proof& p, std::size_t monomial_cap = 1'000'000);

PcrProof parse_pcr(std::istream& in);
std::string print_pcr(const PcrProof& pp);

}  // namespace linres
