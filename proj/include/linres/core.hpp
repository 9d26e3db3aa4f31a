#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linres/ints.hpp"

namespace linres {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooManyVariables : DomainError {
  using DomainError::DomainError;
};

// A linear form Σ c_i·x_i over 1-based variables, kept sparse and sorted by
// variable with no zero coefficients.
struct LinearForm {
  std::vector<std::pair<int, Int>> terms;

  static LinearForm of(std::vector<std::pair<int, Int>> raw);

  Int coef(int var) const;
  bool empty() const { return terms.empty(); }
  Int max_abs_coef() const;  // 0 for the empty form
  int max_var() const;       // 0 for the empty form
  Int unary_size() const;    // Σ |c_i|
  Int positive_sum() const;  // Σ max(c_i, 0)
  Int negative_sum() const;  // Σ min(c_i, 0)
  Int eval_bits(const std::vector<unsigned char>& bits) const;

  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

LinearForm form_add(const LinearForm& a, const LinearForm& b);
LinearForm form_sub(const LinearForm& a, const LinearForm& b);
LinearForm form_scale(const LinearForm& a, Int c);

// All values the form takes over 0/1 assignments, sorted ascending.
std::vector<Int> attainable_values(const LinearForm& a);

// A single linear equation  Σ c_i·x_i = rhs.
struct LinearEquation {
  LinearForm form;
  Int rhs = 0;

  LinearEquation() = default;
  LinearEquation(LinearForm f, Int r) : form(std::move(f)), rhs(r) {}

  static LinearEquation make(std::vector<std::pair<int, Int>> raw, Int rhs);
  static LinearEquation unit(int var, Int value);  // (x_var = value)
  static LinearEquation constant(Int k);           // variable-free (0 = k)

  bool variable_free() const { return form.empty(); }
  // (x = 0) or (x = 1) with coefficient exactly +1.
  bool is_clause_literal() const;
  Int unary_size() const;  // Σ |c_i| + |rhs|

  friend auto operator<=>(const LinearEquation&, const LinearEquation&) = default;
};

LinearEquation eq_add(const LinearEquation& a, const LinearEquation& b);
LinearEquation eq_sub(const LinearEquation& a, const LinearEquation& b);
LinearEquation eq_negate(const LinearEquation& a);
LinearEquation eq_scale(const LinearEquation& a, Int c);

// A disjunction of linear equations. Duplicate-free; remembers insertion
// order for printing, but equality compares as sets.
struct Disjunction {
  std::vector<LinearEquation> eqs;

  Disjunction() = default;
  explicit Disjunction(std::vector<LinearEquation> list);  // dedupes, keeps first occurrences
  static Disjunction single(LinearEquation e);

  bool insert(LinearEquation e);  // appends if absent; true if inserted
  bool contains(const LinearEquation& e) const;
  int index_of(const LinearEquation& e) const;  // -1 if absent
  bool empty() const { return eqs.empty(); }
  std::size_t count() const { return eqs.size(); }
  Int unary_size() const;
  int max_var() const;

  Disjunction without_index(std::size_t idx) const;
  Disjunction union_with(const Disjunction& other) const;
  bool subset_of(const Disjunction& other) const;
  bool same_set(const Disjunction& other) const;

  // Set semantics.
  friend bool operator==(const Disjunction& a, const Disjunction& b) { return a.same_set(b); }
};

// Total 0/1 assignment to variables 1..n.
struct Assignment {
  std::vector<unsigned char> bits;  // bits[i] is the value of variable i+1

  static Assignment from_mask(std::uint64_t mask, int n);
  int size() const { return static_cast<int>(bits.size()); }
  bool value(int var) const;
  std::string to_string() const;
};

bool eval(const LinearEquation& e, const Assignment& a);
bool eval(const Disjunction& d, const Assignment& a);

// Brute-force semantic implication over variables 1..num_vars.
struct ImplicationResult {
  bool implied = false;
  std::optional<Assignment> countermodel;  // set when not implied
};
ImplicationResult semantically_implies(const std::vector<Disjunction>& premises,
                                       const Disjunction& target, int num_vars,
                                       int cap = 24);

// CNF clauses with DIMACS-style literals (positive = var, negative = negation).
struct Clause {
  std::vector<int> lits;
};
struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

// x ↦ (x = 1), ¬x ↦ (x = 0).
Disjunction translate_clause(const Clause& c);
bool eval(const Clause& c, const Assignment& a);

Cnf parse_dimacs(std::istream& in);

// Text syntax: equations as "1:2 3:-1 = 4" (variable:coefficient terms then
// "= rhs"; variable-free as "= rhs"), disjunctions joined by " | " with the
// empty disjunction printed as "FALSE".
std::string to_string(const LinearEquation& e);
std::string to_string(const Disjunction& d);
LinearEquation parse_equation(std::string_view text);
Disjunction parse_disjunction(std::string_view text);

}  // namespace linres
