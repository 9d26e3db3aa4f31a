#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "linres/proof.hpp"

namespace linres {

namespace detail {
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error("proof construction error: " + msg);
}
}  // namespace detail

// Grows a Proof line by line. Every emitted line's content is computed with
// the same rule functions the checker uses, so a finished build always checks.
class ProofBuilder {
 public:
  explicit ProofBuilder(int num_vars);

  const Proof& proof() const { return p_; }
  Proof take() { return std::move(p_); }
  int num_vars() const { return p_.num_vars; }
  int size() const { return static_cast<int>(p_.lines.size()); }
  const Disjunction& at(int id) const;

  int add_premise(Disjunction d);  // registers in the premise table, emits no line
  int premise_line(int premise_idx);
  int axiom(int var);

  int res(int a1, int i1, int a2, int i2, bool subtract);
  int res_eq(int a1, const LinearEquation& e1, int a2, const LinearEquation& e2, bool subtract);
  int weaken(int a, LinearEquation e);
  int simp_at(int a, int i);
  int simp_eq(int a, const LinearEquation& e);

  // Weakens id until its content equals target (requires at(id) ⊆ target).
  int weaken_to(int id, const Disjunction& target);
  // Removes every variable-free equation with nonzero value.
  int simp_constants(int id);
  // A line whose content is exactly (0 = 0).
  int zero_line();
  // Replaces e by −e within the line.
  int flip_eq(int id, const LinearEquation& e);
  // Replaces e by c·e within the line (c ≥ 0; c = 0 yields (0 = 0)).
  int scale_eq(int id, const LinearEquation& e, Int c);
  // From P = P'∨e and Q = Q'∨dQ with every dQ equation sharing e's form but
  // not its value, derives P' ∪ (Q ∖ dQ).
  int eliminate_singleton_vs(int idP, const LinearEquation& e, int idQ,
                             const std::vector<LinearEquation>& dQ);

 private:
  int push(Disjunction content, Justification j);
  Proof p_;
  std::map<int, int> axiom_lines_;
  std::map<int, int> premise_lines_;
  int zero_line_ = -1;
};

}  // namespace linres
