#include "linres/builder.hpp"

#include <algorithm>

namespace linres {

using detail::require;

ProofBuilder::ProofBuilder(int num_vars) {
  require(num_vars >= 0, "negative variable count");
  p_.num_vars = num_vars;
}

const Disjunction& ProofBuilder::at(int id) const {
  require(id >= 0 && id < size(), "line id out of range");
  return p_.lines[id].content;
}

int ProofBuilder::push(Disjunction content, Justification j) {
  p_.lines.push_back({std::move(content), std::move(j)});
  return size() - 1;
}

int ProofBuilder::add_premise(Disjunction d) {
  require(d.max_var() <= num_vars(), "premise uses an unknown variable");
  p_.premises.push_back(std::move(d));
  return static_cast<int>(p_.premises.size()) - 1;
}

int ProofBuilder::premise_line(int premise_idx) {
  require(premise_idx >= 0 && premise_idx < static_cast<int>(p_.premises.size()),
          "premise index out of range");
  auto it = premise_lines_.find(premise_idx);
  if (it != premise_lines_.end()) return it->second;
  int id = push(p_.premises[premise_idx], Justification::premise_ref(premise_idx));
  premise_lines_[premise_idx] = id;
  return id;
}

int ProofBuilder::axiom(int var) {
  require(var >= 1 && var <= num_vars(), "axiom variable out of range");
  auto it = axiom_lines_.find(var);
  if (it != axiom_lines_.end()) return it->second;
  Disjunction d;
  d.insert(LinearEquation::unit(var, 0));
  d.insert(LinearEquation::unit(var, 1));
  int id = push(std::move(d), Justification::axiom(var));
  axiom_lines_[var] = id;
  return id;
}

int ProofBuilder::res(int a1, int i1, int a2, int i2, bool subtract) {
  const Disjunction& A = at(a1);
  const Disjunction& B = at(a2);
  require(i1 >= 0 && i1 < static_cast<int>(A.eqs.size()), "first equation index out of range");
  require(i2 >= 0 && i2 < static_cast<int>(B.eqs.size()), "second equation index out of range");
  return push(apply_res(A, i1, B, i2, subtract), Justification::res(a1, i1, a2, i2, subtract));
}

int ProofBuilder::res_eq(int a1, const LinearEquation& e1, int a2, const LinearEquation& e2,
                         bool subtract) {
  int i1 = at(a1).index_of(e1);
  int i2 = at(a2).index_of(e2);
  require(i1 >= 0, "resolution equation missing from first antecedent: " + to_string(e1));
  require(i2 >= 0, "resolution equation missing from second antecedent: " + to_string(e2));
  return res(a1, i1, a2, i2, subtract);
}

int ProofBuilder::weaken(int a, LinearEquation e) {
  require(e.form.max_var() <= num_vars(), "weakening equation uses an unknown variable");
  Disjunction content = apply_weaken(at(a), e);
  return push(std::move(content), Justification::weaken(a, std::move(e)));
}

int ProofBuilder::simp_at(int a, int i) {
  const Disjunction& A = at(a);
  require(i >= 0 && i < static_cast<int>(A.eqs.size()), "simp index out of range");
  require(A.eqs[i].variable_free() && A.eqs[i].rhs != 0,
          "simp target is not (0 = k) with k ≠ 0: " + to_string(A.eqs[i]));
  return push(apply_simp(A, i), Justification::simp(a, i));
}

int ProofBuilder::simp_eq(int a, const LinearEquation& e) {
  int i = at(a).index_of(e);
  require(i >= 0, "simp equation missing from antecedent: " + to_string(e));
  return simp_at(a, i);
}

int ProofBuilder::weaken_to(int id, const Disjunction& target) {
  require(at(id).subset_of(target), "weaken_to requires a subset of the target");
  int cur = id;
  for (const auto& e : target.eqs)
    if (!at(cur).contains(e)) cur = weaken(cur, e);
  return cur;
}

int ProofBuilder::simp_constants(int id) {
  int cur = id;
  for (;;) {
    const Disjunction& d = at(cur);
    int idx = -1;
    for (std::size_t i = 0; i < d.eqs.size(); ++i)
      if (d.eqs[i].variable_free() && d.eqs[i].rhs != 0) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0) return cur;
    cur = simp_at(cur, idx);
  }
}

int ProofBuilder::zero_line() {
  if (zero_line_ >= 0) return zero_line_;
  require(num_vars() >= 1, "zero_line needs at least one variable");
  int ax = axiom(1);
  LinearEquation x0 = LinearEquation::unit(1, 0);
  LinearEquation x1 = LinearEquation::unit(1, 1);
  int r1 = res_eq(ax, x0, ax, x0, true);  // (x1=1) | (0=0)
  int r2 = res_eq(r1, x1, r1, x1, true);  // (0=0)
  require(at(r2).same_set(Disjunction::single(LinearEquation::constant(0))), "zero_line shape");
  zero_line_ = r2;
  return r2;
}

int ProofBuilder::flip_eq(int id, const LinearEquation& e) {
  const Disjunction orig = at(id);
  require(orig.contains(e), "flip_eq equation missing: " + to_string(e));
  Disjunction expect = orig.without_index(orig.index_of(e));
  expect.insert(eq_negate(e));

  int s1 = res_eq(id, e, id, e, true);  // (C ∖ e) ∪ {(0 = 0)}
  int s2 = res_eq(s1, LinearEquation::constant(0), id, e, true);
  require(at(s2).same_set(expect), "flip_eq result mismatch");
  return s2;
}

int ProofBuilder::scale_eq(int id, const LinearEquation& e, Int c) {
  require(c >= 0, "scale_eq needs a nonnegative factor");
  const Disjunction orig = at(id);
  require(orig.contains(e), "scale_eq equation missing: " + to_string(e));
  if (c == 1) return id;
  Disjunction expect = orig.without_index(orig.index_of(e));
  expect.insert(eq_scale(e, c));

  if (c == 0) {
    int r = res_eq(id, e, id, e, true);
    require(at(r).same_set(expect), "scale_eq result mismatch");
    return r;
  }
  int cur = id;
  for (Int k = 1; k < c; ++k) {
    LinearEquation ke = eq_scale(e, k);
    cur = res_eq(cur, ke, id, e, false);
  }
  require(at(cur).same_set(expect), "scale_eq result mismatch");
  return cur;
}

int ProofBuilder::eliminate_singleton_vs(int idP, const LinearEquation& e, int idQ,
                                         const std::vector<LinearEquation>& dQ) {
  const Disjunction P = at(idP);
  const Disjunction Q = at(idQ);
  require(!dQ.empty(), "eliminate_singleton_vs needs at least one designated equation");
  require(P.contains(e), "pivot equation missing from P");
  for (const auto& dq : dQ) {
    require(Q.contains(dq), "designated equation missing from Q: " + to_string(dq));
    require(dq.form == e.form, "designated equation has a different form: " + to_string(dq));
    require(dq.rhs != e.rhs, "designated equation shares the pivot's value");
  }
  Disjunction Pme = P.without_index(P.index_of(e));
  Disjunction expect = Pme;
  for (const auto& q : Q.eqs)
    if (std::find(dQ.begin(), dQ.end(), q) == dQ.end()) expect.insert(q);

  int cur = res_eq(idP, e, idQ, dQ[0], true);
  LinearEquation k0 = LinearEquation::constant(checked_sub(e.rhs, dQ[0].rhs));
  require(!expect.contains(k0), "residual constant collides with the result");
  cur = simp_eq(cur, k0);
  for (std::size_t t = 1; t < dQ.size(); ++t) {
    const LinearEquation& dq = dQ[t];
    if (Pme.contains(dq)) continue;  // persists via P — nothing to remove
    if (!at(cur).contains(dq)) continue;
    cur = res_eq(cur, dq, idP, e, true);
    LinearEquation k = LinearEquation::constant(checked_sub(dq.rhs, e.rhs));
    require(!expect.contains(k), "residual constant collides with the result");
    cur = simp_eq(cur, k);
  }
  require(at(cur).same_set(expect), "eliminate_singleton_vs result mismatch");
  return cur;
}

}  // namespace linres
