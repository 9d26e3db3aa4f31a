#pragma once

#include <functional>
#include <vector>

#include "linres/builder.hpp"

namespace linres {

// A reusable derivation: a proof whose premise table lists what it imports
// and whose final_line concludes it.
struct Fragment {
  Proof proof;
  int final_line = -1;
};

// Rewrites every variable v of the fragment to var_map[v] (1-based, injective
// on the variables the fragment uses); the result claims new_num_vars.
Fragment rename_fragment(const Fragment& frag, const std::vector<int>& var_map, int new_num_vars);

// Replays a fragment inside host with `side` disjoined onto every line.
// premise_map[i] is the host line standing in for fragment premise i; each
// replayed line is weakened up so its content is exactly the fragment line
// joined with side.
int splice_lifted(ProofBuilder& host, const Fragment& frag, const std::vector<int>& premise_map,
                  const Disjunction& side);
int splice(ProofBuilder& host, const Fragment& frag, const std::vector<int>& premise_map);

// A case hook: fragment premise 0 is the case unit (filled in by the case
// engine); imports supply host lines for fragment premises 1, 2, ….
struct DerivationHook {
  Fragment fragment;
  std::vector<int> imports;
};

// Case analysis over a homogeneous case line ⋁_i (z = a_i) (one shared form,
// distinct values). hooks[i] concludes E_i from the unit (z = a_i); the
// result concludes ⋃_i E_i.
int case_analysis_in(ProofBuilder& host, int case_line, const std::vector<DerivationHook>& hooks);

// Case analysis over an arbitrary case line L_1 ∨ … ∨ L_ℓ, eliminating the
// cases one after another. hooks[i] concludes E_i from the unit (L_i).
int case_analysis_seq_in(ProofBuilder& host, int case_line,
                         const std::vector<DerivationHook>& hooks);

// Standalone variant: premise 0 of the result is the case line, followed by
// every hook's imports in order (hook fragment premises 1, 2, …).
Fragment case_analysis(const Disjunction& case_line, const std::vector<Fragment>& hooks);

// From value lines ⋁_α (z1 = α) and ⋁_β (z2 = β) derives ⋁ (z1+z2 = α+β)
// over all pairs (duplicate sums collapse).
int combine_value_sets_in(ProofBuilder& host, int id1, int id2);
Fragment combine_value_sets(const Disjunction& d1, const Disjunction& d2);

// Derives ⋁_{s ∈ attainable(a)} (a = s) from Boolean axioms alone; the empty
// form yields (0 = 0).
int all_values_in(ProofBuilder& host, const LinearForm& a);
Fragment all_values(const LinearForm& a);

// From ⋁_i (x_{v_i} = 1) derives ⋁_{c=1}^{n} (Σ x_{v_i} = c).
int one_hot_sum_in(ProofBuilder& host, const std::vector<int>& vars, int hot_line);
Fragment one_hot_sum(int n);

// From pairwise lines (x_{v_i} = 0) ∨ (x_{v_j} = 0) derives
// (Σ x_{v_i} = 0) ∨ (Σ x_{v_i} = 1). pair_line(i, j) returns the host line
// for 1-based positions i < j into vars.
int at_most_one_sum_in(ProofBuilder& host, const std::vector<int>& vars,
                       const std::function<int(int, int)>& pair_line);
Fragment at_most_one_sum(int n);

}  // namespace linres
