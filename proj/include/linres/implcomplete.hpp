#pragma once

#include <optional>
#include <vector>

#include "linres/builder.hpp"
#include "linres/proof.hpp"

namespace linres {

struct DeriveOptions {
  int oracle_cap = 24;     // max occurring variables for the brute-force check
  int recursion_cap = 12;  // max occurring variables for proof search
};

enum class DeriveStatus { Proved, NotImplied, TooManyVariables, NotR0 };

struct DeriveResult {
  DeriveStatus status = DeriveStatus::NotImplied;
  std::optional<Proof> proof;              // Proved (and NotR0, for inspection)
  std::optional<Assignment> countermodel;  // NotImplied
  int bad_line = -1;                       // NotR0: first offending line
};

// Searches for a proof of target from premises by branching on variables,
// after a brute-force check that the implication actually holds. The result
// is deterministic in its inputs. num_vars ≥ 1.
DeriveResult derive(const std::vector<Disjunction>& premises, const Disjunction& target,
                    int num_vars, const DeriveOptions& opts = {});

// derive, then classify every line against params.
DeriveResult derive_r0(const std::vector<Disjunction>& premises, const Disjunction& target,
                       int num_vars, const R0Params& params, const DeriveOptions& opts = {});

// In-host variant: derives target from existing host lines and returns the
// final line (content equals target). Throws DomainError when the implication
// fails or exceeds the caps — callers use it where implication is guaranteed.
int derive_in(ProofBuilder& host, const std::vector<int>& premise_ids, const Disjunction& target,
              const DeriveOptions& opts = {});

}  // namespace linres
