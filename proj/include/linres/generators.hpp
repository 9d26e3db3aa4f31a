#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "linres/macros.hpp"

namespace linres {

struct BadParams : DomainError {
  using DomainError::DomainError;
};
struct BadGraph : DomainError {
  using DomainError::DomainError;
};
struct LocalDerivationTooLarge : DomainError {
  using DomainError::DomainError;
};

// Pigeonhole instance: m pigeons, n holes, x_{i,j} says pigeon i sits in
// hole j.
struct PhpInstance {
  int pigeons = 0;
  int holes = 0;

  static PhpInstance make(int m, int n);  // requires m > n >= 1

  int num_vars() const { return pigeons * holes; }
  int var(int pigeon, int hole) const;

  // Premise indices into php_formula(m, n): the m pigeon lines first, then
  // hole lines grouped by hole, each group listing pigeon pairs (i, j) with
  // i < j in lexicographic order.
  int pigeon_premise(int pigeon) const;
  int hole_premise(int i, int j, int hole) const;
  int num_premises() const;
};

Formula php_formula(int m, int n);
// Refutation of php_formula(m, n); for m > n + 1 only pigeons 1..n+1 are
// used, the remaining premises stay unreferenced.
Proof php_refutation(int m, int n);

// Simple undirected graph on vertices 1..n.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates
};

Graph cycle_graph(int n);  // C_n (3-cycle and up)
Graph circulant_graph(int n, const std::vector<int>& offsets);

// "graph <n> <r>" header, then one "u v" line per edge. Parsing validates
// simplicity and that every vertex has degree exactly r.
Graph parse_graph(std::istream& in);
std::string print_graph(const Graph& g);

// Parity instance over a connected r-regular graph with n ≡ 1 (mod p): each
// directed arc carries indicator variables x_{arc,i} for a value i in [0, p).
struct TseitinInstance {
  Graph graph;
  int p = 0;
  int regularity = 0;
  std::vector<std::pair<int, int>> arcs;  // both orientations, lex sorted

  static TseitinInstance make(Graph g, int p);

  int num_vars() const { return static_cast<int>(arcs.size()) * p; }
  int arc_rank(int u, int v) const;
  int var(int u, int v, int i) const;      // x_{(u,v),i}
  std::vector<int> out_arcs(int v) const;  // arc ranks leaving v, by head

  // Premise indices into tseitin_formula: at-least-one-value per arc, then
  // at-most-one-value per arc and residue pair i < j, then the two
  // opposite-arc links per undirected edge and residue, then the per-vertex
  // sum families.
  int atleast_premise(int rank) const;
  int atmost_premise(int rank, int i, int j) const;
  int opposite_premise(int edge_index, int i, int which) const;
  int mod_premise_base(int v) const;
  int mod_family_size() const;  // p^r − p^{r−1}
  int num_premises() const;
};

Formula tseitin_formula(const TseitinInstance& inst);
Proof tseitin_refutation(const TseitinInstance& inst);

// Clique-versus-coloring instance: p_{i,j} are edge indicators (ordered
// pairs), q_{l,i} picks the l-th clique vertex, r_{l,i} assigns vertex i to
// independent set l.
struct CliqueColorInstance {
  int n = 0;
  int k = 0;
  int kprime = 0;

  static CliqueColorInstance make(int n, int k, int kprime);  // k' < k <= n

  int num_vars() const;
  int p_var(int i, int j) const;
  int q_var(int l, int i) const;
  int r_var(int l, int i) const;
};

Formula clique_color_formula(int n, int k, int kprime);

}  // namespace linres
