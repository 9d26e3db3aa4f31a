#include "linres/generators.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

#include "linres/implcomplete.hpp"

namespace linres {

using detail::require;

namespace {

// Position of (i, j), i < j, within the lexicographic pair listing over
// lo..hi (inclusive).
int pair_index(int i, int j, int lo, int hi) {
  int a = i - lo, b = j - lo, m = hi - lo + 1;
  return a * m - a * (a + 1) / 2 + (b - a - 1);
}

}  // namespace

PhpInstance PhpInstance::make(int m, int n) {
  if (n < 1 || m <= n) throw BadParams("pigeonhole instance needs m > n >= 1");
  if (static_cast<long long>(m) * n > 4'000'000 ||
      static_cast<long long>(m) * m * n > 400'000'000)
    throw BadParams("pigeonhole instance too large");
  PhpInstance inst;
  inst.pigeons = m;
  inst.holes = n;
  return inst;
}

int PhpInstance::var(int pigeon, int hole) const { return (pigeon - 1) * holes + hole; }

int PhpInstance::pigeon_premise(int pigeon) const { return pigeon - 1; }

int PhpInstance::hole_premise(int i, int j, int hole) const {
  int pairs = pigeons * (pigeons - 1) / 2;
  return pigeons + (hole - 1) * pairs + pair_index(i, j, 1, pigeons);
}

int PhpInstance::num_premises() const { return pigeons + holes * pigeons * (pigeons - 1) / 2; }

Formula php_formula(int m, int n) {
  PhpInstance inst = PhpInstance::make(m, n);
  Formula f;
  f.num_vars = inst.num_vars();
  for (int i = 1; i <= m; ++i) {
    Disjunction d;
    for (int j = 1; j <= n; ++j) d.insert(LinearEquation::unit(inst.var(i, j), 1));
    f.premises.push_back(std::move(d));
  }
  for (int j = 1; j <= n; ++j)
    for (int i1 = 1; i1 <= m; ++i1)
      for (int i2 = i1 + 1; i2 <= m; ++i2) {
        Disjunction d;
        d.insert(LinearEquation::unit(inst.var(i1, j), 0));
        d.insert(LinearEquation::unit(inst.var(i2, j), 0));
        f.premises.push_back(std::move(d));
      }
  return f;
}

Proof php_refutation(int m, int n) {
  PhpInstance inst = PhpInstance::make(m, n);
  Formula f = php_formula(m, n);
  ProofBuilder b(f.num_vars);
  for (const auto& d : f.premises) b.add_premise(d);
  const int used = n + 1;  // pigeons beyond n+1 are never needed

  std::vector<int> rows;
  for (int i = 1; i <= used; ++i) {
    std::vector<int> vars;
    for (int j = 1; j <= n; ++j) vars.push_back(inst.var(i, j));
    rows.push_back(one_hot_sum_in(b, vars, b.premise_line(inst.pigeon_premise(i))));
  }
  int row_line = rows[0];
  for (int i = 1; i < used; ++i) row_line = combine_value_sets_in(b, row_line, rows[i]);

  std::vector<int> cols;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> vars;
    for (int i = 1; i <= used; ++i) vars.push_back(inst.var(i, j));
    auto pair_line = [&](int a, int c) { return b.premise_line(inst.hole_premise(a, c, j)); };
    cols.push_back(at_most_one_sum_in(b, vars, pair_line));
  }
  int col_line = cols[0];
  for (int j = 1; j < n; ++j) col_line = combine_value_sets_in(b, col_line, cols[j]);

  // The row fold says the grand sum is at least n+1; the column fold caps it
  // at n. Cutting every column value against the row values closes the proof.
  const std::vector<LinearEquation> row_eqs = b.at(row_line).eqs;
  const Disjunction col_content = b.at(col_line);
  int cur = col_line;
  for (const auto& e : col_content.eqs) cur = b.eliminate_singleton_vs(cur, e, row_line, row_eqs);
  require(b.at(cur).empty(), "pigeonhole refutation failed to close");
  return b.take();
}

Graph cycle_graph(int n) {
  if (n < 3) throw BadGraph("a cycle needs at least three vertices");
  return circulant_graph(n, {1});
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
  if (n < 2) throw BadGraph("circulant graph needs at least two vertices");
  std::set<std::pair<int, int>> edges;
  for (int d : offsets) {
    if (d < 1 || d >= n) throw BadGraph("circulant offset out of range");
    for (int u = 1; u <= n; ++u) {
      int v = (u - 1 + d) % n + 1;
      if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  Graph g;
  g.n = n;
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

namespace {

std::vector<int> degrees_of(const Graph& g) {
  std::vector<int> deg(g.n + 1, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void validate_simple(const Graph& g) {
  if (g.n < 1) throw BadGraph("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.n || v > g.n) throw BadGraph("edge endpoint out of range");
    if (u == v) throw BadGraph("self loops are not allowed");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw BadGraph("duplicate edge");
  }
}

bool connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<int>> adj(g.n + 1);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> vis(g.n + 1, 0);
  std::queue<int> q;
  q.push(1);
  vis[1] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!vis[v]) {
        vis[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == g.n;
}

Graph normalized(Graph g) {
  for (auto& [u, v] : g.edges)
    if (u > v) std::swap(u, v);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  Graph g;
  int r = -1;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    if (!header) {
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag != "graph") throw ParseError("graph file must start with 'graph <n> <r>'");
      if (!(ls >> g.n >> r) || g.n < 1 || r < 0) throw ParseError("bad graph header");
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens after graph header");
      header = true;
      continue;
    }
    int u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) throw ParseError("edge line needs two endpoints");
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens after edge");
    g.edges.emplace_back(u, v);
  }
  if (!header) throw ParseError("graph file must start with 'graph <n> <r>'");
  validate_simple(g);
  g = normalized(std::move(g));
  std::vector<int> deg = degrees_of(g);
  for (int v = 1; v <= g.n; ++v)
    if (deg[v] != r) throw BadGraph("graph is not " + std::to_string(r) + "-regular");
  return g;
}

std::string print_graph(const Graph& g) {
  validate_simple(g);
  Graph s = normalized(g);
  std::vector<int> deg = degrees_of(s);
  for (int v = 2; v <= s.n; ++v)
    if (deg[v] != deg[1]) throw BadGraph("graph is not regular");
  std::ostringstream out;
  out << "graph " << s.n << ' ' << (s.n >= 1 ? deg[1] : 0) << '\n';
  for (auto [u, v] : s.edges) out << u << ' ' << v << '\n';
  return out.str();
}

TseitinInstance TseitinInstance::make(Graph g, int p) {
  if (p < 2) throw BadParams("modulus must be at least 2");
  validate_simple(g);
  g = normalized(std::move(g));
  if (g.edges.empty()) throw BadGraph("graph must have at least one edge");
  std::vector<int> deg = degrees_of(g);
  int r = deg[1];
  for (int v = 1; v <= g.n; ++v)
    if (deg[v] != r) throw BadGraph("graph is not regular");
  if (!connected(g)) throw BadGraph("graph is not connected");
  if (g.n % p != 1 % p)
    throw BadGraph("vertex count must be congruent to 1 modulo the modulus");
  long long family = 1;
  for (int j = 0; j < r; ++j) {
    family *= p;
    if (family > (1 << 20)) throw BadGraph("degree too large for this modulus");
  }

  TseitinInstance inst;
  inst.p = p;
  inst.regularity = r;
  for (auto [u, v] : g.edges) {
    inst.arcs.emplace_back(u, v);
    inst.arcs.emplace_back(v, u);
  }
  std::sort(inst.arcs.begin(), inst.arcs.end());
  inst.graph = std::move(g);
  return inst;
}

int TseitinInstance::arc_rank(int u, int v) const {
  auto it = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(u, v));
  require(it != arcs.end() && *it == std::make_pair(u, v), "no such arc");
  return static_cast<int>(it - arcs.begin());
}

int TseitinInstance::var(int u, int v, int i) const { return arc_rank(u, v) * p + i + 1; }

std::vector<int> TseitinInstance::out_arcs(int v) const {
  std::vector<int> out;
  auto it = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(v, 0));
  while (it != arcs.end() && it->first == v) {
    out.push_back(static_cast<int>(it - arcs.begin()));
    ++it;
  }
  return out;
}

int TseitinInstance::atleast_premise(int rank) const { return rank; }

int TseitinInstance::atmost_premise(int rank, int i, int j) const {
  int a = static_cast<int>(arcs.size());
  return a + rank * (p * (p - 1) / 2) + pair_index(i, j, 0, p - 1);
}

int TseitinInstance::opposite_premise(int edge_index, int i, int which) const {
  int a = static_cast<int>(arcs.size());
  return a + a * (p * (p - 1) / 2) + edge_index * 2 * p + 2 * i + which;
}

int TseitinInstance::mod_premise_base(int v) const {
  int a = static_cast<int>(arcs.size());
  return a + a * (p * (p - 1) / 2) + a * p + (v - 1) * mod_family_size();
}

int TseitinInstance::mod_family_size() const {
  int full = 1;
  for (int j = 0; j < regularity; ++j) full *= p;
  return full - full / p;
}

int TseitinInstance::num_premises() const {
  return mod_premise_base(graph.n) + mod_family_size();
}

namespace {

// Enumerates value tuples (i_1..i_r) in lexicographic order, keeping those
// whose sum is not congruent to 1 mod p, and hands each to sink.
template <typename F>
void for_each_mod_tuple(int r, int p, F&& sink) {
  std::vector<int> tup(r, 0);
  long long total = 1;
  for (int j = 0; j < r; ++j) total *= p;
  for (long long t = 0; t < total; ++t) {
    long long x = t;
    int sum = 0;
    for (int j = r - 1; j >= 0; --j) {
      tup[j] = static_cast<int>(x % p);
      x /= p;
      sum += tup[j];
    }
    if (sum % p == 1 % p) continue;
    sink(tup);
  }
}

struct LocalShape {
  std::vector<Disjunction> premises;
  Disjunction target;
};

// Vertex neighbourhood on local variables (arc j, value i) ↦ (j−1)p+i+1:
// at-least-one and at-most-one per arc, the mod-p family, and the target
// value line for the weighted arc sum.
LocalShape vertex_shape(int r, int p) {
  LocalShape s;
  auto lv = [p](int j, int i) { return (j - 1) * p + i + 1; };
  for (int j = 1; j <= r; ++j) {
    Disjunction d;
    for (int i = 0; i < p; ++i) d.insert(LinearEquation::unit(lv(j, i), 1));
    s.premises.push_back(std::move(d));
  }
  for (int j = 1; j <= r; ++j)
    for (int i = 0; i < p; ++i)
      for (int i2 = i + 1; i2 < p; ++i2) {
        Disjunction d;
        d.insert(LinearEquation::unit(lv(j, i), 0));
        d.insert(LinearEquation::unit(lv(j, i2), 0));
        s.premises.push_back(std::move(d));
      }
  for_each_mod_tuple(r, p, [&](const std::vector<int>& tup) {
    Disjunction d;
    for (int j = 1; j <= r; ++j) d.insert(LinearEquation::unit(lv(j, tup[j - 1]), 0));
    s.premises.push_back(std::move(d));
  });
  std::vector<std::pair<int, Int>> terms;
  for (int j = 1; j <= r; ++j)
    for (int i = 1; i < p; ++i) terms.emplace_back(lv(j, i), i);
  LinearForm alpha = LinearForm::of(std::move(terms));
  for (int l = 0; l < r; ++l) s.target.insert(LinearEquation(alpha, 1 + Int{l} * p));
  return s;
}

// Opposite-arc pair on local variables x_{e,i} ↦ i+1, x_{ē,i} ↦ p+i+1, with
// the weighted pair form i·x_{e,i} + (p−i)·x_{ē,p−i} pinned to 0 or p.
LocalShape edge_shape(int p, int residue) {
  LocalShape s;
  auto le = [](int i) { return i + 1; };
  auto lb = [p](int i) { return p + i + 1; };
  for (int base : {0, p}) {
    Disjunction d;
    for (int i = 0; i < p; ++i) d.insert(LinearEquation::unit(base + i + 1, 1));
    s.premises.push_back(std::move(d));
  }
  for (int base : {0, p})
    for (int i = 0; i < p; ++i)
      for (int i2 = i + 1; i2 < p; ++i2) {
        Disjunction d;
        d.insert(LinearEquation::unit(base + i + 1, 0));
        d.insert(LinearEquation::unit(base + i2 + 1, 0));
        s.premises.push_back(std::move(d));
      }
  for (int i = 0; i < p; ++i) {
    int t = (p - i) % p;
    Disjunction d0;
    d0.insert(LinearEquation::unit(le(i), 1));
    d0.insert(LinearEquation::unit(lb(t), 0));
    s.premises.push_back(std::move(d0));
    Disjunction d1;
    d1.insert(LinearEquation::unit(le(i), 0));
    d1.insert(LinearEquation::unit(lb(t), 1));
    s.premises.push_back(std::move(d1));
  }
  LinearForm f = LinearForm::of({{le(residue), residue}, {lb(p - residue), p - residue}});
  s.target.insert(LinearEquation(f, 0));
  s.target.insert(LinearEquation(f, Int{p}));
  return s;
}

Fragment derive_fragment(const LocalShape& shape, int num_vars) {
  DeriveResult d = derive(shape.premises, shape.target, num_vars);
  require(d.status == DeriveStatus::Proved, "local lemma is not derivable");
  Fragment fr;
  fr.final_line = static_cast<int>(d.proof->lines.size()) - 1;
  fr.proof = std::move(*d.proof);
  return fr;
}

// Case analysis on (f=0) ∨ (f=p): either way f is subtracted from every
// equation of the sum line, merging the two shifted value sets.
int subtract_pair(ProofBuilder& b, int sum_line, int case_line) {
  const Disjunction sum = b.at(sum_line);
  const Disjunction cases = b.at(case_line);
  std::vector<DerivationHook> hooks;
  for (const auto& ce : cases.eqs) {
    ProofBuilder hb(b.num_vars());
    int ul = hb.premise_line(hb.add_premise(Disjunction::single(ce)));
    int cur = hb.premise_line(hb.add_premise(sum));
    for (const auto& e : sum.eqs) cur = hb.res_eq(cur, e, ul, ce, true);
    hooks.push_back({Fragment{hb.take(), cur}, {sum_line}});
  }
  return case_analysis_in(b, case_line, hooks);
}

}  // namespace

Formula tseitin_formula(const TseitinInstance& inst) {
  const int p = inst.p;
  const int a = static_cast<int>(inst.arcs.size());
  auto vr = [p](int rank, int i) { return rank * p + i + 1; };
  Formula f;
  f.num_vars = inst.num_vars();
  for (int rank = 0; rank < a; ++rank) {
    Disjunction d;
    for (int i = 0; i < p; ++i) d.insert(LinearEquation::unit(vr(rank, i), 1));
    f.premises.push_back(std::move(d));
  }
  for (int rank = 0; rank < a; ++rank)
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) {
        Disjunction d;
        d.insert(LinearEquation::unit(vr(rank, i), 0));
        d.insert(LinearEquation::unit(vr(rank, j), 0));
        f.premises.push_back(std::move(d));
      }
  for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
    auto [u, v] = inst.graph.edges[e];
    int fw = inst.arc_rank(u, v), bw = inst.arc_rank(v, u);
    for (int i = 0; i < p; ++i) {
      int t = (p - i) % p;
      Disjunction d0;
      d0.insert(LinearEquation::unit(vr(fw, i), 1));
      d0.insert(LinearEquation::unit(vr(bw, t), 0));
      f.premises.push_back(std::move(d0));
      Disjunction d1;
      d1.insert(LinearEquation::unit(vr(fw, i), 0));
      d1.insert(LinearEquation::unit(vr(bw, t), 1));
      f.premises.push_back(std::move(d1));
    }
  }
  for (int v = 1; v <= inst.graph.n; ++v) {
    std::vector<int> outs = inst.out_arcs(v);
    for_each_mod_tuple(inst.regularity, p, [&](const std::vector<int>& tup) {
      Disjunction d;
      for (int j = 0; j < inst.regularity; ++j)
        d.insert(LinearEquation::unit(vr(outs[j], tup[j]), 0));
      f.premises.push_back(std::move(d));
    });
  }
  require(static_cast<int>(f.premises.size()) == inst.num_premises(),
          "premise layout out of sync");
  return f;
}

Proof tseitin_refutation(const TseitinInstance& inst) {
  const int r = inst.regularity, p = inst.p;
  const DeriveOptions opts;
  if (r * p > opts.recursion_cap || 2 * p > opts.recursion_cap)
    throw LocalDerivationTooLarge("local lemmas would exceed the derivation cap");

  Formula f = tseitin_formula(inst);
  ProofBuilder b(f.num_vars);
  for (const auto& d : f.premises) b.add_premise(d);

  // Every vertex neighbourhood is the same shape up to renaming, so the
  // local lemma is derived once and replayed per vertex.
  Fragment vertex_frag = derive_fragment(vertex_shape(r, p), r * p);
  int sum_line = -1;
  for (int v = 1; v <= inst.graph.n; ++v) {
    std::vector<int> outs = inst.out_arcs(v);
    std::vector<int> vmap(r * p + 1, 0);
    for (int j = 1; j <= r; ++j)
      for (int i = 0; i < p; ++i) vmap[(j - 1) * p + i + 1] = outs[j - 1] * p + i + 1;
    Fragment fr = rename_fragment(vertex_frag, vmap, f.num_vars);
    std::vector<int> pmap;
    for (int j = 0; j < r; ++j) pmap.push_back(b.premise_line(inst.atleast_premise(outs[j])));
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < p; ++i)
        for (int i2 = i + 1; i2 < p; ++i2)
          pmap.push_back(b.premise_line(inst.atmost_premise(outs[j], i, i2)));
    for (int t = 0; t < inst.mod_family_size(); ++t)
      pmap.push_back(b.premise_line(inst.mod_premise_base(v) + t));
    int vline = splice(b, fr, pmap);
    sum_line = v == 1 ? vline : combine_value_sets_in(b, sum_line, vline);
  }

  std::vector<Fragment> edge_frags;
  for (int i = 1; i < p; ++i) edge_frags.push_back(derive_fragment(edge_shape(p, i), 2 * p));

  for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
    auto [u, w] = inst.graph.edges[e];
    int fw = inst.arc_rank(u, w), bw = inst.arc_rank(w, u);
    for (int i = 1; i < p; ++i) {
      std::vector<int> vmap(2 * p + 1, 0);
      for (int t = 0; t < p; ++t) {
        vmap[t + 1] = fw * p + t + 1;
        vmap[p + t + 1] = bw * p + t + 1;
      }
      Fragment fr = rename_fragment(edge_frags[i - 1], vmap, f.num_vars);
      std::vector<int> pmap;
      pmap.push_back(b.premise_line(inst.atleast_premise(fw)));
      pmap.push_back(b.premise_line(inst.atleast_premise(bw)));
      for (int rank : {fw, bw})
        for (int a1 = 0; a1 < p; ++a1)
          for (int a2 = a1 + 1; a2 < p; ++a2)
            pmap.push_back(b.premise_line(inst.atmost_premise(rank, a1, a2)));
      for (int t = 0; t < p; ++t) {
        pmap.push_back(b.premise_line(inst.opposite_premise(static_cast<int>(e), t, 0)));
        pmap.push_back(b.premise_line(inst.opposite_premise(static_cast<int>(e), t, 1)));
      }
      int eline = splice(b, fr, pmap);
      sum_line = subtract_pair(b, sum_line, eline);
    }
  }

  int fin = b.simp_constants(sum_line);
  require(b.at(fin).empty(), "parity refutation failed to close");
  return b.take();
}

CliqueColorInstance CliqueColorInstance::make(int n, int k, int kprime) {
  if (n < 1 || kprime < 1 || kprime >= k || k > n)
    throw BadParams("clique-coloring needs 1 <= k' < k <= n");
  if (static_cast<long long>(n) * n * std::max(k, 2) > 400'000'000)
    throw BadParams("clique-coloring instance too large");
  CliqueColorInstance inst;
  inst.n = n;
  inst.k = k;
  inst.kprime = kprime;
  return inst;
}

int CliqueColorInstance::num_vars() const { return n * (n - 1) + k * n + kprime * n; }

int CliqueColorInstance::p_var(int i, int j) const {
  return (i - 1) * (n - 1) + j - (j > i ? 1 : 0);
}

int CliqueColorInstance::q_var(int l, int i) const { return n * (n - 1) + (l - 1) * n + i; }

int CliqueColorInstance::r_var(int l, int i) const {
  return n * (n - 1) + k * n + (l - 1) * n + i;
}

Formula clique_color_formula(int n, int k, int kprime) {
  CliqueColorInstance inst = CliqueColorInstance::make(n, k, kprime);
  Formula f;
  f.num_vars = inst.num_vars();
  auto unit = [](int var, Int val) { return LinearEquation::unit(var, val); };

  for (int l = 1; l <= k; ++l) {
    Disjunction d;
    for (int i = 1; i <= n; ++i) d.insert(unit(inst.q_var(l, i), 1));
    f.premises.push_back(std::move(d));
  }
  for (int l = 1; l <= k; ++l)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Disjunction d;
        d.insert(unit(inst.q_var(l, i), 0));
        d.insert(unit(inst.q_var(l, j), 0));
        f.premises.push_back(std::move(d));
      }
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= k; ++l)
      for (int l2 = l + 1; l2 <= k; ++l2) {
        Disjunction d;
        d.insert(unit(inst.q_var(l, i), 0));
        d.insert(unit(inst.q_var(l2, i), 0));
        f.premises.push_back(std::move(d));
      }
  for (int l = 1; l <= k; ++l)
    for (int l2 = 1; l2 <= k; ++l2) {
      if (l2 == l) continue;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          Disjunction d;
          d.insert(unit(inst.q_var(l, i), 0));
          d.insert(unit(inst.q_var(l2, j), 0));
          d.insert(unit(inst.p_var(i, j), 1));
          f.premises.push_back(std::move(d));
        }
    }
  for (int i = 1; i <= n; ++i) {
    Disjunction d;
    for (int l = 1; l <= kprime; ++l) d.insert(unit(inst.r_var(l, i), 1));
    f.premises.push_back(std::move(d));
  }
  for (int l = 1; l <= kprime; ++l)
    for (int l2 = l + 1; l2 <= kprime; ++l2)
      for (int i = 1; i <= n; ++i) {
        Disjunction d;
        d.insert(unit(inst.r_var(l, i), 0));
        d.insert(unit(inst.r_var(l2, i), 0));
        f.premises.push_back(std::move(d));
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int t = 1; t <= kprime; ++t) {
        Disjunction d;
        d.insert(unit(inst.p_var(i, j), 0));
        d.insert(unit(inst.r_var(t, i), 0));
        d.insert(unit(inst.r_var(t, j), 0));
        f.premises.push_back(std::move(d));
      }
    }
  return f;
}

}  // namespace linres
