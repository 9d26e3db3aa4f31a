#include "linres/implcomplete.hpp"

#include <algorithm>
#include <set>

namespace linres {

using detail::require;

namespace {

void collect_vars(const Disjunction& d, std::set<int>& out) {
  for (const auto& e : d.eqs)
    for (const auto& [v, c] : e.form.terms) out.insert(v);
}

// e with x_v fixed to b: drop the v-term and adjust the value.
LinearEquation restrict_eq(const LinearEquation& e, int v, int b) {
  Int cv = e.form.coef(v);
  if (cv == 0) return e;
  LinearForm f;
  for (const auto& [u, c] : e.form.terms)
    if (u != v) f.terms.emplace_back(u, c);
  return LinearEquation(std::move(f), b ? checked_sub(e.rhs, cv) : e.rhs);
}

bool variable_free_unsat(const Disjunction& d) {
  for (const auto& e : d.eqs)
    if (!e.variable_free() || e.rhs == 0) return false;
  return true;
}

// Brute force over the occurring variables only.
std::optional<Assignment> find_countermodel(const std::vector<Disjunction>& premises,
                                            const Disjunction& target,
                                            const std::vector<int>& occ, int num_vars) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << occ.size()); ++mask) {
    Assignment a = Assignment::from_mask(0, num_vars);
    for (std::size_t i = 0; i < occ.size(); ++i) a.bits[occ[i] - 1] = (mask >> i) & 1;
    bool all = true;
    for (const auto& p : premises)
      if (!eval(p, a)) {
        all = false;
        break;
      }
    if (all && !eval(target, a)) return a;
  }
  return std::nullopt;
}

struct Searcher {
  ProofBuilder& b;

  struct Frame {
    std::vector<int> lines;
    std::vector<Disjunction> rests;
    Disjunction target;
    Disjunction side;
    std::vector<int> vars;  // candidate branch variables, descending
  };

  int solve(const Frame& f) {
    for (std::size_t i = 0; i < f.rests.size(); ++i)
      if (variable_free_unsat(f.rests[i])) return b.simp_constants(f.lines[i]);
    if (f.target.contains(LinearEquation::constant(0))) return b.zero_line();
    for (std::size_t i = 0; i < f.rests.size(); ++i)
      if (f.rests[i].subset_of(f.target)) return f.lines[i];

    int v = 0;
    std::vector<int> below;
    for (int cand : f.vars) {
      if (v != 0) {
        below.push_back(cand);
        continue;
      }
      bool occurs = f.target.eqs.end() !=
                    std::find_if(f.target.eqs.begin(), f.target.eqs.end(),
                                 [cand](const LinearEquation& e) { return e.form.coef(cand) != 0; });
      for (std::size_t i = 0; !occurs && i < f.rests.size(); ++i)
        for (const auto& e : f.rests[i].eqs)
          if (e.form.coef(cand) != 0) {
            occurs = true;
            break;
          }
      if (occurs) v = cand;
    }
    require(v != 0, "no branch variable left although no prune applies");

    int branch_line[2] = {-1, -1};
    for (int bit = 0; bit <= 1; ++bit) {
      branch_line[bit] = branch(f, v, bit, below);
      LinearEquation other = LinearEquation::unit(v, 1 - bit);
      if (!b.at(branch_line[bit]).contains(other)) return branch_line[bit];
    }
    int r = b.res_eq(branch_line[0], LinearEquation::unit(v, 1), branch_line[1],
                     LinearEquation::unit(v, 0), true);
    return b.simp_eq(r, LinearEquation::constant(1));
  }

  int branch(const Frame& f, int v, int bit, const std::vector<int>& below) {
    const LinearEquation on = LinearEquation::unit(v, bit);
    const LinearEquation off = LinearEquation::unit(v, 1 - bit);
    const int ax = b.axiom(v);

    Frame child;
    child.vars = below;
    child.side = f.side;
    child.side.insert(off);
    for (std::size_t i = 0; i < f.rests.size(); ++i) {
      const Disjunction& R = f.rests[i];
      Disjunction R2;
      bool satisfied = false, touched = false;
      for (const auto& e : R.eqs) {
        LinearEquation er = restrict_eq(e, v, bit);
        if (er.variable_free() && er.rhs == 0 && !(e.variable_free() && e.rhs == 0)) satisfied = true;
        if (e.form.coef(v) != 0) touched = true;
        R2.insert(std::move(er));
      }
      if (satisfied) continue;  // the premise holds in this branch; drop it
      if (!touched) {
        child.lines.push_back(f.lines[i]);
        child.rests.push_back(R);
        continue;
      }
      int cur = f.lines[i];
      for (const auto& e : R.eqs) {
        Int cv = e.form.coef(v);
        if (cv == 0 || !b.at(cur).contains(e)) continue;
        LinearEquation g = e;
        for (Int t = 0, n = checked_abs(cv); t < n; ++t) {
          cur = b.res_eq(cur, g, ax, on, cv > 0);
          g = cv > 0 ? eq_sub(g, on) : eq_add(g, on);
        }
      }
      child.lines.push_back(cur);
      child.rests.push_back(std::move(R2));
    }
    Disjunction t2;
    for (const auto& e : f.target.eqs) t2.insert(restrict_eq(e, v, bit));
    child.target = std::move(t2);

    int sub = solve(child);

    // Reintroduce x_v into the equations that came from restricted targets.
    const Disjunction snapshot = b.at(sub);
    for (const auto& g : snapshot.eqs) {
      if (g == off || f.side.contains(g) || f.target.contains(g)) continue;
      const LinearEquation* pre = nullptr;
      for (const auto& e : f.target.eqs)
        if (e.form.coef(v) != 0 && restrict_eq(e, v, bit) == g) {
          pre = &e;
          break;
        }
      require(pre != nullptr, "unaccounted equation after branch: " + to_string(g));
      Int cv = pre->form.coef(v);
      LinearEquation cur_eq = g;
      for (Int t = 0, n = checked_abs(cv); t < n; ++t) {
        sub = b.res_eq(sub, cur_eq, ax, on, cv < 0);
        cur_eq = cv < 0 ? eq_sub(cur_eq, on) : eq_add(cur_eq, on);
      }
    }
    return sub;
  }
};

std::vector<int> occurring_descending(const std::vector<Disjunction>& premises,
                                      const Disjunction& target) {
  std::set<int> occ;
  for (const auto& p : premises) collect_vars(p, occ);
  collect_vars(target, occ);
  return {occ.rbegin(), occ.rend()};
}

}  // namespace

DeriveResult derive(const std::vector<Disjunction>& premises, const Disjunction& target,
                    int num_vars, const DeriveOptions& opts) {
  if (num_vars < 1) throw DomainError("derive needs at least one variable");
  for (const auto& p : premises)
    if (p.max_var() > num_vars) throw DomainError("premise uses an unknown variable");
  if (target.max_var() > num_vars) throw DomainError("target uses an unknown variable");

  std::vector<int> occ = occurring_descending(premises, target);
  if (static_cast<int>(occ.size()) > opts.oracle_cap || static_cast<int>(occ.size()) > 62) {
    DeriveResult r;
    r.status = DeriveStatus::TooManyVariables;
    return r;
  }
  std::vector<int> asc(occ.rbegin(), occ.rend());
  if (auto counter = find_countermodel(premises, target, asc, num_vars)) {
    DeriveResult r;
    r.status = DeriveStatus::NotImplied;
    r.countermodel = std::move(counter);
    return r;
  }
  if (static_cast<int>(occ.size()) > opts.recursion_cap) {
    DeriveResult r;
    r.status = DeriveStatus::TooManyVariables;
    return r;
  }

  ProofBuilder b(num_vars);
  Searcher::Frame top;
  for (const auto& p : premises) {
    top.lines.push_back(b.premise_line(b.add_premise(p)));
    top.rests.push_back(p);
  }
  top.target = target;
  top.vars = occ;
  Searcher searcher{b};
  b.weaken_to(searcher.solve(top), target);

  DeriveResult r;
  r.status = DeriveStatus::Proved;
  r.proof = b.take();
  return r;
}

DeriveResult derive_r0(const std::vector<Disjunction>& premises, const Disjunction& target,
                       int num_vars, const R0Params& params, const DeriveOptions& opts) {
  DeriveResult r = derive(premises, target, num_vars, opts);
  if (r.status != DeriveStatus::Proved) return r;
  R0ProofResult cls = r0_classify(*r.proof, params);
  if (!cls.ok) {
    r.status = DeriveStatus::NotR0;
    r.bad_line = cls.bad_line;
  }
  return r;
}

int derive_in(ProofBuilder& host, const std::vector<int>& premise_ids, const Disjunction& target,
              const DeriveOptions& opts) {
  std::vector<Disjunction> premises;
  for (int id : premise_ids) premises.push_back(host.at(id));

  std::vector<int> occ = occurring_descending(premises, target);
  if (static_cast<int>(occ.size()) > opts.oracle_cap || static_cast<int>(occ.size()) > 62)
    throw DomainError("local derivation involves too many variables");
  std::vector<int> asc(occ.rbegin(), occ.rend());
  if (auto counter = find_countermodel(premises, target, asc, host.num_vars()))
    throw DomainError("local derivation target is not implied (countermodel " +
                      counter->to_string() + ")");
  if (static_cast<int>(occ.size()) > opts.recursion_cap)
    throw DomainError("local derivation involves too many variables");

  Searcher::Frame top;
  top.lines = premise_ids;
  top.rests = std::move(premises);
  top.target = target;
  top.vars = occ;
  Searcher searcher{host};
  int fin = searcher.solve(top);
  return host.weaken_to(fin, target);
}

}  // namespace linres
