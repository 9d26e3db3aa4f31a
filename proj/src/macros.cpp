#include "linres/macros.hpp"

#include <algorithm>
#include <set>

namespace linres {

using detail::require;

namespace {
bool homogeneous(const Disjunction& d) {
  for (std::size_t i = 1; i < d.eqs.size(); ++i)
    if (!(d.eqs[i].form == d.eqs[0].form)) return false;
  return true;
}

void validate_hooks(const Disjunction& case_line, const std::vector<DerivationHook>& hooks) {
  require(hooks.size() == case_line.eqs.size(), "one hook per case equation required");
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    const Proof& fp = hooks[i].fragment.proof;
    require(!fp.premises.empty(), "hook fragment needs the case unit as premise 0");
    require(fp.premises[0].same_set(Disjunction::single(case_line.eqs[i])),
            "hook premise 0 must be the case unit " + to_string(case_line.eqs[i]));
    require(hooks[i].imports.size() + 1 == fp.premises.size(),
            "hook imports must cover fragment premises 1..");
  }
}

Disjunction hooks_target(const std::vector<DerivationHook>& hooks) {
  Disjunction target;
  for (const auto& h : hooks)
    target = target.union_with(h.fragment.proof.lines[h.fragment.final_line].content);
  return target;
}
LinearEquation rename_eq(const LinearEquation& e, const std::vector<int>& var_map) {
  std::vector<std::pair<int, Int>> terms;
  for (const auto& [v, c] : e.form.terms) {
    require(v < static_cast<int>(var_map.size()) && var_map[v] >= 1,
            "rename map misses a fragment variable");
    terms.emplace_back(var_map[v], c);
  }
  return LinearEquation(LinearForm::of(std::move(terms)), e.rhs);
}

Disjunction rename_disj(const Disjunction& d, const std::vector<int>& var_map) {
  Disjunction out;
  for (const auto& e : d.eqs) out.eqs.push_back(rename_eq(e, var_map));
  return out;
}
}  // namespace

Fragment rename_fragment(const Fragment& frag, const std::vector<int>& var_map,
                         int new_num_vars) {
  std::set<int> seen;
  for (int v : var_map)
    if (v >= 1) {
      require(v <= new_num_vars, "rename map exceeds the new variable count");
      require(seen.insert(v).second, "rename map must be injective");
    }
  Fragment out;
  out.final_line = frag.final_line;
  out.proof.num_vars = new_num_vars;
  for (const auto& pr : frag.proof.premises)
    out.proof.premises.push_back(rename_disj(pr, var_map));
  for (const auto& ln : frag.proof.lines) {
    ProofLine nl;
    nl.content = rename_disj(ln.content, var_map);
    nl.just = ln.just;
    if (nl.just.rule == Rule::Axiom) {
      require(nl.just.var < static_cast<int>(var_map.size()) && var_map[nl.just.var] >= 1,
              "rename map misses a fragment variable");
      nl.just.var = var_map[nl.just.var];
    }
    if (nl.just.rule == Rule::Weaken) nl.just.weak_eq = rename_eq(nl.just.weak_eq, var_map);
    out.proof.lines.push_back(std::move(nl));
  }
  return out;
}

int splice_lifted(ProofBuilder& host, const Fragment& frag, const std::vector<int>& premise_map,
                  const Disjunction& side) {
  const Proof& fp = frag.proof;
  require(frag.final_line >= 0 && frag.final_line < static_cast<int>(fp.lines.size()),
          "fragment final line out of range");
  require(premise_map.size() == fp.premises.size(), "premise map size mismatch");
  require(fp.num_vars <= host.num_vars(), "fragment uses more variables than the host");
  std::vector<int> lifted(fp.lines.size(), -1);
  for (std::size_t t = 0; t < fp.lines.size(); ++t) {
    const ProofLine& fl = fp.lines[t];
    Disjunction want = fl.content.union_with(side);
    int made = -1;
    switch (fl.just.rule) {
      case Rule::Premise: {
        made = premise_map[fl.just.premise];
        require(made >= 0, "fragment premise not mapped");
        break;
      }
      case Rule::Axiom:
        made = host.axiom(fl.just.var);
        break;
      case Rule::Res: {
        const LinearEquation& e1 = fp.lines[fl.just.a1].content.eqs[fl.just.i1];
        const LinearEquation& e2 = fp.lines[fl.just.a2].content.eqs[fl.just.i2];
        made = host.res_eq(lifted[fl.just.a1], e1, lifted[fl.just.a2], e2, fl.just.subtract);
        break;
      }
      case Rule::Weaken:
        made = host.weaken(lifted[fl.just.a1], fl.just.weak_eq);
        break;
      case Rule::Simp: {
        const LinearEquation& e = fp.lines[fl.just.a1].content.eqs[fl.just.i1];
        made = host.simp_eq(lifted[fl.just.a1], e);
        break;
      }
    }
    lifted[t] = host.weaken_to(made, want);
  }
  return lifted[frag.final_line];
}

int splice(ProofBuilder& host, const Fragment& frag, const std::vector<int>& premise_map) {
  return splice_lifted(host, frag, premise_map, Disjunction{});
}

int case_analysis_in(ProofBuilder& host, int case_line, const std::vector<DerivationHook>& hooks) {
  const Disjunction C = host.at(case_line);
  require(!C.empty(), "empty case line");
  require(homogeneous(C), "case line must share one linear form");
  validate_hooks(C, hooks);
  const std::size_t ell = C.eqs.size();

  std::vector<int> lifted(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    Disjunction side = C.without_index(i);
    std::vector<int> pmap{case_line};
    pmap.insert(pmap.end(), hooks[i].imports.begin(), hooks[i].imports.end());
    lifted[i] = splice_lifted(host, hooks[i].fragment, pmap, side);
  }

  Disjunction target = hooks_target(hooks);
  int cur = lifted[0];
  for (std::size_t k = 1; k < ell; ++k) {
    const LinearEquation& e = C.eqs[k];
    if (!host.at(cur).contains(e)) continue;  // consumed by an earlier conclusion
    std::vector<LinearEquation> dQ;
    for (std::size_t j = 0; j < ell; ++j)
      if (j != k) dQ.push_back(C.eqs[j]);
    cur = host.eliminate_singleton_vs(cur, e, lifted[k], dQ);
  }
  return host.weaken_to(cur, target);
}

int case_analysis_seq_in(ProofBuilder& host, int case_line,
                         const std::vector<DerivationHook>& hooks) {
  const Disjunction C = host.at(case_line);
  require(!C.empty(), "empty case line");
  validate_hooks(C, hooks);

  Disjunction target = hooks_target(hooks);
  int cur = case_line;
  for (std::size_t k = 0; k < C.eqs.size(); ++k) {
    const Disjunction curC = host.at(cur);
    int idx = curC.index_of(C.eqs[k]);
    Disjunction side = idx >= 0 ? curC.without_index(idx) : curC;
    std::vector<int> pmap{cur};
    pmap.insert(pmap.end(), hooks[k].imports.begin(), hooks[k].imports.end());
    cur = splice_lifted(host, hooks[k].fragment, pmap, side);
  }
  return host.weaken_to(cur, target);
}

Fragment case_analysis(const Disjunction& case_line, const std::vector<Fragment>& hooks) {
  int nv = case_line.max_var();
  for (const auto& h : hooks) nv = std::max(nv, h.proof.num_vars);
  ProofBuilder b(nv);
  int cl = b.premise_line(b.add_premise(case_line));
  std::vector<DerivationHook> dh;
  for (const auto& h : hooks) {
    DerivationHook x;
    x.fragment = h;
    for (std::size_t j = 1; j < h.proof.premises.size(); ++j)
      x.imports.push_back(b.premise_line(b.add_premise(h.proof.premises[j])));
    dh.push_back(std::move(x));
  }
  int fin = case_analysis_in(b, cl, dh);
  return {b.take(), fin};
}

int combine_value_sets_in(ProofBuilder& host, int id1, int id2) {
  const Disjunction D1 = host.at(id1);
  const Disjunction D2 = host.at(id2);
  require(!D1.empty() && !D2.empty(), "value lines must be nonempty");
  require(homogeneous(D1) && homogeneous(D2), "value lines must each share one form");
  const LinearForm& z1 = D1.eqs[0].form;
  const LinearForm& z2 = D2.eqs[0].form;
  require(!z1.empty() && !z2.empty(), "value lines need nonempty forms");
  for (auto& [v, c] : z1.terms)
    require(z2.coef(v) == 0, "value lines must not share variables");

  std::vector<DerivationHook> hooks;
  for (const auto& ceq : D1.eqs) {
    ProofBuilder hb(host.num_vars());
    int ul = hb.premise_line(hb.add_premise(Disjunction::single(ceq)));
    int cur = hb.premise_line(hb.add_premise(D2));
    for (const auto& e2 : D2.eqs) cur = hb.res_eq(cur, e2, ul, ceq, false);
    hooks.push_back({Fragment{hb.take(), cur}, {id2}});
  }
  int fin = case_analysis_in(host, id1, hooks);

  Disjunction expect;
  for (const auto& e1 : D1.eqs)
    for (const auto& e2 : D2.eqs) expect.insert(eq_add(e1, e2));
  require(host.at(fin).same_set(expect), "combine_value_sets result mismatch");
  return fin;
}

Fragment combine_value_sets(const Disjunction& d1, const Disjunction& d2) {
  int nv = std::max(d1.max_var(), d2.max_var());
  ProofBuilder b(nv);
  int l1 = b.premise_line(b.add_premise(d1));
  int l2 = b.premise_line(b.add_premise(d2));
  int fin = combine_value_sets_in(b, l1, l2);
  return {b.take(), fin};
}

int all_values_in(ProofBuilder& host, const LinearForm& a) {
  if (a.terms.empty()) return host.zero_line();

  auto term_line = [&host](int v, Int c) -> int {
    int cur = host.axiom(v);
    if (c == 1) return cur;
    LinearEquation e0 = LinearEquation::unit(v, 0);
    LinearEquation e1 = LinearEquation::unit(v, 1);
    if (c < 0) {
      cur = host.flip_eq(cur, e0);
      cur = host.flip_eq(cur, e1);
      e0 = eq_negate(e0);
      e1 = eq_negate(e1);
    }
    Int k = checked_abs(c);
    cur = host.scale_eq(cur, e0, k);
    cur = host.scale_eq(cur, e1, k);
    return cur;
  };

  int cur = term_line(a.terms[0].first, a.terms[0].second);
  for (std::size_t i = 1; i < a.terms.size(); ++i)
    cur = combine_value_sets_in(host, cur, term_line(a.terms[i].first, a.terms[i].second));

  Disjunction expect;
  for (Int s : attainable_values(a)) expect.insert(LinearEquation(a, s));
  require(host.at(cur).same_set(expect), "all_values result mismatch");
  return cur;
}

Fragment all_values(const LinearForm& a) {
  ProofBuilder b(std::max(1, a.max_var()));
  int fin = all_values_in(b, a);
  return {b.take(), fin};
}

int one_hot_sum_in(ProofBuilder& host, const std::vector<int>& vars, int hot_line) {
  require(!vars.empty(), "one_hot_sum needs at least one variable");
  require(std::set<int>(vars.begin(), vars.end()).size() == vars.size(),
          "one_hot_sum variables must be distinct");
  Disjunction hot;
  for (int v : vars) hot.insert(LinearEquation::unit(v, 1));
  require(host.at(hot_line).same_set(hot), "hot line must be the one-hot clause over vars");
  const int n = static_cast<int>(vars.size());
  if (n == 1) return hot_line;

  std::vector<std::pair<int, Int>> full_terms;
  for (int v : vars) full_terms.emplace_back(v, 1);
  LinearForm full = LinearForm::of(full_terms);

  // Value lines are derived in the host first: replaying them under a lift
  // would put the full-sum form, a partial-sum form, and a residual constant
  // on one line at once, leaving the three-group fragment.
  std::vector<DerivationHook> hooks;
  for (int i = 0; i < n; ++i) {
    LinearEquation ui = LinearEquation::unit(vars[i], 1);
    std::vector<std::pair<int, Int>> rest_terms;
    for (int j = 0; j < n; ++j)
      if (j != i) rest_terms.emplace_back(vars[j], 1);
    LinearForm rest = LinearForm::of(rest_terms);
    int values = all_values_in(host, rest);

    ProofBuilder hb(host.num_vars());
    int ul = hb.premise_line(hb.add_premise(Disjunction::single(ui)));
    int cur = hb.premise_line(hb.add_premise(host.at(values)));
    for (Int s = 0; s <= n - 1; ++s)
      cur = hb.res_eq(cur, LinearEquation(rest, s), ul, ui, false);
    hooks.push_back({Fragment{hb.take(), cur}, {values}});
  }
  int fin = case_analysis_seq_in(host, hot_line, hooks);

  Disjunction expect;
  for (Int c = 1; c <= n; ++c) expect.insert(LinearEquation(full, c));
  require(host.at(fin).same_set(expect), "one_hot_sum result mismatch");
  return fin;
}

Fragment one_hot_sum(int n) {
  require(n >= 1, "one_hot_sum needs n ≥ 1");
  ProofBuilder b(n);
  std::vector<int> vars;
  Disjunction hot;
  for (int v = 1; v <= n; ++v) {
    vars.push_back(v);
    hot.insert(LinearEquation::unit(v, 1));
  }
  int hl = b.premise_line(b.add_premise(hot));
  int fin = one_hot_sum_in(b, vars, hl);
  return {b.take(), fin};
}

int at_most_one_sum_in(ProofBuilder& host, const std::vector<int>& vars,
                       const std::function<int(int, int)>& pair_line) {
  require(!vars.empty(), "at_most_one_sum needs at least one variable");
  require(std::set<int>(vars.begin(), vars.end()).size() == vars.size(),
          "at_most_one_sum variables must be distinct");
  const int n = static_cast<int>(vars.size());
  int cur = host.axiom(vars[0]);
  if (n == 1) return cur;

  LinearForm S = LinearForm::of({{vars[0], 1}});
  for (int m = 1; m < n; ++m) {
    const int z = vars[m];
    LinearEquation z0 = LinearEquation::unit(z, 0);
    LinearEquation z1 = LinearEquation::unit(z, 1);
    LinearEquation s0(S, 0), s1(S, 1);
    LinearForm S2 = form_add(S, LinearForm::of({{z, 1}}));

    ProofBuilder b0(host.num_vars());
    int b0_final;
    {
      int ul = b0.premise_line(b0.add_premise(Disjunction::single(z0)));
      int c = b0.premise_line(b0.add_premise(host.at(cur)));
      c = b0.res_eq(c, s0, ul, z0, false);
      b0_final = b0.res_eq(c, s1, ul, z0, false);
      require(b0.at(b0_final).same_set(Disjunction({LinearEquation(S2, 0), LinearEquation(S2, 1)})),
              "at_most_one_sum branch-0 mismatch");
    }

    ProofBuilder b1(host.num_vars());
    std::vector<int> b1_imports;
    int b1_final;
    {
      int ul = b1.premise_line(b1.add_premise(Disjunction::single(z1)));
      std::vector<int> plines;
      for (int i = 0; i < m; ++i) {
        int hid = pair_line(i + 1, m + 1);
        Disjunction expect_pair({LinearEquation::unit(vars[i], 0), z0});
        require(host.at(hid).same_set(expect_pair),
                "pair line (" + std::to_string(i + 1) + "," + std::to_string(m + 1) +
                    ") has unexpected content");
        b1_imports.push_back(hid);
        plines.push_back(b1.premise_line(b1.add_premise(host.at(hid))));
      }
      int t = ul;
      LinearEquation acc = z1;
      for (int i = 0; i < m; ++i) {
        int u = b1.res_eq(plines[i], z0, ul, z1, true);
        u = b1.simp_constants(u);  // (x_i = 0)
        t = b1.res_eq(t, acc, u, LinearEquation::unit(vars[i], 0), false);
        acc = eq_add(acc, LinearEquation::unit(vars[i], 0));
      }
      require(acc == LinearEquation(S2, 1), "at_most_one_sum branch-1 accumulator mismatch");
      b1_final = t;
    }

    std::vector<DerivationHook> hooks;
    hooks.push_back({Fragment{b0.take(), b0_final}, {cur}});
    hooks.push_back({Fragment{b1.take(), b1_final}, b1_imports});
    cur = case_analysis_in(host, host.axiom(z), hooks);
    S = S2;
  }

  Disjunction expect({LinearEquation(S, 0), LinearEquation(S, 1)});
  require(host.at(cur).same_set(expect), "at_most_one_sum result mismatch");
  return cur;
}

Fragment at_most_one_sum(int n) {
  require(n >= 1, "at_most_one_sum needs n ≥ 1");
  ProofBuilder b(n);
  std::vector<int> vars;
  for (int v = 1; v <= n; ++v) vars.push_back(v);
  std::map<std::pair<int, int>, int> pair_lines;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Disjunction d({LinearEquation::unit(i, 0), LinearEquation::unit(j, 0)});
      pair_lines[{i, j}] = b.premise_line(b.add_premise(d));
    }
  int fin = at_most_one_sum_in(b, vars, [&](int i, int j) { return pair_lines.at({i, j}); });
  return {b.take(), fin};
}

}  // namespace linres
