#include "linres/rcp.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linres/builder.hpp"
#include "linres/macros.hpp"

namespace linres {

namespace {

constexpr Int kMaxSpan = 1'000'000;

[[noreturn]] void fail(int step, const std::string& msg) {
  throw InvalidRcpStep("rcp step " + std::to_string(step + 1) + ": " + msg);
}

Int ceil_div(Int a, Int c) {  // c > 0
  Int q = a / c;
  if (a % c > 0) ++q;
  return q;
}

std::string ineq_text(const Inequality& q) {
  std::string s;
  for (auto& [v, c] : q.lhs.terms) {
    s += std::to_string(v);
    s += ':';
    s += std::to_string(c);
    s += ' ';
  }
  s += ">= ";
  s += std::to_string(q.rhs);
  return s;
}

std::string line_text(const std::vector<Inequality>& list) {
  if (list.empty()) return "FALSE";
  std::string s;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) s += " | ";
    s += ineq_text(list[i]);
  }
  return s;
}

std::vector<Inequality> dedup_line(const std::vector<Inequality>& list) {
  std::vector<Inequality> out;
  for (const auto& q : list)
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  return out;
}

bool same_line_set(const std::vector<Inequality>& a, const std::vector<Inequality>& b) {
  if (a.size() != b.size()) return false;  // both duplicate-free
  for (const auto& q : a)
    if (std::find(b.begin(), b.end(), q) == b.end()) return false;
  return true;
}

std::vector<Inequality> drop_index(const std::vector<Inequality>& list, int i) {
  std::vector<Inequality> out;
  for (std::size_t j = 0; j < list.size(); ++j)
    if (static_cast<int>(j) != i) out.push_back(list[j]);
  return out;
}

void check_canonical(int step, const Inequality& q, int num_vars) {
  int prev = 0;
  for (auto& [v, c] : q.lhs.terms) {
    if (v <= prev) fail(step, "inequality form not canonical: " + ineq_text(q));
    if (c == 0) fail(step, "zero coefficient in inequality: " + ineq_text(q));
    prev = v;
  }
  if (q.lhs.max_var() > num_vars) fail(step, "inequality uses a variable past num_vars");
}

Inequality split_partner(const Inequality& q) {
  return {form_scale(q.lhs, -1), checked_sub(1, q.rhs)};
}

// The recomputed (duplicate-free) line of every step; throws on any rule
// violation.
std::vector<std::vector<Inequality>> audit_steps(const RcpProof& rp) {
  if (rp.num_vars < 0) throw InvalidRcpStep("negative variable count");
  std::vector<std::vector<Inequality>> sets;
  sets.reserve(rp.steps.size());
  for (std::size_t s = 0; s < rp.steps.size(); ++s) {
    const RcpStep& st = rp.steps[s];
    const int idx = static_cast<int>(s);
    std::vector<Inequality> stated = dedup_line(st.stated);
    for (const auto& q : stated) check_canonical(idx, q, rp.num_vars);

    auto antecedent = [&](int a) -> const std::vector<Inequality>& {
      if (a < 0 || a >= idx) fail(idx, "antecedent out of range");
      return sets[a];
    };
    auto member = [&](const std::vector<Inequality>& list, int i) -> const Inequality& {
      if (i < 0 || i >= static_cast<int>(list.size())) fail(idx, "inequality index out of range");
      return list[i];
    };

    std::vector<Inequality> expected;
    bool compare = true;
    switch (st.rule) {
      case RcpRule::Input:
        compare = false;
        break;
      case RcpRule::VarLower: {
        if (st.var < 1 || st.var > rp.num_vars) fail(idx, "axiom variable out of range");
        expected.push_back({LinearForm::of({{st.var, 1}}), 0});
        break;
      }
      case RcpRule::VarUpper: {
        if (st.var < 1 || st.var > rp.num_vars) fail(idx, "axiom variable out of range");
        expected.push_back({LinearForm::of({{st.var, -1}}), -1});
        break;
      }
      case RcpRule::Split: {
        check_canonical(idx, st.ineq, rp.num_vars);
        expected = dedup_line({st.ineq, split_partner(st.ineq)});
        break;
      }
      case RcpRule::Add: {
        const auto& l1 = antecedent(st.a1);
        const auto& l2 = antecedent(st.a2);
        const Inequality& q1 = member(l1, st.i1);
        const Inequality& q2 = member(l2, st.i2);
        Inequality sum{form_add(q1.lhs, q2.lhs), checked_add(q1.rhs, q2.rhs)};
        expected = drop_index(l1, st.i1);
        for (const auto& q : drop_index(l2, st.i2)) expected.push_back(q);
        expected.push_back(sum);
        expected = dedup_line(expected);
        break;
      }
      case RcpRule::Weaken: {
        check_canonical(idx, st.ineq, rp.num_vars);
        expected = antecedent(st.a1);
        expected.push_back(st.ineq);
        expected = dedup_line(expected);
        break;
      }
      case RcpRule::DropFalse: {
        const auto& l1 = antecedent(st.a1);
        const Inequality& q = member(l1, st.i1);
        if (!q.lhs.empty() || q.rhs != 1) fail(idx, "rule3 needs the inequality 0 >= 1");
        expected = drop_index(l1, st.i1);
        break;
      }
      case RcpRule::Multiply: {
        if (st.c < 0) fail(idx, "rule4 needs a nonnegative scalar");
        const auto& l1 = antecedent(st.a1);
        const Inequality& q = member(l1, st.i1);
        Inequality scaled{form_scale(q.lhs, st.c), checked_mul(q.rhs, st.c)};
        expected = drop_index(l1, st.i1);
        expected.push_back(scaled);
        expected = dedup_line(expected);
        break;
      }
      case RcpRule::Divide: {
        if (st.c < 1) fail(idx, "rule5 needs a positive scalar");
        const auto& l1 = antecedent(st.a1);
        const Inequality& q = member(l1, st.i1);
        std::vector<std::pair<int, Int>> terms;
        for (auto& [v, c] : q.lhs.terms) {
          if (c % st.c != 0) fail(idx, "rule5 scalar does not divide every coefficient");
          terms.emplace_back(v, c / st.c);
        }
        Inequality divided{LinearForm::of(std::move(terms)), ceil_div(q.rhs, st.c)};
        expected = drop_index(l1, st.i1);
        expected.push_back(divided);
        expected = dedup_line(expected);
        break;
      }
    }
    if (compare && !same_line_set(stated, expected))
      fail(idx, "stated line differs from the rule's result; expected " + line_text(expected));
    sets.push_back(std::move(stated));
  }
  return sets;
}

Disjunction translate_line(const std::vector<Inequality>& list) {
  Disjunction d;
  for (const auto& q : list)
    for (const auto& e : ineq_to_disjunction(q).eqs) d.insert(e);
  return d;
}

// Removes e (whose value exceeds everything its form attains) from line idP.
// Residual constants may merge with constants already on the line; any copy
// lost that way is restored by the caller's closing weaken_to.
int purge_unattainable(ProofBuilder& b, int idP, const LinearEquation& e) {
  if (e.form.empty()) return b.simp_eq(idP, e);
  const Disjunction P = b.at(idP);
  const Disjunction rest = P.without_index(P.index_of(e));
  int av = all_values_in(b, e.form);
  const Disjunction avc = b.at(av);
  int cur = b.res_eq(idP, e, av, avc.eqs[0], true);
  cur = b.simp_eq(cur, LinearEquation::constant(checked_sub(e.rhs, avc.eqs[0].rhs)));
  for (std::size_t j = 1; j < avc.eqs.size(); ++j) {
    const LinearEquation& dq = avc.eqs[j];
    if (rest.contains(dq)) continue;
    if (!b.at(cur).contains(dq)) continue;
    cur = b.res_eq(cur, dq, idP, e, true);
    cur = b.simp_eq(cur, LinearEquation::constant(checked_sub(dq.rhs, e.rhs)));
  }
  return cur;
}

int translate_split(ProofBuilder& b, const Inequality& q, const Disjunction& target) {
  if (q.lhs.empty()) return b.weaken_to(b.zero_line(), target);
  int cur = all_values_in(b, q.lhs);
  const Disjunction avc = b.at(cur);
  for (const LinearEquation& e : avc.eqs)
    if (e.rhs < q.rhs) cur = b.flip_eq(cur, e);
  return b.weaken_to(cur, target);
}

DerivationHook passthrough_hook(const ProofBuilder& b, const LinearEquation& unit,
                                const Disjunction& target) {
  ProofBuilder hb(b.num_vars());
  int u = hb.premise_line(hb.add_premise(Disjunction::single(unit)));
  int fin = hb.weaken_to(u, target);
  return {Fragment{hb.take(), fin}, {}};
}

int translate_add(ProofBuilder& b, int line1, int line2, const Inequality& q1,
                  const Inequality& q2, const Disjunction& target) {
  const Disjunction t1 = ineq_to_disjunction(q1);
  const Disjunction t2 = ineq_to_disjunction(q2);
  const Disjunction line1c = b.at(line1);
  const Disjunction line2c = b.at(line2);
  std::vector<DerivationHook> hooks;
  for (const LinearEquation& e : line1c.eqs) {
    if (!t1.contains(e)) {
      hooks.push_back(passthrough_hook(b, e, target));
      continue;
    }
    ProofBuilder hb(b.num_vars());
    int unit = hb.premise_line(hb.add_premise(Disjunction::single(e)));
    int cur = hb.premise_line(hb.add_premise(line2c));
    for (const LinearEquation& g : t2.eqs) {
      if (!hb.at(cur).contains(g)) continue;
      LinearEquation sum = eq_add(g, e);
      cur = hb.res_eq(cur, g, unit, e, false);
      if (!target.contains(sum)) cur = purge_unattainable(hb, cur, sum);
    }
    cur = hb.weaken_to(cur, target);
    hooks.push_back({Fragment{hb.take(), cur}, {line2}});
  }
  return case_analysis_seq_in(b, line1, hooks);
}

int translate_multiply(ProofBuilder& b, int line1, const Inequality& q, Int c,
                       const Disjunction& target) {
  if (c == 1) return b.weaken_to(line1, target);
  const Disjunction tq = ineq_to_disjunction(q);
  const Disjunction line1c = b.at(line1);
  std::vector<DerivationHook> hooks;
  for (const LinearEquation& e : line1c.eqs) {
    if (!tq.contains(e)) {
      hooks.push_back(passthrough_hook(b, e, target));
      continue;
    }
    ProofBuilder hb(b.num_vars());
    int unit = hb.premise_line(hb.add_premise(Disjunction::single(e)));
    int cur = hb.scale_eq(unit, e, c);
    cur = hb.weaken_to(cur, target);
    hooks.push_back({Fragment{hb.take(), cur}, {}});
  }
  return case_analysis_seq_in(b, line1, hooks);
}

int translate_divide(ProofBuilder& b, int line1, const Inequality& q, Int c,
                     const Disjunction& target) {
  if (c == 1) return b.weaken_to(line1, target);
  if (q.lhs.empty()) {
    if (q.rhs <= 0) return b.weaken_to(line1, target);
    int cur = b.simp_eq(line1, LinearEquation::constant(q.rhs));
    return b.weaken_to(cur, target);
  }
  std::vector<std::pair<int, Int>> terms;
  for (auto& [v, k] : q.lhs.terms) terms.emplace_back(v, k / c);
  const LinearForm g = LinearForm::of(std::move(terms));
  const Disjunction tq = ineq_to_disjunction(q);
  const Disjunction line1c = b.at(line1);
  std::vector<DerivationHook> hooks;
  for (const LinearEquation& e : line1c.eqs) {
    if (!tq.contains(e)) {
      hooks.push_back(passthrough_hook(b, e, target));
      continue;
    }
    // Case (f = β): every value s of f/c with c·s ≠ β is impossible, so the
    // all-values line over f/c shrinks to (f/c = β/c) — or to FALSE when c
    // does not divide β or β/c is unattainable.
    ProofBuilder hb(b.num_vars());
    int unit = hb.premise_line(hb.add_premise(Disjunction::single(e)));
    int cur = all_values_in(hb, g);
    const Disjunction avc = hb.at(cur);
    for (const LinearEquation& ge : avc.eqs) {
      Int cs = checked_mul(ge.rhs, c);
      if (cs == e.rhs) continue;
      LinearEquation scaled = eq_scale(ge, c);
      cur = hb.scale_eq(cur, ge, c);
      cur = hb.res_eq(cur, scaled, unit, e, true);
      cur = hb.simp_eq(cur, LinearEquation::constant(checked_sub(cs, e.rhs)));
    }
    cur = hb.weaken_to(cur, target);
    hooks.push_back({Fragment{hb.take(), cur}, {}});
  }
  return case_analysis_seq_in(b, line1, hooks);
}

}  // namespace

Disjunction ineq_to_disjunction(const Inequality& q) {
  Disjunction d;
  if (q.lhs.empty()) {
    d.insert(LinearEquation::constant(q.rhs > 0 ? q.rhs : 0));
    return d;
  }
  Int hi = std::max(q.rhs, q.lhs.positive_sum());
  if (checked_sub(hi, q.rhs) >= kMaxSpan)
    throw DomainError("inequality translation spans too many values: " + ineq_text(q));
  for (Int v = q.rhs; v <= hi; ++v) d.insert(LinearEquation(q.lhs, v));
  return d;
}

void validate(const RcpProof& rp) { audit_steps(rp); }

Proof rcp_to_rlin(const RcpProof& rp) {
  const auto sets = audit_steps(rp);
  ProofBuilder b(rp.num_vars);
  std::vector<int> line_of(rp.steps.size(), -1);
  for (std::size_t s = 0; s < rp.steps.size(); ++s) {
    const RcpStep& st = rp.steps[s];
    const Disjunction target = translate_line(sets[s]);
    switch (st.rule) {
      case RcpRule::Input:
        line_of[s] = b.premise_line(b.add_premise(target));
        break;
      case RcpRule::VarLower:
        line_of[s] = b.axiom(st.var);
        break;
      case RcpRule::VarUpper: {
        int f1 = b.flip_eq(b.axiom(st.var), LinearEquation::unit(st.var, 0));
        line_of[s] = b.flip_eq(f1, LinearEquation::unit(st.var, 1));
        break;
      }
      case RcpRule::Split:
        line_of[s] = translate_split(b, st.ineq, target);
        break;
      case RcpRule::Add:
        line_of[s] = translate_add(b, line_of[st.a1], line_of[st.a2], sets[st.a1][st.i1],
                                   sets[st.a2][st.i2], target);
        break;
      case RcpRule::Weaken:
        line_of[s] = b.weaken_to(line_of[st.a1], target);
        break;
      case RcpRule::DropFalse: {
        int cur = b.simp_eq(line_of[st.a1], LinearEquation::constant(1));
        line_of[s] = b.weaken_to(cur, target);
        break;
      }
      case RcpRule::Multiply:
        line_of[s] = translate_multiply(b, line_of[st.a1], sets[st.a1][st.i1], st.c, target);
        break;
      case RcpRule::Divide:
        line_of[s] = translate_divide(b, line_of[st.a1], sets[st.a1][st.i1], st.c, target);
        break;
    }
  }
  return b.take();
}

namespace {

Int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    Int v = std::stoll(tok, &used);
    if (used != tok.size()) throw ParseError("");
    return v;
  } catch (const ParseError&) {
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
}

Inequality parse_ineq_tokens(const std::vector<std::string>& toks, std::size_t from,
                             std::size_t to) {
  std::size_t ge = to;
  for (std::size_t i = from; i < to; ++i)
    if (toks[i] == ">=") {
      ge = i;
      break;
    }
  if (ge == to) throw ParseError("inequality missing '>='");
  if (ge + 2 != to) throw ParseError("inequality needs exactly one value after '>='");
  std::vector<std::pair<int, Int>> terms;
  for (std::size_t i = from; i < ge; ++i) {
    const std::string& tok = toks[i];
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError("bad term '" + tok + "'");
    Int var = parse_int(tok.substr(0, colon), "variable");
    Int coef = parse_int(tok.substr(colon + 1), "coefficient");
    if (var < 1 || var > 1'000'000'000) throw ParseError("variable out of range in '" + tok + "'");
    terms.emplace_back(static_cast<int>(var), coef);
  }
  return {LinearForm::of(std::move(terms)), parse_int(toks[ge + 1], "right-hand side")};
}

std::vector<Inequality> parse_line_tokens(const std::vector<std::string>& toks, std::size_t from,
                                          std::size_t to) {
  if (to - from == 1 && toks[from] == "FALSE") return {};
  std::vector<Inequality> out;
  std::size_t start = from;
  for (std::size_t i = from; i <= to; ++i) {
    if (i < to && toks[i] != "|") continue;
    if (i == start) throw ParseError("empty inequality in line");
    out.push_back(parse_ineq_tokens(toks, start, i));
    start = i + 1;
  }
  if (start != to + 1) throw ParseError("trailing '|' in line");
  return out;
}

int parse_step_ref(const std::string& tok, int current) {
  Int id = parse_int(tok, "antecedent");
  if (id < 1 || id > current) throw ParseError("antecedent id out of range: '" + tok + "'");
  return static_cast<int>(id) - 1;
}

int parse_member_ref(const std::string& tok) {
  Int i = parse_int(tok, "inequality index");
  if (i < 1) throw ParseError("inequality index out of range: '" + tok + "'");
  return static_cast<int>(i) - 1;
}

void note_vars(const std::vector<Inequality>& list, int& num_vars) {
  for (const auto& q : list) num_vars = std::max(num_vars, q.lhs.max_var());
}

}  // namespace

RcpProof parse_rcp(std::istream& in) {
  RcpProof rp;
  std::string raw;
  bool saw_header = false;
  int next_id = 1;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(std::move(t));
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "rcp" || toks[1] != "1")
        throw ParseError("expected header 'rcp 1'");
      saw_header = true;
      continue;
    }
    RcpStep st;
    std::size_t claim_from = toks.size();
    if (toks[0] == "input") {
      if (toks.size() < 3) throw ParseError("input needs an id and a line");
      if (parse_int(toks[1], "step id") != next_id) throw ParseError("step ids must be 1, 2, …");
      st.rule = RcpRule::Input;
      st.stated = parse_line_tokens(toks, 2, toks.size());
    } else if (toks[0] == "line") {
      if (toks.size() < 4) throw ParseError("malformed proof line");
      if (parse_int(toks[1], "step id") != next_id) throw ParseError("step ids must be 1, 2, …");
      const std::string& kind = toks[2];
      auto colon_at = [&](std::size_t want) {
        if (toks.size() <= want || toks[want] != ":")
          throw ParseError("expected ':' before the stated line");
        if (want + 1 == toks.size()) throw ParseError("missing stated line after ':'");
        claim_from = want + 1;
      };
      if (kind == "axiom1" || kind == "axiom2") {
        if (toks.size() != 4) throw ParseError(kind + " takes exactly one variable");
        Int v = parse_int(toks[3], "variable");
        if (v < 1 || v > 1'000'000'000) throw ParseError("axiom variable out of range");
        st.rule = kind == "axiom1" ? RcpRule::VarLower : RcpRule::VarUpper;
        st.var = static_cast<int>(v);
        Int coef = st.rule == RcpRule::VarLower ? 1 : -1;
        st.stated.push_back({LinearForm::of({{st.var, coef}}), st.rule == RcpRule::VarLower ? 0 : -1});
      } else if (kind == "axiom3") {
        st.rule = RcpRule::Split;
        st.ineq = parse_ineq_tokens(toks, 3, toks.size());
        st.stated = dedup_line({st.ineq, split_partner(st.ineq)});
      } else if (kind == "rule1") {
        if (toks.size() < 8) throw ParseError("rule1 needs two antecedents and two indices");
        st.rule = RcpRule::Add;
        st.a1 = parse_step_ref(toks[3], next_id - 1);
        st.i1 = parse_member_ref(toks[4]);
        st.a2 = parse_step_ref(toks[5], next_id - 1);
        st.i2 = parse_member_ref(toks[6]);
        colon_at(7);
      } else if (kind == "rule2") {
        st.rule = RcpRule::Weaken;
        st.a1 = parse_step_ref(toks[3], next_id - 1);
        std::size_t colon = toks.size();
        for (std::size_t i = 4; i < toks.size(); ++i)
          if (toks[i] == ":") {
            colon = i;
            break;
          }
        if (colon == toks.size()) throw ParseError("expected ':' before the stated line");
        st.ineq = parse_ineq_tokens(toks, 4, colon);
        colon_at(colon);
      } else if (kind == "rule3") {
        if (toks.size() < 6) throw ParseError("rule3 needs an antecedent and an index");
        st.rule = RcpRule::DropFalse;
        st.a1 = parse_step_ref(toks[3], next_id - 1);
        st.i1 = parse_member_ref(toks[4]);
        colon_at(5);
      } else if (kind == "rule4" || kind == "rule5") {
        if (toks.size() < 7) throw ParseError(kind + " needs an antecedent, an index and a scalar");
        st.rule = kind == "rule4" ? RcpRule::Multiply : RcpRule::Divide;
        st.a1 = parse_step_ref(toks[3], next_id - 1);
        st.i1 = parse_member_ref(toks[4]);
        st.c = parse_int(toks[5], "scalar");
        colon_at(6);
      } else {
        throw ParseError("unknown rule '" + kind + "'");
      }
      if (claim_from != toks.size()) st.stated = parse_line_tokens(toks, claim_from, toks.size());
    } else {
      throw ParseError("unknown record '" + toks[0] + "'");
    }
    note_vars(st.stated, rp.num_vars);
    if (st.rule == RcpRule::VarLower || st.rule == RcpRule::VarUpper)
      rp.num_vars = std::max(rp.num_vars, st.var);
    rp.steps.push_back(std::move(st));
    ++next_id;
  }
  if (!saw_header) throw ParseError("expected header 'rcp 1'");
  return rp;
}

std::string print_rcp(const RcpProof& rp) {
  std::string out = "rcp 1\n";
  for (std::size_t s = 0; s < rp.steps.size(); ++s) {
    const RcpStep& st = rp.steps[s];
    const std::string id = std::to_string(s + 1);
    switch (st.rule) {
      case RcpRule::Input:
        out += "input " + id + ' ' + line_text(st.stated);
        break;
      case RcpRule::VarLower:
        out += "line " + id + " axiom1 " + std::to_string(st.var);
        break;
      case RcpRule::VarUpper:
        out += "line " + id + " axiom2 " + std::to_string(st.var);
        break;
      case RcpRule::Split:
        out += "line " + id + " axiom3 " + ineq_text(st.ineq);
        break;
      case RcpRule::Add:
        out += "line " + id + " rule1 " + std::to_string(st.a1 + 1) + ' ' +
               std::to_string(st.i1 + 1) + ' ' + std::to_string(st.a2 + 1) + ' ' +
               std::to_string(st.i2 + 1) + " : " + line_text(st.stated);
        break;
      case RcpRule::Weaken:
        out += "line " + id + " rule2 " + std::to_string(st.a1 + 1) + ' ' + ineq_text(st.ineq) +
               " : " + line_text(st.stated);
        break;
      case RcpRule::DropFalse:
        out += "line " + id + " rule3 " + std::to_string(st.a1 + 1) + ' ' +
               std::to_string(st.i1 + 1) + " : " + line_text(st.stated);
        break;
      case RcpRule::Multiply:
      case RcpRule::Divide:
        out += "line " + id + (st.rule == RcpRule::Multiply ? " rule4 " : " rule5 ") +
               std::to_string(st.a1 + 1) + ' ' + std::to_string(st.i1 + 1) + ' ' +
               std::to_string(st.c) + " : " + line_text(st.stated);
        break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace linres
