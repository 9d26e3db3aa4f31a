#include "linres/proof.hpp"

#include <algorithm>
#include <future>
#include <istream>
#include <map>
#include <sstream>

namespace linres {

Justification Justification::axiom(int var) {
  Justification j;
  j.rule = Rule::Axiom;
  j.var = var;
  return j;
}

Justification Justification::premise_ref(int premise) {
  Justification j;
  j.rule = Rule::Premise;
  j.premise = premise;
  return j;
}

Justification Justification::res(int a1, int i1, int a2, int i2, bool subtract) {
  Justification j;
  j.rule = Rule::Res;
  j.a1 = a1;
  j.i1 = i1;
  j.a2 = a2;
  j.i2 = i2;
  j.subtract = subtract;
  return j;
}

Justification Justification::weaken(int a, LinearEquation e) {
  Justification j;
  j.rule = Rule::Weaken;
  j.a1 = a;
  j.weak_eq = std::move(e);
  return j;
}

Justification Justification::simp(int a, int i) {
  Justification j;
  j.rule = Rule::Simp;
  j.a1 = a;
  j.i1 = i;
  return j;
}

Disjunction apply_res(const Disjunction& a, std::size_t ia, const Disjunction& b, std::size_t ib,
                      bool subtract) {
  Disjunction out = a.without_index(ia);
  for (std::size_t i = 0; i < b.eqs.size(); ++i)
    if (i != ib) out.insert(b.eqs[i]);
  const LinearEquation& e1 = a.eqs[ia];
  const LinearEquation& e2 = b.eqs[ib];
  out.insert(subtract ? eq_sub(e1, e2) : eq_add(e1, e2));
  return out;
}

Disjunction apply_weaken(const Disjunction& a, const LinearEquation& e) {
  Disjunction out = a;
  out.insert(e);
  return out;
}

Disjunction apply_simp(const Disjunction& a, std::size_t ia) { return a.without_index(ia); }

std::string to_string(CheckCode code) {
  switch (code) {
    case CheckCode::Ok: return "Ok";
    case CheckCode::BadAntecedent: return "BadAntecedent";
    case CheckCode::IndexOutOfRange: return "IndexOutOfRange";
    case CheckCode::BadAxiomShape: return "BadAxiomShape";
    case CheckCode::NotSimplifiable: return "NotSimplifiable";
    case CheckCode::LineMismatch: return "LineMismatch";
    case CheckCode::NotARefutation: return "NotARefutation";
    case CheckCode::NotR0Line: return "NotR0Line";
  }
  return "?";
}

CheckResult check_line(const Proof& p, std::size_t idx) {
  const ProofLine& ln = p.lines[idx];
  const Justification& j = ln.just;
  const int self = static_cast<int>(idx);

  auto compare = [&](const Disjunction& want) -> CheckResult {
    if (ln.content.same_set(want)) return {};
    return {CheckCode::LineMismatch, self,
            "claimed '" + to_string(ln.content) + "' but the rule yields '" + to_string(want) + "'"};
  };
  auto antecedent = [&](int a) -> const Disjunction* {
    if (a < 0 || a >= self) return nullptr;
    return &p.lines[a].content;
  };

  try {
    switch (j.rule) {
      case Rule::Axiom: {
        if (j.var < 1 || j.var > p.num_vars)
          return {CheckCode::BadAxiomShape, self, "axiom variable out of range"};
        Disjunction want;
        want.insert(LinearEquation::unit(j.var, 0));
        want.insert(LinearEquation::unit(j.var, 1));
        if (!ln.content.same_set(want))
          return {CheckCode::BadAxiomShape, self, "content is not (x=0) | (x=1)"};
        return {};
      }
      case Rule::Premise: {
        if (j.premise < 0 || j.premise >= static_cast<int>(p.premises.size()))
          return {CheckCode::IndexOutOfRange, self, "premise index out of range"};
        return compare(p.premises[j.premise]);
      }
      case Rule::Res: {
        const Disjunction* A = antecedent(j.a1);
        const Disjunction* B = antecedent(j.a2);
        if (!A || !B) return {CheckCode::BadAntecedent, self, "antecedent must be an earlier line"};
        if (j.i1 < 0 || j.i1 >= static_cast<int>(A->eqs.size()) || j.i2 < 0 ||
            j.i2 >= static_cast<int>(B->eqs.size()))
          return {CheckCode::IndexOutOfRange, self, "equation index out of range"};
        return compare(apply_res(*A, j.i1, *B, j.i2, j.subtract));
      }
      case Rule::Weaken: {
        const Disjunction* A = antecedent(j.a1);
        if (!A) return {CheckCode::BadAntecedent, self, "antecedent must be an earlier line"};
        if (j.weak_eq.form.max_var() > p.num_vars)
          return {CheckCode::IndexOutOfRange, self, "weakening equation uses an unknown variable"};
        return compare(apply_weaken(*A, j.weak_eq));
      }
      case Rule::Simp: {
        const Disjunction* A = antecedent(j.a1);
        if (!A) return {CheckCode::BadAntecedent, self, "antecedent must be an earlier line"};
        if (j.i1 < 0 || j.i1 >= static_cast<int>(A->eqs.size()))
          return {CheckCode::IndexOutOfRange, self, "equation index out of range"};
        const LinearEquation& e = A->eqs[j.i1];
        if (!e.variable_free() || e.rhs == 0)
          return {CheckCode::NotSimplifiable, self, "'" + to_string(e) + "' is not (0 = k) with k ≠ 0"};
        return compare(apply_simp(*A, j.i1));
      }
    }
  } catch (const OverflowError& e) {
    return {CheckCode::LineMismatch, self, std::string("overflow while recomputing: ") + e.what()};
  }
  return {CheckCode::LineMismatch, self, "unknown rule"};
}

namespace {
CheckResult check_range(const Proof& p, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    CheckResult r = check_line(p, i);
    if (!r.ok()) return r;
  }
  return {};
}
}  // namespace

CheckResult check_proof(const Proof& p, int jobs) {
  if (p.num_vars < 0) return {CheckCode::IndexOutOfRange, -1, "negative variable count"};
  for (std::size_t i = 0; i < p.premises.size(); ++i)
    if (p.premises[i].max_var() > p.num_vars)
      return {CheckCode::IndexOutOfRange, -1,
              "premise " + std::to_string(i + 1) + " uses an unknown variable"};
  const std::size_t n = p.lines.size();
  if (jobs <= 1 || n < 64) return check_range(p, 0, n);

  const std::size_t chunks = std::min<std::size_t>(jobs, n);
  std::vector<std::future<CheckResult>> futs;
  for (std::size_t k = 0; k < chunks; ++k) {
    std::size_t b = n * k / chunks, e = n * (k + 1) / chunks;
    futs.push_back(std::async(std::launch::async, [&p, b, e] { return check_range(p, b, e); }));
  }
  CheckResult best;
  for (auto& f : futs) {
    CheckResult r = f.get();
    if (!r.ok() && (best.ok() || r.line < best.line)) best = r;
  }
  return best;
}

CheckResult check_refutation(const Proof& p, int jobs) {
  CheckResult r = check_proof(p, jobs);
  if (!r.ok()) return r;
  if (p.lines.empty() || !p.lines.back().content.empty())
    return {CheckCode::NotARefutation, static_cast<int>(p.lines.size()) - 1,
            "final line is not the empty disjunction"};
  return r;
}

AuditResult semantic_audit(const Proof& p, int cap) {
  if (p.num_vars > cap || p.num_vars > 62)
    throw TooManyVariables("semantic audit over " + std::to_string(p.num_vars) +
                           " variables exceeds cap " + std::to_string(cap));
  std::vector<Assignment> sat;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.num_vars); ++mask) {
    Assignment a = Assignment::from_mask(mask, p.num_vars);
    bool all = true;
    for (auto& prem : p.premises)
      if (!eval(prem, a)) {
        all = false;
        break;
      }
    if (all) sat.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < p.lines.size(); ++i)
    for (auto& a : sat)
      if (!eval(p.lines[i].content, a)) return {static_cast<int>(i), a};
  return {};
}

namespace {
struct Bucket {
  LinearForm form;
  std::vector<std::size_t> members;
  bool all_clause = true;
};

std::vector<Bucket> form_buckets(const Disjunction& d) {
  std::vector<Bucket> out;
  for (std::size_t i = 0; i < d.eqs.size(); ++i) {
    const LinearEquation& e = d.eqs[i];
    Bucket* b = nullptr;
    for (auto& cand : out)
      if (cand.form == e.form) {
        b = &cand;
        break;
      }
    if (!b) {
      out.push_back({e.form, {}, true});
      b = &out.back();
    }
    b->members.push_back(i);
    if (!e.is_clause_literal()) b->all_clause = false;
  }
  return out;
}

// (minimal groups ignoring c, minimal c for form groups)
std::pair<int, Int> line_measure(const Disjunction& d) {
  auto buckets = form_buckets(d);
  int formish = 0, clause_buckets = 0;
  Int c_needed = 1;
  for (auto& b : buckets) {
    if (b.all_clause) {
      ++clause_buckets;
    } else {
      ++formish;
      c_needed = std::max(c_needed, b.form.max_abs_coef());
    }
  }
  return {formish + (clause_buckets ? 1 : 0), c_needed};
}
}  // namespace

int r0_min_groups(const Disjunction& d, Int c) {
  auto [groups, c_needed] = line_measure(d);
  if (c_needed > c) return -1;
  return groups;
}

int r0_min_groups_exhaustive(const Disjunction& d, Int c) {
  const std::size_t n = d.eqs.size();
  if (n > 16) throw DomainError("exhaustive fragment search limited to 16 equations");
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.eqs[i].is_clause_literal())
      eligible.push_back(i);
    else if (d.eqs[i].form.max_abs_coef() > c)
      return -1;
  }
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << eligible.size()); ++mask) {
    std::vector<LinearForm> forms;
    bool clause_used = false;
    for (std::size_t i = 0; i < n; ++i) {
      bool in_clause = false;
      for (std::size_t k = 0; k < eligible.size(); ++k)
        if (eligible[k] == i && ((mask >> k) & 1)) in_clause = true;
      if (in_clause) {
        clause_used = true;
      } else {
        if (std::find(forms.begin(), forms.end(), d.eqs[i].form) == forms.end())
          forms.push_back(d.eqs[i].form);
      }
    }
    int groups = static_cast<int>(forms.size()) + (clause_used ? 1 : 0);
    if (best < 0 || groups < best) best = groups;
  }
  return best;
}

R0LineResult r0_classify_line(const Disjunction& d, const R0Params& params) {
  auto [groups, c_needed] = line_measure(d);
  if (c_needed > params.c)
    return {false, groups,
            "a form group needs |coefficients| ≤ " + std::to_string(c_needed) +
                " but the bound is " + std::to_string(params.c)};
  if (groups > params.k)
    return {false, groups,
            "needs " + std::to_string(groups) + " groups but the bound is " + std::to_string(params.k)};
  return {true, groups, ""};
}

R0ProofResult r0_classify(const Proof& p, const R0Params& params) {
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    R0LineResult r = r0_classify_line(p.lines[i].content, params);
    if (!r.ok)
      return {false, static_cast<int>(i), "line " + std::to_string(i + 1) + ": " + r.reason};
  }
  return {true, -1, ""};
}

R0Measure r0_measure(const Proof& p) {
  R0Measure m;
  for (auto& ln : p.lines) {
    auto [groups, c_needed] = line_measure(ln.content);
    m.k = std::max(m.k, groups);
    m.c = std::max(m.c, c_needed);
  }
  return m;
}

ProofStats proof_stats(const Proof& p) {
  ProofStats s;
  s.num_lines = p.lines.size();
  s.num_premises = p.premises.size();
  for (auto& ln : p.lines) {
    Int sz = ln.content.unary_size();
    s.total_size = checked_add(s.total_size, sz);
    s.max_line_size = std::max(s.max_line_size, sz);
    for (auto& e : ln.content.eqs) s.max_abs_coef = std::max(s.max_abs_coef, e.form.max_abs_coef());
  }
  s.r0 = r0_measure(p);
  return s;
}

std::string print_proof(const Proof& p) {
  std::string s = "rlin 1\n";
  s += "vars " + std::to_string(p.num_vars) + "\n";
  for (std::size_t i = 0; i < p.premises.size(); ++i)
    s += "premise " + std::to_string(i + 1) + " " + to_string(p.premises[i]) + "\n";
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& ln = p.lines[i];
    const Justification& j = ln.just;
    s += "line " + std::to_string(i + 1) + " ";
    switch (j.rule) {
      case Rule::Axiom:
        s += "axiom " + std::to_string(j.var);
        break;
      case Rule::Premise:
        s += "premise " + std::to_string(j.premise + 1);
        break;
      case Rule::Res:
        s += std::string("res") + (j.subtract ? "-" : "+") + " " + std::to_string(j.a1 + 1) + " " +
             std::to_string(j.i1) + " " + std::to_string(j.a2 + 1) + " " + std::to_string(j.i2) +
             " : " + to_string(ln.content);
        break;
      case Rule::Weaken:
        s += "weaken " + std::to_string(j.a1 + 1) + " " + to_string(j.weak_eq) + " : " +
             to_string(ln.content);
        break;
      case Rule::Simp:
        s += "simp " + std::to_string(j.a1 + 1) + " " + std::to_string(j.i1) + " : " +
             to_string(ln.content);
        break;
    }
    s += "\n";
  }
  return s;
}

namespace {
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

long long to_ll(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
  }
}

std::string join(const std::vector<std::string>& toks, std::size_t from, std::size_t to) {
  std::string s;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) s += ' ';
    s += toks[i];
  }
  return s;
}

void check_vars(const Disjunction& d, int num_vars, const std::string& where) {
  if (d.max_var() > num_vars) throw ParseError(where + " uses a variable beyond the declared count");
}
}  // namespace

Proof parse_proof(std::istream& in) {
  Proof p;
  std::string raw;
  bool saw_header = false, saw_vars = false, saw_line = false;
  while (std::getline(in, raw)) {
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "rlin" || toks[1] != "1")
        throw ParseError("expected 'rlin 1' header");
      saw_header = true;
      continue;
    }
    if (!saw_vars) {
      if (toks.size() != 2 || toks[0] != "vars") throw ParseError("expected 'vars <n>'");
      long long n = to_ll(toks[1], "variable count");
      if (n < 0 || n > 1'000'000'000) throw ParseError("variable count out of range");
      p.num_vars = static_cast<int>(n);
      saw_vars = true;
      continue;
    }
    if (toks[0] == "premise") {
      if (saw_line) throw ParseError("premise records must precede line records");
      if (toks.size() < 3) throw ParseError("premise record too short");
      long long id = to_ll(toks[1], "premise id");
      if (id != static_cast<long long>(p.premises.size()) + 1)
        throw ParseError("premise ids must be 1-based and consecutive");
      Disjunction d = parse_disjunction(join(toks, 2, toks.size()));
      check_vars(d, p.num_vars, "premise " + toks[1]);
      p.premises.push_back(std::move(d));
      continue;
    }
    if (toks[0] != "line") throw ParseError("unexpected record '" + toks[0] + "'");
    saw_line = true;
    if (toks.size() < 4) throw ParseError("line record too short");
    long long id = to_ll(toks[1], "line id");
    if (id != static_cast<long long>(p.lines.size()) + 1)
      throw ParseError("line ids must be 1-based and consecutive");
    const std::string& kind = toks[2];
    auto ref = [&](const std::string& tok, const char* what) {
      long long v = to_ll(tok, what);
      if (v < 1 || v > static_cast<long long>(p.lines.size()))
        throw ParseError(std::string(what) + " out of range: '" + tok + "'");
      return static_cast<int>(v - 1);
    };
    auto eqidx = [&](const std::string& tok) {
      long long v = to_ll(tok, "equation index");
      if (v < 0 || v > 1'000'000) throw ParseError("equation index out of range: '" + tok + "'");
      return static_cast<int>(v);
    };
    auto claimed_from = [&](std::size_t colon) {
      if (colon >= toks.size() || toks[colon] != ":")
        throw ParseError("expected ':' before the claimed content");
      Disjunction d = parse_disjunction(join(toks, colon + 1, toks.size()));
      check_vars(d, p.num_vars, "line " + toks[1]);
      return d;
    };

    ProofLine ln;
    if (kind == "axiom") {
      if (toks.size() != 4) throw ParseError("axiom record needs one variable");
      long long v = to_ll(toks[3], "axiom variable");
      if (v < 1 || v > p.num_vars) throw ParseError("axiom variable out of range");
      ln.just = Justification::axiom(static_cast<int>(v));
      ln.content.insert(LinearEquation::unit(static_cast<int>(v), 0));
      ln.content.insert(LinearEquation::unit(static_cast<int>(v), 1));
    } else if (kind == "premise") {
      if (toks.size() != 4) throw ParseError("premise reference needs one id");
      long long v = to_ll(toks[3], "premise id");
      if (v < 1 || v > static_cast<long long>(p.premises.size()))
        throw ParseError("premise reference out of range");
      ln.just = Justification::premise_ref(static_cast<int>(v - 1));
      ln.content = p.premises[v - 1];
    } else if (kind == "res+" || kind == "res-") {
      if (toks.size() < 8) throw ParseError("resolution record too short");
      ln.just = Justification::res(ref(toks[3], "antecedent id"), eqidx(toks[4]),
                                   ref(toks[5], "antecedent id"), eqidx(toks[6]), kind == "res-");
      ln.content = claimed_from(7);
    } else if (kind == "weaken") {
      std::size_t colon = 4;
      while (colon < toks.size() && toks[colon] != ":") ++colon;
      if (colon <= 4) throw ParseError("weaken record missing equation");
      LinearEquation e = parse_equation(join(toks, 4, colon));
      if (e.form.max_var() > p.num_vars)
        throw ParseError("weakening equation uses a variable beyond the declared count");
      ln.just = Justification::weaken(ref(toks[3], "antecedent id"), std::move(e));
      ln.content = claimed_from(colon);
    } else if (kind == "simp") {
      if (toks.size() < 6) throw ParseError("simp record too short");
      ln.just = Justification::simp(ref(toks[3], "antecedent id"), eqidx(toks[4]));
      ln.content = claimed_from(5);
    } else {
      throw ParseError("unknown rule '" + kind + "'");
    }
    p.lines.push_back(std::move(ln));
  }
  if (!saw_header) throw ParseError("empty proof file");
  if (!saw_vars) throw ParseError("missing 'vars' record");
  return p;
}

std::string print_formula(const Formula& f) {
  std::string s = "linform 1\n";
  s += "vars " + std::to_string(f.num_vars) + "\n";
  for (std::size_t i = 0; i < f.premises.size(); ++i)
    s += "premise " + std::to_string(i + 1) + " " + to_string(f.premises[i]) + "\n";
  return s;
}

Formula parse_formula(std::istream& in) {
  Formula f;
  std::string raw;
  bool saw_header = false, saw_vars = false;
  while (std::getline(in, raw)) {
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "linform" || toks[1] != "1")
        throw ParseError("expected 'linform 1' header");
      saw_header = true;
      continue;
    }
    if (!saw_vars) {
      if (toks.size() != 2 || toks[0] != "vars") throw ParseError("expected 'vars <n>'");
      long long n = to_ll(toks[1], "variable count");
      if (n < 0 || n > 1'000'000'000) throw ParseError("variable count out of range");
      f.num_vars = static_cast<int>(n);
      saw_vars = true;
      continue;
    }
    if (toks[0] != "premise" || toks.size() < 3) throw ParseError("expected premise records");
    long long id = to_ll(toks[1], "premise id");
    if (id != static_cast<long long>(f.premises.size()) + 1)
      throw ParseError("premise ids must be 1-based and consecutive");
    Disjunction d = parse_disjunction(join(toks, 2, toks.size()));
    check_vars(d, f.num_vars, "premise " + toks[1]);
    f.premises.push_back(std::move(d));
  }
  if (!saw_header) throw ParseError("empty formula file");
  if (!saw_vars) throw ParseError("missing 'vars' record");
  return f;
}

Formula parse_formula_auto(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::istringstream probe(text);
  std::string raw;
  while (std::getline(probe, raw)) {
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    std::istringstream again(text);
    if (toks[0] == "linform") return parse_formula(again);
    Cnf cnf = parse_dimacs(again);
    Formula f;
    f.num_vars = cnf.num_vars;
    for (auto& c : cnf.clauses) f.premises.push_back(translate_clause(c));
    return f;
  }
  throw ParseError("empty formula file");
}

}  // namespace linres
