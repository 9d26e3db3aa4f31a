#include "linres/pcr.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace linres {

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first))
      out.factors.push_back(a.factors[i++]);
    else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first)
      out.factors.push_back(b.factors[j++]);
    else {
      out.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
      ++i, ++j;
    }
  }
  return out;
}

int mono_exp(const Monomial& m, int code) {
  for (auto& [v, e] : m.factors)
    if (v == code) return e;
  return 0;
}

Monomial mono_with_exp(const Monomial& m, int code, int exp) {
  Monomial out;
  for (auto& [v, e] : m.factors) {
    if (v == code) {
      if (exp > 0) out.factors.emplace_back(v, exp);
    } else {
      out.factors.push_back({v, e});
    }
  }
  return out;
}

void add_term(Polynomial& p, const Monomial& m, const Rational& c) {
  auto [it, fresh] = p.terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  } else if (c == 0) {
    p.terms.erase(it);
  }
}

}  // namespace

bool Polynomial::is_constant() const {
  return terms.empty() || (terms.size() == 1 && terms.begin()->first.factors.empty());
}

Polynomial poly_constant(const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms.emplace(Monomial{}, c);
  return p;
}

Polynomial poly_variable(int code) {
  Polynomial p;
  p.terms.emplace(Monomial{{{code, 1}}}, 1);
  return p;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (auto& [m, c] : b.terms) add_term(out, m, c);
  return out;
}

Polynomial poly_scale(const Polynomial& a, const Rational& c) {
  Polynomial out;
  if (c == 0) return out;
  for (auto& [m, k] : a.terms) out.terms.emplace(m, k * c);
  return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) add_term(out, mono_mul(ma, mb), ca * cb);
  return out;
}

Rational poly_eval(const Polynomial& p, const Assignment& a) {
  Rational sum = 0;
  for (auto& [m, c] : p.terms) {
    bool zero = false;
    for (auto& [code, exp] : m.factors) {
      bool bit = a.value(pcr_var_index(code));
      if (pcr_is_twin(code)) bit = !bit;
      if (!bit) {
        zero = true;
        break;
      }
    }
    if (!zero) sum += c;
  }
  return sum;
}

Polynomial equation_poly(const LinearEquation& e) {
  Polynomial p = poly_constant(Rational(-e.rhs));
  for (auto& [v, c] : e.form.terms)
    p = poly_add(p, poly_scale(poly_variable(pcr_var(v)), Rational(c)));
  return p;
}

Polynomial disjunction_poly(const Disjunction& d) {
  Polynomial p = poly_constant(1);
  for (const auto& e : d.eqs) p = poly_mul(p, equation_poly(e));
  return p;
}

namespace {

CheckResult pcr_fail(CheckCode code, int line, std::string detail) {
  return {code, line, std::move(detail)};
}

CheckResult recompute_step(const PcrProof& pp, std::size_t idx, Polynomial& out) {
  const PcrStep& st = pp.steps[idx];
  const int line = static_cast<int>(idx);
  auto code_ok = [&](int code) { return code >= 2 && code <= 2 * pp.num_vars + 1; };
  switch (st.rule) {
    case PcrRule::Premise:
      if (st.premise < 0 || st.premise >= static_cast<int>(pp.premises.size()))
        return pcr_fail(CheckCode::IndexOutOfRange, line, "premise index out of range");
      out = pp.premises[st.premise];
      return {};
    case PcrRule::SquareAxiom: {
      if (!code_ok(st.var))
        return pcr_fail(CheckCode::IndexOutOfRange, line, "axiom variable out of range");
      Polynomial x = poly_variable(st.var);
      out = poly_add(poly_mul(x, x), poly_scale(x, -1));
      return {};
    }
    case PcrRule::TwinAxiom: {
      if (st.index < 1 || st.index > pp.num_vars)
        return pcr_fail(CheckCode::IndexOutOfRange, line, "axiom variable out of range");
      out = poly_add(poly_add(poly_variable(pcr_var(st.index)), poly_variable(pcr_twin(st.index))),
                     poly_constant(-1));
      return {};
    }
    case PcrRule::Product:
      if (st.a1 < 0 || st.a1 >= line)
        return pcr_fail(CheckCode::BadAntecedent, line, "antecedent out of range");
      if (!code_ok(st.var))
        return pcr_fail(CheckCode::IndexOutOfRange, line, "product variable out of range");
      out = poly_mul(poly_variable(st.var), pp.steps[st.a1].stated);
      return {};
    case PcrRule::Addition:
      if (st.a1 < 0 || st.a1 >= line || st.a2 < 0 || st.a2 >= line)
        return pcr_fail(CheckCode::BadAntecedent, line, "antecedent out of range");
      out = poly_add(poly_scale(pp.steps[st.a1].stated, st.alpha),
                     poly_scale(pp.steps[st.a2].stated, st.beta));
      return {};
  }
  return pcr_fail(CheckCode::LineMismatch, line, "unknown rule");
}

}  // namespace

CheckResult pcr_check(const PcrProof& pp) {
  for (std::size_t i = 0; i < pp.steps.size(); ++i) {
    Polynomial expect;
    if (CheckResult r = recompute_step(pp, i, expect); !r.ok()) return r;
    if (!(expect == pp.steps[i].stated))
      return pcr_fail(CheckCode::LineMismatch, static_cast<int>(i),
                      "stated polynomial differs from the recomputed one");
  }
  return {};
}

CheckResult pcr_check_refutation(const PcrProof& pp) {
  if (CheckResult r = pcr_check(pp); !r.ok()) return r;
  if (pp.steps.empty() || !(pp.steps.back().stated == poly_constant(1)))
    return pcr_fail(CheckCode::NotARefutation, static_cast<int>(pp.steps.size()) - 1,
                    "final line is not the constant 1");
  return {};
}

namespace {

// Incremental PCR proof under a monomial budget; every helper returns the
// step id whose stated polynomial is the advertised product/combination.
struct PcrBuild {
  PcrProof pp;
  std::size_t cap;
  std::size_t used = 0;         // monomials across premises and stated lines
  std::map<int, int> axiom_of;  // variable code -> SquareAxiom step

  explicit PcrBuild(int num_vars, std::size_t cap_) : cap(cap_) { pp.num_vars = num_vars; }

  int push(PcrStep st) {
    used += st.stated.size();
    if (used > cap)
      throw SizeBudgetExceeded("monomial budget exhausted at PCR step " +
                               std::to_string(pp.steps.size() + 1));
    pp.steps.push_back(std::move(st));
    return static_cast<int>(pp.steps.size()) - 1;
  }

  const Polynomial& at(int id) const { return pp.steps[id].stated; }

  int premise_line(int premise) {
    PcrStep st;
    st.rule = PcrRule::Premise;
    st.premise = premise;
    st.stated = pp.premises[premise];
    return push(std::move(st));
  }

  int square_axiom(int code) {
    if (auto it = axiom_of.find(code); it != axiom_of.end()) return it->second;
    PcrStep st;
    st.rule = PcrRule::SquareAxiom;
    st.var = code;
    Polynomial x = poly_variable(code);
    st.stated = poly_add(poly_mul(x, x), poly_scale(x, -1));
    int id = push(std::move(st));
    axiom_of.emplace(code, id);
    return id;
  }

  int product(int a, int code) {
    PcrStep st;
    st.rule = PcrRule::Product;
    st.a1 = a;
    st.var = code;
    st.stated = poly_mul(poly_variable(code), at(a));
    return push(std::move(st));
  }

  int addition(int a, int b, Rational alpha, Rational beta) {
    PcrStep st;
    st.rule = PcrRule::Addition;
    st.a1 = a;
    st.a2 = b;
    st.stated = poly_add(poly_scale(at(a), alpha), poly_scale(at(b), beta));
    st.alpha = std::move(alpha);
    st.beta = std::move(beta);
    return push(std::move(st));
  }

  int scale(int a, const Rational& alpha) { return addition(a, a, alpha, 0); }

  int mul_by_monomial(int a, const Monomial& m) {
    int cur = a;
    for (auto& [code, exp] : m.factors)
      for (int k = 0; k < exp; ++k) cur = product(cur, code);
    return cur;
  }

  // Derives q·(line a) for an arbitrary polynomial q.
  int mul_by_poly(int a, const Polynomial& q) {
    if (q.zero()) return addition(a, a, 0, 0);
    if (q.is_constant()) return scale(a, q.terms.begin()->second);
    int acc = -1;
    for (auto& [m, c] : q.terms) {
      int term = mul_by_monomial(a, m);
      if (acc < 0)
        acc = c == 1 ? term : scale(term, c);
      else
        acc = addition(acc, term, 1, c);
    }
    return acc;
  }
};

// Quotient of n by (x² − x) for the variable `code`; n keeps the remainder,
// whose exponent in `code` is at most 1.
Polynomial divide_square(Polynomial& n, int code) {
  Polynomial q;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& [m, c] : n.terms) {
      int e = mono_exp(m, code);
      if (e < 2) continue;
      const Monomial high = m;  // copies: add_term below invalidates the iterator
      const Rational coef = c;
      add_term(q, mono_with_exp(high, code, e - 2), coef);
      add_term(n, mono_with_exp(high, code, e - 1), coef);
      add_term(n, high, -coef);
      progress = true;
      break;
    }
  }
  return q;
}

// From U = Q·h² derives Q·h, where h is the (nonconstant) polynomial of a
// linear equation: h²·g(h) − h vanishes on the cube for the interpolant g
// with g(w) = 1/w on h's nonzero attainable values, so it splits into
// Boolean-axiom multiples.
int reduce_square_factor(PcrBuild& b, int u, const LinearEquation& es, const Polynomial& q_poly) {
  const Polynomial h = equation_poly(es);
  std::vector<Rational> zs;
  for (Int v : attainable_values(es.form))
    if (v != es.rhs) zs.emplace_back(checked_sub(v, es.rhs));

  Polynomial g;  // g(h), expanded
  for (std::size_t i = 0; i < zs.size(); ++i) {
    Rational scalar = 1 / zs[i];
    Polynomial part = poly_constant(1);
    for (std::size_t j = 0; j < zs.size(); ++j) {
      if (j == i) continue;
      part = poly_mul(part, poly_add(h, poly_constant(-zs[j])));
      scalar /= zs[i] - zs[j];
    }
    g = poly_add(g, poly_scale(part, scalar));
    if (g.size() > b.cap) throw SizeBudgetExceeded("interpolation gadget exceeds the budget");
  }

  Polynomial n = poly_add(poly_mul(poly_mul(h, h), g), poly_scale(h, -1));
  if (n.size() > b.cap) throw SizeBudgetExceeded("interpolation gadget exceeds the budget");
  int acc = b.mul_by_poly(u, g);
  for (auto& [v, c] : es.form.terms) {
    Polynomial qv = divide_square(n, pcr_var(v));
    if (qv.zero()) continue;
    int corr = b.mul_by_poly(b.square_axiom(pcr_var(v)), poly_mul(q_poly, qv));
    acc = b.addition(acc, corr, 1, -1);
  }
  if (!n.zero()) throw DomainError("interpolation residue did not split over the Boolean axioms");
  return acc;
}

}  // namespace

PcrProof rlin_to_pcr(const Proof& p, std::size_t monomial_cap) {
  if (CheckResult r = check_proof(p); !r.ok())
    throw DomainError("rlin_to_pcr needs a checked proof: " + to_string(r.code) +
                      (r.detail.empty() ? "" : " (" + r.detail + ")"));
  PcrBuild b(p.num_vars, monomial_cap);
  for (const Disjunction& d : p.premises) {
    Polynomial q = disjunction_poly(d);
    b.used += q.size();
    if (b.used > monomial_cap)
      throw SizeBudgetExceeded("premise polynomials exceed the monomial budget");
    b.pp.premises.push_back(std::move(q));
  }

  std::vector<int> line_of(p.lines.size(), -1);
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& ln = p.lines[i];
    const Justification& j = ln.just;
    switch (j.rule) {
      case Rule::Premise:
        line_of[i] = b.premise_line(j.premise);
        break;
      case Rule::Axiom:
        line_of[i] = b.square_axiom(pcr_var(j.var));
        break;
      case Rule::Weaken: {
        const Disjunction& a = p.lines[j.a1].content;
        if (a.contains(j.weak_eq))
          line_of[i] = line_of[j.a1];
        else
          line_of[i] = b.mul_by_poly(line_of[j.a1], equation_poly(j.weak_eq));
        break;
      }
      case Rule::Simp: {
        const LinearEquation& e = p.lines[j.a1].content.eqs[j.i1];
        line_of[i] = b.scale(line_of[j.a1], Rational(-1) / Rational(e.rhs));
        break;
      }
      case Rule::Res: {
        const Disjunction& a = p.lines[j.a1].content;
        const Disjunction& bd = p.lines[j.a2].content;
        const LinearEquation& e1 = a.eqs[j.i1];
        const LinearEquation& e2 = bd.eqs[j.i2];
        const LinearEquation es = j.subtract ? eq_sub(e1, e2) : eq_add(e1, e2);
        const Disjunction a_rest = a.without_index(j.i1);
        const Disjunction b_rest = bd.without_index(j.i2);
        Disjunction shared = a_rest;  // S' = (A∖e1) ∪ (B∖e2)
        for (const auto& e : b_rest.eqs) shared.insert(e);

        int p1 = line_of[j.a1];
        for (const auto& e : b_rest.eqs)
          if (!a_rest.contains(e)) p1 = b.mul_by_poly(p1, equation_poly(e));
        int p2 = line_of[j.a2];
        for (const auto& e : a_rest.eqs)
          if (!b_rest.contains(e)) p2 = b.mul_by_poly(p2, equation_poly(e));
        int u = b.addition(p1, p2, 1, j.subtract ? -1 : 1);

        if (!shared.contains(es)) {
          line_of[i] = u;
        } else if (es.form.empty()) {
          // Collided factor is the constant −rhs (or zero for (0=0), when
          // everything here is the zero polynomial already).
          line_of[i] = es.rhs == 0 ? u : b.scale(u, Rational(-1) / Rational(es.rhs));
        } else {
          Disjunction q_set = shared.without_index(shared.index_of(es));
          line_of[i] = reduce_square_factor(b, u, es, disjunction_poly(q_set));
        }
        break;
      }
    }
    if (!(b.at(line_of[i]) == disjunction_poly(ln.content)))
      throw DomainError("internal: simulated PCR line " + std::to_string(i + 1) +
                        " does not match its translation");
  }
  return std::move(b.pp);
}

namespace {

std::string var_text(int code) {
  return (pcr_is_twin(code) ? "xb" : "x") + std::to_string(pcr_var_index(code));
}

std::string mono_text(const Monomial& m) {
  if (m.factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i) s += '*';
    s += var_text(m.factors[i].first);
    if (m.factors[i].second > 1) s += '^' + std::to_string(m.factors[i].second);
  }
  return s;
}

std::string poly_text(const Polynomial& p) {
  if (p.zero()) return "0";
  std::string s;
  for (auto& [m, c] : p.terms) {
    if (!s.empty()) s += ' ';
    s += mono_text(m);
    s += ':';
    s += c.str();
  }
  return s;
}

Int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    Int v = std::stoll(tok, &used);
    if (used != tok.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  }
}

Rational parse_rational(const std::string& tok) {
  bool ok = !tok.empty();
  std::size_t digits = 0, slashes = 0;
  for (std::size_t i = 0; i < tok.size() && ok; ++i) {
    char ch = tok[i];
    if (ch == '-') {
      if (i != 0 && tok[i - 1] != '/') ok = false;
    } else if (ch == '/') {
      if (++slashes > 1 || digits == 0 || i + 1 == tok.size()) ok = false;
    } else if (ch >= '0' && ch <= '9') {
      ++digits;
    } else {
      ok = false;
    }
  }
  if (!ok || digits == 0) throw ParseError("bad rational '" + tok + "'");
  try {
    return Rational(tok);
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + tok + "'");
  }
}

int parse_var_code(const std::string& tok, int& num_vars) {
  std::size_t at = 1;
  bool twin = false;
  if (tok.size() > 1 && tok[0] == 'x' && tok[1] == 'b') {
    twin = true;
    at = 2;
  } else if (tok.empty() || tok[0] != 'x') {
    throw ParseError("bad variable '" + tok + "'");
  }
  if (at >= tok.size()) throw ParseError("bad variable '" + tok + "'");
  Int idx = 0;
  for (std::size_t i = at; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw ParseError("bad variable '" + tok + "'");
    idx = idx * 10 + (tok[i] - '0');
    if (idx > 1'000'000'000) throw ParseError("variable out of range '" + tok + "'");
  }
  if (idx < 1) throw ParseError("variable out of range '" + tok + "'");
  num_vars = std::max(num_vars, static_cast<int>(idx));
  return twin ? pcr_twin(static_cast<int>(idx)) : pcr_var(static_cast<int>(idx));
}

Monomial parse_monomial(const std::string& text, int& num_vars) {
  if (text == "1") return {};
  Monomial m;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('*', start);
    if (end == std::string::npos) end = text.size();
    std::string factor = text.substr(start, end - start);
    if (factor.empty()) throw ParseError("empty factor in monomial '" + text + "'");
    int exp = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      std::string etext = factor.substr(caret + 1);
      factor.resize(caret);
      if (etext.empty()) throw ParseError("bad exponent in monomial '" + text + "'");
      Int e = 0;
      for (char ch : etext) {
        if (ch < '0' || ch > '9') throw ParseError("bad exponent in monomial '" + text + "'");
        e = e * 10 + (ch - '0');
        if (e > 1'000'000) throw ParseError("exponent out of range in '" + text + "'");
      }
      if (e < 1) throw ParseError("bad exponent in monomial '" + text + "'");
      exp = static_cast<int>(e);
    }
    int code = parse_var_code(factor, num_vars);
    for (auto& [v, e] : m.factors)
      if (v == code) throw ParseError("repeated variable in monomial '" + text + "'");
    m.factors.emplace_back(code, exp);
    if (end == text.size()) break;
    start = end + 1;
  }
  std::sort(m.factors.begin(), m.factors.end());
  return m;
}

Polynomial parse_poly_tokens(const std::vector<std::string>& toks, std::size_t from, std::size_t to,
                             int& num_vars) {
  if (from >= to) throw ParseError("missing polynomial");
  if (to - from == 1 && toks[from] == "0") return {};
  Polynomial p;
  for (std::size_t i = from; i < to; ++i) {
    const std::string& tok = toks[i];
    auto colon = tok.rfind(':');
    if (colon == std::string::npos) throw ParseError("bad term '" + tok + "'");
    Monomial m = parse_monomial(tok.substr(0, colon), num_vars);
    Rational c = parse_rational(tok.substr(colon + 1));
    if (c == 0) throw ParseError("zero coefficient in '" + tok + "'");
    if (!p.terms.emplace(std::move(m), std::move(c)).second)
      throw ParseError("repeated monomial in polynomial");
  }
  return p;
}

}  // namespace

PcrProof parse_pcr(std::istream& in) {
  PcrProof pp;
  std::string raw;
  bool saw_header = false;
  bool in_lines = false;
  int next_premise = 1, next_line = 1;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(std::move(t));
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "pcr" || toks[1] != "1")
        throw ParseError("expected header 'pcr 1'");
      saw_header = true;
      continue;
    }
    if (toks[0] == "premise") {
      if (in_lines) throw ParseError("premises must come before lines");
      if (toks.size() < 3) throw ParseError("premise needs an id and a polynomial");
      if (parse_int(toks[1], "premise id") != next_premise)
        throw ParseError("premise ids must be 1, 2, …");
      pp.premises.push_back(parse_poly_tokens(toks, 2, toks.size(), pp.num_vars));
      ++next_premise;
      continue;
    }
    if (toks[0] != "line") throw ParseError("unknown record '" + toks[0] + "'");
    in_lines = true;
    if (toks.size() < 3) throw ParseError("malformed proof line");
    if (parse_int(toks[1], "line id") != next_line) throw ParseError("line ids must be 1, 2, …");
    const std::string& kind = toks[2];
    PcrStep st;
    auto claimed = [&](std::size_t want) {
      if (toks.size() <= want || toks[want] != ":")
        throw ParseError("expected ':' before the stated polynomial");
      st.stated = parse_poly_tokens(toks, want + 1, toks.size(), pp.num_vars);
    };
    auto line_ref = [&](const std::string& tok) {
      Int id = parse_int(tok, "antecedent");
      if (id < 1 || id >= next_line) throw ParseError("antecedent id out of range: '" + tok + "'");
      return static_cast<int>(id) - 1;
    };
    if (kind == "premise") {
      if (toks.size() != 4) throw ParseError("premise line takes one index");
      st.rule = PcrRule::Premise;
      Int pid = parse_int(toks[3], "premise index");
      if (pid < 1 || pid > static_cast<Int>(pp.premises.size()))
        throw ParseError("premise index out of range");
      st.premise = static_cast<int>(pid) - 1;
      st.stated = pp.premises[st.premise];
    } else if (kind == "baxiom") {
      if (toks.size() != 5) throw ParseError("baxiom takes a kind and a variable");
      if (toks[3] == "sq") {
        st.rule = PcrRule::SquareAxiom;
        st.var = parse_var_code(toks[4], pp.num_vars);
        Polynomial x = poly_variable(st.var);
        st.stated = poly_add(poly_mul(x, x), poly_scale(x, -1));
      } else if (toks[3] == "comp") {
        st.rule = PcrRule::TwinAxiom;
        Int idx = parse_int(toks[4], "variable index");
        if (idx < 1 || idx > 1'000'000'000) throw ParseError("variable index out of range");
        st.index = static_cast<int>(idx);
        pp.num_vars = std::max(pp.num_vars, st.index);
        st.stated = poly_add(
            poly_add(poly_variable(pcr_var(st.index)), poly_variable(pcr_twin(st.index))),
            poly_constant(-1));
      } else {
        throw ParseError("unknown axiom kind '" + toks[3] + "'");
      }
    } else if (kind == "prod") {
      if (toks.size() < 6) throw ParseError("prod needs an antecedent and a variable");
      st.rule = PcrRule::Product;
      st.a1 = line_ref(toks[3]);
      st.var = parse_var_code(toks[4], pp.num_vars);
      claimed(5);
    } else if (kind == "add") {
      if (toks.size() < 8) throw ParseError("add needs two antecedents and two scalars");
      st.rule = PcrRule::Addition;
      st.a1 = line_ref(toks[3]);
      st.alpha = parse_rational(toks[4]);
      st.a2 = line_ref(toks[5]);
      st.beta = parse_rational(toks[6]);
      claimed(7);
    } else {
      throw ParseError("unknown rule '" + kind + "'");
    }
    pp.steps.push_back(std::move(st));
    ++next_line;
  }
  if (!saw_header) throw ParseError("expected header 'pcr 1'");
  return pp;
}

std::string print_pcr(const PcrProof& pp) {
  std::string out = "pcr 1\n";
  for (std::size_t i = 0; i < pp.premises.size(); ++i)
    out += "premise " + std::to_string(i + 1) + ' ' + poly_text(pp.premises[i]) + '\n';
  for (std::size_t i = 0; i < pp.steps.size(); ++i) {
    const PcrStep& st = pp.steps[i];
    out += "line " + std::to_string(i + 1) + ' ';
    switch (st.rule) {
      case PcrRule::Premise:
        out += "premise " + std::to_string(st.premise + 1);
        break;
      case PcrRule::SquareAxiom:
        out += "baxiom sq " + var_text(st.var);
        break;
      case PcrRule::TwinAxiom:
        out += "baxiom comp " + std::to_string(st.index);
        break;
      case PcrRule::Product:
        out += "prod " + std::to_string(st.a1 + 1) + ' ' + var_text(st.var) + " : " +
               poly_text(st.stated);
        break;
      case PcrRule::Addition:
        out += "add " + std::to_string(st.a1 + 1) + ' ' + st.alpha.str() + ' ' +
               std::to_string(st.a2 + 1) + ' ' + st.beta.str() + " : " + poly_text(st.stated);
        break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace linres
