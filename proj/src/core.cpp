#include "linres/core.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace linres {

LinearForm LinearForm::of(std::vector<std::pair<int, Int>> raw) {
  std::map<int, Int> acc;
  for (auto& [v, c] : raw) {
    if (v < 1) throw DomainError("variable index must be positive");
    acc[v] = checked_add(acc.count(v) ? acc[v] : 0, c);
  }
  LinearForm f;
  for (auto& [v, c] : acc)
    if (c != 0) f.terms.emplace_back(v, c);
  return f;
}

Int LinearForm::coef(int var) const {
  for (auto& [v, c] : terms)
    if (v == var) return c;
  return 0;
}

Int LinearForm::max_abs_coef() const {
  Int m = 0;
  for (auto& [v, c] : terms) m = std::max(m, checked_abs(c));
  return m;
}

int LinearForm::max_var() const { return terms.empty() ? 0 : terms.back().first; }

Int LinearForm::unary_size() const {
  Int s = 0;
  for (auto& [v, c] : terms) s = checked_add(s, checked_abs(c));
  return s;
}

Int LinearForm::positive_sum() const {
  Int s = 0;
  for (auto& [v, c] : terms)
    if (c > 0) s = checked_add(s, c);
  return s;
}

Int LinearForm::negative_sum() const {
  Int s = 0;
  for (auto& [v, c] : terms)
    if (c < 0) s = checked_add(s, c);
  return s;
}

Int LinearForm::eval_bits(const std::vector<unsigned char>& bits) const {
  Int s = 0;
  for (auto& [v, c] : terms) {
    if (v > static_cast<int>(bits.size())) throw DomainError("assignment does not bind variable " + std::to_string(v));
    if (bits[v - 1]) s = checked_add(s, c);
  }
  return s;
}

namespace {
LinearForm merge_forms(const LinearForm& a, const LinearForm& b, bool subtract) {
  LinearForm out;
  std::size_t i = 0, j = 0;
  auto push = [&out](int v, Int c) {
    if (c != 0) out.terms.emplace_back(v, c);
  };
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      push(a.terms[i].first, a.terms[i].second);
      ++i;
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      Int c = subtract ? checked_neg(b.terms[j].second) : b.terms[j].second;
      push(b.terms[j].first, c);
      ++j;
    } else {
      Int c = subtract ? checked_sub(a.terms[i].second, b.terms[j].second)
                       : checked_add(a.terms[i].second, b.terms[j].second);
      push(a.terms[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

LinearForm form_add(const LinearForm& a, const LinearForm& b) { return merge_forms(a, b, false); }
LinearForm form_sub(const LinearForm& a, const LinearForm& b) { return merge_forms(a, b, true); }

LinearForm form_scale(const LinearForm& a, Int c) {
  LinearForm out;
  if (c == 0) return out;
  for (auto& [v, k] : a.terms) out.terms.emplace_back(v, checked_mul(k, c));
  return out;
}

std::vector<Int> attainable_values(const LinearForm& a) {
  std::set<Int> vals{0};
  for (auto& [v, c] : a.terms) {
    std::set<Int> next;
    for (Int s : vals) {
      next.insert(s);
      next.insert(checked_add(s, c));
    }
    vals.swap(next);
  }
  return {vals.begin(), vals.end()};
}

LinearEquation LinearEquation::make(std::vector<std::pair<int, Int>> raw, Int rhs) {
  return LinearEquation(LinearForm::of(std::move(raw)), rhs);
}

LinearEquation LinearEquation::unit(int var, Int value) { return make({{var, 1}}, value); }

LinearEquation LinearEquation::constant(Int k) { return LinearEquation({}, k); }

bool LinearEquation::is_clause_literal() const {
  return form.terms.size() == 1 && form.terms[0].second == 1 && (rhs == 0 || rhs == 1);
}

Int LinearEquation::unary_size() const { return checked_add(form.unary_size(), checked_abs(rhs)); }

LinearEquation eq_add(const LinearEquation& a, const LinearEquation& b) {
  return LinearEquation(form_add(a.form, b.form), checked_add(a.rhs, b.rhs));
}

LinearEquation eq_sub(const LinearEquation& a, const LinearEquation& b) {
  return LinearEquation(form_sub(a.form, b.form), checked_sub(a.rhs, b.rhs));
}

LinearEquation eq_negate(const LinearEquation& a) {
  return LinearEquation(form_scale(a.form, -1), checked_neg(a.rhs));
}

LinearEquation eq_scale(const LinearEquation& a, Int c) {
  return LinearEquation(form_scale(a.form, c), checked_mul(a.rhs, c));
}

Disjunction::Disjunction(std::vector<LinearEquation> list) {
  for (auto& e : list) insert(std::move(e));
}

Disjunction Disjunction::single(LinearEquation e) {
  Disjunction d;
  d.insert(std::move(e));
  return d;
}

bool Disjunction::insert(LinearEquation e) {
  if (contains(e)) return false;
  eqs.push_back(std::move(e));
  return true;
}

bool Disjunction::contains(const LinearEquation& e) const { return index_of(e) >= 0; }

int Disjunction::index_of(const LinearEquation& e) const {
  for (std::size_t i = 0; i < eqs.size(); ++i)
    if (eqs[i] == e) return static_cast<int>(i);
  return -1;
}

Int Disjunction::unary_size() const {
  Int s = 0;
  for (auto& e : eqs) s = checked_add(s, e.unary_size());
  return s;
}

int Disjunction::max_var() const {
  int m = 0;
  for (auto& e : eqs) m = std::max(m, e.form.max_var());
  return m;
}

Disjunction Disjunction::without_index(std::size_t idx) const {
  Disjunction d;
  for (std::size_t i = 0; i < eqs.size(); ++i)
    if (i != idx) d.eqs.push_back(eqs[i]);
  return d;
}

Disjunction Disjunction::union_with(const Disjunction& other) const {
  Disjunction d = *this;
  for (auto& e : other.eqs) d.insert(e);
  return d;
}

bool Disjunction::subset_of(const Disjunction& other) const {
  for (auto& e : eqs)
    if (!other.contains(e)) return false;
  return true;
}

bool Disjunction::same_set(const Disjunction& other) const {
  return subset_of(other) && other.subset_of(*this);
}

Assignment Assignment::from_mask(std::uint64_t mask, int n) {
  Assignment a;
  a.bits.resize(n);
  for (int i = 0; i < n; ++i) a.bits[i] = (mask >> i) & 1;
  return a;
}

bool Assignment::value(int var) const {
  if (var < 1 || var > static_cast<int>(bits.size()))
    throw DomainError("assignment does not bind variable " + std::to_string(var));
  return bits[var - 1];
}

std::string Assignment::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) s += ' ';
    s += 'x';
    s += std::to_string(i + 1);
    s += '=';
    s += bits[i] ? '1' : '0';
  }
  return s;
}

bool eval(const LinearEquation& e, const Assignment& a) { return e.form.eval_bits(a.bits) == e.rhs; }

bool eval(const Disjunction& d, const Assignment& a) {
  for (auto& e : d.eqs)
    if (eval(e, a)) return true;
  return false;
}

ImplicationResult semantically_implies(const std::vector<Disjunction>& premises,
                                       const Disjunction& target, int num_vars, int cap) {
  if (num_vars < 0) throw DomainError("negative variable count");
  if (num_vars > cap || num_vars > 62)
    throw TooManyVariables("semantic check over " + std::to_string(num_vars) + " variables exceeds cap");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << num_vars); ++mask) {
    Assignment a = Assignment::from_mask(mask, num_vars);
    bool all = true;
    for (auto& p : premises)
      if (!eval(p, a)) {
        all = false;
        break;
      }
    if (all && !eval(target, a)) return {false, a};
  }
  return {true, std::nullopt};
}

Disjunction translate_clause(const Clause& c) {
  Disjunction d;
  for (int lit : c.lits) {
    if (lit == 0) throw DomainError("zero literal in clause");
    int var = lit > 0 ? lit : -lit;
    d.insert(LinearEquation::unit(var, lit > 0 ? 1 : 0));
  }
  return d;
}

bool eval(const Clause& c, const Assignment& a) {
  for (int lit : c.lits) {
    int var = lit > 0 ? lit : -lit;
    if (a.value(var) == (lit > 0)) return true;
  }
  return false;
}

Cnf parse_dimacs(std::istream& in) {
  Cnf f;
  bool header = false;
  int clauses_expected = -1;
  std::string line;
  std::vector<int> cur;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (!header) {
      std::string p, kind;
      if (!(ls >> p >> kind >> f.num_vars >> clauses_expected) || p != "p" || kind != "cnf")
        throw ParseError("bad DIMACS header: " + line);
      if (f.num_vars < 0 || clauses_expected < 0) throw ParseError("bad DIMACS header counts");
      header = true;
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(Clause{cur});
        cur.clear();
      } else {
        int var = lit > 0 ? lit : -lit;
        if (var > f.num_vars) throw ParseError("literal exceeds declared variable count");
        cur.push_back(lit);
      }
    }
    if (ls.fail() && !ls.eof()) throw ParseError("bad DIMACS token in: " + line);
  }
  if (!header) throw ParseError("missing DIMACS header");
  if (!cur.empty()) throw ParseError("DIMACS clause missing terminating 0");
  if (clauses_expected >= 0 && static_cast<int>(f.clauses.size()) != clauses_expected)
    throw ParseError("DIMACS clause count mismatch");
  return f;
}

std::string to_string(const LinearEquation& e) {
  std::string s;
  for (auto& [v, c] : e.form.terms) {
    s += std::to_string(v);
    s += ':';
    s += std::to_string(c);
    s += ' ';
  }
  s += "= ";
  s += std::to_string(e.rhs);
  return s;
}

std::string to_string(const Disjunction& d) {
  if (d.empty()) return "FALSE";
  std::string s;
  for (std::size_t i = 0; i < d.eqs.size(); ++i) {
    if (i) s += " | ";
    s += to_string(d.eqs[i]);
  }
  return s;
}

namespace {
Int parse_int(std::string_view tok, std::string_view what) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("bad " + std::string(what) + ": '" + std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}
}  // namespace

LinearEquation parse_equation(std::string_view text) {
  auto toks = split_ws(text);
  std::size_t eq_pos = toks.size();
  for (std::size_t i = 0; i < toks.size(); ++i)
    if (toks[i] == "=") {
      eq_pos = i;
      break;
    }
  if (eq_pos == toks.size()) throw ParseError("equation missing '=': '" + std::string(text) + "'");
  if (eq_pos + 2 != toks.size()) throw ParseError("equation needs exactly one value after '='");
  std::vector<std::pair<int, Int>> terms;
  for (std::size_t i = 0; i < eq_pos; ++i) {
    auto tok = toks[i];
    auto colon = tok.find(':');
    if (colon == std::string_view::npos) throw ParseError("bad term '" + std::string(tok) + "'");
    Int var = parse_int(tok.substr(0, colon), "variable");
    Int coef = parse_int(tok.substr(colon + 1), "coefficient");
    if (var < 1 || var > 1'000'000'000) throw ParseError("variable out of range in '" + std::string(tok) + "'");
    terms.emplace_back(static_cast<int>(var), coef);
  }
  return LinearEquation::make(std::move(terms), parse_int(toks[eq_pos + 1], "right-hand side"));
}

Disjunction parse_disjunction(std::string_view text) {
  auto toks = split_ws(text);
  if (toks.size() == 1 && toks[0] == "FALSE") return {};
  Disjunction d;
  std::size_t start = 0;
  bool any = false;
  for (std::size_t i = 0; i <= toks.size(); ++i) {
    if (i == toks.size() || toks[i] == "|") {
      if (i == start) throw ParseError("empty equation in disjunction: '" + std::string(text) + "'");
      std::string part;
      for (std::size_t j = start; j < i; ++j) {
        if (j > start) part += ' ';
        part += std::string(toks[j]);
      }
      d.insert(parse_equation(part));
      any = true;
      start = i + 1;
    }
  }
  if (!any) throw ParseError("empty disjunction text");
  return d;
}

}  // namespace linres
