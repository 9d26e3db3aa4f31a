#include "linres/res2.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "linres/macros.hpp"

namespace linres {

namespace {

void fail(int step, const std::string& msg) {
  throw InvalidRes2Step("step " + std::to_string(step + 1) + ": " + msg);
}

LinearEquation translate_literal(int l) {
  int v = std::abs(l);
  if (l > 0) return LinearEquation::unit(v, 1);
  return LinearEquation(LinearForm::of({{v, -1}}), 0);
}

std::vector<Term> normalized_terms(const TwoDnf& d) {
  std::vector<Term> out;
  for (const Term& t : d.terms) {
    Term n = make_term(t.lits);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  return out;
}

bool contains_term(const std::vector<Term>& set, const Term& t) {
  return std::find(set.begin(), set.end(), t) != set.end();
}

std::vector<Term> minus_term(std::vector<Term> set, const Term& t) {
  set.erase(std::remove(set.begin(), set.end(), t), set.end());
  return set;
}

void union_into(std::vector<Term>& acc, const std::vector<Term>& more) {
  for (const Term& t : more)
    if (!contains_term(acc, t)) acc.push_back(t);
}

bool same_term_set(std::vector<Term> a, std::vector<Term> b) {
  auto lt = [](const Term& x, const Term& y) { return x.lits < y.lits; };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

Disjunction translate_set(const std::vector<Term>& terms) {
  Disjunction out;
  for (const Term& t : terms) out.insert(translate_term(t));
  return out;
}

// Recomputes every step's conclusion as a normalized term set, checking the
// step against it. Shared by validate and the translator.
std::vector<std::vector<Term>> audit_steps(const Res2Proof& rp) {
  std::vector<std::vector<Term>> sets;
  for (std::size_t s = 0; s < rp.steps.size(); ++s) {
    const Res2Step& st = rp.steps[s];
    int idx = static_cast<int>(s);
    std::vector<Term> stated;
    try {
      stated = normalized_terms(st.stated);
    } catch (const InvalidRes2Step& e) {
      fail(idx, e.what());
    }
    for (const Term& t : stated)
      for (int l : t.lits)
        if (std::abs(l) > rp.num_vars) fail(idx, "literal out of range");
    switch (st.rule) {
      case Res2Rule::Input:
        break;
      case Res2Rule::Cut: {
        if (st.a1 < 0 || st.a1 >= idx || st.a2 < 0 || st.a2 >= idx)
          fail(idx, "antecedent out of range");
        const TwoDnf& raw1 = rp.steps[st.a1].stated;
        if (st.term_index < 0 || st.term_index >= static_cast<int>(raw1.terms.size()))
          fail(idx, "cut term index out of range");
        Term t = make_term(raw1.terms[st.term_index].lits);
        std::vector<Term> expect = minus_term(sets[st.a1], t);
        std::vector<Term> rest = sets[st.a2];
        for (int l : t.lits) {
          Term neg = make_term({-l});
          if (!contains_term(sets[st.a2], neg))
            fail(idx, "cut needs the negated literal as a unit term in the second antecedent");
          rest = minus_term(rest, neg);
        }
        union_into(expect, rest);
        if (!same_term_set(expect, stated)) fail(idx, "stated line is not the cut result");
        break;
      }
      case Res2Rule::AndIntro: {
        if (st.a1 < 0 || st.a1 >= idx || st.a2 < 0 || st.a2 >= idx)
          fail(idx, "antecedent out of range");
        if (st.l1 == 0 || st.l2 == 0 || std::abs(st.l1) > rp.num_vars ||
            std::abs(st.l2) > rp.num_vars)
          fail(idx, "conjunction literal out of range");
        if (std::abs(st.l1) == std::abs(st.l2))
          fail(idx, "conjoined literals must use distinct variables");
        Term u1 = make_term({st.l1}), u2 = make_term({st.l2});
        if (!contains_term(sets[st.a1], u1))
          fail(idx, "first antecedent lacks the unit term");
        if (!contains_term(sets[st.a2], u2))
          fail(idx, "second antecedent lacks the unit term");
        std::vector<Term> expect = minus_term(sets[st.a1], u1);
        union_into(expect, minus_term(sets[st.a2], u2));
        union_into(expect, {make_term({st.l1, st.l2})});
        if (!same_term_set(expect, stated)) fail(idx, "stated line is not the conjunction result");
        break;
      }
      case Res2Rule::Weaken: {
        if (st.a1 < 0 || st.a1 >= idx) fail(idx, "antecedent out of range");
        Term w;
        try {
          w = make_term(st.added.lits);
        } catch (const InvalidRes2Step& e) {
          fail(idx, e.what());
        }
        for (int l : w.lits)
          if (std::abs(l) > rp.num_vars) fail(idx, "weakening literal out of range");
        std::vector<Term> expect = sets[st.a1];
        union_into(expect, {w});
        if (!same_term_set(expect, stated)) fail(idx, "stated line is not the weakened result");
        break;
      }
    }
    sets.push_back(std::move(stated));
  }
  return sets;
}

// One case of the cut gadget: with every variable of t pinned by a unit
// premise, either t's equation reduces to a false constant (drop it from the
// first antecedent) or the negated unit terms reduce to false constants (drop
// them from the second); weakening then restores the common target.
int derive_cut_case(ProofBuilder& pb, const Term& t, const LinearEquation& that,
                    const std::map<int, LinearEquation>& unit_eq,
                    const std::map<int, int>& unit_line, int p1, int p2,
                    const Disjunction& target) {
  bool sat = true;
  for (int l : t.lits) {
    Int bit = unit_eq.at(std::abs(l)).rhs;
    if ((l > 0) != (bit == 1)) sat = false;
  }
  int cur;
  if (sat) {
    cur = p2;
    for (int l : t.lits) {
      int v = std::abs(l);
      LinearEquation n = translate_literal(-l);
      bool sub = l < 0;
      LinearEquation residue = sub ? eq_sub(n, unit_eq.at(v)) : eq_add(n, unit_eq.at(v));
      cur = pb.res_eq(cur, n, unit_line.at(v), unit_eq.at(v), sub);
      cur = pb.simp_eq(cur, residue);
    }
  } else {
    cur = p1;
    LinearEquation acc = that;
    for (int l : t.lits) {
      int v = std::abs(l);
      bool sub = l > 0;
      cur = pb.res_eq(cur, acc, unit_line.at(v), unit_eq.at(v), sub);
      acc = sub ? eq_sub(acc, unit_eq.at(v)) : eq_add(acc, unit_eq.at(v));
    }
    cur = pb.simp_eq(cur, acc);
  }
  return pb.weaken_to(cur, target);
}

int cut_gadget(ProofBuilder& b, int la, int lb, const Term& t, const Disjunction& target) {
  const Disjunction L1 = b.at(la);
  const Disjunction L2 = b.at(lb);
  const LinearEquation that = translate_term(t);
  const int v1 = std::abs(t.lits[0]);

  if (t.lits.size() == 1) {
    int ax = b.axiom(v1);
    const Disjunction axd = b.at(ax);
    std::vector<DerivationHook> hooks;
    for (const LinearEquation& unit1 : axd.eqs) {
      ProofBuilder hb(b.num_vars());
      int u1 = hb.premise_line(hb.add_premise(Disjunction::single(unit1)));
      int p1 = hb.premise_line(hb.add_premise(L1));
      int p2 = hb.premise_line(hb.add_premise(L2));
      int fin = derive_cut_case(hb, t, that, {{v1, unit1}}, {{v1, u1}}, p1, p2, target);
      hooks.push_back({Fragment{hb.take(), fin}, {la, lb}});
    }
    return case_analysis_in(b, ax, hooks);
  }

  const int v2 = std::abs(t.lits[1]);
  int ax1 = b.axiom(v1);
  const Disjunction ax1d = b.at(ax1);
  std::vector<DerivationHook> outer;
  for (const LinearEquation& unit1 : ax1d.eqs) {
    ProofBuilder hb(b.num_vars());
    int u1 = hb.premise_line(hb.add_premise(Disjunction::single(unit1)));
    int p1 = hb.premise_line(hb.add_premise(L1));
    int p2 = hb.premise_line(hb.add_premise(L2));
    int ax2 = hb.axiom(v2);
    const Disjunction ax2d = hb.at(ax2);
    std::vector<DerivationHook> inner;
    for (const LinearEquation& unit2 : ax2d.eqs) {
      ProofBuilder ib(hb.num_vars());
      int w2 = ib.premise_line(ib.add_premise(Disjunction::single(unit2)));
      int w1 = ib.premise_line(ib.add_premise(Disjunction::single(unit1)));
      int q1 = ib.premise_line(ib.add_premise(L1));
      int q2 = ib.premise_line(ib.add_premise(L2));
      int fin = derive_cut_case(ib, t, that, {{v1, unit1}, {v2, unit2}},
                                {{v1, w1}, {v2, w2}}, q1, q2, target);
      inner.push_back({Fragment{ib.take(), fin}, {u1, p1, p2}});
    }
    int fin = case_analysis_in(hb, ax2, inner);
    outer.push_back({Fragment{hb.take(), fin}, {la, lb}});
  }
  return case_analysis_in(b, ax1, outer);
}

}  // namespace

Term make_term(std::vector<int> lits) {
  for (int l : lits)
    if (l == 0) throw InvalidRes2Step("zero literal in term");
  std::sort(lits.begin(), lits.end(), [](int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
  });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  if (lits.empty()) throw InvalidRes2Step("term must have at least one literal");
  if (lits.size() > 2) throw InvalidRes2Step("term may have at most two literals");
  if (lits.size() == 2 && std::abs(lits[0]) == std::abs(lits[1]))
    throw InvalidRes2Step("term literals must use distinct variables");
  Term t;
  t.lits = std::move(lits);
  return t;
}

LinearEquation translate_term(const Term& t) {
  Term n = make_term(t.lits);
  LinearEquation e = translate_literal(n.lits[0]);
  for (std::size_t i = 1; i < n.lits.size(); ++i) e = eq_add(e, translate_literal(n.lits[i]));
  return e;
}

Disjunction translate_dnf(const TwoDnf& d) {
  return translate_set(normalized_terms(d));
}

void validate(const Res2Proof& rp) {
  audit_steps(rp);
}

Proof res2_to_rlin(const Res2Proof& rp) {
  std::vector<std::vector<Term>> sets = audit_steps(rp);
  ProofBuilder b(rp.num_vars);
  std::vector<int> line_of(rp.steps.size(), -1);
  for (std::size_t s = 0; s < rp.steps.size(); ++s) {
    const Res2Step& st = rp.steps[s];
    switch (st.rule) {
      case Res2Rule::Input:
        line_of[s] = b.premise_line(b.add_premise(translate_set(sets[s])));
        break;
      case Res2Rule::Cut: {
        Term t = make_term(rp.steps[st.a1].stated.terms[st.term_index].lits);
        line_of[s] = cut_gadget(b, line_of[st.a1], line_of[st.a2], t, translate_set(sets[s]));
        break;
      }
      case Res2Rule::AndIntro:
        line_of[s] = b.res_eq(line_of[st.a1], translate_literal(st.l1), line_of[st.a2],
                              translate_literal(st.l2), false);
        break;
      case Res2Rule::Weaken: {
        Term w = make_term(st.added.lits);
        if (contains_term(sets[st.a1], w))
          line_of[s] = line_of[st.a1];
        else
          line_of[s] = b.weaken(line_of[st.a1], translate_term(w));
        break;
      }
    }
  }
  return b.take();
}

namespace {

Term parse_term_text(const std::string& text) {
  if (text.empty() || text.back() == '&') throw ParseError("bad term: " + text);
  std::vector<int> lits;
  std::string cur;
  std::istringstream parts(text);
  while (std::getline(parts, cur, '&')) {
    try {
      std::size_t used = 0;
      int l = std::stoi(cur, &used);
      if (used != cur.size() || l == 0) throw ParseError("bad literal: " + cur);
      lits.push_back(l);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad literal: " + cur);
    }
  }
  if (lits.empty()) throw ParseError("empty term");
  try {
    return make_term(std::move(lits));
  } catch (const InvalidRes2Step& e) {
    throw ParseError(e.what());
  }
}

TwoDnf parse_dnf_text(const std::string& text) {
  TwoDnf d;
  if (text == "FALSE") return d;
  if (text.empty() || text.back() == ';') throw ParseError("bad disjunction: " + text);
  std::string cur;
  std::istringstream parts(text);
  while (std::getline(parts, cur, ';')) d.terms.push_back(parse_term_text(cur));
  if (d.terms.empty()) throw ParseError("empty disjunction must be written FALSE");
  std::vector<Term> dedup = normalized_terms(d);
  d.terms = std::move(dedup);
  return d;
}

std::string term_text(const Term& t) {
  std::string out;
  for (std::size_t i = 0; i < t.lits.size(); ++i) {
    if (i) out += '&';
    out += std::to_string(t.lits[i]);
  }
  return out;
}

std::string dnf_text(const TwoDnf& d) {
  if (d.terms.empty()) return "FALSE";
  std::string out;
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    if (i) out += ';';
    out += term_text(d.terms[i]);
  }
  return out;
}

int touch_vars(const TwoDnf& d, int num_vars) {
  for (const Term& t : d.terms)
    for (int l : t.lits) num_vars = std::max(num_vars, std::abs(l));
  return num_vars;
}

}  // namespace

Res2Proof parse_res2(std::istream& in) {
  Res2Proof rp;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (!header) {
      int version = 0;
      if (kw != "res2" || !(ls >> version) || version != 1)
        throw ParseError("expected header: res2 1");
      header = true;
      continue;
    }
    long long id;
    if (!(ls >> id)) throw ParseError("missing step id");
    if (id != static_cast<long long>(rp.steps.size()) + 1)
      throw ParseError("step ids must be 1-based and consecutive");
    Res2Step st;
    if (kw == "input") {
      std::string dnf;
      if (!(ls >> dnf)) throw ParseError("input step needs a disjunction");
      st.rule = Res2Rule::Input;
      st.stated = parse_dnf_text(dnf);
    } else if (kw == "line") {
      std::string rule;
      if (!(ls >> rule)) throw ParseError("missing rule name");
      auto read_int = [&](const char* what) {
        long long v;
        if (!(ls >> v)) throw ParseError(std::string("missing ") + what);
        return static_cast<int>(v);
      };
      auto read_colon_dnf = [&]() {
        std::string colon, dnf;
        if (!(ls >> colon) || colon != ":") throw ParseError("expected ':' before the stated line");
        if (!(ls >> dnf)) throw ParseError("missing stated disjunction");
        return parse_dnf_text(dnf);
      };
      if (rule == "cut") {
        st.rule = Res2Rule::Cut;
        st.a1 = read_int("antecedent") - 1;
        st.term_index = read_int("term index") - 1;
        st.a2 = read_int("antecedent") - 1;
        st.stated = read_colon_dnf();
      } else if (rule == "and") {
        st.rule = Res2Rule::AndIntro;
        st.a1 = read_int("antecedent") - 1;
        st.l1 = read_int("literal");
        st.a2 = read_int("antecedent") - 1;
        st.l2 = read_int("literal");
        st.stated = read_colon_dnf();
      } else if (rule == "weaken") {
        st.rule = Res2Rule::Weaken;
        st.a1 = read_int("antecedent") - 1;
        std::string term;
        if (!(ls >> term)) throw ParseError("weakening step needs a term");
        st.added = parse_term_text(term);
        st.stated = read_colon_dnf();
      } else {
        throw ParseError("unknown rule: " + rule);
      }
    } else {
      throw ParseError("unknown record: " + kw);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens: " + extra);
    rp.num_vars = touch_vars(st.stated, rp.num_vars);
    if (st.rule == Res2Rule::Weaken)
      for (int l : st.added.lits) rp.num_vars = std::max(rp.num_vars, std::abs(l));
    if (st.rule == Res2Rule::AndIntro) {
      rp.num_vars = std::max(rp.num_vars, std::abs(st.l1));
      rp.num_vars = std::max(rp.num_vars, std::abs(st.l2));
    }
    rp.steps.push_back(std::move(st));
  }
  if (!header) throw ParseError("expected header: res2 1");
  return rp;
}

std::string print_res2(const Res2Proof& rp) {
  std::ostringstream out;
  out << "res2 1\n";
  for (std::size_t s = 0; s < rp.steps.size(); ++s) {
    const Res2Step& st = rp.steps[s];
    switch (st.rule) {
      case Res2Rule::Input:
        out << "input " << (s + 1) << ' ' << dnf_text(st.stated) << '\n';
        break;
      case Res2Rule::Cut:
        out << "line " << (s + 1) << " cut " << (st.a1 + 1) << ' ' << (st.term_index + 1) << ' '
            << (st.a2 + 1) << " : " << dnf_text(st.stated) << '\n';
        break;
      case Res2Rule::AndIntro:
        out << "line " << (s + 1) << " and " << (st.a1 + 1) << ' ' << st.l1 << ' ' << (st.a2 + 1)
            << ' ' << st.l2 << " : " << dnf_text(st.stated) << '\n';
        break;
      case Res2Rule::Weaken:
        out << "line " << (s + 1) << " weaken " << (st.a1 + 1) << ' ' << term_text(st.added)
            << " : " << dnf_text(st.stated) << '\n';
        break;
    }
  }
  return out.str();
}

}  // namespace linres
