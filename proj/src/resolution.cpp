#include "linres/resolution.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace linres {

namespace {

void fail(int step, const std::string& msg) {
  throw InvalidResolutionStep("step " + std::to_string(step + 1) + ": " + msg);
}

std::vector<int> literal_set(const Clause& c) {
  std::vector<int> lits;
  for (int l : c.lits)
    if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
  return lits;
}

bool same_clause(const Clause& a, const Clause& b) {
  std::vector<int> sa = literal_set(a), sb = literal_set(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

bool clause_contains(const Clause& c, int lit) {
  return std::find(c.lits.begin(), c.lits.end(), lit) != c.lits.end();
}

int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError(std::string("bad ") + what + ": " + tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": " + tok);
  }
}

}  // namespace

void validate(const ResolutionProof& rp) {
  for (std::size_t s = 0; s < rp.steps.size(); ++s) {
    const ResolutionStep& st = rp.steps[s];
    int idx = static_cast<int>(s);
    for (int l : st.clause.lits)
      if (l == 0 || std::abs(l) > rp.num_vars) fail(idx, "literal out of range");
    switch (st.kind) {
      case ResolutionStep::Kind::Input:
        break;
      case ResolutionStep::Kind::Resolve: {
        if (st.a1 < 0 || st.a1 >= idx || st.a2 < 0 || st.a2 >= idx)
          fail(idx, "antecedent out of range");
        if (st.pivot < 1 || st.pivot > rp.num_vars) fail(idx, "pivot out of range");
        const Clause& c1 = rp.steps[st.a1].clause;
        const Clause& c2 = rp.steps[st.a2].clause;
        const Clause& pos = clause_contains(c1, st.pivot) ? c1 : c2;
        const Clause& neg = &pos == &c1 ? c2 : c1;
        if (!clause_contains(pos, st.pivot) || !clause_contains(neg, -st.pivot))
          fail(idx, "pivot must appear positively in one antecedent and negatively in the other");
        Clause resolvent;
        for (int l : literal_set(pos))
          if (l != st.pivot) resolvent.lits.push_back(l);
        for (int l : literal_set(neg))
          if (l != -st.pivot && !clause_contains(resolvent, l)) resolvent.lits.push_back(l);
        if (!same_clause(resolvent, st.clause)) fail(idx, "stated clause is not the resolvent");
        break;
      }
      case ResolutionStep::Kind::Weaken: {
        if (st.a1 < 0 || st.a1 >= idx) fail(idx, "antecedent out of range");
        for (int l : literal_set(rp.steps[st.a1].clause))
          if (!clause_contains(st.clause, l))
            fail(idx, "weakening must keep every antecedent literal");
        break;
      }
    }
  }
}

Proof res_to_rlin(const ResolutionProof& rp) {
  validate(rp);
  ProofBuilder b(rp.num_vars);
  std::vector<int> line_of(rp.steps.size(), -1);
  for (std::size_t s = 0; s < rp.steps.size(); ++s) {
    const ResolutionStep& st = rp.steps[s];
    switch (st.kind) {
      case ResolutionStep::Kind::Input:
        line_of[s] = b.premise_line(b.add_premise(translate_clause(st.clause)));
        break;
      case ResolutionStep::Kind::Resolve: {
        int pos = st.a1, neg = st.a2;
        if (!clause_contains(rp.steps[pos].clause, st.pivot)) std::swap(pos, neg);
        int cur = b.res_eq(line_of[pos], LinearEquation::unit(st.pivot, 1), line_of[neg],
                           LinearEquation::unit(st.pivot, 0), true);
        line_of[s] = b.simp_eq(cur, LinearEquation::constant(1));
        break;
      }
      case ResolutionStep::Kind::Weaken: {
        int cur = line_of[st.a1];
        const Clause& base = rp.steps[st.a1].clause;
        for (int l : literal_set(st.clause))
          if (!clause_contains(base, l))
            cur = b.weaken(cur, LinearEquation::unit(std::abs(l), l > 0 ? 1 : 0));
        line_of[s] = cur;
        break;
      }
    }
  }
  return b.take();
}

ResolutionProof parse_resolution(std::istream& in) {
  ResolutionProof rp;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long id;
    if (!(ls >> id)) continue;
    if (id != static_cast<long long>(rp.steps.size()) + 1)
      throw ParseError("step ids must be 1-based and consecutive");
    ResolutionStep st;
    long long tok;
    bool closed = false;
    while (ls >> tok) {
      if (tok == 0) {
        closed = true;
        break;
      }
      st.clause.lits.push_back(static_cast<int>(tok));
      rp.num_vars = std::max(rp.num_vars, static_cast<int>(std::abs(tok)));
    }
    if (!closed) throw ParseError("clause must be terminated by 0");
    std::string t1, t2, t3, extra;
    if (!(ls >> t1)) {
      st.kind = ResolutionStep::Kind::Input;
    } else if (ls >> t2) {
      if (t2 == "w") {
        st.kind = ResolutionStep::Kind::Weaken;
        st.a1 = parse_int(t1, "antecedent") - 1;
        if (ls >> extra) throw ParseError("trailing tokens after weakening record");
      } else {
        if (!(ls >> t3)) throw ParseError("resolution record needs two antecedents and a pivot");
        st.kind = ResolutionStep::Kind::Resolve;
        st.a1 = parse_int(t1, "antecedent") - 1;
        st.a2 = parse_int(t2, "antecedent") - 1;
        st.pivot = parse_int(t3, "pivot");
        if (ls >> extra) throw ParseError("trailing tokens after resolution record");
      }
    } else {
      throw ParseError("dangling antecedent in step record");
    }
    rp.steps.push_back(std::move(st));
  }
  return rp;
}

std::string print_resolution(const ResolutionProof& rp) {
  std::ostringstream out;
  for (std::size_t s = 0; s < rp.steps.size(); ++s) {
    const ResolutionStep& st = rp.steps[s];
    out << (s + 1);
    for (int l : st.clause.lits) out << ' ' << l;
    out << " 0";
    if (st.kind == ResolutionStep::Kind::Resolve)
      out << ' ' << (st.a1 + 1) << ' ' << (st.a2 + 1) << ' ' << st.pivot;
    else if (st.kind == ResolutionStep::Kind::Weaken)
      out << ' ' << (st.a1 + 1) << " w";
    out << '\n';
  }
  return out.str();
}

}  // namespace linres
