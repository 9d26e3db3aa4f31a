#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "linres/generators.hpp"
#include "linres/implcomplete.hpp"
#include "linres/pcr.hpp"
#include "linres/proof.hpp"
#include "linres/rcp.hpp"
#include "linres/res2.hpp"
#include "linres/resolution.hpp"

using namespace linres;

namespace {

constexpr int kOk = 0, kInvalid = 1, kDomain = 2, kParse = 3;

int brute_cap() {
  if (const char* s = std::getenv("LINRES_BRUTE_CAP")) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw DomainError("LINRES_BRUTE_CAP must be an integer");
    }
  }
  return 20;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  return in;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!(out << text)) throw DomainError("cannot write '" + path + "'");
}

void print_invalid(const CheckResult& r) {
  std::cout << "INVALID";
  if (r.line >= 0) std::cout << " line " << r.line + 1;
  std::cout << ": " << to_string(r.code);
  if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
  std::cout << "\n";
}

void emit_generated(const std::string& path, const std::string& text) {
  write_file(path, text);
  std::cout << path << "\n";
}

int gen_formula_and_proof(const Formula& f, const Proof* proof, const std::string& base) {
  emit_generated(base + ".linform", print_formula(f));
  if (proof) {
    if (!check_refutation(*proof).ok()) throw DomainError("generated proof failed its own check");
    emit_generated(base + ".rlin", print_proof(*proof));
  }
  return kOk;
}

int cmd_check_rlin(const std::string& path, bool semantic, const std::vector<Int>& r0, int jobs) {
  auto in = open_input(path);
  Proof p = parse_proof(in);
  if (CheckResult r = check_proof(p, jobs); !r.ok()) {
    print_invalid(r);
    return kInvalid;
  }
  if (semantic) {
    AuditResult a = semantic_audit(p, brute_cap());
    if (!a.ok()) {
      std::cout << "INVALID line " << *a.bad_line + 1 << ": not semantically implied\n";
      return kInvalid;
    }
  }
  if (!r0.empty()) {
    R0ProofResult c = r0_classify(p, {static_cast<int>(r0[0]), r0[1]});
    if (!c.ok) {
      std::cout << "INVALID line " << c.bad_line + 1 << ": " << c.reason << "\n";
      return kInvalid;
    }
  }
  std::cout << "OK\n";
  return kOk;
}

int cmd_check_pcr(const std::string& path) {
  auto in = open_input(path);
  PcrProof pp = parse_pcr(in);
  if (CheckResult r = pcr_check(pp); !r.ok()) {
    print_invalid(r);
    return kInvalid;
  }
  std::cout << "OK\n";
  return kOk;
}

int cmd_translate(const std::string& from, const std::string& to, const std::string& in_path,
                  const std::string& out_path) {
  auto in = open_input(in_path);
  if (to == "rlin") {
    Proof p;
    if (from == "res") {
      ResolutionProof rp = parse_resolution(in);
      validate(rp);
      p = res_to_rlin(rp);
    } else if (from == "res2") {
      Res2Proof rp = parse_res2(in);
      validate(rp);
      p = res2_to_rlin(rp);
    } else if (from == "rcp") {
      RcpProof rp = parse_rcp(in);
      validate(rp);
      p = rcp_to_rlin(rp);
    } else {
      throw DomainError("unsupported translation " + from + " -> " + to);
    }
    if (CheckResult r = check_proof(p); !r.ok())
      throw DomainError("translated proof failed its own check: " + to_string(r.code));
    write_file(out_path, print_proof(p));
    std::cout << out_path << "\n";
    return kOk;
  }
  if (from == "rlin" && to == "pcr") {
    Proof p = parse_proof(in);
    if (CheckResult r = check_proof(p); !r.ok()) {
      print_invalid(r);
      return kInvalid;
    }
    PcrProof pp = rlin_to_pcr(p);
    if (CheckResult r = pcr_check(pp); !r.ok())
      throw DomainError("translated proof failed its own check: " + to_string(r.code));
    write_file(out_path, print_pcr(pp));
    std::cout << out_path << "\n";
    return kOk;
  }
  throw DomainError("unsupported translation " + from + " -> " + to);
}

int cmd_derive(const std::string& premises_path, const std::string& target_text, int n,
               const std::vector<Int>& r0, const std::string& out_path) {
  auto in = open_input(premises_path);
  Formula f = parse_formula_auto(in);
  Disjunction target = parse_disjunction(target_text);
  int num_vars = std::max({1, f.num_vars, target.max_var(), n});
  DeriveResult r = r0.empty() ? derive(f.premises, target, num_vars)
                              : derive_r0(f.premises, target, num_vars,
                                          {static_cast<int>(r0[0]), r0[1]});
  switch (r.status) {
    case DeriveStatus::Proved: {
      std::string text = print_proof(*r.proof);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
        std::cout << out_path << "\n";
      }
      return kOk;
    }
    case DeriveStatus::NotImplied: {
      std::cout << "NOT IMPLIED countermodel:";
      for (int v = 1; v <= num_vars; ++v)
        std::cout << " x" << v << "=" << (r.countermodel->value(v) ? 1 : 0);
      std::cout << "\n";
      return kInvalid;
    }
    case DeriveStatus::TooManyVariables:
      throw TooManyVariables("instance exceeds the search caps");
    case DeriveStatus::NotR0:
      std::cout << "NOT R0 line " << r.bad_line + 1 << "\n";
      return kInvalid;
  }
  return kDomain;
}

int cmd_stats(const std::string& path, bool csv) {
  auto in = open_input(path);
  Proof p = parse_proof(in);
  ProofStats s = proof_stats(p);
  if (csv) {
    std::cout << "lines,premises,total_size,max_line_size,max_abs_coef,r0_k,r0_c\n"
              << s.num_lines << ',' << s.num_premises << ',' << s.total_size << ','
              << s.max_line_size << ',' << s.max_abs_coef << ',' << s.r0.k << ',' << s.r0.c
              << "\n";
  } else {
    std::cout << "lines: " << s.num_lines << "\npremises: " << s.num_premises
              << "\ntotal-size: " << s.total_size << "\nmax-line-size: " << s.max_line_size
              << "\nmax-coef: " << s.max_abs_coef << "\nr0-groups: " << s.r0.k
              << "\nr0-coef: " << s.r0.c << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resolution over linear equations: generate, check, translate, derive"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a formula family (and its refutation)");
  gen->require_subcommand(1);

  int php_m = 0, php_n = 0;
  bool php_proof = false;
  std::string php_base;
  auto* gen_php = gen->add_subcommand("php", "pigeonhole formula PHP^m_n");
  gen_php->add_option("m", php_m, "pigeons")->required();
  gen_php->add_option("n", php_n, "holes")->required();
  gen_php->add_flag("--with-proof", php_proof, "also write the refutation");
  gen_php->add_option("-o,--out", php_base, "output base name (default php_<m>_<n>)");

  int ts_cycle = 0, ts_circulant = 0, ts_p = 0;
  std::vector<int> ts_offsets;
  std::string ts_graph, ts_base;
  bool ts_proof = false;
  auto* gen_ts = gen->add_subcommand("tseitin", "mod-p parity formula on a regular graph");
  gen_ts->add_option("--cycle", ts_cycle, "cycle graph C_n");
  gen_ts->add_option("--circulant", ts_circulant, "circulant graph on n vertices");
  gen_ts->add_option("--offset", ts_offsets, "circulant offsets (repeatable)");
  gen_ts->add_option("--graph", ts_graph, "graph file");
  gen_ts->add_option("-p", ts_p, "modulus")->required();
  gen_ts->add_flag("--with-proof", ts_proof, "also write the refutation");
  gen_ts->add_option("-o,--out", ts_base, "output base name");

  int cl_n = 0, cl_k = 0, cl_kp = 0;
  bool cl_proof = false;
  std::string cl_base;
  auto* gen_cl = gen->add_subcommand("clique", "clique-coloring formula");
  gen_cl->add_option("n", cl_n, "graph size")->required();
  gen_cl->add_option("k", cl_k, "clique size")->required();
  gen_cl->add_option("kprime", cl_kp, "color count")->required();
  gen_cl->add_flag("--with-proof", cl_proof, "unsupported for this family");
  gen_cl->add_option("-o,--out", cl_base, "output base name");

  std::string chk_system, chk_path;
  bool chk_semantic = false;
  std::vector<Int> chk_r0;
  int chk_jobs = 1;
  auto* chk = app.add_subcommand("check", "verify a proof file");
  chk->add_option("system", chk_system, "proof system")
      ->required()
      ->check(CLI::IsMember({"rlin", "pcr"}));
  chk->add_option("file", chk_path, "proof file")->required();
  chk->add_flag("--semantic", chk_semantic, "brute-force audit every line");
  chk->add_option("--r0", chk_r0, "classify every line against (k, c)")->expected(2);
  chk->add_option("--jobs", chk_jobs, "checker worker threads")->check(CLI::PositiveNumber);

  std::string tr_from, tr_to, tr_in, tr_out;
  auto* tr = app.add_subcommand("translate", "translate between proof systems");
  tr->add_option("from", tr_from, "source system")
      ->required()
      ->check(CLI::IsMember({"res", "res2", "rcp", "rlin"}));
  tr->add_option("to", tr_to, "target system")
      ->required()
      ->check(CLI::IsMember({"rlin", "pcr"}));
  tr->add_option("input", tr_in, "input proof file")->required();
  tr->add_option("output", tr_out, "output proof file")->required();

  std::string dv_premises, dv_target, dv_out;
  int dv_n = 0;
  std::vector<Int> dv_r0;
  auto* dv = app.add_subcommand("derive", "search for a derivation of a target line");
  dv->add_option("premises", dv_premises, "formula file (linform or DIMACS)")->required();
  dv->add_option("target", dv_target, "target disjunction (FALSE for a refutation)")->required();
  dv->add_option("-n", dv_n, "variable count override");
  dv->add_option("--r0", dv_r0, "require every line to classify against (k, c)")->expected(2);
  dv->add_option("-o,--out", dv_out, "proof output file (default stdout)");

  std::string st_path;
  bool st_csv = false;
  auto* st = app.add_subcommand("stats", "size and fragment report for a proof");
  st->add_option("file", st_path, "rlin proof file")->required();
  st->add_flag("--csv", st_csv, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen_php) {
      if (php_base.empty()) php_base = "php_" + std::to_string(php_m) + "_" + std::to_string(php_n);
      Formula f = php_formula(php_m, php_n);
      Proof p;
      if (php_proof) p = php_refutation(php_m, php_n);
      return gen_formula_and_proof(f, php_proof ? &p : nullptr, php_base);
    }
    if (*gen_ts) {
      int sources = (ts_cycle > 0) + (ts_circulant > 0) + !ts_graph.empty();
      if (sources != 1) throw DomainError("pick exactly one of --cycle, --circulant, --graph");
      Graph g;
      if (ts_cycle > 0) {
        g = cycle_graph(ts_cycle);
      } else if (ts_circulant > 0) {
        if (ts_offsets.empty()) throw DomainError("--circulant needs at least one --offset");
        g = circulant_graph(ts_circulant, ts_offsets);
      } else {
        auto in = open_input(ts_graph);
        g = parse_graph(in);
      }
      if (ts_base.empty()) ts_base = "tseitin_" + std::to_string(g.n) + "_p" + std::to_string(ts_p);
      TseitinInstance inst = TseitinInstance::make(std::move(g), ts_p);
      Formula f = tseitin_formula(inst);
      Proof p;
      if (ts_proof) p = tseitin_refutation(inst);
      return gen_formula_and_proof(f, ts_proof ? &p : nullptr, ts_base);
    }
    if (*gen_cl) {
      if (cl_proof) throw DomainError("clique-coloring ships as a formula only");
      if (cl_base.empty())
        cl_base = "clique_" + std::to_string(cl_n) + "_" + std::to_string(cl_k) + "_" +
                  std::to_string(cl_kp);
      Formula f = clique_color_formula(cl_n, cl_k, cl_kp);
      return gen_formula_and_proof(f, nullptr, cl_base);
    }
    if (*chk) {
      if (chk_system == "rlin") return cmd_check_rlin(chk_path, chk_semantic, chk_r0, chk_jobs);
      if (chk_semantic || !chk_r0.empty())
        throw DomainError("--semantic/--r0 apply to rlin proofs only");
      return cmd_check_pcr(chk_path);
    }
    if (*tr) return cmd_translate(tr_from, tr_to, tr_in, tr_out);
    if (*dv) return cmd_derive(dv_premises, dv_target, dv_n, dv_r0, dv_out);
    if (*st) return cmd_stats(st_path, st_csv);
  } catch (const InvalidResolutionStep& e) {
    std::cout << "INVALID: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidRes2Step& e) {
    std::cout << "INVALID: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidRcpStep& e) {
    std::cout << "INVALID: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidPcrStep& e) {
    std::cout << "INVALID: " << e.what() << "\n";
    return kInvalid;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kDomain;
}
