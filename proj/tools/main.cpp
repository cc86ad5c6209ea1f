#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plie/checks.hpp"
#include "plie/embed.hpp"
#include "plie/graded.hpp"
#include "plie/io.hpp"
#include "plie/local.hpp"
#include "plie/oracle.hpp"
#include "plie/pentad.hpp"
#include "plie/structure.hpp"

namespace {

using namespace plie;

// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.
constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Command {
  enum class Kind { analyze, construct, verify, contragredient, embed, oracle };
  Kind kind{};
  std::string input;  // input file; unused for `embed sl2`
  int max_degree = 3;
  bool json = false;
  bool dims_only = false;
  bool reduced = false;
  bool force = false;
  bool embed_sl2 = false;
  unsigned long sl2_m = 0;
  bool jacobi = false, transitivity = false, theorem2 = false;
  bool lemma2 = false, lemma3 = false, gamma_inv = false;
};

std::string render_vec(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "]";
}

void print_matrix(std::ostream& os, const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) os << "  " << render_vec(m.row(i)) << "\n";
}

void print_basis(std::ostream& os, const std::string& label, const std::vector<Vec>& basis) {
  os << label << ":";
  if (basis.empty()) {
    os << " (none)\n";
    return;
  }
  os << "\n";
  for (const Vec& v : basis) os << "  " << render_vec(v) << "\n";
}

std::string dims_by_degree(const std::vector<std::size_t>& dims, int n) {
  std::string s = "graded dimensions, degrees -" + std::to_string(n) + ".." + std::to_string(n) + ":";
  for (std::size_t d : dims) s += " " + std::to_string(d);
  return s;
}

std::string dims_by_abs(const std::vector<std::size_t>& dims, int n, const std::string& label) {
  std::string s = label + " by |degree| 0.." + std::to_string(n) + ":";
  for (int m = 0; m <= n; ++m) s += " " + std::to_string(dims[static_cast<std::size_t>(m + n)]);
  return s;
}

std::size_t total_dim(const std::vector<std::size_t>& dims) {
  std::size_t t = 0;
  for (std::size_t d : dims) t += d;
  return t;
}

io::json constants_json(const GradedLieAlgebra& g) {
  io::json records = io::json::array();
  for (const auto& [key, tab] : g.tables) {
    const auto [k, l] = key;
    for (std::size_t i = 0; i < g.dim(k); ++i)
      for (std::size_t j = 0; j < g.dim(l); ++j) {
        if (is_zero(tab.c[i][j])) continue;
        records.push_back(io::json{{"k", k}, {"l", l}, {"i", i}, {"j", j},
                                   {"coeffs", io::to_json(tab.c[i][j])}});
      }
  }
  return records;
}

void print_constants(std::ostream& os, const GradedLieAlgebra& g) {
  os << "structure constants (nonzero brackets of basis elements):\n";
  for (const auto& [key, tab] : g.tables) {
    const auto [k, l] = key;
    for (std::size_t i = 0; i < g.dim(k); ++i)
      for (std::size_t j = 0; j < g.dim(l); ++j) {
        if (is_zero(tab.c[i][j])) continue;
        os << "  [" << k << "#" << i << ", " << l << "#" << j << "] = "
           << render_vec(tab.c[i][j]) << "\n";
      }
  }
}

void print_report(std::ostream& os, const Report& rep) {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f", rep.seconds);
  os << (rep.pass ? "PASS " : "FAIL ") << rep.name << ": " << rep.witness << " (" << timing
     << " s)\n";
}

int run_analyze(const Command& cmd) {
  const CartanPentad p = io::pentad_from_json(io::load_json_file(cmd.input));
  const SpanAnalysis spans = analyze_spans(p);
  const StructureReport st = decompose(p);
  if (cmd.json) {
    std::cout << io::dump(io::json{{"span", io::to_json(spans)}, {"structure", io::to_json(st)}});
    return kExitPass;
  }
  std::cout << "pentad: r=" << p.r << ", n=" << p.n << "\n";
  std::cout << "cartan matrix:\n";
  print_matrix(std::cout, st.cartan);
  std::cout << "rank D = " << spans.rank_d << ", rank C = " << spans.rank_c << "\n";
  std::cout << "dim bracket span = " << spans.dim_bracket << ", dim annihilator = "
            << spans.dim_ann << ", dim intersection = " << spans.dim_intersection << "\n";
  print_basis(std::cout, "annihilator basis", spans.ann_basis);
  std::cout << "degree-0 split: reduced " << st.basis_reduced.size() << ", central "
            << st.basis_central.size() << ", diagonal " << st.basis_diagonal.size() << "\n";
  print_basis(std::cout, "reduced basis", st.basis_reduced);
  print_basis(std::cout, "central basis", st.basis_central);
  print_basis(std::cout, "diagonal basis", st.basis_diagonal);
  std::cout << "cartan matrix invertible: " << (st.cartan_invertible ? "yes" : "no") << "\n";
  std::cout << "reduced-contragredient case (r = rank D = rank C): "
            << (st.is_reduced_contragredient ? "yes" : "no") << "\n";
  return kExitPass;
}

int run_construct(const Command& cmd) {
  const CartanPentad p = io::pentad_from_json(io::load_json_file(cmd.input));
  const GradedLieAlgebra g = extend(local_from_pentad(p), cmd.max_degree);
  const StructureReport st = decompose(p);
  const std::vector<std::size_t> dims = graded_dims(g);
  std::vector<std::size_t> reduced_dims = dims;  // degree-0 slice shrinks to the reduced part
  reduced_dims[static_cast<std::size_t>(cmd.max_degree)] = st.basis_reduced.size();
  if (cmd.json) {
    io::json out = io::to_json(io::DimsTable{cmd.max_degree, dims});
    if (!cmd.dims_only) {
      out["split"] = io::json{{"reduced", st.basis_reduced.size()},
                              {"central", st.basis_central.size()},
                              {"diagonal", st.basis_diagonal.size()}};
      out["reduced_dims"] = io::to_json(io::DimsTable{cmd.max_degree, reduced_dims})["dims"];
      out["constants"] = constants_json(g);
    }
    std::cout << io::dump(out);
    return kExitPass;
  }
  std::cout << dims_by_degree(dims, cmd.max_degree) << "\n";
  std::cout << dims_by_abs(dims, cmd.max_degree, "dims") << "\n";
  std::cout << "degree-0 split: reduced " << st.basis_reduced.size() << ", central "
            << st.basis_central.size() << ", diagonal " << st.basis_diagonal.size() << "\n";
  std::cout << dims_by_abs(reduced_dims, cmd.max_degree, "reduced dims") << "\n";
  std::cout << "total dimension: " << total_dim(dims) << "\n";
  if (!cmd.dims_only) print_constants(std::cout, g);
  return kExitPass;
}

int run_verify(const Command& cmd) {
  const CartanPentad p = io::pentad_from_json(io::load_json_file(cmd.input));
  const bool all =
      !(cmd.jacobi || cmd.transitivity || cmd.theorem2 || cmd.lemma2 || cmd.lemma3 || cmd.gamma_inv);
  std::vector<Report> reports;
  if (all || cmd.jacobi || cmd.transitivity) {
    const GradedLieAlgebra g = extend(local_from_pentad(p), cmd.max_degree);
    if (all || cmd.jacobi) reports.push_back(verify_jacobi(g));
    if (all || cmd.transitivity) reports.push_back(verify_transitivity(g));
  }
  if (all || cmd.theorem2) reports.push_back(verify_decomposition(p, cmd.max_degree));
  if (all || cmd.lemma2) reports.push_back(verify_central_generators(p, cmd.max_degree));
  if (all || cmd.lemma3) reports.push_back(verify_strip_dims(p, cmd.max_degree));
  if (all || cmd.gamma_inv) {
    // Deterministic alternative diagonal 1, 7, 13, ...
    std::vector<Scalar> gamma2;
    for (std::size_t i = 0; i < p.n; ++i) gamma2.push_back(Scalar(6 * static_cast<long>(i) + 1));
    reports.push_back(gamma_invariance(p, gamma2, cmd.max_degree));
  }
  bool ok = true;
  for (const Report& rep : reports) {
    print_report(std::cout, rep);
    ok = ok && rep.pass;
  }
  return ok ? kExitPass : kExitVerifyFail;
}

int run_contragredient(const Command& cmd) {
  const Mat c = io::cartan_from_json(io::load_json_file(cmd.input));
  const GradedLieAlgebra g = cmd.reduced ? reduced_contragredient(c, cmd.max_degree)
                                         : extend(local_from_cartan(c), cmd.max_degree);
  const std::vector<std::size_t> dims = graded_dims(g);
  std::cout << dims_by_degree(dims, cmd.max_degree) << "\n";
  std::cout << dims_by_abs(dims, cmd.max_degree, "dims") << "\n";
  std::cout << "degree-0 center dimension: " << center_degree0(c).size() << "\n";
  std::cout << "total dimension: " << total_dim(dims) << "\n";
  return kExitPass;
}

int run_embed(const Command& cmd) {
  const CartanPentad p =
      cmd.embed_sl2 ? sl2_pentad(cmd.sl2_m)
                    : pentad_from_reductive(io::reductive_from_json(io::load_json_file(cmd.input)));
  std::cout << io::dump(io::to_json(p));
  return kExitPass;
}

int run_oracle(const Command& cmd) {
  const io::json j = io::load_json_file(cmd.input);
  // Accept either a pentad file or a cartan matrix file.
  const LocalPart local = j.contains("C") ? local_from_cartan(io::cartan_from_json(j))
                                          : local_from_pentad(io::pentad_from_json(j));
  const std::vector<std::size_t> dims = oracle_dims(local, cmd.max_degree, cmd.force);
  std::cout << "oracle " << dims_by_degree(dims, cmd.max_degree) << "\n";
  std::cout << dims_by_abs(dims, cmd.max_degree, "oracle dims") << "\n";
  return kExitPass;
}

int run(const Command& cmd) {
  switch (cmd.kind) {
    case Command::Kind::analyze: return run_analyze(cmd);
    case Command::Kind::construct: return run_construct(cmd);
    case Command::Kind::verify: return run_verify(cmd);
    case Command::Kind::contragredient: return run_contragredient(cmd);
    case Command::Kind::embed: return run_embed(cmd);
    case Command::Kind::oracle: return run_oracle(cmd);
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  Command cmd;
  CLI::App app{"exact construction and verification of truncated graded Lie algebras"};
  app.require_subcommand(1);

  const auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree", cmd.max_degree, "truncation horizon (default 3)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* analyze = app.add_subcommand("analyze", "span and degree-0 structure of a pentad file");
  analyze->add_option("file", cmd.input, "pentad JSON file")->required();
  analyze->add_flag("--json", cmd.json, "emit JSON");
  analyze->callback([&] { cmd.kind = Command::Kind::analyze; });

  CLI::App* construct = app.add_subcommand("construct", "build the graded algebra of a pentad file");
  construct->add_option("file", cmd.input, "pentad JSON file")->required();
  add_degree(construct);
  construct->add_flag("--dims-only", cmd.dims_only, "print dimensions only");
  construct->add_flag("--json", cmd.json, "emit JSON");
  construct->callback([&] { cmd.kind = Command::Kind::construct; });

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite on a pentad file");
  verify->add_option("file", cmd.input, "pentad JSON file")->required();
  add_degree(verify);
  verify->add_flag("--jacobi", cmd.jacobi, "Jacobi identity on all basis triples");
  verify->add_flag("--transitivity", cmd.transitivity, "no silent elements beyond the local part");
  verify->add_flag("--theorem2", cmd.theorem2, "degree-0 decomposition checks");
  verify->add_flag("--lemma2", cmd.lemma2, "zero weight columns give central generators");
  verify->add_flag("--lemma3", cmd.lemma3, "zero-column stripping dimension bookkeeping");
  verify->add_flag("--gamma-invariance", cmd.gamma_inv, "dimensions do not depend on gamma");
  verify->callback([&] { cmd.kind = Command::Kind::verify; });

  CLI::App* contr = app.add_subcommand("contragredient", "build the algebra of a cartan matrix file");
  contr->add_option("file", cmd.input, "matrix JSON file {\"C\": [[...]]}")->required();
  add_degree(contr);
  contr->add_flag("--reduced", cmd.reduced, "factor out the degree-0 center");
  contr->callback([&] { cmd.kind = Command::Kind::contragredient; });

  CLI::App* embed = app.add_subcommand("embed", "generate a pentad from embedding data");
  embed->require_subcommand(1);
  CLI::App* sl2 = embed->add_subcommand("sl2", "the built-in sl2 family");
  sl2->add_option("--m", cmd.sl2_m, "highest weight of the representation")->required();
  sl2->callback([&] {
    cmd.kind = Command::Kind::embed;
    cmd.embed_sl2 = true;
  });
  CLI::App* custom = embed->add_subcommand("custom", "pentad from a reductive-data file");
  custom->add_option("file", cmd.input, "reductive-data JSON file")->required();
  custom->callback([&] {
    cmd.kind = Command::Kind::embed;
    cmd.embed_sl2 = false;
  });

  CLI::App* oracle = app.add_subcommand("oracle", "independent dimension oracle (combinatorial)");
  oracle->add_option("file", cmd.input, "pentad or matrix JSON file")->required();
  add_degree(oracle);
  oracle->add_flag("--force", cmd.force, "override the max-degree guard of 5");
  oracle->callback([&] { cmd.kind = Command::Kind::oracle; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return run(cmd);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
