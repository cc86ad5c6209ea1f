#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "battery.hpp"
#include "plie/io.hpp"

using namespace plie;
using namespace plie::testing;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PLIE_CLI_PATH) + " " + args + " 2>&1";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "plie_cli_tests";
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::filesystem::path write_pentad(const std::string& name, const CartanPentad& p) {
  return write_file(name, io::dump(io::to_json(p)));
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze prints the cartan matrix and the degree-0 split") {
  const auto file = write_pentad("sl2_m3.json", sl2_pentad(3));
  const RunResult res = run_cli("analyze " + file.string());
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "[2, -3]"));
  CHECK(contains(res.output, "[-3, 9/2]"));
  CHECK(contains(res.output, "reduced 1, central 0, diagonal 0"));
  CHECK(contains(res.output, "reduced-contragredient case (r = rank D = rank C): yes"));
}

TEST_CASE("analyze --json carries both reports") {
  const auto file = write_pentad("sl2_m3.json", sl2_pentad(3));
  const RunResult res = run_cli("analyze --json " + file.string());
  REQUIRE(res.exit_code == 0);
  const io::json j = io::json::parse(res.output);
  CHECK(io::span_from_json(j.at("span")) == analyze_spans(sl2_pentad(3)));
  CHECK(io::structure_from_json(j.at("structure")) == decompose(sl2_pentad(3)));
}

TEST_CASE("construct reports full and reduced dimensions") {
  const auto file = write_pentad("a2.json", a2_pentad());
  const RunResult res = run_cli("construct " + file.string() + " --max-degree 4 --dims-only");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "dims by |degree| 0..4: 3 2 1 0 0"));
  CHECK(contains(res.output, "reduced dims by |degree| 0..4: 2 2 1 0 0"));
  CHECK(contains(res.output, "diagonal 1"));
}

TEST_CASE("construct --json --dims-only emits exactly the dims schema") {
  const auto file = write_pentad("sl2_m1.json", sl2_pentad(1));
  const RunResult res = run_cli("construct --json --dims-only --max-degree 2 " + file.string());
  REQUIRE(res.exit_code == 0);
  const io::json j = io::json::parse(res.output);
  CHECK(j.size() == 2);
  const io::DimsTable t = io::dims_from_json(j);
  CHECK(t.max_degree == 2);
  // Identical invocations render byte-identically.
  const RunResult again = run_cli("construct --json --dims-only --max-degree 2 " + file.string());
  CHECK(again.output == res.output);
}

TEST_CASE("construct dumps structure constants unless dims-only") {
  const auto file = write_pentad("sl2_m1.json", sl2_pentad(1));
  const RunResult res = run_cli("construct --max-degree 2 " + file.string());
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "structure constants"));
  CHECK(contains(res.output, "[1#0, -1#0]"));
}

TEST_CASE("verify passes on a battery pentad and fails loudly on corrupt input") {
  const auto file = write_pentad("rank_deficient.json", rank_deficient_pentad());
  const RunResult res = run_cli("verify " + file.string() + " --max-degree 3");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "PASS jacobi"));
  CHECK(contains(res.output, "PASS transitivity"));
  CHECK(contains(res.output, "PASS decomposition"));
  CHECK(contains(res.output, "PASS central-generators"));
  CHECK(contains(res.output, "PASS strip-bookkeeping"));
  CHECK(contains(res.output, "PASS gamma-invariance"));

  const auto bad = write_file("bad.json", "{\"r\": 1, \"n\": 2, \"A\": [[\"0\"]]");
  const RunResult broken = run_cli("verify " + bad.string());
  CHECK(broken.exit_code == 2);
  CHECK(contains(broken.output, "error:"));

  const auto singular = write_file(
      "singular.json",
      "{\"r\": 1, \"n\": 1, \"A\": [[\"0\"]], \"D\": [[\"1\"]], \"gamma\": [\"1\"]}");
  const RunResult rejected = run_cli("verify " + singular.string());
  CHECK(rejected.exit_code == 2);
  CHECK(contains(rejected.output, "A singular"));
}

TEST_CASE("verify runs only the selected checks") {
  const auto file = write_pentad("sl2_m2.json", sl2_pentad(2));
  const RunResult res = run_cli("verify " + file.string() + " --max-degree 2 --jacobi");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "PASS jacobi"));
  CHECK_FALSE(contains(res.output, "transitivity"));

  const RunResult sel = run_cli("verify " + file.string() +
                                " --max-degree 2 --transitivity --theorem2 --lemma2 --lemma3"
                                " --gamma-invariance");
  CHECK(sel.exit_code == 0);
  CHECK(contains(sel.output, "PASS transitivity"));
  CHECK(contains(sel.output, "PASS decomposition"));
  CHECK(contains(sel.output, "PASS central-generators"));
  CHECK(contains(sel.output, "PASS strip-bookkeeping"));
  CHECK(contains(sel.output, "PASS gamma-invariance"));
  CHECK_FALSE(contains(sel.output, "jacobi"));
}

TEST_CASE("contragredient builds from a matrix file") {
  Mat affine(2, 2);
  affine(0, 0) = Scalar(2);
  affine(0, 1) = Scalar(-2);
  affine(1, 0) = Scalar(-2);
  affine(1, 1) = Scalar(2);
  const auto file = write_file("affine.json", io::dump(io::matrix_file_json(affine)));
  const RunResult res = run_cli("contragredient " + file.string() + " --max-degree 2 --reduced");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "degrees -2..2: 1 2 1 2 1"));
  const RunResult full = run_cli("contragredient " + file.string() + " --max-degree 2");
  CHECK(contains(full.output, "degrees -2..2: 1 2 2 2 1"));
  CHECK(contains(full.output, "degree-0 center dimension: 1"));
}

TEST_CASE("embed emits pentad json") {
  const RunResult res = run_cli("embed sl2 --m 3");
  REQUIRE(res.exit_code == 0);
  CHECK(io::pentad_from_json(io::json::parse(res.output)) == sl2_pentad(3));

  ReductiveData d;
  d.dim_center = 0;
  d.dim_cartan = 1;
  d.gram = Mat(1, 1);
  d.gram(0, 0) = Scalar(8);
  d.columns = Mat(1, 2);
  d.columns(0, 0) = Scalar(2);
  d.columns(0, 1) = Scalar(-3);
  const auto file = write_file("reductive.json", io::dump(io::to_json(d)));
  const RunResult custom = run_cli("embed custom " + file.string());
  REQUIRE(custom.exit_code == 0);
  const CartanPentad p = io::pentad_from_json(io::json::parse(custom.output));
  CHECK(p.a(0, 0) == Scalar(1, 8));
  CHECK(p.gamma == std::vector<Scalar>{Scalar(1), Scalar(1)});
}

TEST_CASE("oracle accepts pentad and matrix inputs and honors the guard") {
  const auto pentad_file = write_pentad("a2p.json", a2_pentad());
  const RunResult res = run_cli("oracle " + pentad_file.string() + " --max-degree 3");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "oracle dims by |degree| 0..3: 3 2 1 0"));

  Mat a2(2, 2);
  a2(0, 0) = Scalar(2);
  a2(0, 1) = Scalar(-1);
  a2(1, 0) = Scalar(-1);
  a2(1, 1) = Scalar(2);
  const auto matrix_file = write_file("a2c.json", io::dump(io::matrix_file_json(a2)));
  const RunResult mres = run_cli("oracle " + matrix_file.string() + " --max-degree 3");
  CHECK(mres.exit_code == 0);
  CHECK(contains(mres.output, "oracle dims by |degree| 0..3: 2 2 1 0"));

  Mat a1(1, 1);
  a1(0, 0) = Scalar(2);
  const auto small = write_file("a1c.json", io::dump(io::matrix_file_json(a1)));
  const RunResult guarded = run_cli("oracle " + small.string() + " --max-degree 6");
  CHECK(guarded.exit_code == 2);
  CHECK(contains(guarded.output, "guard"));
  const RunResult forced = run_cli("oracle " + small.string() + " --max-degree 6 --force");
  CHECK(forced.exit_code == 0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("analyze").exit_code == 2);
  CHECK(run_cli("analyze /nonexistent/pentad.json").exit_code == 2);
  CHECK(run_cli("construct --max-degree 0 x.json").exit_code == 2);
}
