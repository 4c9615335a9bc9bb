#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "gomega/cli.hpp"
#include "gomega/io.hpp"
#include "gomega/schreier.hpp"

using namespace gomega;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gomega");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

const std::string kFixtures = GOMEGA_FIXTURE_DIR;

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({"sweep", "--omega", ":012", "--max-level", "2", "--bogus"}).status == kExitUsage);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"sweep", "--omega", ":012", "--max-level", "2", "--target", "[1,0]"}).status ==
        kExitUsage);
  CHECK(run({"schreier", "--omega", "xyz", "--level", "2"}).status == kExitUsage);
  CHECK(run({"spectrum", "--graph", "/nonexistent.json"}).status == kExitUsage);
  CHECK(run({"schreier", "--omega", ":012", "--level", "2", "--tol", "2"}).status == kExitUsage);
  CHECK(run({"--help"}).status == kExitOk);
}

TEST_CASE("every run echoes its configuration") {
  const auto r = run({"schreier", "--omega", ":012", "--level", "1"});
  CHECK(r.status == kExitOk);
  CHECK(r.err.find("config: ") != std::string::npos);
  CHECK(r.err.find("max_vertices") != std::string::npos);
}

TEST_CASE("schreier and upsilon artifacts") {
  auto r = run({"schreier", "--omega", ":012", "--level", "2", "--weights", "markov"});
  REQUIRE(r.status == kExitOk);
  const auto doc = parse_graph(r.out);
  CHECK(doc.graph.vertex_count() == 4);
  CHECK(doc.metadata["omega"] == ":012");
  CHECK(doc.metadata["loop_degree"] == 1);
  CHECK(doc.graph.edge(0).wu == Weight{0.25, 0.0});

  r = run({"schreier", "--omega", ":012", "--level", "2", "--format", "dot"});
  CHECK(r.out.starts_with("graph"));

  r = run({"upsilon", "--n", "1", "--format", "dot"});
  CHECK(r.status == kExitOk);
  r = run({"upsilon", "--ray", "4"});
  CHECK(parse_graph(r.out).graph.vertex_count() == 5);
  r = run({"upsilon", "--line", "-2", "2"});
  CHECK(parse_graph(r.out).graph.vertex_count() == 5);
  CHECK(run({"upsilon", "--n", "6", "--check-omega", "0:12"}).status == kExitOk);
  r = run({"upsilon", "--n", "2", "--middle-exception", "--check-omega", ":012"});
  CHECK(r.status == kExitVerificationFailed);
  CHECK(r.out.find("mismatch") != std::string::npos);
}

TEST_CASE("reproducible runs are byte-identical") {
  const auto a = run({"schreier", "--omega", ":012", "--level", "6", "--reproducible"});
  const auto b = run({"schreier", "--omega", ":012", "--level", "6", "--reproducible"});
  CHECK(a.out == b.out);
  const auto s1 = run({"sweep", "--omega", ":01", "--max-level", "7", "--reproducible"});
  const auto s2 = run({"sweep", "--omega", ":01", "--max-level", "7", "--reproducible"});
  CHECK(s1.out == s2.out);
  CHECK(s1.err.find("\"reproducible\":true") != std::string::npos);
}

TEST_CASE("spectrum and sweep") {
  auto r = run({"spectrum", "--omega", ":012", "--level", "2", "--target", "[-0.5,0]u[0.5,1]"});
  CHECK(r.status == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["spectrum"]["dimension"] == 4);
  CHECK(j["spectrum"]["contained"] == true);
  CHECK(j["kesten"]["ok"] == true);

  r = run({"spectrum", "--omega", ":012", "--level", "2", "--target", "[0.6,1]"});
  CHECK(r.status == kExitVerificationFailed);

  r = run({"spectrum", "--graph", kFixtures + "/upsilon1.json", "--operator", "cayley-laplacian"});
  CHECK(r.status == kExitOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["spectrum"]["eigenvalues"].size() == 2);

  r = run({"spectrum", "--graph", kFixtures + "/complex_weights.json", "--operator", "laplace"});
  CHECK(r.status == kExitUsage);  // not self-adjoint

  r = run({"sweep", "--omega", ":012", "--max-level", "8", "--target", "[-0.5,0]u[0.5,1]"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.starts_with("level,index,value,in_target\n"));
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 2 + 4 + 8 + 16 + 32 + 64 + 128 + 256);

  const auto csv = temp_path("gomega_sweep.csv");
  r = run({"sweep", "--omega", ":01", "--max-level", "4", "--csv", csv});
  CHECK(r.status == kExitOk);
  CHECK(read_file(csv).starts_with("level,index,value,in_target\n"));
  CHECK(nlohmann::json::parse(r.out)["all_contained"] == true);
  std::filesystem::remove(csv);

  r = run({"sweep", "--omega", ":012", "--max-level", "3", "--target", "[0.5,1]"});
  CHECK(r.status == kExitVerificationFailed);
}

TEST_CASE("cover-verify") {
  CHECK(run({"cover-verify", "--map", kFixtures + "/cover_3_2.json"}).status == kExitOk);
  CHECK(run({"cover-verify", "--omega", ":012", "--from", "4", "--to", "2"}).status == kExitOk);
  CHECK(run({"cover-verify", "--source", "cayley::012", "--window", "4", "--level", "2"}).status ==
        kExitOk);
  CHECK(run({"cover-verify", "--source", "cayley::012", "--window", "1", "--level", "3"}).status ==
        kExitVerificationFailed);

  auto j = nlohmann::json::parse(read_file(kFixtures + "/cover_3_2.json"));
  std::swap(j["edge_map"][0][1], j["edge_map"][5][1]);
  const auto bad = temp_path("gomega_corrupt_map.json");
  write_file(bad, j.dump());
  const auto r = run({"cover-verify", "--map", bad});
  CHECK(r.status == kExitVerificationFailed);
  CHECK(r.out.find("witness") != std::string::npos);
  std::filesystem::remove(bad);

  const auto out = temp_path("gomega_written_map.json");
  CHECK(run({"cover-verify", "--omega", ":01", "--from", "3", "--to", "1", "--write-map", out}).status ==
        kExitOk);
  CHECK(verify_covering(parse_covering(read_file(out))).ok);
  std::filesystem::remove(out);
}

TEST_CASE("hulanicki, growth, relators, dihedral, moments") {
  auto r = run({"hulanicki", "--omega", ":012", "--level", "2", "--source", "level:3", "--mode",
                "finite", "--k", "2", "4"});
  CHECK(r.status == kExitOk);
  r = run({"hulanicki", "--omega", ":012", "--level", "1", "--k", "2", "3"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("residual") != std::string::npos);

  r = run({"growth", "--omega", ":012", "--radius", "3"});
  CHECK(r.status == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["gamma"][2] == 11);
  r = run({"growth", "--folner", "binary-tree", "--k-max", "6"});
  CHECK(r.status == kExitOk);
  r = run({"growth", "--folner", "upsilon-ray", "--k-max", "20"});
  CHECK(r.status == kExitOk);

  r = run({"relators", "--omega", ":012", "--k", "2", "--depth", "10"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("dacacadacacadacacadacaca") != std::string::npos);
  CHECK(run({"relators", "--omega", ":0"}).status == kExitUsage);

  r = run({"dihedral"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("[-0.5,0]u[0.5,1]") != std::string::npos);
  CHECK(run({"dihedral", "--omega", ":012", "--depth", "5"}).status == kExitOk);

  r = run({"moments", "--omega", ":012", "--level", "3", "--power", "10"});
  CHECK(r.status == kExitOk);
  r = run({"moments", "--graph", kFixtures + "/upsilon1.json", "--vertex", "1"});
  CHECK(r.status == kExitOk);
}

TEST_CASE("output file option") {
  const auto path = temp_path("gomega_out.json");
  const auto r = run({"schreier", "--omega", ":012", "--level", "3", "-o", path});
  CHECK(r.status == kExitOk);
  CHECK(r.out.empty());
  CHECK(parse_graph(read_file(path)).graph.vertex_count() == 8);
  std::filesystem::remove(path);
}
