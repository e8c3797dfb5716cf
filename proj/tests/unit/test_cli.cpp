#include <doctest.h>

#include <stdexcept>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "nonrep/graph.hpp"
#include "nonrep/corpus.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;
namespace cli = nonrep::cli;

namespace {

fs::path tmp_dir() {
  const char* env = std::getenv("NONREP_TMP");
  fs::path dir = fs::path(env ? env : fs::temp_directory_path().string()) / "cli_scratch";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = tmp_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args, int expected = cli::kExitPass) {
  Result r = run(args);
  INFO(r.err);
  CHECK(r.code == expected);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(cli::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("colour path") {
  json cert = run_json({"colour", "path", "--n", "40"});
  CHECK(cert["schema"] == 1);
  CHECK(cert["command"] == "colour path");
  CHECK(cert["pass"] == true);
  CHECK(cert["colouring"]["palette"] == 4);
  CHECK(cert["colouring"]["colours"].size() == 40);
  CHECK(cert["verdicts"]["boring"]["pass"] == true);
  CHECK(cert["verdicts"]["repetitive_path"]["cap"] == 12);
  CHECK(cert["verdicts"]["bad_lazy_walk"]["complete"] == false);
  CHECK(cert["bound"]["claimed"] == "4");
  CHECK(cert["bound"]["within"] == true);

  CHECK(run({"colour", "path", "--n", "0"}).code == cli::kExitInputError);
  CHECK(run({"colour", "path", "--n", "5", "--max-walk", "7"}).code == cli::kExitInputError);
}

TEST_CASE("colour tw with and without a decomposition") {
  const std::string graph = write_file("p3.txt", "n 3\n0 1\n1 2\n");
  const std::string td = write_file("p3.td", "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
  json heuristic = run_json({"colour", "tw", "--graph", graph});
  CHECK(heuristic["parameters"]["td"] == "min-fill");
  CHECK(heuristic["parameters"]["width"] == 1);
  CHECK(heuristic["inputs"][0]["sha256"] == cli::sha256_hex("n 3\n0 1\n1 2\n"));
  CHECK(heuristic["pass"] == true);

  json given = run_json({"colour", "tw", "--graph", graph, "--td", td});
  CHECK(given["parameters"]["td"] == "input");
  CHECK(given["inputs"].size() == 2);
  CHECK(given["bound"]["claimed"] == "4");

  const std::string g6 = write_file("k4.g6", "C~\n");
  json k4 = run_json({"colour", "tw", "--graph", g6, "--format", "graph6"});
  CHECK(k4["colouring"]["distinct"] == 4);
  CHECK(k4["bound"]["claimed"] == "64");

  const std::string wrong_td = write_file("bad.td", "s td 1 2 3\nb 1 1 2\n");
  CHECK(run({"colour", "tw", "--graph", graph, "--td", wrong_td}).code == cli::kExitInputError);
  const std::string small_td = write_file("small.td", "s td 1 2 2\nb 1 1 2\n");
  CHECK(run({"colour", "tw", "--graph", graph, "--td", small_td}).code == cli::kExitInputError);
  CHECK(run({"colour", "tw", "--graph", graph, "--format", "dot"}).code == cli::kExitInputError);
  CHECK(run({"colour", "tw", "--graph", (tmp_dir() / "missing.txt").string()}).code ==
        cli::kExitInputError);
  const std::string broken = write_file("broken.txt", "n 2\n0 5\n");
  CHECK(run({"colour", "tw", "--graph", broken}).code == cli::kExitInputError);
}

TEST_CASE("colour planar and genus") {
  const std::string ico = write_file("ico.txt", nonrep::to_edge_list(nonrep::icosahedron().graph()));
  json computed = run_json({"colour", "planar", "--graph", ico, "--compute-structure"});
  CHECK(computed["bound"]["claimed"] == "768");
  CHECK(computed["bound"]["within"] == true);
  CHECK(computed["bound"]["certified"] == true);
  CHECK(computed["pass"] == true);

  const std::string structure_path = (tmp_dir() / "ico.json").string();
  Result s = run({"structure", "compute", "--graph", ico, "--out", structure_path});
  CHECK(s.code == cli::kExitPass);
  CHECK(s.err.find("validated") != std::string::npos);
  json st = json::parse(read_file(structure_path));
  CHECK(st["ell"] == 3);
  CHECK(st["placement"].size() == 12);

  json ingested = run_json({"colour", "planar", "--graph", ico, "--structure", structure_path});
  CHECK(ingested["pass"] == true);
  json validated = run_json({"structure", "validate", "--graph", ico, "--structure", structure_path});
  CHECK(validated["verdicts"]["structure"]["pass"] == true);

  const std::string k4 = write_file("k4.txt", "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const std::string ell4 = write_file(
      "k4_ell4.json",
      R"({"ell": 4, "H": {"n": 1, "edges": []}, "placement": [[0,0,0],[0,0,1],[0,0,2],[0,0,3]]})");
  json genus = run_json({"colour", "genus", "--graph", k4, "--structure", ell4, "--g", "2"});
  CHECK(genus["bound"]["claimed"] == "1024");
  CHECK(genus["parameters"]["g"] == 2);
  CHECK(run({"colour", "genus", "--graph", k4, "--structure", ell4, "--g", "1"}).code ==
        cli::kExitInputError);
  CHECK(run({"colour", "planar", "--graph", k4, "--structure", ell4}).code == cli::kExitInputError);
  json no_g = run_json({"colour", "genus", "--graph", k4, "--structure", ell4});
  CHECK(no_g["bound"]["claimed"] == "1024");

  const std::string c4 = write_file("c4.txt", "n 4\n0 1\n1 2\n2 3\n0 3\n");
  CHECK(run({"colour", "planar", "--graph", c4, "--compute-structure"}).code == cli::kExitInputError);
  CHECK(run({"colour", "planar", "--graph", c4}).code == cli::kExitInputError);
}

TEST_CASE("structure validate reports violations") {
  const std::string k2 = write_file("k2.txt", "n 2\n0 1\n");
  const std::string gap = write_file(
      "gap.json", R"({"ell": 1, "H": {"n": 1, "edges": []}, "placement": [[0,0,0],[0,2,0]]})");
  json v = run_json({"structure", "validate", "--graph", k2, "--structure", gap},
                    cli::kExitCounterexample);
  CHECK(v["pass"] == false);
  CHECK(v["verdicts"]["structure"]["violation"] == "edge_not_embedded");
  CHECK(v["verdicts"]["structure"]["witness"] == json::array({0, 1}));
  const std::string junk = write_file("junk.json", "{\"ell\": 1}");
  CHECK(run({"structure", "validate", "--graph", k2, "--structure", junk}).code ==
        cli::kExitInputError);
}

TEST_CASE("verify") {
  const std::string p4 = write_file("p4.txt", "n 4\n0 1\n1 2\n2 3\n");
  const std::string abab = write_file("abab.json", "[0, 1, 0, 1]");
  json bad = run_json({"verify", "--graph", p4, "--colouring", abab}, cli::kExitCounterexample);
  CHECK(bad["pass"] == false);
  CHECK(bad["verdicts"]["repetitive_path"]["counterexample"] == json::array({0, 1, 2, 3}));

  const std::string abca = write_file("abca.json", R"({"colours": [0, 1, 2, 0], "palette": 3})");
  json good = run_json({"verify", "--graph", p4, "--colouring", abca});
  CHECK(good["pass"] == true);
  CHECK(good["colouring"]["palette"] == 3);
  CHECK(good["verdicts"]["repetitive_path"]["complete"] == true);

  // A certificate can be fed back in.
  const std::string cert_path = (tmp_dir() / "p4_cert.json").string();
  CHECK(run({"verify", "--graph", p4, "--colouring", abca, "--out", cert_path}).code ==
        cli::kExitPass);
  CHECK_FALSE(fs::exists(cert_path + ".tmp"));
  json again = run_json({"verify", "--graph", p4, "--colouring", cert_path});
  CHECK(again["pass"] == true);

  const std::string short_c = write_file("short.json", "[0, 1]");
  CHECK(run({"verify", "--graph", p4, "--colouring", short_c}).code == cli::kExitInputError);
  const std::string negative = write_file("neg.json", "[0, -1, 0, 1]");
  CHECK(run({"verify", "--graph", p4, "--colouring", negative}).code == cli::kExitInputError);
  const std::string over = write_file("over.json", R"({"colours": [0, 1, 2, 0], "palette": 2})");
  CHECK(run({"verify", "--graph", p4, "--colouring", over}).code == cli::kExitInputError);
  CHECK(run({"verify", "--graph", p4, "--colouring", p4}).code == cli::kExitInputError);
}

TEST_CASE("bounds") {
  json planar = run_json({"bounds", "planar"});
  CHECK(planar["value"] == "768");
  CHECK(run_json({"bounds", "genus", "--g", "5"})["value"] == "2560");
  json minor = run_json({"bounds", "minor", "--k", "1", "--r", "1"});
  CHECK(minor["value"] == "422212465065988");
  CHECK(minor["parameters"]["k"] == "1");
  CHECK(run_json({"bounds", "topological_minor", "--k", "1", "--r", "1", "--c-prime", "3"})["value"] ==
        "422212465065988");
  CHECK(run({"bounds", "genus"}).code == cli::kExitInputError);
  CHECK(run({"bounds", "genus", "--g", "-1"}).code == cli::kExitInputError);
  CHECK(run({"bounds", "genus", "--g", "x"}).code == cli::kExitInputError);
  CHECK(run({"bounds", "unknown"}).code == cli::kExitInputError);
  CHECK(run({"bounds", "planar", "--k", "1"}).code == cli::kExitInputError);
}

TEST_CASE("generate") {
  Result tri = run({"generate", "triangulation", "--n", "20", "--seed", "5"});
  CHECK(tri.code == cli::kExitPass);
  nonrep::Graph g = nonrep::parse_graph(tri.out);
  CHECK(g.num_edges() == 54);
  CHECK(run({"generate", "triangulation", "--n", "20", "--seed", "5"}).out == tri.out);

  const std::string td_path = (tmp_dir() / "kt.td").string();
  Result kt = run({"generate", "ktree", "--n", "15", "--k", "3", "--td-out", td_path});
  CHECK(kt.code == cli::kExitPass);
  const std::string graph = write_file("kt.txt", kt.out);
  json cert = run_json({"colour", "tw", "--graph", graph, "--td", td_path, "--max-walk", "6"});
  CHECK(cert["parameters"]["width"] == 3);
  CHECK(cert["pass"] == true);

  CHECK(run({"generate", "nope"}).code == cli::kExitInputError);
  CHECK(run({"generate", "cycle", "--n", "2"}).code == cli::kExitInputError);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitInputError);
  CHECK(run({"colour"}).code == cli::kExitInputError);
  CHECK(run({"frobnicate"}).code == cli::kExitInputError);
  CHECK(run({"--help"}).code == cli::kExitPass);
  Result v = run({"--version"});
  CHECK(v.code == cli::kExitPass);
  CHECK(v.out.find(cli::kToolVersion) != std::string::npos);
}
