#include "commands.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nonrep/bounds.hpp"
#include "nonrep/corpus.hpp"
#include "nonrep/error.hpp"
#include "nonrep/planar_structure.hpp"
#include "nonrep/tree_decomposition.hpp"
#include "nonrep/tw_colouring.hpp"
#include "nonrep/verify.hpp"
#include "nonrep/words.hpp"

namespace nonrep::cli {
namespace {

using json = nlohmann::ordered_json;

// Bad or missing input; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_path;
  std::string format = "edgelist";
  std::string td_path;
  std::string structure_path;
  std::string colouring_path;
  std::string out_path;
  bool compute_structure = false;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::int64_t> genus;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_walk = kDefaultMaxWalk;
  std::uint64_t seed = 1;
  double keep = 0.7;
  std::string td_out;
  std::map<std::string, std::string> bound_params;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    inputs_.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return text;
  }

  Graph load_graph() {
    if (opt_.graph_path.empty()) throw InputError("--graph is required");
    const std::string text = read_input(opt_.graph_path);
    GraphFormat fmt;
    if (opt_.format == "edgelist") {
      fmt = GraphFormat::kEdgeList;
    } else if (opt_.format == "graph6") {
      fmt = GraphFormat::kGraph6;
    } else {
      throw InputError("unknown --format " + opt_.format);
    }
    return parse_graph(text, fmt);
  }

  void emit(const std::string& text) {
    if (opt_.out_path.empty()) {
      out_ << text;
      return;
    }
    // Write beside the target, then rename over it.
    const std::filesystem::path target(opt_.out_path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw InputError("cannot write " + tmp.string());
      f << text;
      if (!f) throw InputError("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, target);
  }

  json certificate(const std::string& command, json parameters) {
    json c;
    c["schema"] = 1;
    c["tool"] = {{"name", "nonrep"}, {"version", kToolVersion}};
    c["command"] = command;
    c["parameters"] = std::move(parameters);
    c["inputs"] = inputs_;
    return c;
  }

  void check_caps() const {
    for (std::size_t cap : {opt_.max_order, opt_.max_walk}) {
      if (cap < 2 || cap % 2 != 0) throw InputError("caps must be even and at least 2");
    }
  }

  std::ostream& err() { return err_; }
  const Options& opt() const { return opt_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  json inputs_ = json::array();
};

json verdict_json(const Verdict& v) {
  json j;
  j["pass"] = v.pass;
  j["cap"] = v.cap;
  j["complete"] = v.complete;
  j["counterexample"] = v.counterexample;
  return j;
}

json colouring_json(const Colouring& c, const std::string& encoding) {
  json j;
  j["palette"] = c.palette;
  j["distinct"] = c.distinct_count();
  j["encoding"] = encoding;
  j["colours"] = c.colours;
  return j;
}

// Runs every verifier, records the verdicts and returns the exit code.
int attach_verdicts(json& cert, const Graph& g, const Colouring& c, const Options& opt) {
  const Verdict proper = is_proper(g, c);
  const Verdict path = find_repetitive_path(g, c, opt.max_order);
  const Verdict walk = find_bad_lazy_walk(g, c, opt.max_walk);
  cert["verdicts"] = {{"proper", verdict_json(proper)},
                      {"repetitive_path", verdict_json(path)},
                      {"bad_lazy_walk", verdict_json(walk)}};
  const bool pass = proper.pass && path.pass && walk.pass;
  cert["pass"] = pass;
  return pass ? kExitPass : kExitCounterexample;
}

void attach_bound(json& cert, const BigInt& claimed, const Colouring& c, bool certified) {
  cert["bound"] = {{"claimed", claimed.str()},
                   {"palette", c.palette},
                   {"within", BigInt(c.palette) <= claimed},
                   {"certified", certified}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_colour_path(Session& s) {
  const Options& opt = s.opt();
  s.check_caps();
  if (opt.n < 1) throw InputError("--n must be at least 1");
  const Graph g = path_graph(opt.n);
  const Colouring c = path_colouring_4(opt.n);
  json cert = s.certificate("colour path", {{"n", opt.n},
                                            {"max_order", opt.max_order},
                                            {"max_walk", opt.max_walk}});
  cert["colouring"] = colouring_json(c, "path colour of each vertex");
  int code = attach_verdicts(cert, g, c, opt);
  const Verdict boring = verify_boring(c, opt.max_walk);
  cert["verdicts"]["boring"] = verdict_json(boring);
  if (!boring.pass) {
    cert["pass"] = false;
    code = kExitCounterexample;
  }
  attach_bound(cert, 4, c, true);
  s.emit(dump(cert));
  return code;
}

int cmd_colour_tw(Session& s) {
  const Options& opt = s.opt();
  s.check_caps();
  const Graph g = s.load_graph();
  TreeDecomposition td;
  if (opt.td_path.empty()) {
    td = heuristic_td(g);
  } else {
    std::size_t declared = 0;
    td = parse_td(s.read_input(opt.td_path), &declared);
    if (declared != g.num_vertices()) {
      throw InputError("decomposition declares " + std::to_string(declared) +
                       " vertices, graph has " + std::to_string(g.num_vertices()));
    }
    if (auto bad = validate_td(g, td)) throw InputError("invalid decomposition: " + bad->message);
  }
  const Colouring c = strongly_nonrepetitive_colouring(g, td);
  const std::size_t w = g.num_vertices() == 0 ? 0 : width(td);
  json cert = s.certificate("colour tw", {{"td", opt.td_path.empty() ? "min-fill" : "input"},
                                          {"width", w},
                                          {"max_order", opt.max_order},
                                          {"max_walk", opt.max_walk}});
  cert["colouring"] = colouring_json(
      c, "base-4 digits, least significant first: layer colour at recursion level 0, 1, ...");
  const int code = attach_verdicts(cert, g, c, opt);
  attach_bound(cert, bound_treewidth(static_cast<std::int64_t>(w)), c, true);
  s.emit(dump(cert));
  return code;
}

int cmd_colour_structured(Session& s, bool planar) {
  const Options& opt = s.opt();
  s.check_caps();
  const Graph g = s.load_graph();
  ProductStructure st;
  if (opt.compute_structure) {
    if (!planar) throw InputError("genus structures are ingested, not computed");
    try {
      st = compute_product_structure(PlaneTriangulation::from_graph(g));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("not a triangulation: ") + e.what());
    }
  } else {
    if (opt.structure_path.empty()) throw InputError("--structure or --compute-structure is required");
    st = parse_product_structure(s.read_input(opt.structure_path));
  }
  if (auto bad = validate_product_structure(g, st)) {
    throw InputError("invalid product structure: " + bad->message);
  }
  BigInt claimed;
  json params = {{"ell", st.ell}, {"computed_structure", opt.compute_structure}};
  if (planar) {
    if (st.ell != 3) throw InputError("the planar pipeline needs ell = 3");
    claimed = bound_planar();
  } else if (opt.genus) {
    if (*opt.genus < 0) throw InputError("--g must be non-negative");
    const std::size_t allowed = std::max<std::size_t>(2 * static_cast<std::size_t>(*opt.genus), 3);
    if (st.ell > allowed) throw InputError("ell exceeds max(2g, 3) for the given genus");
    claimed = bound_genus(*opt.genus);
    params["g"] = *opt.genus;
  } else {
    claimed = BigInt(256) * st.ell;
  }
  const PipelineResult r = planar ? colour_planar(g, st) : colour_genus(g, st);
  params["h_vertices"] = st.h.num_vertices();
  params["h_width"] = r.h_width;
  params["layers"] = r.layers;
  params["max_order"] = opt.max_order;
  params["max_walk"] = opt.max_walk;
  json cert = s.certificate(planar ? "colour planar" : "colour genus", std::move(params));
  cert["colouring"] = colouring_json(
      r.colouring, "((H colour) * 4 + (layer colour)) * ell + copy, H colour in base-4 digits");
  const int code = attach_verdicts(cert, g, r.colouring, opt);
  attach_bound(cert, claimed, r.colouring, r.certified);
  s.emit(dump(cert));
  return code;
}

Colouring parse_colouring(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("colouring is not valid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("colouring")) doc = doc["colouring"];
  std::optional<Colour> palette;
  if (doc.is_object()) {
    if (doc.contains("palette")) palette = doc["palette"].get<Colour>();
    if (!doc.contains("colours")) throw InputError("colouring object lacks \"colours\"");
    doc = doc["colours"];
  }
  if (!doc.is_array()) throw InputError("colouring must be an array of non-negative integers");
  Colouring c;
  Colour max_seen = 0;
  for (const auto& x : doc) {
    if (!x.is_number_unsigned()) throw InputError("colours must be non-negative integers");
    c.colours.push_back(x.get<Colour>());
    max_seen = std::max(max_seen, c.colours.back());
  }
  c.palette = palette.value_or(c.colours.empty() ? 1 : max_seen + 1);
  try {
    c.check();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return c;
}

int cmd_verify(Session& s) {
  const Options& opt = s.opt();
  s.check_caps();
  const Graph g = s.load_graph();
  if (opt.colouring_path.empty()) throw InputError("--colouring is required");
  const Colouring c = parse_colouring(s.read_input(opt.colouring_path));
  if (c.size() != g.num_vertices()) {
    throw InputError("colouring has " + std::to_string(c.size()) + " entries for " +
                     std::to_string(g.num_vertices()) + " vertices");
  }
  json cert = s.certificate("verify", {{"max_order", opt.max_order}, {"max_walk", opt.max_walk}});
  cert["colouring"] = colouring_json(c, "as given");
  const int code = attach_verdicts(cert, g, c, opt);
  s.emit(dump(cert));
  return code;
}

int cmd_bounds(Session& s, const std::string& formula) {
  std::map<std::string, BigInt> params;
  for (const auto& [name, text] : s.opt().bound_params) {
    try {
      params.emplace(name, BigInt(text));
    } catch (const std::exception&) {
      throw InputError("parameter " + name + " is not an integer: " + text);
    }
  }
  BoundReport r;
  try {
    r = evaluate_bound(formula, params);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  json j;
  j["schema"] = 1;
  j["tool"] = {{"name", "nonrep"}, {"version", kToolVersion}};
  j["formula"] = r.formula;
  j["expression"] = r.expression;
  json p = json::object();
  for (const auto& [name, value] : r.parameters) p[name] = value.str();
  j["parameters"] = std::move(p);
  j["value"] = r.value.str();
  s.emit(dump(j));
  return kExitPass;
}

int cmd_structure_validate(Session& s) {
  const Graph g = s.load_graph();
  if (s.opt().structure_path.empty()) throw InputError("--structure is required");
  const ProductStructure st = parse_product_structure(s.read_input(s.opt().structure_path));
  json cert = s.certificate("structure validate", {{"ell", st.ell}});
  const auto bad = validate_product_structure(g, st);
  json v;
  v["pass"] = !bad;
  if (bad) {
    static const char* kinds[] = {"size_mismatch", "out_of_range", "not_injective",
                                  "edge_not_embedded"};
    v["violation"] = kinds[static_cast<int>(bad->kind)];
    json witness = json::array();
    if (bad->u != kNoVertex) witness.push_back(bad->u);
    if (bad->v != kNoVertex) witness.push_back(bad->v);
    v["witness"] = std::move(witness);
    v["message"] = bad->message;
  }
  cert["verdicts"] = {{"structure", v}};
  cert["pass"] = !bad;
  s.emit(dump(cert));
  return bad ? kExitCounterexample : kExitPass;
}

int cmd_structure_compute(Session& s) {
  const Graph g = s.load_graph();
  ProductStructure st;
  try {
    st = compute_product_structure(PlaneTriangulation::from_graph(g));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("not a triangulation: ") + e.what());
  }
  s.err() << "structure: H has " << st.h.num_vertices() << " vertices, decomposition width "
          << width(*st.h_decomposition) << ", validated\n";
  s.emit(to_json(st) + "\n");
  return kExitPass;
}

int cmd_generate(Session& s, const std::string& kind) {
  const Options& opt = s.opt();
  Rng rng(opt.seed);
  std::optional<TreeDecomposition> td;
  Graph g;
  if (kind == "path") {
    g = path_graph(opt.n);
  } else if (kind == "cycle") {
    if (opt.n < 3) throw InputError("a cycle needs --n >= 3");
    g = cycle_graph(opt.n);
  } else if (kind == "complete") {
    g = complete_graph(opt.n);
  } else if (kind == "ktree" || kind == "partial-ktree") {
    DecomposedGraph d = kind == "ktree" ? random_k_tree(opt.n, opt.k, rng)
                                        : random_partial_k_tree(opt.n, opt.k, opt.keep, rng);
    g = std::move(d.graph);
    td = std::move(d.td);
  } else if (kind == "chordal") {
    g = random_connected_chordal(opt.n, rng);
  } else if (kind == "triangulation") {
    if (opt.n < 4) throw InputError("a random triangulation needs --n >= 4");
    g = random_triangulation(opt.n, rng).graph();
  } else if (kind == "octahedron") {
    g = octahedron().graph();
  } else if (kind == "icosahedron") {
    g = icosahedron().graph();
  } else {
    throw InputError("unknown generator " + kind);
  }
  if (!opt.td_out.empty()) {
    if (!td) td = heuristic_td(g);
    std::ofstream f(opt.td_out, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + opt.td_out);
    f << to_pace(*td, g.num_vertices());
  }
  s.emit(to_edge_list(g));
  return kExitPass;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Nonrepetitive colourings: constructions, verifiers and bounds", "nonrep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", opt.max_order, "Even cap on repetitive path order");
    cmd->add_option("--max-walk", opt.max_walk, "Even cap on lazy walk length");
  };
  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", opt.graph_path, "Graph file")->required();
    cmd->add_option("--format", opt.format, "edgelist or graph6");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out_path, "Output file (default: stdout)");
  };

  CLI::App* colour = app.add_subcommand("colour", "Construct and certify a colouring");
  colour->require_subcommand(1);
  CLI::App* c_path = colour->add_subcommand("path", "4-colouring of a path");
  c_path->add_option("--n", opt.n, "Number of vertices")->required();
  add_caps(c_path);
  add_out(c_path);
  CLI::App* c_tw = colour->add_subcommand("tw", "4^k colouring from a tree-decomposition");
  add_graph(c_tw);
  c_tw->add_option("--td", opt.td_path, "PACE .td file (default: min-fill heuristic)");
  add_caps(c_tw);
  add_out(c_tw);
  CLI::App* c_planar = colour->add_subcommand("planar", "Planar pipeline (at most 768 colours)");
  CLI::App* c_genus = colour->add_subcommand("genus", "Bounded-genus pipeline (256 * ell)");
  for (CLI::App* cmd : {c_planar, c_genus}) {
    add_graph(cmd);
    cmd->add_option("--structure", opt.structure_path, "Product structure JSON");
    add_caps(cmd);
    add_out(cmd);
  }
  c_planar->add_flag("--compute-structure", opt.compute_structure,
                     "Compute the structure (input must be a triangulation)");
  c_genus->add_option("--g", opt.genus, "Euler genus the structure was built for");

  CLI::App* verify = app.add_subcommand("verify", "Verify a given colouring");
  add_graph(verify);
  verify->add_option("--colouring", opt.colouring_path, "Colouring JSON")->required();
  add_caps(verify);
  add_out(verify);

  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate a closed-form bound");
  std::string formula;
  bounds->add_option("formula", formula, "planar, genus, treewidth, almost_embeddable, minor, "
                                         "topological_minor or rich")
      ->required();
  for (const char* p : {"g", "k", "r", "c", "c-prime"}) {
    std::string name = p;
    bounds->add_option_function<std::string>(
        "--" + name,
        [&opt, name](const std::string& v) {
          opt.bound_params[name == "c-prime" ? "c_prime" : name] = v;
        },
        "Formula parameter");
  }
  add_out(bounds);

  CLI::App* structure = app.add_subcommand("structure", "Product structures");
  structure->require_subcommand(1);
  CLI::App* s_validate = structure->add_subcommand("validate", "Check a structure against a graph");
  add_graph(s_validate);
  s_validate->add_option("--structure", opt.structure_path, "Product structure JSON")->required();
  add_out(s_validate);
  CLI::App* s_compute = structure->add_subcommand("compute", "Tripod structure of a triangulation");
  add_graph(s_compute);
  add_out(s_compute);

  CLI::App* generate = app.add_subcommand("generate", "Write a corpus graph as an edge list");
  std::string kind;
  generate->add_option("kind", kind, "path, cycle, complete, ktree, partial-ktree, chordal, "
                                     "triangulation, octahedron or icosahedron")
      ->required();
  generate->add_option("--n", opt.n, "Number of vertices");
  generate->add_option("--k", opt.k, "Width for k-trees");
  generate->add_option("--keep", opt.keep, "Edge retention for partial k-trees");
  generate->add_option("--seed", opt.seed, "Random seed");
  generate->add_option("--td-out", opt.td_out, "Also write a PACE decomposition");
  add_out(generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  Session session(opt, out, err);
  try {
    if (*c_path) return cmd_colour_path(session);
    if (*c_tw) return cmd_colour_tw(session);
    if (*c_planar) return cmd_colour_structured(session, true);
    if (*c_genus) return cmd_colour_structured(session, false);
    if (*verify) return cmd_verify(session);
    if (*bounds) return cmd_bounds(session, formula);
    if (*s_validate) return cmd_structure_validate(session);
    if (*s_compute) return cmd_structure_compute(session);
    if (*generate) return cmd_generate(session, kind);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"nonrep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nonrep::cli
