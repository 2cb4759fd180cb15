// kpvc: command-line front end for the k-path vertex cover library.
//
//   kpvc solve <graph> --algo <id> --k <k> [--seed s | --seeds a..b] [--json] [--out file]
//   kpvc verify <graph> <cover> --k <k> [--json]
//   kpvc bound <graph> --k <k> [--json]
//   kpvc generate <family> [params...] [--from embedding] [--out file]
//   kpvc reduce <graph> --k <k> [--out file]
//
// Exit codes: 0 ok, 1 invalid cover (verify), 2 precondition violated,
// 3 parse error, 4 oracle size cap exceeded, 5 internal verification failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpvc/kpvc.hpp"

namespace {

using namespace kpvc;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text << '\n';
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct SeedRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

SeedRange parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw PreconditionError("--seeds expects a..b");
  SeedRange r;
  try {
    r.first = std::stoull(text.substr(0, dots));
    r.last = std::stoull(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw PreconditionError("--seeds expects a..b with non-negative integers");
  }
  if (r.first > r.last) throw PreconditionError("--seeds range is empty");
  return r;
}

// What one solve run produced. The cover is only stored after it verified.
struct RunRecord {
  std::string input;
  std::string algo;
  std::size_t k = 0;
  VertexSet cover;
  std::optional<std::uint64_t> seed;
  std::string note;
  double elapsed_ms = 0.0;
};

struct SolveOptions {
  std::string input;
  std::string algo;
  std::size_t k = 3;
  std::optional<std::uint64_t> seed;
  std::string seeds;
  std::optional<std::size_t> budget;
  bool json = false;
  bool timing = false;
  std::string out;
};

void require_k3(const SolveOptions& o) {
  if (o.k != 3) throw PreconditionError("algorithm " + o.algo + " computes 3-path covers; use --k 3");
}

int run_solve(const SolveOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_file(o.input);
  const bool embedded = o.algo == "outerplanar";
  std::optional<OuterplanarEmbedding> embedding;
  Graph g;
  if (embedded) {
    embedding = parse_embedding(text);
    g = to_graph(*embedding);
  } else {
    g = parse_edge_list(text);
  }

  RunRecord rec;
  rec.input = o.input;
  rec.algo = o.algo;
  rec.k = o.k;

  if (o.k == 0) throw PreconditionError("--k must be at least 1");
  if (o.k == 1) {
    rec.cover = VertexSet::all(g.order());
    rec.note = "k = 1: every vertex is a path of order 1, so the cover is V";
  } else if (o.algo == "exact") {
    rec.cover = psi_exact(g, o.k, o.budget).cover;
  } else if (o.algo == "tree") {
    rec.cover = pvcp_tree(g, o.k);
  } else if (o.algo == "greedy") {
    rec.cover = greedy_k_approx(g, o.k);
  } else if (o.algo == "subcubic") {
    require_k3(o);
    rec.cover = subcubic_cover3(g);
  } else if (o.algo == "sparse3") {
    require_k3(o);
    rec.cover = sparse3(g);
  } else if (o.algo == "partition") {
    require_k3(o);
    rec.cover = cover3_via_partition(g);
  } else if (o.algo == "outerplanar") {
    require_k3(o);
    rec.cover = outerplanar_cover3(triangulate(*embedding));
  } else if (o.algo == "carowei") {
    if (o.seed && !o.seeds.empty()) throw PreconditionError("use either --seed or --seeds");
    SeedRange range{o.seed.value_or(0), o.seed.value_or(0)};
    if (!o.seeds.empty()) range = parse_seed_range(o.seeds);
    // minimum size, then lowest seed
    for (std::uint64_t s = range.first;; ++s) {
      VertexSet c = caro_wei_cover(g, o.k, RandomSeed{s});
      if (!rec.seed || c.size() < rec.cover.size()) {
        rec.cover = std::move(c);
        rec.seed = s;
      }
      if (s == range.last) break;
    }
  } else {
    throw PreconditionError("unknown algorithm \"" + o.algo +
                            "\" (exact, tree, greedy, subcubic, sparse3, carowei, partition, "
                            "outerplanar)");
  }

  if (auto w = find_uncovered_path(g, rec.cover, o.k)) {
    std::string path;
    for (Vertex v : w->vertices) path += " " + std::to_string(v);
    throw VerificationError("internal error: " + o.algo + " returned a set missing the path" + path);
  }
  rec.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!o.out.empty()) write_output(o.out, join(rec.cover));

  if (o.json) {
    json j;
    j["input"] = rec.input;
    j["algo"] = rec.algo;
    j["k"] = rec.k;
    j["size"] = rec.cover.size();
    j["cover"] = rec.cover.members();
    if (rec.seed) j["seed"] = *rec.seed;
    if (!rec.note.empty()) j["note"] = rec.note;
    if (o.timing) j["elapsed_ms"] = rec.elapsed_ms;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "algo " << rec.algo << "\n"
              << "k " << rec.k << "\n";
    if (rec.seed) std::cout << "seed " << *rec.seed << "\n";
    if (!rec.note.empty()) std::cout << "note: " << rec.note << "\n";
    std::cout << "size " << rec.cover.size() << "\n"
              << "cover " << join(rec.cover) << "\n";
    if (o.timing) std::cout << "elapsed_ms " << format_real(rec.elapsed_ms) << "\n";
  }
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& cover_path, std::size_t k,
               bool as_json) {
  const Graph g = parse_edge_list(read_file(graph_path));
  const VertexSet s = parse_vertex_set(read_file(cover_path));
  if (!s.valid_for(g)) throw ParseError("cover lists a vertex outside the graph");
  if (k == 0) throw PreconditionError("--k must be at least 1");
  const auto witness = find_uncovered_path(g, s, k);
  if (as_json) {
    json j;
    j["valid"] = !witness.has_value();
    j["k"] = k;
    j["size"] = s.size();
    if (witness) j["uncovered_path"] = witness->vertices;
    std::cout << j.dump() << '\n';
  } else if (witness) {
    std::cout << "invalid: uncovered path";
    for (Vertex v : witness->vertices) std::cout << ' ' << v;
    std::cout << '\n';
  } else {
    std::cout << "valid\n";
  }
  return witness ? 1 : 0;
}

int run_bound(const std::string& path, std::size_t k, std::optional<std::size_t> budget,
              bool as_json) {
  const Graph g = parse_edge_list(read_file(path));
  if (k == 0) throw PreconditionError("--k must be at least 1");
  std::optional<std::size_t> psi;
  if (k == 1) {
    psi = g.order();
  } else {
    try {
      psi = psi_exact(g, k, budget).psi;
    } catch (const OracleTooLarge&) {
      psi.reset();
    }
  }
  const BoundReport report = k >= 2 ? make_bound_report(g, k, psi) : BoundReport{k, {}, {}, psi};
  if (as_json) {
    json j;
    j["k"] = k;
    j["n"] = g.order();
    j["m"] = g.size();
    j["bounds"] = json::object();
    for (const auto& [name, value] : report.bounds) j["bounds"][name] = value;
    if (report.sparse3) j["sparse3_exact"] = format_rational(*report.sparse3);
    if (psi) j["psi"] = *psi;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n " << g.order() << "\nm " << g.size() << "\nk " << k << "\n";
    for (const auto& [name, value] : report.bounds) {
      if (name == "sparse3" && report.sparse3) {
        std::cout << name << ' ' << format_rational(*report.sparse3) << '\n';
      } else {
        std::cout << name << ' ' << format_real(value) << '\n';
      }
    }
    if (psi) {
      std::cout << "psi " << *psi << '\n';
    } else {
      std::cout << "psi unknown (instance too large for oracle)\n";
    }
  }
  return 0;
}

int run_generate(const std::string& family, const std::vector<std::uint64_t>& params,
                 const std::string& from, const std::string& out) {
  if (family == "random_mop") {
    if (params.size() != 2) throw PreconditionError("random_mop takes n and seed");
    write_output(out, serialize_embedding(make_random_mop(params[0], RandomSeed{params[1]})));
    return 0;
  }
  if (family == "outerplanar_doubled") {
    if (from.empty()) throw PreconditionError("outerplanar_doubled needs --from <embedding>");
    write_output(out, serialize_edge_list(make_outerplanar_doubled(parse_embedding(read_file(from)))));
    return 0;
  }
  write_output(out, serialize_edge_list(gen_family(family, params)));
  return 0;
}

int run_reduce(const std::string& path, std::size_t k, const std::string& out) {
  const Graph g = parse_edge_list(read_file(path));
  write_output(out, serialize_edge_list(reduce_vc_to_kpvc(g, k).gadget));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-path vertex cover solvers, bounds and generators"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "compute a k-path vertex cover");
  solve_cmd->add_option("input", solve.input, "edge-list file (embedding file for outerplanar)")
      ->required();
  solve_cmd->add_option("--algo", solve.algo,
                        "exact, tree, greedy, subcubic, sparse3, carowei, partition, outerplanar")
      ->required();
  solve_cmd->add_option("--k", solve.k, "path order")->required();
  solve_cmd->add_option("--seed", solve.seed, "seed for carowei");
  solve_cmd->add_option("--seeds", solve.seeds, "seed range a..b for carowei (best is kept)");
  solve_cmd->add_option("--budget", solve.budget, "component size cap for the exact oracle");
  solve_cmd->add_option("--out", solve.out, "also write the cover members to this file");
  solve_cmd->add_flag("--json", solve.json, "print the run record as JSON");
  solve_cmd->add_flag("--timing", solve.timing, "include elapsed wall time");

  std::string verify_graph;
  std::string verify_cover;
  std::size_t verify_k = 3;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a cover file against a graph");
  verify_cmd->add_option("graph", verify_graph)->required();
  verify_cmd->add_option("cover", verify_cover, "whitespace-separated vertex list")->required();
  verify_cmd->add_option("--k", verify_k)->required();
  verify_cmd->add_flag("--json", verify_json);

  std::string bound_graph;
  std::size_t bound_k = 3;
  std::optional<std::size_t> bound_budget;
  bool bound_json = false;
  auto* bound_cmd = app.add_subcommand("bound", "evaluate the closed-form upper bounds");
  bound_cmd->add_option("graph", bound_graph)->required();
  bound_cmd->add_option("--k", bound_k)->required();
  bound_cmd->add_option("--budget", bound_budget, "component size cap for the exact oracle");
  bound_cmd->add_flag("--json", bound_json);

  std::string family;
  std::vector<std::uint64_t> params;
  std::string from;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand(
      "generate",
      "write a graph family: path n, cycle n, star n, complete n, random_tree n seed, "
      "tight_sparse3 x y, h6, random_mop n seed, outerplanar_doubled --from file");
  gen_cmd->add_option("family", family)->required();
  gen_cmd->add_option("params", params);
  gen_cmd->add_option("--from", from, "embedding file for outerplanar_doubled");
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

  std::string reduce_graph;
  std::size_t reduce_k = 3;
  std::string reduce_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "build the vertex-cover reduction gadget");
  reduce_cmd->add_option("graph", reduce_graph)->required();
  reduce_cmd->add_option("--k", reduce_k)->required();
  reduce_cmd->add_option("--out", reduce_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::precondition);
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify_graph, verify_cover, verify_k, verify_json);
    if (*bound_cmd) return run_bound(bound_graph, bound_k, bound_budget, bound_json);
    if (*gen_cmd) return run_generate(family, params, from, gen_out);
    if (*reduce_cmd) return run_reduce(reduce_graph, reduce_k, reduce_out);
  } catch (const kpvc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  }
  return 0;
}
