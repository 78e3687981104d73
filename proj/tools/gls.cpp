// gls: command-line front end.
//
// Exit codes: 0 found / certified / complete, 1 not found / not certified /
// infeasible, 2 usage or input error, 3 resource limit.
//
// GLS_JOBS sets the default for --jobs.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gls/bounds.hpp"
#include "gls/canonical.hpp"
#include "gls/error.hpp"
#include "gls/extremal.hpp"
#include "gls/graph.hpp"
#include "gls/json.hpp"
#include "gls/solvers.hpp"
#include "gls/square.hpp"
#include "gls/square_io.hpp"

namespace {

using namespace gls;

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kLimit = 3 };

struct Globals {
  bool json = false;
  std::uint64_t max_nodes = 0;
  double timeout_s = 0.0;
  int jobs = 1;
  std::uint64_t seed = 1;
};

Globals g_opts;

int default_jobs() {
  if (const char* env = std::getenv("GLS_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Square load_square(const std::string& path) {
  if (path == "-") return parse_square(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_square(in);
}

EdgeColoredGraph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  return read_graph_file(path);
}

bool is_graph_path(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".ecg") == 0;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void print_cells(const Square& sq, std::span<const CellRef> cells) {
  for (const CellRef& c : cells) std::cout << "  " << c.row + 1 << ' ' << c.col + 1 << ' ' << sq.at(c) << '\n';
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string square_text(const Square& sq, const std::string& comment = {}) {
  std::ostringstream os;
  write_square(os, sq, comment);
  return os.str();
}

std::string graph_text(const EdgeColoredGraph& g, const std::string& comment = {}) {
  std::ostringstream os;
  write_graph(os, g, comment);
  return os.str();
}

// ---- check ----

int run_check(const std::string& path) {
  if (is_graph_path(path)) {
    const EdgeColoredGraph g = load_graph(path);
    if (g_opts.json) {
      emit({{"m", g.vertex_count()}, {"color_count", g.color_count()}, {"proper", true}});
    } else {
      std::cout << "m: " << g.vertex_count() << "\ncolors: " << g.color_count() << "\nproper: yes\n";
    }
    return kOk;
  }
  const Square sq = load_square(path);
  const SymbolStats st = compute_stats(sq);
  if (g_opts.json) {
    emit(stats_json(sq, st));
    return kOk;
  }
  std::cout << "n: " << sq.order() << "\nsymbols: " << sq.symbol_count() << "\nsingletons: " << st.singletons.size()
            << "\nrepetitions: " << st.repetitions.size() << "\nmax multiplicity: " << st.max_multiplicity()
            << "\nline weights (c_i*, c_*j):\n";
  for (int i = 0; i < sq.order(); ++i)
    std::cout << "  " << i + 1 << ": row " << st.row_weight[i] << "  col " << st.col_weight[i] << '\n';
  return kOk;
}

// ---- solve ----

struct SolveArgs {
  std::string path;
  std::string method = "exact";
  std::string mode = "first";
};

int run_solve(const SolveArgs& a) {
  const Square sq = load_square(a.path);
  SolveReport rep;
  if (a.method == "exact") {
    const ExactMode mode = a.mode == "count" ? ExactMode::Count : a.mode == "all" ? ExactMode::All : ExactMode::First;
    rep = find_transversal_exact(sq, mode, g_opts.max_nodes);
  } else if (a.method == "constructive") {
    rep = find_transversal_constructive(sq);
  } else {
    rep.method = "mult-split";
    rep.cells = rainbow_pm_multiplicity_split(sq);
    rep.outcome = Outcome::Found;
  }
  const bool found = rep.outcome == Outcome::Found;
  if (found) GLS_ENSURE(is_transversal(sq, rep.cells), "solver output is a transversal");

  if (g_opts.json) {
    Json doc = solve_json(sq, rep);
    if (a.mode == "all") {
      Json all = Json::array();
      for (const auto& t : rep.all) all.push_back(cells_json(sq, t));
      doc["all"] = all;
    }
    emit(doc);
  } else {
    std::cout << "outcome: " << to_string(rep.outcome) << "\nmethod: " << rep.method << "\nnodes: " << rep.node_count
              << '\n';
    if (rep.count) std::cout << "count: " << *rep.count << '\n';
    if (a.method == "constructive") {
      std::cout << "reductions: " << rep.reductions << "\nresidual full lines: " << rep.residual_full_lines << '\n';
    }
    if (found) {
      std::cout << "cells (row col symbol):\n";
      print_cells(sq, rep.cells);
    }
    for (std::size_t i = 0; i < rep.all.size(); ++i) {
      std::cout << "transversal " << i + 1 << ":\n";
      print_cells(sq, rep.all[i]);
    }
  }
  return found ? kOk : kNegative;
}

// ---- certify ----

struct CertifyArgs {
  std::string path;
  bool lll = false;
  bool thresholds = false;
  bool singleton = false;
  bool full_scan = false;
};

int run_certify(const CertifyArgs& a) {
  const Square sq = load_square(a.path);
  const bool both = !a.lll && !a.thresholds;
  BoundCertificate cert;
  if (a.lll || both) cert = lll_certificate(sq, a.full_scan);
  if (a.thresholds || both) {
    BoundCertificate t = threshold_checks(sq);
    if (!(a.lll || both)) {
      cert = t;
    } else {
      cert.thresholds = t.thresholds;
      if (!cert.certified && t.certified) {
        cert.certified = true;
        cert.kind = t.kind;
      }
    }
  }
  std::optional<SingletonReport> sr;
  if (a.singleton) sr = singleton_lower_bound(sq);

  if (g_opts.json) {
    Json doc = certificate_json(sq, cert);
    if (sr) doc["singleton_bound"] = singleton_json(*sr);
    emit(doc);
  } else {
    std::cout << "certified: " << (cert.certified ? "yes" : "no") << "\nkind: " << to_string(cert.kind) << '\n';
    if (cert.witness) {
      const auto& w = *cert.witness;
      std::cout << "heaviest pair: (" << w.first.row + 1 << "," << w.first.col + 1 << ") (" << w.second.row + 1 << ","
                << w.second.col + 1 << ") symbol " << sq.label(w.symbol_id) << " weight sum " << w.weight_sum
                << "\nLLL: 64*weight_sum = " << cert.lhs << (cert.lhs <= cert.rhs ? " <= " : " > ")
                << "27*n(n-1) = " << cert.rhs << '\n';
    } else if (a.lll || both) {
      std::cout << "heaviest pair: none (no repeated symbol)\n";
    }
    for (const ThresholdCheck& t : cert.thresholds) {
      std::cout << to_string(t.kind) << ": " << t.relation << " -> " << t.lhs << " vs " << t.rhs << ' '
                << (t.holds ? "holds" : "fails") << '\n';
    }
    if (sr) {
      std::cout << "singleton bound per line (line index weight lll_side bound actual):\n";
      for (const LineBound& l : sr->lines) {
        std::cout << "  " << (l.is_row ? "row" : "col") << ' ' << l.index + 1 << ' ' << l.weight << ' '
                  << (l.lll_side ? "yes" : "no") << ' ' << l.singleton_bound << ' ' << l.singletons_avoiding << '\n';
      }
    }
  }
  return cert.certified ? kOk : kNegative;
}

// ---- decompose ----

int run_decompose(const std::string& path, bool no_max) {
  const Square sq = load_square(path);
  const Decomposition d = decompose_into_transversals(sq, !no_max, g_opts.max_nodes);
  if (g_opts.json) {
    emit(decomposition_json(sq, d));
  } else {
    std::cout << "outcome: " << (d.feasible ? "Found" : "Infeasible") << "\ntransversals in square: "
              << d.transversal_count << "\nmax disjoint: " << d.max_disjoint << '\n';
    for (std::size_t i = 0; i < d.transversals.size(); ++i) {
      std::cout << "transversal " << i + 1 << ":\n";
      print_cells(sq, d.transversals[i]);
    }
  }
  return d.feasible ? kOk : kNegative;
}

// ---- l-number ----

EnumerationOptions enum_options(int order) {
  EnumerationOptions o;
  o.order = order;
  o.max_nodes = g_opts.max_nodes;
  o.timeout_s = g_opts.timeout_s;
  o.jobs = g_opts.jobs;
  return o;
}

int run_lnumber(int order, bool star, std::string witness_path) {
  const LNumberResult r = star ? compute_l_star(order, enum_options(order)) : compute_l(order, enum_options(order));
  if (witness_path.empty()) witness_path = (star ? "lstar" : "l") + std::to_string(order) + "_witness.sq";
  bool wrote = false;
  if (r.witness && witness_path != "none") {
    write_square_file(witness_path, *r.witness,
                      std::string(star ? "not decomposable into transversals" : "transversal-free") + ", " +
                          std::to_string(r.witness->symbol_count()) + " symbols");
    wrote = true;
  }
  if (g_opts.json) {
    Json doc = lnumber_json(r);
    doc["quantity"] = star ? "l*" : "l";
    doc["witness_file"] = wrote ? Json(witness_path) : Json(nullptr);
    emit(doc);
  } else {
    std::cout << (star ? "l*(" : "l(") << order << ") = " << r.value << (r.exhaustive ? "" : " (partial)")
              << "\nraw value: " << r.raw_value << "\nexhaustive: " << (r.exhaustive ? "yes" : "no")
              << "\nclasses: " << r.classes << "\nsymbols classes counterexamples:\n";
    for (const auto& [k, c] : r.by_symbol_count) {
      auto it = r.counterexamples_by_symbol_count.find(k);
      std::cout << "  " << k << ' ' << c << ' ' << (it == r.counterexamples_by_symbol_count.end() ? 0 : it->second)
                << '\n';
    }
    if (wrote) std::cout << "witness: " << witness_path << '\n';
  }
  return r.exhaustive ? kOk : kLimit;
}

// ---- enumerate ----

struct EnumerateArgs {
  int order = 1;
  int min_symbols = 1;
  int max_symbols = 1 << 30;
  bool transversal_free = false;
  std::string output;
};

int run_enumerate(const EnumerateArgs& a) {
  EnumerationOptions o = enum_options(a.order);
  o.min_symbols = a.min_symbols;
  o.max_symbols = a.max_symbols;
  const EnumerationResult res = enumerate_squares(o);

  std::map<int, std::uint64_t> by_k, free_by_k;
  std::ostringstream blocks;
  bool first = true;
  for (const Square& sq : res.squares) {
    const bool tfree = find_transversal_exact(sq).outcome == Outcome::NotFound;
    ++by_k[sq.symbol_count()];
    if (tfree) ++free_by_k[sq.symbol_count()];
    if (a.transversal_free && !tfree) continue;
    if (!first) blocks << '\n';
    first = false;
    write_square(blocks, sq);
  }
  auto as_json = [](const std::map<int, std::uint64_t>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
  };
  Json summary = {{"order", a.order},
                  {"classes", res.squares.size()},
                  {"by_symbol_count", as_json(by_k)},
                  {"transversal_free_counts", as_json(free_by_k)},
                  {"complete", res.complete},
                  {"nodes", res.nodes}};

  if (!a.output.empty()) {
    write_output(a.output, blocks.str());
  } else if (!g_opts.json) {
    std::cout << blocks.str();
    if (!first) std::cout << '\n';
  }
  if (g_opts.json) {
    emit(summary);
  } else {
    std::cout << "# order " << a.order << ", " << res.squares.size() << " classes"
              << (res.complete ? "" : " (partial: budget exhausted)") << "\n# symbols classes transversal_free\n";
    for (const auto& [k, c] : by_k) std::cout << "# " << k << ' ' << c << ' ' << free_by_k[k] << '\n';
  }
  return res.complete ? kOk : kLimit;
}

// ---- construct ----

struct ConstructArgs {
  std::string kind;
  int order = 0;
  int symbols = -1;
  int colors = -1;
  int r = -1;
  int iterations = 1000;
  std::string input;
  std::string output;
};

int run_construct(const ConstructArgs& a) {
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw PreconditionViolated("construct --kind " + a.kind + " needs " + what);
  };
  std::optional<Square> sq;
  std::optional<EdgeColoredGraph> graph;
  std::string comment;
  if (a.kind == "cyclic") {
    need(a.order >= 1, "--order >= 1");
    sq = cyclic_square(a.order);
    comment = "cyclic Z_" + std::to_string(a.order);
  } else if (a.kind == "random") {
    need(a.order >= 1 && a.symbols >= 0, "--order and --symbols");
    sq = random_gls(a.order, a.symbols, g_opts.seed);
    comment = "random, seed " + std::to_string(g_opts.seed);
  } else if (a.kind == "mult-split") {
    need(a.order >= 1 && a.r >= 0, "--order and --r");
    sq = multiplicity_split_square(a.order, a.r, g_opts.seed);
    comment = std::to_string(a.r) + " permutation symbols, seed " + std::to_string(g_opts.seed);
  } else if (a.kind == "lstar-gap") {
    need(!a.input.empty(), "--input (a transversal-free square)");
    sq = lstar_gap(load_square(a.input));
    comment = "lstar-gap construction";
  } else if (a.kind == "hunt") {
    if (a.input.empty()) need(a.order >= 2 && a.order % 2 == 0, "--input, or an even --order to start from Z_n");
    const Square start = a.input.empty() ? cyclic_square(a.order) : load_square(a.input);
    const HuntResult h = hunt_transversal_free(start, g_opts.seed, a.iterations);
    sq = h.best;
    comment = "transversal-free, " + std::to_string(h.best.symbol_count()) + " symbols after " +
              std::to_string(h.iterations) + " iterations, seed " + std::to_string(g_opts.seed);
  } else if (a.kind == "proper-coloring") {
    need(a.order >= 2, "--order (the vertex count m) >= 2");
    const int colors = a.colors >= 0 ? a.colors : (a.order % 2 == 0 ? a.order - 1 : a.order);
    graph = proper_coloring(a.order, colors, g_opts.seed);
    comment = "proper coloring of K_" + std::to_string(a.order) + ", seed " + std::to_string(g_opts.seed);
  } else {
    throw PreconditionViolated("unknown kind " + a.kind);
  }

  const std::string text = sq ? square_text(*sq, comment) : graph_text(*graph, comment);
  if (g_opts.json) {
    Json doc = {{"kind", a.kind}, {"seed", g_opts.seed}};
    if (sq) {
      doc["n"] = sq->order();
      doc["symbol_count"] = sq->symbol_count();
      doc["square"] = square_json(*sq);
    } else {
      doc["m"] = graph->vertex_count();
      std::vector<Edge> edges;
      for (int u = 0; u < graph->vertex_count(); ++u)
        for (int v = u + 1; v < graph->vertex_count(); ++v) edges.push_back({u, v});
      doc["color_count"] = graph->color_count();
      doc["edges"] = edges_json(*graph, edges);
    }
    if (!a.output.empty() && a.output != "-") write_output(a.output, text);
    doc["output"] = a.output.empty() ? Json(nullptr) : Json(a.output);
    emit(doc);
  } else {
    write_output(a.output, text);
  }
  return kOk;
}

// ---- reduce ----

int run_reduce(const std::string& path, const std::string& output, bool solve) {
  const EdgeColoredGraph g = load_graph(path);
  const Square sq = antiramsey_reduce(g);
  std::optional<SolveReport> rep;
  std::optional<TwoFactorExtraction> ex;
  if (solve) {
    rep = find_transversal_exact(sq, ExactMode::First, g_opts.max_nodes);
    if (rep->outcome == Outcome::Found) ex = extract_two_factor(rep->cells, g);
  }
  const std::string text = square_text(sq, "reduced from K_" + std::to_string(g.vertex_count()) +
                                                ", one added symbol on the diagonal");
  if (g_opts.json) {
    Json doc = {{"n", sq.order()}, {"symbol_count", sq.symbol_count()}, {"square", square_json(sq)}};
    if (rep) doc["transversal"] = solve_json(sq, *rep);
    if (ex) {
      doc["extraction"] = {{"edges", edges_json(g, ex->edges)},
                           {"omitted_vertex", ex->omitted ? Json(*ex->omitted + 1) : Json(nullptr)},
                           {"vertices_covered", ex->vertices_covered},
                           {"colors_distinct", ex->colors_distinct},
                           {"all_degree_two", ex->all_degree_two},
                           {"ok", ex->ok(g.vertex_count())}};
    }
    if (!output.empty() && output != "-") write_output(output, text);
    emit(doc);
  } else {
    write_output(output, text);
    if (rep) {
      std::cout << "# transversal: " << to_string(rep->outcome) << '\n';
      if (ex) {
        std::cout << "# extracted edges (u v color):";
        for (const Edge& e : ex->edges) std::cout << " " << e.u + 1 << '-' << e.v + 1 << ':' << g.color(e.u, e.v);
        std::cout << "\n# vertices covered " << ex->vertices_covered << ", colors distinct "
                  << (ex->colors_distinct ? "yes" : "no") << ", degree two " << (ex->all_degree_two ? "yes" : "no")
                  << '\n';
      }
    }
  }
  if (rep && rep->outcome != Outcome::Found) return kNegative;
  if (ex && !ex->ok(g.vertex_count())) return kNegative;
  return kOk;
}

// ---- rainbow ----

int run_rainbow(const std::string& path, int factor, int min_vertices) {
  const EdgeColoredGraph g = load_graph(path);
  if (min_vertices < 0) min_vertices = factor == 1 ? g.vertex_count() : g.vertex_count() - 1;
  const RainbowFactorResult r = rainbow_factor_search(g, factor, min_vertices, g_opts.max_nodes);
  if (g_opts.json) {
    emit({{"outcome", r.found ? "Found" : "NotFound"},
          {"factor", factor},
          {"m", g.vertex_count()},
          {"min_vertices", min_vertices},
          {"edges", edges_json(g, r.edges)},
          {"node_count", r.nodes}});
  } else {
    std::cout << "outcome: " << (r.found ? "Found" : "NotFound") << "\nnodes: " << r.nodes << '\n';
    if (r.found) {
      std::cout << "edges (u v color):\n";
      for (const Edge& e : r.edges) std::cout << "  " << e.u + 1 << ' ' << e.v + 1 << ' ' << g.color(e.u, e.v) << '\n';
    }
  }
  return r.found ? kOk : kNegative;
}

void add_globals(CLI::App& app) {
  app.add_flag("--json", g_opts.json, "Print a single JSON document");
  app.add_option("--max-nodes", g_opts.max_nodes, "Search node budget (0 = unlimited)");
  app.add_option("--timeout-s", g_opts.timeout_s, "Enumeration time budget in seconds (0 = unlimited)");
  app.add_option("--jobs", g_opts.jobs, "Enumeration worker threads (default: $GLS_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g_opts.seed, "Seed for randomized commands");
}

}  // namespace

int main(int argc, char** argv) {
  g_opts.jobs = default_jobs();
  CLI::App app{"Generalized Latin squares: transversals, certificates, enumeration, rainbow factors"};
  app.require_subcommand(1);
  add_globals(app);
  app.fallthrough();

  std::string check_path;
  auto* check = app.add_subcommand("check", "Validate a .sq square or .ecg graph and print statistics");
  check->add_option("file", check_path, "Input file ('-' for stdin)")->required();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Find a transversal");
  solve->add_option("file", solve_args.path, "Square file")->required();
  solve->add_option("--method", solve_args.method, "exact | constructive | mult-split")
      ->check(CLI::IsMember({"exact", "constructive", "mult-split"}));
  solve->add_option("--mode", solve_args.mode, "first | count | all (exact method)")
      ->check(CLI::IsMember({"first", "count", "all"}));

  CertifyArgs cert_args;
  auto* certify = app.add_subcommand("certify", "Evaluate sufficient conditions for a transversal");
  certify->add_option("file", cert_args.path, "Square file")->required();
  certify->add_flag("--lll", cert_args.lll, "Pair inequality certificate");
  certify->add_flag("--thresholds", cert_args.thresholds, "Symbol count and multiplicity thresholds");
  certify->add_flag("--singleton", cert_args.singleton, "Per-line singleton lower bound");
  certify->add_flag("--full-scan", cert_args.full_scan, "Scan all monochromatic pairs instead of the top-2 shortcut");

  std::string decompose_path;
  bool no_max = false;
  auto* decompose = app.add_subcommand("decompose", "Partition the square into n disjoint transversals");
  decompose->add_option("file", decompose_path, "Square file")->required();
  decompose->add_flag("--no-max", no_max, "Skip the maximum packing search when infeasible");

  int l_order = 1;
  bool l_star = false;
  std::string l_witness;
  auto* lnum = app.add_subcommand("l-number", "Exhaustively compute l(n) or l*(n)");
  lnum->add_option("--order,-n", l_order, "Order n")->required()->check(CLI::Range(1, 8));
  lnum->add_flag("--star", l_star, "Compute l*(n) (decomposition into transversals)");
  lnum->add_option("--witness", l_witness, "Witness output file (default l<n>_witness.sq; 'none' to skip)");

  EnumerateArgs en_args;
  auto* enumerate = app.add_subcommand("enumerate", "List one square per symmetry class");
  enumerate->add_option("--order,-n", en_args.order, "Order n")->required()->check(CLI::Range(1, 8));
  enumerate->add_option("--min-symbols", en_args.min_symbols, "Lowest symbol count");
  enumerate->add_option("--max-symbols", en_args.max_symbols, "Highest symbol count");
  enumerate->add_flag("--transversal-free", en_args.transversal_free, "Only write transversal-free squares");
  enumerate->add_option("--output,-o", en_args.output, "Write square blocks to this file");

  ConstructArgs con_args;
  auto* construct = app.add_subcommand("construct", "Build a square or edge-colored graph");
  construct->add_option("--kind", con_args.kind, "cyclic | random | mult-split | lstar-gap | hunt | proper-coloring")
      ->required()
      ->check(CLI::IsMember({"cyclic", "random", "mult-split", "lstar-gap", "hunt", "proper-coloring"}));
  construct->add_option("--order,-n", con_args.order, "Order n (vertex count m for proper-coloring)");
  construct->add_option("--symbols,-k", con_args.symbols, "Symbol count (random)");
  construct->add_option("--colors", con_args.colors, "Color count (proper-coloring)");
  construct->add_option("--r", con_args.r, "Number of permutation symbols (mult-split)");
  construct->add_option("--iterations", con_args.iterations, "Hill-climb steps (hunt)");
  construct->add_option("--input,-i", con_args.input, "Input square (lstar-gap, hunt)");
  construct->add_option("--output,-o", con_args.output, "Output file (default stdout)");

  std::string reduce_path, reduce_out;
  bool reduce_solve = false;
  auto* reduce = app.add_subcommand("reduce", "Turn a proper coloring of K_n into an order-n square");
  reduce->add_option("file", reduce_path, "Graph file (.ecg)")->required();
  reduce->add_option("--output,-o", reduce_out, "Output file (default stdout)");
  reduce->add_flag("--solve", reduce_solve, "Also find a transversal and extract the edge set");

  std::string rainbow_path;
  int factor = 1;
  int min_vertices = -1;
  auto* rainbow = app.add_subcommand("rainbow", "Search a rainbow 1-factor or 2-factor");
  rainbow->add_option("file", rainbow_path, "Graph file (.ecg)")->required();
  rainbow->add_option("--factor", factor, "1 or 2")->check(CLI::IsMember({1, 2}));
  rainbow->add_option("--min-vertices", min_vertices, "2-factor: least vertices covered (default m-1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*check) return run_check(check_path);
    if (*solve) return run_solve(solve_args);
    if (*certify) return run_certify(cert_args);
    if (*decompose) return run_decompose(decompose_path, no_max);
    if (*lnum) return run_lnumber(l_order, l_star, l_witness);
    if (*enumerate) return run_enumerate(en_args);
    if (*construct) return run_construct(con_args);
    if (*reduce) return run_reduce(reduce_path, reduce_out, reduce_solve);
    if (*rainbow) return run_rainbow(rainbow_path, factor, min_vertices);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kLimit;
  } catch (const InfeasibleParams& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kNegative;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kInput;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kInput;
  } catch (const AssertionFailure& e) {
    std::cerr << "internal assertion failed: " << e.what() << '\n';
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
