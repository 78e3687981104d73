#include "gls/json.hpp"

namespace gls {

namespace {

Json count_map(const std::map<int, std::uint64_t>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

Json cells_json(const Square& square, std::span<const CellRef> cells) {
  Json out = Json::array();
  for (const CellRef& c : cells) out.push_back({c.row + 1, c.col + 1, square.at(c)});
  return out;
}

Json square_json(const Square& square) {
  const int n = square.order();
  Json rows = Json::array();
  for (int r = 0; r < n; ++r) {
    Json row = Json::array();
    for (int c = 0; c < n; ++c) row.push_back(square.id(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json stats_json(const Square& square, const SymbolStats& stats) {
  Json hist = Json::object();
  for (std::size_t k = 1; k < stats.histogram.size(); ++k)
    if (stats.histogram[k] != 0) hist[std::to_string(k)] = stats.histogram[k];
  return {
      {"n", square.order()},
      {"symbol_count", square.symbol_count()},
      {"singletons", stats.singletons.size()},
      {"repetitions", stats.repetitions.size()},
      {"max_multiplicity", stats.max_multiplicity()},
      {"multiplicity_histogram", hist},
      {"c_row", stats.row_weight},
      {"c_col", stats.col_weight},
  };
}

Json solve_json(const Square& square, const SolveReport& report) {
  Json out = {
      {"outcome", to_string(report.outcome)},
      {"method", report.method},
      {"cells", cells_json(square, report.cells)},
      {"node_count", report.node_count},
      {"elapsed_ms", report.elapsed_ms},
  };
  if (report.count) out["count"] = *report.count;
  if (report.method == "constructive") {
    out["reductions"] = report.reductions;
    out["residual_full_lines"] = report.residual_full_lines;
  }
  return out;
}

Json certificate_json(const Square& square, const BoundCertificate& cert) {
  Json out = {
      {"kind", to_string(cert.kind)},
      {"certified", cert.certified},
  };
  if (cert.witness) {
    const CellRef cells[2] = {cert.witness->first, cert.witness->second};
    out["witness"] = {
        {"cells", cells_json(square, cells)},
        {"symbol", square.label(cert.witness->symbol_id)},
        {"weight_sum", cert.witness->weight_sum},
        {"lhs", cert.lhs},
        {"rhs", cert.rhs},
    };
  } else {
    out["witness"] = nullptr;
  }
  Json th = Json::array();
  for (const ThresholdCheck& t : cert.thresholds) {
    th.push_back({{"kind", to_string(t.kind)},
                  {"holds", t.holds},
                  {"lhs", t.lhs},
                  {"rhs", t.rhs},
                  {"relation", t.relation}});
  }
  out["thresholds"] = th;
  return out;
}

Json singleton_json(const SingletonReport& report) {
  Json lines = Json::array();
  for (const LineBound& l : report.lines) {
    lines.push_back({{"line", l.is_row ? "row" : "col"},
                     {"index", l.index + 1},
                     {"weight", l.weight},
                     {"lll_side", l.lll_side},
                     {"symbols_avoiding", l.symbols_avoiding},
                     {"cells_avoiding", l.cells_avoiding},
                     {"singleton_bound", l.singleton_bound},
                     {"singletons_avoiding", l.singletons_avoiding}});
  }
  Json out = {{"lines", lines}, {"all_lll_side", report.all_lll_side}};
  out["max_heavy_bound"] = report.max_heavy_bound ? Json(*report.max_heavy_bound) : Json(nullptr);
  return out;
}

Json decomposition_json(const Square& square, const Decomposition& d) {
  Json ts = Json::array();
  for (const auto& t : d.transversals) ts.push_back(cells_json(square, t));
  return {
      {"outcome", d.feasible ? "Found" : "Infeasible"},
      {"transversals", ts},
      {"max_disjoint", d.max_disjoint},
      {"transversal_count", d.transversal_count},
      {"node_count", d.node_count},
  };
}

Json lnumber_json(const LNumberResult& r) {
  return {
      {"order", r.n},
      {"value", r.value},
      {"raw_value", r.raw_value},
      {"exhaustive", r.exhaustive},
      {"classes", r.classes},
      {"by_symbol_count", count_map(r.by_symbol_count)},
      {"counterexamples_by_symbol_count", count_map(r.counterexamples_by_symbol_count)},
      {"witness", r.witness ? square_json(*r.witness) : Json(nullptr)},
  };
}

Json edges_json(const EdgeColoredGraph& g, std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u + 1, e.v + 1, g.color(e.u, e.v)});
  return out;
}

}  // namespace gls
