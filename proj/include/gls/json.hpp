#pragma once

// JSON documents for results. Cells are [row, col, symbol] with 1-based row
// and column and the square's own symbol label.

#include <json.hpp>

#include "gls/bounds.hpp"
#include "gls/extremal.hpp"
#include "gls/graph.hpp"
#include "gls/solvers.hpp"
#include "gls/square.hpp"

namespace gls {

using Json = nlohmann::json;

Json cells_json(const Square& square, std::span<const CellRef> cells);
Json square_json(const Square& square);  // rows of dense ids
Json stats_json(const Square& square, const SymbolStats& stats);
Json solve_json(const Square& square, const SolveReport& report);
Json certificate_json(const Square& square, const BoundCertificate& cert);
Json singleton_json(const SingletonReport& report);
Json decomposition_json(const Square& square, const Decomposition& d);
Json lnumber_json(const LNumberResult& r);
Json edges_json(const EdgeColoredGraph& g, std::span<const Edge> edges);  // [u, v, color], 1-based

}  // namespace gls
