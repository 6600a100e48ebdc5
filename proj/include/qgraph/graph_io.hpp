#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qgraph/graph.hpp"

namespace qgraph {

inline constexpr std::string_view kGraphFormatVersion = "qgraph/1";

/// Graph files are JSON:
///
///   {
///     "version": "qgraph/1",
///     "vertices": ["r", "u"],
///     "edges": [
///       {"id": "e1", "from": "u", "to": "r", "potential": {"kind": "zero"}},
///       {"id": "e2", "from": "r", "to": "r",
///        "potential": {"kind": "constant", "values": [2.0]}},
///       {"id": "e3", "from": "u", "to": "r",
///        "potential": {"kind": "piecewise", "breakpoints": [0, 0.5, 1],
///                      "values": [1.0, -1.0]}}
///     ]
///   }
///
/// Throws ParseError on malformed input. Graph-level validation (connectivity,
/// endpoints) is left to build_graph.
GraphDescription parse_graph(std::string_view text);
GraphDescription load_graph_file(const std::filesystem::path& path);

/// Inverse of parse_graph; numbers are written with round-trip precision.
std::string serialize_graph(const GraphDescription& desc);

}  // namespace qgraph
