#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "qgraph/graph.hpp"

namespace qgraph {

using Rational = boost::rational<std::int64_t>;

/// All spanning trees of a graph as sorted edge-index lists. Loops never
/// appear in a spanning tree.
struct SpanningTreeSet {
    std::vector<std::vector<int>> trees;
    std::uint64_t count = 0;
};

inline constexpr std::uint64_t kDefaultTreeLimit = std::uint64_t{1} << 20;

/// Deletion-contraction enumeration. Throws EnumerationLimitExceeded when the
/// graph has more than `limit` spanning trees (checked up front with the
/// exact Matrix-Tree count).
SpanningTreeSet enumerate_spanning_trees(const MetricGraph& g, std::uint64_t limit = kDefaultTreeLimit);

/// Exact number of spanning trees: a cofactor of the loopless Laplacian,
/// evaluated with fraction-free integer elimination.
std::int64_t matrix_tree_count(const MetricGraph& g);

/// Weighted Matrix-Tree cofactor: sum over spanning trees of the product of
/// the tree-edge weights (one weight per edge; loop weights are ignored).
double matrix_tree_count(const MetricGraph& g, std::span<const double> weights);

/// (#spanning trees containing e) / (#spanning trees). Loops get 0.
Rational effective_resistance(const MetricGraph& g, int edge);

struct EqualResistance {
    bool holds = false;
    std::optional<Rational> r;  // common value, absent when there are no non-loop edges
};

/// Whether every non-loop edge has the same effective resistance r < 1.
/// Holds vacuously when every edge is a loop.
EqualResistance equal_resistance_precondition(const MetricGraph& g);

}  // namespace qgraph
