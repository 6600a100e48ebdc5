#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qgraph/potential.hpp"

namespace qgraph {

/// One directed edge as written in a graph description.
struct EdgeSpec {
    std::string id;
    std::string from;
    std::string to;
    PiecewisePotential potential;

    bool operator==(const EdgeSpec&) const = default;
};

/// Unvalidated input to build_graph.
struct GraphDescription {
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;

    bool operator==(const GraphDescription&) const = default;
};

struct Edge {
    std::string id;
    int tail = 0;  // x = 0 end
    int head = 0;  // x = 1 end
    PiecewisePotential potential;

    bool is_loop() const { return tail == head; }
};

/// Connected directed multigraph with unit-length edges. Loops and parallel
/// edges are allowed. Immutable once built.
class MetricGraph {
public:
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int j) const { return edges_[static_cast<std::size_t>(j)]; }

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// |E| - |V| + 1.
    int cycle_rank() const { return edge_count() - vertex_count() + 1; }

    /// Sum over edges of the potential integral.
    double total_potential() const;

    /// Per-edge potential integrals, in edge order.
    std::vector<double> edge_means() const;

    /// Smallest potential value anywhere on the graph (a lower bound for the
    /// spectrum).
    double min_potential() const;

    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;

    /// Same graph with every potential replaced.
    MetricGraph with_potentials(const std::vector<PiecewisePotential>& potentials) const;

    /// Edge j reversed, carrying q_j(1 - x).
    MetricGraph with_edge_reversed(int j) const;

    GraphDescription description() const;

private:
    friend MetricGraph build_graph(const GraphDescription& spec);

    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
};

/// Validates and builds. Throws EmptyGraph, DanglingEndpoint,
/// DisconnectedGraph, or InputError for duplicate ids.
MetricGraph build_graph(const GraphDescription& spec);

/// Two-coloring with values 1 and 2 (vertex order), or nullopt. A loop
/// makes the graph non-bipartite.
std::optional<std::vector<int>> is_bipartite(const MetricGraph& g);

struct IncidenceMatrices {
    Eigen::MatrixXi ordered;    // |V| x |E|: -1 at tail, +1 at head, loop column 0
    Eigen::MatrixXi unordered;  // |V| x |E|: 1 at each end, 2 for a loop
};

IncidenceMatrices incidence_matrices(const MetricGraph& g);

}  // namespace qgraph
