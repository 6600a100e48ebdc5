#include "qgraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "qgraph/errors.hpp"

namespace qgraph {

double MetricGraph::total_potential() const {
    double q = 0.0;
    for (const auto& e : edges_) q += e.potential.mean();
    return q;
}

std::vector<double> MetricGraph::edge_means() const {
    std::vector<double> means;
    means.reserve(edges_.size());
    for (const auto& e : edges_) means.push_back(e.potential.mean());
    return means;
}

double MetricGraph::min_potential() const {
    double m = edges_.front().potential.min_value();
    for (const auto& e : edges_) m = std::min(m, e.potential.min_value());
    return m;
}

int MetricGraph::vertex_index(const std::string& id) const {
    auto it = std::find(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end()) throw InputError("unknown vertex '" + id + "'");
    return static_cast<int>(it - vertex_ids_.begin());
}

int MetricGraph::edge_index(const std::string& id) const {
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
    if (it == edges_.end()) throw InputError("unknown edge '" + id + "'");
    return static_cast<int>(it - edges_.begin());
}

MetricGraph MetricGraph::with_potentials(const std::vector<PiecewisePotential>& potentials) const {
    if (potentials.size() != edges_.size()) throw InputError("need one potential per edge");
    MetricGraph g = *this;
    for (std::size_t j = 0; j < edges_.size(); ++j) g.edges_[j].potential = potentials[j];
    return g;
}

MetricGraph MetricGraph::with_edge_reversed(int j) const {
    MetricGraph g = *this;
    auto& e = g.edges_.at(static_cast<std::size_t>(j));
    std::swap(e.tail, e.head);
    e.potential = e.potential.reversed();
    return g;
}

GraphDescription MetricGraph::description() const {
    GraphDescription d;
    d.vertices = vertex_ids_;
    for (const auto& e : edges_) {
        d.edges.push_back({e.id, vertex_ids_[static_cast<std::size_t>(e.tail)],
                           vertex_ids_[static_cast<std::size_t>(e.head)], e.potential});
    }
    return d;
}

MetricGraph build_graph(const GraphDescription& spec) {
    if (spec.vertices.empty() || spec.edges.empty()) throw EmptyGraph();

    std::unordered_map<std::string, int> index;
    for (const auto& v : spec.vertices) {
        if (!index.emplace(v, static_cast<int>(index.size())).second)
            throw InputError("duplicate vertex id '" + v + "'");
    }

    MetricGraph g;
    g.vertex_ids_ = spec.vertices;
    std::unordered_map<std::string, int> edge_ids;
    for (const auto& e : spec.edges) {
        if (!edge_ids.emplace(e.id, 0).second) throw InputError("duplicate edge id '" + e.id + "'");
        auto from = index.find(e.from);
        auto to = index.find(e.to);
        if (from == index.end() || to == index.end())
            throw DanglingEndpoint("edge '" + e.id + "' references an unknown vertex");
        g.edges_.push_back({e.id, from->second, to->second, e.potential});
    }

    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges_) {
        adj[static_cast<std::size_t>(e.tail)].push_back(e.head);
        adj[static_cast<std::size_t>(e.head)].push_back(e.tail);
    }
    std::vector<bool> seen(n, false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
        const int u = todo.front();
        todo.pop();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                todo.push(w);
            }
        }
    }
    if (reached != n)
        throw DisconnectedGraph("graph is disconnected (" + std::to_string(reached) + " of " +
                                std::to_string(n) + " vertices reachable)");
    return g;
}

std::optional<std::vector<int>> is_bipartite(const MetricGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges()) {
        if (e.is_loop()) return std::nullopt;
        adj[static_cast<std::size_t>(e.tail)].push_back(e.head);
        adj[static_cast<std::size_t>(e.head)].push_back(e.tail);
    }
    std::vector<int> color(n, 0);
    std::queue<int> todo;
    color[0] = 1;
    todo.push(0);
    while (!todo.empty()) {
        const int u = todo.front();
        todo.pop();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            auto& cw = color[static_cast<std::size_t>(w)];
            const int cu = color[static_cast<std::size_t>(u)];
            if (cw == 0) {
                cw = 3 - cu;
                todo.push(w);
            } else if (cw == cu) {
                return std::nullopt;
            }
        }
    }
    return color;
}

IncidenceMatrices incidence_matrices(const MetricGraph& g) {
    IncidenceMatrices m;
    m.ordered = Eigen::MatrixXi::Zero(g.vertex_count(), g.edge_count());
    m.unordered = Eigen::MatrixXi::Zero(g.vertex_count(), g.edge_count());
    for (int j = 0; j < g.edge_count(); ++j) {
        const auto& e = g.edge(j);
        m.ordered(e.tail, j) -= 1;
        m.ordered(e.head, j) += 1;
        m.unordered(e.tail, j) += 1;
        m.unordered(e.head, j) += 1;
    }
    return m;
}

}  // namespace qgraph
