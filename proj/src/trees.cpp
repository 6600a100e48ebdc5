#include "qgraph/trees.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/LU>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

struct LooseEdge {
    int id;
    int a;
    int b;
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

bool connected(const std::vector<LooseEdge>& edges, const std::vector<bool>& alive) {
    std::vector<int> parent(alive.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : edges) parent[static_cast<std::size_t>(find_root(parent, e.a))] = find_root(parent, e.b);
    int root = -1;
    for (std::size_t v = 0; v < alive.size(); ++v) {
        if (!alive[v]) continue;
        const int r = find_root(parent, static_cast<int>(v));
        if (root == -1) root = r;
        else if (r != root) return false;
    }
    return true;
}

class TreeEnumerator {
public:
    explicit TreeEnumerator(std::size_t vertex_count) : alive_(vertex_count, true) {}

    void run(std::vector<LooseEdge> edges, int vertices_left) {
        if (vertices_left == 1) {
            auto tree = chosen_;
            std::sort(tree.begin(), tree.end());
            out_.push_back(std::move(tree));
            return;
        }
        if (edges.empty()) return;

        const LooseEdge e = edges.back();
        edges.pop_back();

        // Without e.
        if (connected(edges, alive_)) run(edges, vertices_left);

        // With e: merge e.b into e.a and drop the loops this creates.
        std::vector<LooseEdge> contracted;
        contracted.reserve(edges.size());
        for (auto f : edges) {
            if (f.a == e.b) f.a = e.a;
            if (f.b == e.b) f.b = e.a;
            if (f.a != f.b) contracted.push_back(f);
        }
        alive_[static_cast<std::size_t>(e.b)] = false;
        chosen_.push_back(e.id);
        run(std::move(contracted), vertices_left - 1);
        chosen_.pop_back();
        alive_[static_cast<std::size_t>(e.b)] = true;
    }

    std::vector<std::vector<int>> take() { return std::move(out_); }

private:
    std::vector<bool> alive_;
    std::vector<int> chosen_;
    std::vector<std::vector<int>> out_;
};

// Fraction-free Gaussian elimination (Bareiss); exact for integer input as
// long as the minors fit in 64 bits.
std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] -
                                     static_cast<__int128>(a[i][k]) * a[k][j];
                a[i][j] = static_cast<std::int64_t>(num / prev);
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Reduced Laplacian (last vertex removed), loops skipped; `skip` excludes one
// more edge.
std::vector<std::vector<std::int64_t>> reduced_laplacian(const MetricGraph& g, int skip = -1) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<std::int64_t>> lap(n, std::vector<std::int64_t>(n, 0));
    for (int j = 0; j < g.edge_count(); ++j) {
        const auto& e = g.edge(j);
        if (e.is_loop() || j == skip) continue;
        const auto u = static_cast<std::size_t>(e.tail);
        const auto v = static_cast<std::size_t>(e.head);
        lap[u][u] += 1;
        lap[v][v] += 1;
        lap[u][v] -= 1;
        lap[v][u] -= 1;
    }
    lap.pop_back();
    for (auto& row : lap) row.pop_back();
    return lap;
}

}  // namespace

SpanningTreeSet enumerate_spanning_trees(const MetricGraph& g, std::uint64_t limit) {
    const auto expected = static_cast<std::uint64_t>(matrix_tree_count(g));
    if (expected > limit)
        throw EnumerationLimitExceeded("graph has " + std::to_string(expected) +
                                       " spanning trees, above the limit of " + std::to_string(limit));
    std::vector<LooseEdge> edges;
    for (int j = 0; j < g.edge_count(); ++j) {
        const auto& e = g.edge(j);
        if (!e.is_loop()) edges.push_back({j, e.tail, e.head});
    }
    // Popping from the back visits edges in file order.
    std::reverse(edges.begin(), edges.end());
    TreeEnumerator walker(static_cast<std::size_t>(g.vertex_count()));
    walker.run(std::move(edges), g.vertex_count());
    SpanningTreeSet set;
    set.trees = walker.take();
    std::sort(set.trees.begin(), set.trees.end());
    set.count = set.trees.size();
    return set;
}

std::int64_t matrix_tree_count(const MetricGraph& g) { return bareiss_determinant(reduced_laplacian(g)); }

double matrix_tree_count(const MetricGraph& g, std::span<const double> weights) {
    if (weights.size() != static_cast<std::size_t>(g.edge_count()))
        throw InputError("need one weight per edge");
    const int n = g.vertex_count();
    if (n == 1) return 1.0;
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < g.edge_count(); ++j) {
        const auto& e = g.edge(j);
        if (e.is_loop()) continue;
        const double w = weights[static_cast<std::size_t>(j)];
        lap(e.tail, e.tail) += w;
        lap(e.head, e.head) += w;
        lap(e.tail, e.head) -= w;
        lap(e.head, e.tail) -= w;
    }
    return lap.topLeftCorner(n - 1, n - 1).fullPivLu().determinant();
}

Rational effective_resistance(const MetricGraph& g, int edge) {
    if (edge < 0 || edge >= g.edge_count()) throw InputError("edge index out of range");
    if (g.edge(edge).is_loop()) return Rational(0);
    const std::int64_t all = matrix_tree_count(g);
    const std::int64_t without = bareiss_determinant(reduced_laplacian(g, edge));
    return Rational(all - without, all);
}

EqualResistance equal_resistance_precondition(const MetricGraph& g) {
    EqualResistance out;
    for (int j = 0; j < g.edge_count(); ++j) {
        if (g.edge(j).is_loop()) continue;
        const Rational r = effective_resistance(g, j);
        if (!out.r) out.r = r;
        else if (*out.r != r) return {false, std::nullopt};
    }
    out.holds = !out.r || *out.r < Rational(1);
    return out;
}

}  // namespace qgraph
