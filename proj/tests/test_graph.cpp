#include <doctest.h>

#include <Eigen/LU>
#include <set>

#include "qgraph/errors.hpp"
#include "qgraph/graph.hpp"
#include "test_graphs.hpp"

using namespace qgraph;
using namespace qgraph::testing;

namespace {

// Shortest odd closed walk through BFS on (vertex, parity) states; returns its
// length or 0 if none exists.
int odd_closed_walk_length(const MetricGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (int start = 0; start < n; ++start) {
        std::vector<int> dist(static_cast<std::size_t>(2 * n), -1);
        std::vector<int> queue{2 * start};
        dist[static_cast<std::size_t>(2 * start)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int state = queue[head];
            const int v = state / 2;
            const int parity = state % 2;
            for (const auto& e : g.edges()) {
                for (auto [from, to] : {std::pair{e.tail, e.head}, std::pair{e.head, e.tail}}) {
                    if (from != v) continue;
                    const int next = 2 * to + (1 - parity);
                    if (dist[static_cast<std::size_t>(next)] == -1) {
                        dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(state)] + 1;
                        queue.push_back(next);
                    }
                }
            }
        }
        const int odd = dist[static_cast<std::size_t>(2 * start + 1)];
        if (odd > 0 && (best == 0 || odd < best)) best = odd;
    }
    return best;
}

}  // namespace

TEST_CASE("build_graph") {
    SUBCASE("single loop") {
        const auto g = loop();
        CHECK(g.vertex_count() == 1);
        CHECK(g.edge_count() == 1);
        CHECK(g.cycle_rank() == 1);
        CHECK(g.edge(0).is_loop());
    }
    SUBCASE("star") {
        const auto g = star();
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 3);
        CHECK(g.cycle_rank() == 0);
        CHECK(g.edge(0).head == g.vertex_index("r"));
        CHECK(g.edge(0).tail == g.vertex_index("u"));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(build_graph({{"a", "b", "c", "d"}, {{"e1", "a", "b", zero()}, {"e2", "c", "d", zero()}}}),
                        DisconnectedGraph);
        CHECK_THROWS_AS(build_graph({{"a", "b"}, {{"e1", "a", "a", zero()}}}), DisconnectedGraph);
        CHECK_THROWS_AS(build_graph({{}, {}}), EmptyGraph);
        CHECK_THROWS_AS(build_graph({{"a"}, {}}), EmptyGraph);
        CHECK_THROWS_AS(build_graph({{"a"}, {{"e", "a", "zz", zero()}}}), DanglingEndpoint);
        CHECK_THROWS_AS(build_graph({{"a", "a"}, {{"e", "a", "a", zero()}}}), InputError);
        CHECK_THROWS_AS(build_graph({{"a"}, {{"e", "a", "a", zero()}, {"e", "a", "a", zero()}}}), InputError);
    }
    SUBCASE("parallel edges and description round trip") {
        const auto g = double_edge();
        CHECK(g.cycle_rank() == 1);
        const auto again = build_graph(g.description());
        CHECK(again.description() == g.description());
    }
}

TEST_CASE("edge reversal swaps ends and mirrors the potential") {
    PiecewisePotential q({0.0, 0.3, 1.0}, {1.0, 5.0});
    const auto g = triangle(q);
    const auto r = g.with_edge_reversed(0);
    CHECK(r.edge(0).tail == g.edge(0).head);
    CHECK(r.edge(0).head == g.edge(0).tail);
    CHECK(r.edge(0).potential == q.reversed());
    CHECK(r.edge(1).potential == g.edge(1).potential);
}

TEST_CASE("bipartite detection") {
    const auto star_color = is_bipartite(star());
    REQUIRE(star_color);
    CHECK(*star_color == std::vector<int>{1, 2, 2, 2});
    CHECK_FALSE(is_bipartite(triangle()));
    CHECK_FALSE(is_bipartite(loop()));
    CHECK(is_bipartite(double_edge()));
    CHECK(is_bipartite(path2()));
    CHECK_FALSE(is_bipartite(complete4()));
    CHECK_FALSE(is_bipartite(loop_pendant()));

    for (const auto& g : all_graphs()) {
        const auto color = is_bipartite(g);
        if (color) {
            for (const auto& e : g.edges())
                CHECK((*color)[static_cast<std::size_t>(e.tail)] != (*color)[static_cast<std::size_t>(e.head)]);
            CHECK(odd_closed_walk_length(g) == 0);
        } else {
            CHECK(odd_closed_walk_length(g) % 2 == 1);
        }
    }
}

TEST_CASE("incidence matrices") {
    const auto l = incidence_matrices(loop());
    CHECK(l.ordered(0, 0) == 0);
    CHECK(l.unordered(0, 0) == 2);

    const auto s = incidence_matrices(star());
    for (int j = 0; j < 3; ++j) {
        CHECK(s.ordered.col(j).minCoeff() == -1);
        CHECK(s.ordered.col(j).maxCoeff() == 1);
        CHECK(s.ordered.col(j).cwiseAbs().sum() == 2);
    }

    const auto t = incidence_matrices(triangle());
    Eigen::MatrixXd ordered = t.ordered.cast<double>();
    CHECK(ordered.fullPivLu().rank() == 2);
}

TEST_CASE("square incidence submatrices over a cycle are singular") {
    // |V| edges on |V| vertices always close a cycle, so every |V|x|V|
    // submatrix of the (signed) incidence pattern is singular.
    for (const auto& g : all_graphs()) {
        const Eigen::MatrixXd inc = incidence_matrices(g).ordered.cast<double>();
        const int nv = g.vertex_count();
        const int ne = g.edge_count();
        if (ne < nv) continue;
        std::vector<int> pick(static_cast<std::size_t>(ne), 0);
        std::fill(pick.end() - nv, pick.end(), 1);
        do {
            Eigen::MatrixXd sub(nv, nv);
            int c = 0;
            for (int j = 0; j < ne; ++j)
                if (pick[static_cast<std::size_t>(j)]) sub.col(c++) = inc.col(j);
            CHECK(std::abs(sub.determinant()) < 1e-12);
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
}
