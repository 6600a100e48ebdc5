#include <doctest.h>

#include <numeric>
#include <random>

#include "qgraph/errors.hpp"
#include "qgraph/trees.hpp"
#include "test_graphs.hpp"

using namespace qgraph;
using namespace qgraph::testing;

namespace {

// Oracle: every (|V|-1)-subset of non-loop edges that is acyclic.
std::vector<std::vector<int>> brute_force_trees(const MetricGraph& g) {
    std::vector<std::vector<int>> trees;
    const int ne = g.edge_count();
    const int need = g.vertex_count() - 1;
    for (unsigned mask = 0; mask < (1u << ne); ++mask) {
        if (std::popcount(mask) != need) continue;
        std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        bool ok = true;
        std::vector<int> tree;
        for (int j = 0; j < ne && ok; ++j) {
            if (!(mask & (1u << j))) continue;
            const auto& e = g.edge(j);
            const int a = root(e.tail), b = root(e.head);
            if (a == b) ok = false;
            else parent[static_cast<std::size_t>(a)] = b;
            tree.push_back(j);
        }
        if (ok) trees.push_back(tree);
    }
    std::sort(trees.begin(), trees.end());
    return trees;
}

}  // namespace

TEST_CASE("spanning tree enumeration matches brute force") {
    for (const auto& g : all_graphs()) {
        const auto set = enumerate_spanning_trees(g);
        CHECK(set.trees == brute_force_trees(g));
        CHECK(set.count == set.trees.size());
        CHECK(static_cast<std::int64_t>(set.count) == matrix_tree_count(g));
        for (const auto& t : set.trees) {
            CHECK(static_cast<int>(t.size()) == g.vertex_count() - 1);
            for (int j : t) CHECK_FALSE(g.edge(j).is_loop());
        }
    }
}

TEST_CASE("known tree counts") {
    const auto tri = enumerate_spanning_trees(triangle());
    CHECK(tri.count == 3);
    for (const auto& t : tri.trees) CHECK(t.size() == 2);

    const auto l = enumerate_spanning_trees(loop());
    REQUIRE(l.count == 1);
    CHECK(l.trees.front().empty());

    CHECK(enumerate_spanning_trees(complete4()).count == 16);  // 4^(4-2)
    CHECK(matrix_tree_count(complete4()) == 16);
    CHECK(matrix_tree_count(triangle()) == 3);
    CHECK(matrix_tree_count(double_edge()) == 2);
    CHECK(matrix_tree_count(loop_pendant()) == 1);
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(enumerate_spanning_trees(complete4(), 10), EnumerationLimitExceeded);
    CHECK_NOTHROW(enumerate_spanning_trees(complete4(), 16));
}

TEST_CASE("weighted matrix-tree count") {
    const std::vector<double> w{2.0, 3.0, 5.0};
    CHECK(matrix_tree_count(triangle(), w) == doctest::Approx(2 * 3 + 2 * 5 + 3 * 5).epsilon(1e-14));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(0.1, 4.0);
    for (const auto& g : all_graphs()) {
        const auto trees = enumerate_spanning_trees(g);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> weights(static_cast<std::size_t>(g.edge_count()));
            for (auto& x : weights) x = dist(rng);
            double oracle = 0.0;
            for (const auto& t : trees.trees) {
                double prod = 1.0;
                for (int j : t) prod *= weights[static_cast<std::size_t>(j)];
                oracle += prod;
            }
            CHECK(std::abs(matrix_tree_count(g, weights) - oracle) < 1e-10 * oracle);
        }
    }
}

TEST_CASE("effective resistance") {
    CHECK(effective_resistance(triangle(), 0) == Rational(2, 3));
    CHECK(effective_resistance(complete4(), 3) == Rational(1, 2));
    CHECK(effective_resistance(path2(), 0) == Rational(1));
    CHECK(effective_resistance(star(), 2) == Rational(1));
    CHECK(effective_resistance(loop(), 0) == Rational(0));
    CHECK(effective_resistance(loop_pendant(), 0) == Rational(0));
    CHECK(effective_resistance(double_edge(), 1) == Rational(1, 2));

    for (const auto& g : all_graphs()) {
        const auto trees = enumerate_spanning_trees(g);
        Rational sum(0);
        for (int j = 0; j < g.edge_count(); ++j) {
            std::int64_t containing = 0;
            for (const auto& t : trees.trees) containing += std::count(t.begin(), t.end(), j);
            const Rational r = effective_resistance(g, j);
            if (!g.edge(j).is_loop()) {
                CHECK(r == Rational(containing, static_cast<std::int64_t>(trees.count)));
                sum += r;
            }
        }
        // Foster: the resistances of the non-loop edges add up to |V| - 1.
        CHECK(sum == Rational(g.vertex_count() - 1));
    }
}

TEST_CASE("equal-resistance precondition") {
    const auto tri = equal_resistance_precondition(triangle());
    CHECK(tri.holds);
    CHECK(tri.r == Rational(2, 3));

    const auto path = equal_resistance_precondition(path2());
    CHECK_FALSE(path.holds);
    CHECK(path.r == Rational(1));

    const auto lp = equal_resistance_precondition(loop());
    CHECK(lp.holds);
    CHECK_FALSE(lp.r.has_value());

    CHECK(equal_resistance_precondition(complete4()).r == Rational(1, 2));
    CHECK(equal_resistance_precondition(double_edge()).holds);
    CHECK_FALSE(equal_resistance_precondition(loop_pendant()).holds);
}
