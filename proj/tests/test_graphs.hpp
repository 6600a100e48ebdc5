#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

// Small graphs shared by the test suites.
namespace qgraph::testing {

inline PiecewisePotential zero() { return PiecewisePotential::zero(); }

inline MetricGraph loop(PiecewisePotential q = zero()) {
    return build_graph({{"a"}, {{"e", "a", "a", std::move(q)}}});
}

// Three leaves pointing into a root, vertices ordered r, u, v, w.
inline MetricGraph star(PiecewisePotential q1 = zero(), PiecewisePotential q2 = zero(), PiecewisePotential q3 = zero()) {
    return build_graph({{"r", "u", "v", "w"},
                        {{"e1", "u", "r", std::move(q1)}, {"e2", "v", "r", std::move(q2)}, {"e3", "w", "r", std::move(q3)}}});
}

inline MetricGraph triangle(PiecewisePotential q1 = zero(), PiecewisePotential q2 = zero(), PiecewisePotential q3 = zero()) {
    return build_graph({{"a", "b", "c"},
                        {{"e1", "a", "b", std::move(q1)}, {"e2", "b", "c", std::move(q2)}, {"e3", "c", "a", std::move(q3)}}});
}

inline MetricGraph complete4() {
    GraphDescription d{{"0", "1", "2", "3"}, {}};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            d.edges.push_back({"e" + std::to_string(i) + std::to_string(j), std::to_string(i), std::to_string(j), zero()});
    return build_graph(d);
}

inline MetricGraph path2() {
    return build_graph({{"a", "b", "c"}, {{"e1", "a", "b", zero()}, {"e2", "b", "c", zero()}}});
}

inline MetricGraph double_edge() {
    return build_graph({{"u", "v"}, {{"e1", "u", "v", zero()}, {"e2", "u", "v", zero()}}});
}

inline MetricGraph loop_pendant() {
    return build_graph({{"a", "b"}, {{"loop", "a", "a", zero()}, {"e", "a", "b", zero()}}});
}

inline std::vector<MetricGraph> all_graphs() {
    return {loop(), triangle(), complete4(), star(), double_edge(), path2(), loop_pendant()};
}

// Random step potential with up to max_segments pieces and values in
// [-amp, amp].
inline PiecewisePotential random_potential(std::mt19937_64& rng, int max_segments = 8, double amp = 10.0) {
    std::uniform_int_distribution<int> count(1, max_segments);
    std::uniform_real_distribution<double> val(-amp, amp);
    std::uniform_real_distribution<double> pos(0.0, 1.0);
    const int m = count(rng);
    std::vector<double> bp{0.0, 1.0};
    while (static_cast<int>(bp.size()) < m + 1) {
        const double x = pos(rng);
        if (x > 1e-3 && x < 1.0 - 1e-3 && std::find(bp.begin(), bp.end(), x) == bp.end()) bp.push_back(x);
    }
    std::sort(bp.begin(), bp.end());
    std::vector<double> values(static_cast<std::size_t>(m));
    for (auto& v : values) v = val(rng);
    return {bp, values};
}

inline MetricGraph with_random_potentials(const MetricGraph& g, std::mt19937_64& rng, int max_segments = 4,
                                          double amp = 3.0) {
    std::vector<PiecewisePotential> qs;
    for (int j = 0; j < g.edge_count(); ++j) qs.push_back(random_potential(rng, max_segments, amp));
    return g.with_potentials(qs);
}

// Same graph with vertices and edges listed in a random order.
inline MetricGraph shuffled(const MetricGraph& g, std::mt19937_64& rng) {
    auto d = g.description();
    std::shuffle(d.vertices.begin(), d.vertices.end(), rng);
    std::shuffle(d.edges.begin(), d.edges.end(), rng);
    return build_graph(d);
}

// Every edge reversed with probability 1/2, potentials mirrored.
inline MetricGraph randomly_reversed(const MetricGraph& g, std::mt19937_64& rng) {
    MetricGraph out = g;
    std::bernoulli_distribution flip(0.5);
    for (int j = 0; j < g.edge_count(); ++j)
        if (flip(rng)) out = out.with_edge_reversed(j);
    return out;
}

}  // namespace qgraph::testing
