#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/polynomial.hpp"
#include "qgraph/spectral.hpp"

namespace qgraph {

/// p(d) = (Q - |E| d) T(d), T(d) = sum over spanning trees of the product
/// over non-tree edges of (d - qbar_j), where qbar_j is the integral of the
/// potential on edge j and Q the sum of all qbar_j. The real shifts of the
/// high-energy eigenvalue clusters from (2k pi)^2 (or (k pi)^2 on bipartite
/// graphs) approach the roots of p.
struct ClusterPolynomial {
    double total_potential = 0.0;  // Q
    int edge_count = 0;            // |E|
    std::int64_t tree_count = 0;
    Polynomial tree_factor;  // T, degree |E| - |V| + 1
    Polynomial coefficients;  // p, degree |E| - |V| + 2
    std::vector<PolynomialRoot> roots;

    double operator()(double d) const { return evaluate(coefficients, d); }
    double mean_root() const { return total_potential / edge_count; }

    /// Real roots (|imag| < 1e-6) expanded by multiplicity, ascending.
    std::vector<double> real_roots() const;
};

ClusterPolynomial cluster_polynomial(const MetricGraph& g);

/// Q / |E|, after checking that it is a root of p to 1e-12 relative to the
/// evaluation scale. Throws NumericalError otherwise.
double mean_value_root(const MetricGraph& g);

enum class Parity {
    even,  // clusters at (2k pi)^2, any graph
    all,   // clusters at (k pi)^2, bipartite graphs only
};

struct ClusterOptions {
    double window = 20.0;
    /// Target grid spacing in lambda inside the window.
    double lambda_resolution = 0.01;
    SearchOptions search;
};

struct ClusterShift {
    double shift = 0.0;  // lambda - base^2
    int multiplicity = 0;
};

struct ShiftMatch {
    double shift = 0.0;
    double root = 0.0;
    double distance = 0.0;
};

struct ClusterReport {
    int k = 0;
    Parity parity = Parity::even;
    double base = 0.0;  // 2 k pi or k pi
    std::vector<ClusterShift> shifts;
    int total_multiplicity = 0;
    std::vector<ShiftMatch> matches;
    std::vector<double> unmatched_roots;
    std::vector<double> unmatched_shifts;
    std::vector<std::string> warnings;

    double max_match_distance() const;
    /// Distance from the closest shift to `target`.
    double min_distance_to(double target) const;
};

/// Eigenvalues within `window` of base^2 and their pairing with the real
/// roots of p (minimum total distance). Throws PreconditionNotMet for
/// Parity::all on a non-bipartite graph and WindowCollision when the window
/// reaches into a neighbouring cluster's window.
ClusterReport extract_cluster(const MetricGraph& g, int k, Parity parity, const ClusterOptions& opts = {});

/// Same, with the polynomial already computed.
ClusterReport extract_cluster(const MetricGraph& g, const ClusterPolynomial& poly, int k, Parity parity,
                              const ClusterOptions& opts = {});

/// Parity::all when the graph is bipartite, Parity::even otherwise.
Parity auto_parity(const MetricGraph& g);

/// Minimum-total-distance pairing of two sorted multisets on the line; pairs
/// min(|a|, |b|) elements. Returns index pairs into a and b.
std::vector<std::pair<std::size_t, std::size_t>> match_sorted(const std::vector<double>& a,
                                                              const std::vector<double>& b);

struct ConvergenceRow {
    int k = 0;
    double max_matched_distance = 0.0;
    double min_distance_to_mean = 0.0;
    int total_multiplicity = 0;
};

struct ConvergenceTable {
    double mean_root = 0.0;
    std::vector<ConvergenceRow> rows;
    bool matched_distance_decreasing = false;
    bool mean_distance_decreasing = false;
};

ConvergenceTable cluster_convergence(const MetricGraph& g, const std::vector<int>& k_list, Parity parity,
                                     const ClusterOptions& opts = {});

struct CheckOptions {
    double tol_zero = 1e-6;
    double tol_shift = 5e-2;
    Parity parity = Parity::even;
    ClusterOptions cluster;
};

struct ClusterHypothesis {
    int k = 0;
    int required = 0;
    int near_zero = 0;  // multiplicity-weighted count of shifts within tol_shift of 0
    int total_multiplicity = 0;
    double worst_shift = 0.0;  // the shift farthest from 0
    bool holds = false;
};

/// Evaluation of the inverse-problem hypotheses: (i) 0 is the smallest
/// eigenvalue, (ii) each requested cluster carries the required number of
/// eigenvalues with shifts near 0. Consistency with q = 0 is all it reports;
/// it never concludes q = 0.
struct AmbarzumianVerdict {
    int required_multiplicity = 0;
    std::optional<double> smallest_eigenvalue;
    bool zero_is_smallest = false;
    std::vector<ClusterHypothesis> clusters;
    bool consistent = false;
    std::string witness;  // empty when consistent
};

/// Requires |E| - |V| + 2 eigenvalues per cluster.
AmbarzumianVerdict ambarzumian_check(const MetricGraph& g, const std::vector<int>& k_list,
                                     const CheckOptions& opts = {});

/// Requires |E| - |V| + 1 eigenvalues per cluster; only valid when every
/// non-loop edge has the same effective resistance r < 1. Throws
/// PreconditionNotMet otherwise.
AmbarzumianVerdict weakened_check(const MetricGraph& g, const std::vector<int>& k_list,
                                  const CheckOptions& opts = {});

}  // namespace qgraph
