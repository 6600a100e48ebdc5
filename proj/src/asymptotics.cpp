#include "qgraph/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "qgraph/errors.hpp"
#include "qgraph/trees.hpp"

namespace qgraph {

std::vector<double> ClusterPolynomial::real_roots() const {
    std::vector<double> out;
    for (const auto& r : roots) {
        if (std::abs(r.value.imag()) < 1e-6) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClusterPolynomial cluster_polynomial(const MetricGraph& g) {
    ClusterPolynomial p;
    p.edge_count = g.edge_count();
    p.total_potential = g.total_potential();
    const auto means = g.edge_means();
    const auto trees = enumerate_spanning_trees(g);
    p.tree_count = static_cast<std::int64_t>(trees.count);

    p.tree_factor.assign(static_cast<std::size_t>(g.cycle_rank()) + 1, 0.0);
    for (const auto& tree : trees.trees) {
        Polynomial term{1.0};
        std::size_t t = 0;
        for (int j = 0; j < g.edge_count(); ++j) {
            if (t < tree.size() && tree[t] == j) {
                ++t;
                continue;
            }
            term = multiply(term, {-means[static_cast<std::size_t>(j)], 1.0});
        }
        for (std::size_t i = 0; i < term.size(); ++i) p.tree_factor[i] += term[i];
    }
    p.coefficients = multiply({p.total_potential, -static_cast<double>(p.edge_count)}, p.tree_factor);
    p.roots = roots_with_multiplicity(p.coefficients);
    return p;
}

double mean_value_root(const MetricGraph& g) {
    const auto p = cluster_polynomial(g);
    const double root = p.mean_root();
    const double scale = evaluation_scale(p.coefficients, root);
    if (std::abs(p(root)) > 1e-12 * std::max(scale, 1.0))
        throw NumericalError(fmt::format("p(Q/|E|) = {:.3g} is not zero", p(root)));
    return root;
}

Parity auto_parity(const MetricGraph& g) { return is_bipartite(g) ? Parity::all : Parity::even; }

double ClusterReport::max_match_distance() const {
    double m = 0.0;
    for (const auto& x : matches) m = std::max(m, x.distance);
    return m;
}

double ClusterReport::min_distance_to(double target) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& s : shifts) m = std::min(m, std::abs(s.shift - target));
    return m;
}

std::vector<std::pair<std::size_t, std::size_t>> match_sorted(const std::vector<double>& a,
                                                              const std::vector<double>& b) {
    if (a.size() > b.size()) {
        auto swapped = match_sorted(b, a);
        for (auto& [i, j] : swapped) std::swap(i, j);
        return swapped;
    }
    // Every element of the shorter list a is matched; a non-crossing optimum
    // exists on the line, so a prefix DP suffices.
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> cost(n + 1, std::vector<double>(m + 1, inf));
    for (std::size_t j = 0; j <= m; ++j) cost[0][j] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= m; ++j) {
            cost[i][j] = std::min(cost[i][j - 1], cost[i - 1][j - 1] + std::abs(a[i - 1] - b[j - 1]));
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t i = n, j = m;
    while (i > 0) {
        if (j > i && cost[i][j] == cost[i][j - 1]) {
            --j;
        } else {
            pairs.emplace_back(i - 1, j - 1);
            --i;
            --j;
        }
    }
    std::reverse(pairs.begin(), pairs.end());
    return pairs;
}

namespace {

double cluster_base(int k, Parity parity) {
    return (parity == Parity::even ? 2.0 : 1.0) * k * std::numbers::pi;
}

}  // namespace

ClusterReport extract_cluster(const MetricGraph& g, int k, Parity parity, const ClusterOptions& opts) {
    return extract_cluster(g, cluster_polynomial(g), k, parity, opts);
}

ClusterReport extract_cluster(const MetricGraph& g, const ClusterPolynomial& poly, int k, Parity parity,
                              const ClusterOptions& opts) {
    if (k < 1) throw InputError("cluster index k must be at least 1");
    if (parity == Parity::all && !is_bipartite(g))
        throw PreconditionNotMet("clusters at (k pi)^2 for every k need a bipartite graph");

    ClusterReport rep;
    rep.k = k;
    rep.parity = parity;
    rep.base = cluster_base(k, parity);
    const double center = rep.base * rep.base;
    const double w = opts.window;
    const double above = std::pow(cluster_base(k + 1, parity), 2);
    if (above - center < 2.0 * w || (k > 1 && center - std::pow(cluster_base(k - 1, parity), 2) < 2.0 * w))
        throw WindowCollision(fmt::format("window {} around k={} overlaps a neighbouring cluster", w, k));

    SearchOptions search = opts.search;
    search.grid_step = std::min(search.grid_step, opts.lambda_resolution / (2.0 * rep.base));
    auto found = find_eigenvalues(g, center - w, center + w, search);
    rep.warnings = std::move(found.warnings);

    std::vector<double> expanded;
    for (const auto& e : found.eigenvalues) {
        rep.shifts.push_back({e.lambda - center, e.multiplicity});
        rep.total_multiplicity += e.multiplicity;
        expanded.insert(expanded.end(), static_cast<std::size_t>(e.multiplicity), e.lambda - center);
    }

    const auto roots = poly.real_roots();
    const auto pairs = match_sorted(expanded, roots);
    std::vector<bool> used_shift(expanded.size(), false), used_root(roots.size(), false);
    for (auto [i, j] : pairs) {
        rep.matches.push_back({expanded[i], roots[j], std::abs(expanded[i] - roots[j])});
        used_shift[i] = true;
        used_root[j] = true;
    }
    for (std::size_t i = 0; i < expanded.size(); ++i)
        if (!used_shift[i]) rep.unmatched_shifts.push_back(expanded[i]);
    for (std::size_t j = 0; j < roots.size(); ++j)
        if (!used_root[j]) rep.unmatched_roots.push_back(roots[j]);
    return rep;
}

ConvergenceTable cluster_convergence(const MetricGraph& g, const std::vector<int>& k_list, Parity parity,
                                     const ClusterOptions& opts) {
    if (!std::is_sorted(k_list.begin(), k_list.end()) ||
        std::adjacent_find(k_list.begin(), k_list.end()) != k_list.end())
        throw InputError("k list must be strictly increasing");
    const auto poly = cluster_polynomial(g);
    ConvergenceTable table;
    table.mean_root = poly.mean_root();
    for (int k : k_list) {
        const auto rep = extract_cluster(g, poly, k, parity, opts);
        table.rows.push_back({k, rep.max_match_distance(), rep.min_distance_to(table.mean_root), rep.total_multiplicity});
    }
    table.matched_distance_decreasing = true;
    table.mean_distance_decreasing = true;
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        if (table.rows[i].max_matched_distance > table.rows[i - 1].max_matched_distance)
            table.matched_distance_decreasing = false;
        if (table.rows[i].min_distance_to_mean > table.rows[i - 1].min_distance_to_mean)
            table.mean_distance_decreasing = false;
    }
    return table;
}

namespace {

AmbarzumianVerdict check_with(const MetricGraph& g, const std::vector<int>& k_list, const CheckOptions& opts,
                              int required) {
    AmbarzumianVerdict v;
    v.required_multiplicity = required;

    const double w = opts.cluster.window;
    const double lower = std::min(-w, g.min_potential() - 1.0);
    const auto low = find_eigenvalues(g, lower, w, opts.cluster.search);
    if (!low.eigenvalues.empty()) v.smallest_eigenvalue = low.eigenvalues.front().lambda;
    v.zero_is_smallest = v.smallest_eigenvalue && std::abs(*v.smallest_eigenvalue) <= opts.tol_zero;
    if (!v.zero_is_smallest) {
        v.witness = v.smallest_eigenvalue
                        ? fmt::format("smallest eigenvalue {:.10g} is not 0", *v.smallest_eigenvalue)
                        : fmt::format("no eigenvalue in [{:.6g}, {:.6g}]", lower, w);
    }

    const auto poly = cluster_polynomial(g);
    bool clusters_ok = true;
    for (int k : k_list) {
        const auto rep = extract_cluster(g, poly, k, opts.parity, opts.cluster);
        ClusterHypothesis h;
        h.k = k;
        h.required = required;
        h.total_multiplicity = rep.total_multiplicity;
        for (const auto& s : rep.shifts) {
            if (std::abs(s.shift) <= opts.tol_shift) h.near_zero += s.multiplicity;
            if (std::abs(s.shift) >= std::abs(h.worst_shift)) h.worst_shift = s.shift;
        }
        h.holds = h.near_zero >= required;
        if (!h.holds && clusters_ok) {
            if (!v.witness.empty()) v.witness += "; ";
            v.witness += fmt::format("k={}: {} of {} required eigenvalues within {} of ({:.6g})^2; cluster shift {:.10g}",
                                    k, h.near_zero, required, opts.tol_shift, rep.base, h.worst_shift);
        }
        clusters_ok = clusters_ok && h.holds;
        v.clusters.push_back(h);
    }
    v.consistent = v.zero_is_smallest && clusters_ok;
    return v;
}

}  // namespace

AmbarzumianVerdict ambarzumian_check(const MetricGraph& g, const std::vector<int>& k_list, const CheckOptions& opts) {
    return check_with(g, k_list, opts, g.cycle_rank() + 1);
}

AmbarzumianVerdict weakened_check(const MetricGraph& g, const std::vector<int>& k_list, const CheckOptions& opts) {
    const auto pre = equal_resistance_precondition(g);
    if (!pre.holds)
        throw PreconditionNotMet("the weakened check needs equal effective resistance r < 1 on all non-loop edges");
    return check_with(g, k_list, opts, g.cycle_rank());
}

}  // namespace qgraph
