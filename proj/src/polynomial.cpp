#include "qgraph/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "qgraph/errors.hpp"

namespace qgraph {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Polynomial derivative(const Polynomial& p) {
    if (p.size() <= 1) return {0.0};
    Polynomial out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = static_cast<double>(i) * p[i];
    return out;
}

double evaluate(const Polynomial& p, double x) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> evaluate(const Polynomial& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double evaluation_scale(const Polynomial& p, double x) {
    Polynomial mags(p.size());
    std::transform(p.begin(), p.end(), mags.begin(), [](double c) { return std::abs(c); });
    return evaluate(mags, std::abs(x));
}

Polynomial trimmed(Polynomial p) {
    while (!p.empty() && p.back() == 0.0) p.pop_back();
    return p;
}

std::vector<std::complex<double>> companion_roots(const Polynomial& poly) {
    const Polynomial p = trimmed(poly);
    if (p.empty()) throw InputError("the zero polynomial has no finite root set");
    std::vector<std::complex<double>> roots;
    std::size_t low = 0;
    while (p[low] == 0.0) {
        roots.emplace_back(0.0, 0.0);
        ++low;
    }
    const auto n = static_cast<Eigen::Index>(p.size() - 1 - low);
    if (n == 0) return roots;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    const double lead = p.back();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i > 0) companion(i, i - 1) = 1.0;
        companion(i, n - 1) = -p[low + static_cast<std::size_t>(i)] / lead;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    for (Eigen::Index i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

namespace {

bool is_multiple_root(const Polynomial& p, double z, int m) {
    Polynomial d = p;
    for (int j = 0; j < m; ++j) {
        const double scale = evaluation_scale(d, z);
        if (scale > 0.0 && std::abs(evaluate(d, z)) > 1e-10 * scale) return false;
        d = derivative(d);
    }
    return true;
}

std::vector<std::vector<std::size_t>> single_linkage(const std::vector<std::complex<double>>& r,
                                                     const std::vector<std::size_t>& members,
                                                     double abs_radius, double rel_radius) {
    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const auto za = r[members[a]];
            const auto zb = r[members[b]];
            const double radius = abs_radius + rel_radius * std::max(std::abs(za), std::abs(zb));
            if (std::abs(za - zb) <= radius) parent[root(a)] = root(b);
        }
    }
    std::vector<std::vector<std::size_t>> groups(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) groups[root(a)].push_back(members[a]);
    std::erase_if(groups, [](const auto& gr) { return gr.empty(); });
    return groups;
}

std::complex<double> centroid(const std::vector<std::complex<double>>& r, const std::vector<std::size_t>& g) {
    std::complex<double> sum = 0.0;
    for (auto i : g) sum += r[i];
    return sum / static_cast<double>(g.size());
}

}  // namespace

std::vector<PolynomialRoot> roots_with_multiplicity(const Polynomial& poly, double tol) {
    const Polynomial p = trimmed(poly);
    const auto r = companion_roots(p);
    std::vector<std::size_t> all(r.size());
    std::iota(all.begin(), all.end(), 0);

    std::vector<PolynomialRoot> out;
    for (const auto& group : single_linkage(r, all, 1e-3, 1e-3)) {
        const auto z = centroid(r, group);
        const int m = static_cast<int>(group.size());
        const bool real_centroid = std::abs(z.imag()) <= 1e-7 * std::max(1.0, std::abs(z));
        if (m == 1) {
            out.push_back({r[group.front()], 1});
        } else if (real_centroid && is_multiple_root(p, z.real(), m)) {
            out.push_back({{z.real(), 0.0}, m});
        } else {
            for (const auto& sub : single_linkage(r, group, tol, 0.0))
                out.push_back({centroid(r, sub), static_cast<int>(sub.size())});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolynomialRoot& a, const PolynomialRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

}  // namespace qgraph
