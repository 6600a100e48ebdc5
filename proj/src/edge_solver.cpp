#include "qgraph/edge_solver.hpp"

#include <cmath>
#include <numbers>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace detail {

TrigPair trig_pair(double z) {
    if (std::abs(z) < 1e-8) {
        // Four Taylor terms; the next term is below 1e-32 here.
        return {1.0 - z / 2.0 + z * z / 24.0 - z * z * z / 720.0,
                1.0 - z / 6.0 + z * z / 120.0 - z * z * z / 5040.0};
    }
    if (z > 0.0) {
        const double w = std::sqrt(z);
        return {std::cos(w), std::sin(w) / w};
    }
    const double w = std::sqrt(-z);
    return {std::cosh(w), std::sinh(w) / w};
}

}  // namespace detail

namespace {

// Phi = [[c, s], [c', s']]; propagating over a segment of width h with
// constant potential v multiplies Phi from the left by
// [[C, h S], [-mu2 h S, C]], mu2 = lambda - v.
struct Fundamental {
    double c = 1.0, s = 0.0, dc = 0.0, ds = 1.0;

    void advance(double mu2, double h) {
        const auto [cl, sl] = detail::trig_pair(mu2 * h * h);
        const double p01 = h * sl;
        const double p10 = -mu2 * h * sl;
        const double nc = cl * c + p01 * dc;
        const double ns = cl * s + p01 * ds;
        const double ndc = p10 * c + cl * dc;
        const double nds = p10 * s + cl * ds;
        c = nc;
        s = ns;
        dc = ndc;
        ds = nds;
    }
};

EdgeSolutionValues propagate(const PiecewisePotential& q, double lambda, double x) {
    if (!std::isfinite(lambda)) throw NonFiniteInput("lambda must be finite");
    Fundamental phi;
    const auto bp = q.breakpoints();
    const auto vals = q.values();
    for (std::size_t i = 0; i < vals.size() && bp[i] < x; ++i) {
        const double end = std::min(bp[i + 1], x);
        phi.advance(lambda - vals[i], end - bp[i]);
    }
    return {phi.c, phi.dc, phi.s, phi.ds, lambda};
}

}  // namespace

EdgeSolutionValues fundamental_values(const PiecewisePotential& q, double lambda) {
    return propagate(q, lambda, 1.0);
}

EdgeSolutionValues fundamental_values_at(const PiecewisePotential& q, double lambda, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw XOutOfRange("x must lie in [0, 1]");
    return propagate(q, lambda, x);
}

EdgeSolutionValues asymptotic_values(double q_mean, int k, double d) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double lambda = std::pow(k * std::numbers::pi, 2) + d;
    EdgeSolutionValues out;
    out.lambda = lambda;
    out.c = sign;
    out.ds = sign;
    out.dc = sign * (q_mean - d) / 2.0;
    out.s = sign * (d - q_mean) / (2.0 * lambda);
    return out;
}

}  // namespace qgraph
