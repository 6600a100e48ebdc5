#pragma once

#include "qgraph/potential.hpp"

namespace qgraph {

/// Fundamental system of -y'' + q y = lambda y at one point x of the edge:
/// c(x) with c(0) = 1, c'(0) = 0 and s(x) with s(0) = 0, s'(0) = 1.
struct EdgeSolutionValues {
    double c = 1.0;
    double dc = 0.0;
    double s = 0.0;
    double ds = 1.0;
    double lambda = 0.0;

    /// c s' - c' s; identically 1.
    double wronskian() const { return c * ds - dc * s; }
};

/// Values at x = 1, built as a product of closed-form per-segment
/// propagators. Any real lambda; lambda below the potential switches to the
/// hyperbolic form. Throws NonFiniteInput for non-finite lambda.
EdgeSolutionValues fundamental_values(const PiecewisePotential& q, double lambda);

/// Values at an interior point, splitting the segment that contains x.
/// Throws XOutOfRange unless 0 <= x <= 1.
EdgeSolutionValues fundamental_values_at(const PiecewisePotential& q, double lambda, double x);

/// Leading-order large-lambda predictions at lambda = (k pi)^2 + d for an
/// edge whose potential integrates to q_mean:
///   c(1) ~ s'(1) ~ (-1)^k,
///   c'(1) / sqrt(lambda) ~ (-1)^k (q_mean - d) / (2 sqrt(lambda)),
///   sqrt(lambda) s(1) ~ (-1)^k (d - q_mean) / (2 sqrt(lambda)).
/// The returned record stores the unscaled c'(1) and s(1) implied by these.
EdgeSolutionValues asymptotic_values(double q_mean, int k, double d);

namespace detail {

/// cos(sqrt(z)) and sin(sqrt(z))/sqrt(z) for real z of either sign, with a
/// Taylor branch near z = 0.
struct TrigPair {
    double cos_like;
    double sinc_like;
};
TrigPair trig_pair(double z);

}  // namespace detail

}  // namespace qgraph
