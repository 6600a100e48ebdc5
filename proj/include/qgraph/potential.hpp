#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qgraph {

/// Step-function potential on the unit edge [0, 1].
///
/// `breakpoints` is 0 = x0 < x1 < ... < xm = 1 and `values[i]` is the
/// potential on [x_i, x_{i+1}). The integral over [0, 1] is cached at
/// construction.
class PiecewisePotential {
public:
    /// q == 0 on the whole edge.
    PiecewisePotential();

    /// Throws InputError if breakpoints are not strictly increasing from 0 to
    /// 1, if the sizes disagree, or if anything is non-finite.
    PiecewisePotential(std::vector<double> breakpoints, std::vector<double> values);

    static PiecewisePotential zero() { return {}; }
    static PiecewisePotential constant(double value);

    std::span<const double> breakpoints() const { return breakpoints_; }
    std::span<const double> values() const { return values_; }
    std::size_t segments() const { return values_.size(); }

    /// Integral of q over [0, 1].
    double mean() const { return mean_; }

    double min_value() const;
    double max_value() const;

    /// Potential at x (right-continuous; x == 1 gives the last segment).
    double operator()(double x) const;

    /// q(1 - x): the same potential seen from the other end of the edge.
    PiecewisePotential reversed() const;

    /// q + c.
    PiecewisePotential shifted(double c) const;

    bool operator==(const PiecewisePotential&) const = default;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    double mean_ = 0.0;
};

/// Midpoint samples of f on a uniform grid with `segments` cells.
/// Throws NonFiniteSample if f returns inf/nan, InputError if segments < 1.
PiecewisePotential sample_potential(const std::function<double(double)>& f, int segments);

}  // namespace qgraph
