#include "qgraph/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgraph/errors.hpp"

namespace qgraph {

PiecewisePotential::PiecewisePotential() : breakpoints_{0.0, 1.0}, values_{0.0} {}

PiecewisePotential::PiecewisePotential(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.empty() || breakpoints_.size() != values_.size() + 1)
        throw InputError("potential needs m values and m+1 breakpoints");
    if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
        throw InputError("potential breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw InputError("potential breakpoints must be strictly increasing");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw InputError("potential values must be finite");
    }
    for (std::size_t i = 0; i < values_.size(); ++i)
        mean_ += values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
}

PiecewisePotential PiecewisePotential::constant(double value) { return {{0.0, 1.0}, {value}}; }

double PiecewisePotential::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

double PiecewisePotential::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

double PiecewisePotential::operator()(double x) const {
    auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, x);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

PiecewisePotential PiecewisePotential::reversed() const {
    std::vector<double> bp(breakpoints_.size());
    std::vector<double> vals(values_.rbegin(), values_.rend());
    for (std::size_t i = 0; i < bp.size(); ++i) bp[i] = 1.0 - breakpoints_[bp.size() - 1 - i];
    bp.front() = 0.0;
    bp.back() = 1.0;
    return {std::move(bp), std::move(vals)};
}

PiecewisePotential PiecewisePotential::shifted(double c) const {
    std::vector<double> vals = values_;
    for (double& v : vals) v += c;
    return {breakpoints_, std::move(vals)};
}

PiecewisePotential sample_potential(const std::function<double(double)>& f, int segments) {
    if (segments < 1) throw InputError("sample_potential needs at least one segment");
    const auto n = static_cast<std::size_t>(segments);
    std::vector<double> bp(n + 1);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i <= n; ++i) bp[i] = static_cast<double>(i) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        vals[i] = f(x);
        if (!std::isfinite(vals[i]))
            throw NonFiniteSample("potential sample at x=" + std::to_string(x) + " is not finite");
    }
    return {std::move(bp), std::move(vals)};
}

}  // namespace qgraph
