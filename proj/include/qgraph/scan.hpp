#pragma once

#include <span>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

struct ScanPoint {
    double lambda = 0.0;
    double det = 0.0;        // spectral_determinant at lambda
    double sigma_min = 0.0;  // relative_sigma_min at lambda
};

/// One grid point; both kernels below call this.
ScanPoint scan_point(const MetricGraph& g, double lambda);

/// Reference kernel: plain loop over the grid.
std::vector<ScanPoint> scan_serial(const MetricGraph& g, std::span<const double> lambdas);

/// OpenMP kernel over the grid. Each point is independent, so the output is
/// bitwise identical to scan_serial.
std::vector<ScanPoint> scan_parallel(const MetricGraph& g, std::span<const double> lambdas);

inline std::vector<ScanPoint> scan(const MetricGraph& g, std::span<const double> lambdas, bool parallel) {
    return parallel ? scan_parallel(g, lambdas) : scan_serial(g, lambdas);
}

}  // namespace qgraph
