#include "qgraph/scan.hpp"

#include <cmath>
#include <exception>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "qgraph/spectral.hpp"

namespace qgraph {

ScanPoint scan_point(const MetricGraph& g, double lambda) {
    const double rho = detection_scale(lambda);
    const auto m = assemble_scaled(g, edge_values(g, lambda), lambda, rho);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.entries);
    const auto& sv = svd.singularValues();
    // Rescaling rho only multiplies the determinant by (rho'/rho)^(|E|-|V|).
    const double det_detect = m.entries.partialPivLu().determinant();
    const double det = det_detect * std::pow(standard_scale(lambda) / rho, g.edge_count() - g.vertex_count());
    return {lambda, det, sv(sv.size() - 1) / sigma_reference(sv(0))};
}

std::vector<ScanPoint> scan_serial(const MetricGraph& g, std::span<const double> lambdas) {
    std::vector<ScanPoint> out(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) out[i] = scan_point(g, lambdas[i]);
    return out;
}

std::vector<ScanPoint> scan_parallel(const MetricGraph& g, std::span<const double> lambdas) {
    std::vector<ScanPoint> out(lambdas.size());
    const auto n = static_cast<std::ptrdiff_t>(lambdas.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = scan_point(g, lambdas[k]);
        } catch (...) {
#pragma omp critical(qgraph_scan_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace qgraph
