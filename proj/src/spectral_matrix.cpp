#include "qgraph/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "qgraph/errors.hpp"

namespace qgraph {

double standard_scale(double lambda) { return lambda == 0.0 ? 1.0 : std::sqrt(std::abs(lambda)); }

double detection_scale(double lambda) { return std::max(1.0, std::sqrt(std::abs(lambda))); }

std::vector<EdgeSolutionValues> edge_values(const MetricGraph& g, double lambda) {
    std::vector<EdgeSolutionValues> out;
    out.reserve(g.edges().size());
    for (const auto& e : g.edges()) out.push_back(fundamental_values(e.potential, lambda));
    return out;
}

SpectralMatrix assemble_scaled(const MetricGraph& g, const std::vector<EdgeSolutionValues>& values,
                               double lambda, double rho) {
    const int nv = g.vertex_count();
    const int ne = g.edge_count();
    SpectralMatrix m{lambda, rho, nv, ne, Eigen::MatrixXd::Zero(nv + ne, nv + ne)};
    auto& M = m.entries;
    for (int j = 0; j < ne; ++j) {
        const auto& e = g.edge(j);
        const auto& ev = values[static_cast<std::size_t>(j)];
        const int row = nv + j;
        M(e.head, e.tail) += ev.dc / rho;
        if (e.is_loop()) {
            M(e.head, row) = ev.ds - 1.0;
            M(row, e.tail) = -1.0 + ev.c;
        } else {
            M(e.head, row) = ev.ds;
            M(e.tail, row) = -1.0;
            M(row, e.head) = -1.0;
            M(row, e.tail) = ev.c;
        }
        M(row, row) = rho * ev.s;
    }
    if (!M.allFinite())
        throw NonFiniteEntry("spectral matrix has non-finite entries at lambda=" + std::to_string(lambda));
    return m;
}

SpectralMatrix assemble_matrix(const MetricGraph& g, double lambda) {
    return assemble_scaled(g, edge_values(g, lambda), lambda, standard_scale(lambda));
}

double spectral_determinant(const MetricGraph& g, double lambda) {
    return assemble_matrix(g, lambda).entries.partialPivLu().determinant();
}

double relative_sigma_min(const MetricGraph& g, double lambda) {
    const auto m = assemble_scaled(g, edge_values(g, lambda), lambda, detection_scale(lambda));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.entries);
    const auto& sv = svd.singularValues();
    return sv(sv.size() - 1) / sigma_reference(sv(0));
}

int nullity(const MetricGraph& g, double lambda, double rel_tol) {
    const auto m = assemble_scaled(g, edge_values(g, lambda), lambda, detection_scale(lambda));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.entries);
    const auto& sv = svd.singularValues();
    int count = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) < rel_tol * sigma_reference(sv(0))) ++count;
    }
    return count;
}

}  // namespace qgraph
