#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include "qgraph/errors.hpp"
#include "qgraph/spectral.hpp"

namespace qgraph {

EigenfunctionBasis::PointValue EigenfunctionBasis::evaluate(int i, int edge, double x) const {
    const auto& e = graph_->edge(edge);
    const auto& coef = coefficients(i);
    const auto v = fundamental_values_at(e.potential, lambda_, x);
    const double a = coef.vertex(e.tail);
    const double b = rho_ * coef.edge(edge);
    return {a * v.c + b * v.s, a * v.dc + b * v.ds};
}

double EigenfunctionBasis::inner_product(int a, int b, int points) const {
    double sum = 0.0;
    for (int j = 0; j < graph_->edge_count(); ++j) {
        for (int m = 0; m < points; ++m) {
            const double x = (m + 0.5) / points;
            sum += evaluate(a, j, x).value * evaluate(b, j, x).value;
        }
    }
    return sum / points;
}

EigenfunctionBasis eigenfunction(const MetricGraph& g, double lambda, double rel_tol, int quadrature_points) {
    const double rho_detect = detection_scale(lambda);
    const auto m = assemble_scaled(g, edge_values(g, lambda), lambda, rho_detect);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.entries, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const auto n = sv.size();
    Eigen::Index dim = 0;
    while (dim < n && sv(n - 1 - dim) < rel_tol * sigma_reference(sv(0))) ++dim;
    if (dim == 0) throw NotAnEigenvalue("lambda=" + std::to_string(lambda) + " is not an eigenvalue");

    EigenfunctionBasis basis;
    basis.graph_ = &g;
    basis.lambda_ = lambda;
    basis.rho_ = standard_scale(lambda);
    const int nv = g.vertex_count();
    const int ne = g.edge_count();
    // Detection unknowns carry B_tilde / rho_detect; report B_tilde / rho.
    const double to_standard = rho_detect / basis.rho_;
    for (Eigen::Index k = 0; k < dim; ++k) {
        const Eigen::VectorXd x = svd.matrixV().col(n - 1 - k);
        basis.basis_.push_back({x.head(nv), x.tail(ne) * to_standard});
    }

    // Orthonormalize in L2: with Gram = L L^T, the combinations X L^{-T}
    // are orthonormal.
    const int d = static_cast<int>(dim);
    Eigen::MatrixXd gram(d, d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b <= a; ++b) gram(a, b) = gram(b, a) = basis.inner_product(a, b, quadrature_points);
    }
    const Eigen::MatrixXd lower = gram.llt().matrixL();
    const Eigen::MatrixXd mix = lower.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(d, d));
    std::vector<EigenfunctionBasis::Coefficients> ortho;
    for (int b = 0; b < d; ++b) {
        Eigen::VectorXd vert = Eigen::VectorXd::Zero(nv);
        Eigen::VectorXd edge = Eigen::VectorXd::Zero(ne);
        for (int a = 0; a < d; ++a) {
            vert += mix(a, b) * basis.basis_[static_cast<std::size_t>(a)].vertex;
            edge += mix(a, b) * basis.basis_[static_cast<std::size_t>(a)].edge;
        }
        ortho.push_back({std::move(vert), std::move(edge)});
    }
    basis.basis_ = std::move(ortho);
    return basis;
}

VertexResiduals vertex_residuals(const MetricGraph& g, const EigenfunctionBasis& basis, int i) {
    const auto nv = static_cast<std::size_t>(g.vertex_count());
    std::vector<double> lo(nv, INFINITY), hi(nv, -INFINITY), flux(nv, 0.0);
    for (int j = 0; j < g.edge_count(); ++j) {
        const auto& e = g.edge(j);
        const auto start = basis.evaluate(i, j, 0.0);
        const auto end = basis.evaluate(i, j, 1.0);
        const auto t = static_cast<std::size_t>(e.tail);
        const auto h = static_cast<std::size_t>(e.head);
        lo[t] = std::min(lo[t], start.value);
        hi[t] = std::max(hi[t], start.value);
        lo[h] = std::min(lo[h], end.value);
        hi[h] = std::max(hi[h], end.value);
        flux[t] += start.derivative;
        flux[h] -= end.derivative;
    }
    VertexResiduals r;
    for (std::size_t v = 0; v < nv; ++v) {
        r.continuity = std::max(r.continuity, hi[v] - lo[v]);
        r.kirchhoff = std::max(r.kirchhoff, std::abs(flux[v]));
    }
    return r;
}

}  // namespace qgraph
