#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qgraph/edge_solver.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

/// The (|V|+|E|)-square matrix of the homogeneous system in the unknowns
/// (A_v, B_j), vertex (Kirchhoff) rows and columns first, then edge
/// (continuity) rows and columns:
///
///   A: a_vu = (1/rho) sum c_j'(1) over edges u -> v
///   B: s_j'(1) at head, -1 at tail, s_j'(1) - 1 for a loop
///   C: -1 at head, c_j(1) at tail, -1 + c_j(1) for a loop
///   D: diagonal, rho s_j(1)
///
/// with rho = sqrt(lambda) for lambda > 0. For lambda < 0 the branch
/// sqrt(lambda) = i sqrt(-lambda) is folded into real entries, which amounts
/// to rho = sqrt(-lambda). At lambda = 0 the scaled system degenerates, so
/// rho = 1 there (the unscaled coefficient form).
struct SpectralMatrix {
    double lambda = 0.0;
    double rho = 1.0;
    int vertex_count = 0;
    int edge_count = 0;
    Eigen::MatrixXd entries;
};

/// Scale used by assemble_matrix.
double standard_scale(double lambda);

/// Scale used for nullity and eigenvalue detection: max(1, sqrt|lambda|).
/// Agrees with standard_scale for |lambda| >= 1 and keeps the matrix well
/// conditioned near lambda = 0.
double detection_scale(double lambda);

/// Edge values c, c', s, s' at x = 1 for every edge.
std::vector<EdgeSolutionValues> edge_values(const MetricGraph& g, double lambda);

SpectralMatrix assemble_scaled(const MetricGraph& g, const std::vector<EdgeSolutionValues>& values,
                               double lambda, double rho);

/// Throws NonFiniteEntry if an entry overflows.
SpectralMatrix assemble_matrix(const MetricGraph& g, double lambda);

/// det of assemble_matrix(g, lambda) by partially pivoted LU.
double spectral_determinant(const MetricGraph& g, double lambda);

/// Reference singular value for relative thresholds: max(sigma_max, 1).
/// With detection scaling every edge row holds (c, rho s), which has unit
/// size when q = 0; the floor keeps matrices whose entries all vanish
/// together (the q = 0 loop at (2k pi)^2) from looking regular.
inline double sigma_reference(double sigma_max) { return sigma_max > 1.0 ? sigma_max : 1.0; }

/// sigma_min / sigma_reference of the detection-scaled matrix.
double relative_sigma_min(const MetricGraph& g, double lambda);

inline constexpr double kDefaultNullityTol = 1e-8;

/// Number of singular values below rel_tol * sigma_reference (detection
/// scaling).
/// This is the multiplicity of lambda as an eigenvalue.
int nullity(const MetricGraph& g, double lambda, double rel_tol = kDefaultNullityTol);

struct EigenvalueRecord {
    double lambda = 0.0;
    int multiplicity = 0;
    std::optional<int> window_k;
};

struct SearchOptions {
    /// Grid step in sqrt(lambda) for lambda > 0, in lambda for lambda <= 0.
    double grid_step = 0.01;
    double rel_tol = kDefaultNullityTol;
    bool parallel = true;
    int max_refine_depth = 4;
};

struct EigenSearchResult {
    std::vector<EigenvalueRecord> eigenvalues;
    /// Non-fatal diagnostics, e.g. a grid that stayed too coarse after
    /// refinement.
    std::vector<std::string> warnings;

    int total_multiplicity() const;
};

/// All eigenvalues in [lo, hi], ascending, with multiplicities.
///
/// The smallest relative singular value of M is scanned on a grid; each local
/// dip is refined by golden-section search and accepted when the nullity at
/// the refined point is positive. Grid cells whose determinant sign change
/// disagrees in parity with the roots found inside, and pairs of roots closer
/// than two grid steps, are rescanned on a finer grid.
EigenSearchResult find_eigenvalues(const MetricGraph& g, double lo, double hi, const SearchOptions& opts = {});

/// Eigenfunctions for one eigenvalue. Coefficients follow assemble_matrix's
/// scaling: on edge j leaving vertex v,
///   y_j(x) = A_v c_j(x) + rho B_j s_j(x).
class EigenfunctionBasis {
public:
    struct Coefficients {
        Eigen::VectorXd vertex;  // A_v
        Eigen::VectorXd edge;    // B_j
    };

    struct PointValue {
        double value;
        double derivative;
    };

    double lambda() const { return lambda_; }
    double rho() const { return rho_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const Coefficients& coefficients(int i) const { return basis_[static_cast<std::size_t>(i)]; }

    PointValue evaluate(int i, int edge, double x) const;

    /// L2 inner product of two basis functions, by the midpoint rule with
    /// `points` nodes per edge.
    double inner_product(int a, int b, int points = 64) const;

private:
    friend EigenfunctionBasis eigenfunction(const MetricGraph&, double, double, int);

    const MetricGraph* graph_ = nullptr;
    double lambda_ = 0.0;
    double rho_ = 1.0;
    std::vector<Coefficients> basis_;
};

/// Orthonormal (in L2 over the graph) basis of the eigenspace at lambda.
/// The graph must outlive the returned basis. Throws NotAnEigenvalue when the
/// nullity is zero.
EigenfunctionBasis eigenfunction(const MetricGraph& g, double lambda, double rel_tol = kDefaultNullityTol,
                                 int quadrature_points = 64);

struct VertexResiduals {
    double continuity = 0.0;  // max spread of end values at a vertex
    double kirchhoff = 0.0;   // max |sum out y'(0) - sum in y'(1)|
};

VertexResiduals vertex_residuals(const MetricGraph& g, const EigenfunctionBasis& basis, int i);

}  // namespace qgraph
