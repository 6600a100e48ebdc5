#pragma once

#include <complex>
#include <vector>

namespace qgraph {

/// Real polynomial, coefficients in ascending powers: p[0] + p[1] d + ...
using Polynomial = std::vector<double>;

Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p);
double evaluate(const Polynomial& p, double x);
std::complex<double> evaluate(const Polynomial& p, std::complex<double> x);

/// sum |p_i| |x|^i: the natural scale for rounding errors in evaluate(p, x).
double evaluation_scale(const Polynomial& p, double x);

/// Drops trailing (highest-power) zero coefficients.
Polynomial trimmed(Polynomial p);

struct PolynomialRoot {
    std::complex<double> value;
    int multiplicity = 1;
};

/// Eigenvalues of the companion matrix; exact zero roots are split off
/// first. Unsorted, one entry per root counted with multiplicity.
std::vector<std::complex<double>> companion_roots(const Polynomial& p);

/// Roots grouped into multiple roots. Companion eigenvalues of an m-fold
/// root scatter by about eps^(1/m), so candidates are gathered with a loose
/// radius and a group is kept only if every derivative below its size
/// vanishes at the centroid (relative to evaluation_scale). Groups that fail
/// fall back to grouping within `tol`.
std::vector<PolynomialRoot> roots_with_multiplicity(const Polynomial& p, double tol = 1e-9);

}  // namespace qgraph
