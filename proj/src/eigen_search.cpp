#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>
#include <fmt/format.h>

#include "qgraph/errors.hpp"
#include "qgraph/scan.hpp"
#include "qgraph/spectral.hpp"

namespace qgraph {

int EigenSearchResult::total_multiplicity() const {
    int total = 0;
    for (const auto& e : eigenvalues) total += e.multiplicity;
    return total;
}

namespace {

// Search coordinate: u = lambda for lambda <= 0, u = sqrt(lambda) above.
double lambda_of(double u) { return u <= 0.0 ? u : u * u; }
double coord_of(double lambda) { return lambda <= 0.0 ? lambda : std::sqrt(lambda); }

struct Root {
    double u;
    int multiplicity;
};

double coord_tol(double u) { return 1e-15 * std::max(1.0, std::abs(u)); }

// Refined roots agree to about 1e-13 relative; cluster members at large
// lambda can be split by much less than 1e-8 relative.
constexpr double kDuplicateTol = 1e-11;

// Below this relative sigma_min the sign of an LU determinant is not
// trusted. Near high-k clusters sigma_min grows only like dlambda / sqrt(lambda),
// so anything much larger hides close pairs from the parity check.
constexpr double kSignSafeSigma = 1e-12;

class Search {
public:
    Search(const MetricGraph& g, const SearchOptions& opts) : g_(g), opts_(opts) {}

    std::vector<Root> run(double ua, double ub, double h, int depth) {
        const auto n = static_cast<std::size_t>(std::max(2.0, std::ceil((ub - ua) / h)));
        const double step = (ub - ua) / static_cast<double>(n);
        std::vector<double> u(n + 1), lambdas(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            u[i] = i == n ? ub : ua + static_cast<double>(i) * step;
            lambdas[i] = lambda_of(u[i]);
        }
        const auto pts = scan(g_, lambdas, opts_.parallel);

        std::vector<Root> roots;
        const double inf = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i <= n; ++i) {
            const double left = i > 0 ? pts[i - 1].sigma_min : inf;
            const double right = i < n ? pts[i + 1].sigma_min : inf;
            const double mid = pts[i].sigma_min;
            const bool dip = (mid <= left && mid < right) || (mid < left && mid <= right);
            if (!dip) continue;
            const double a = u[i > 0 ? i - 1 : 0];
            const double b = u[i < n ? i + 1 : n];
            accept(golden_minimum(a, b), roots);
        }

        // A sign change of det always hides a zero; catch any the dips missed.
        for (std::size_t i = 0; i < n; ++i) {
            if (!(pts[i].det * pts[i + 1].det < 0.0)) continue;
            if (any_in(roots, u[i], u[i + 1])) continue;
            accept(bisect_sign(u[i], u[i + 1], pts[i].det), roots);
        }
        dedupe(roots);

        // Parity: between two points well away from any zero, the number of
        // det sign changes and the total multiplicity inside agree mod 2.
        std::size_t prev = n + 1;
        for (std::size_t i = 0; i <= n; ++i) {
            if (pts[i].sigma_min <= kSignSafeSigma) continue;
            if (prev <= n) {
                const bool flips = (pts[prev].det < 0.0) != (pts[i].det < 0.0);
                const int inside = multiplicity_between(roots, u[prev], u[i]);
                if (flips != (inside % 2 == 1)) {
                    if (depth < opts_.max_refine_depth) {
                        replace_between(roots, u[prev], u[i], run(u[prev], u[i], (u[i] - u[prev]) / 32.0, depth + 1));
                    } else {
                        warn("determinant sign parity mismatch near lambda={:.10g}; a root may be missing",
                             lambdas[i]);
                    }
                }
            }
            prev = i;
        }

        // Roots closer than two grid steps: rescan the pair on a finer grid.
        std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.u < y.u; });
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            std::size_t j = i;
            while (j + 1 < roots.size() && roots[j + 1].u - roots[j].u < 2.0 * step) ++j;
            if (j == i) continue;
            const double a = std::max(ua, roots[i].u - step);
            const double b = std::min(ub, roots[j].u + step);
            if (depth < opts_.max_refine_depth) {
                auto finer = run(a, b, step / 10.0, depth + 1);
                replace_between(roots, a, b, std::move(finer));
                std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.u < y.u; });
                // Skip past the rescanned range.
                while (i + 1 < roots.size() && roots[i + 1].u <= b) ++i;
            } else {
                warn("grid too coarse: roots near lambda={:.10g} are closer than two grid steps",
                     lambda_of(roots[i].u));
                i = j;
            }
        }
        dedupe(roots);
        return roots;
    }

    std::vector<std::string> take_warnings() { return std::move(warnings_); }

private:
    double sigma(double u) const { return relative_sigma_min(g_, lambda_of(u)); }

    double det_detect(double u) const {
        const double lambda = lambda_of(u);
        return assemble_scaled(g_, edge_values(g_, lambda), lambda, detection_scale(lambda))
            .entries.partialPivLu()
            .determinant();
    }

    double golden_minimum(double a, double b) const {
        constexpr double inv_phi = 0.6180339887498949;
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = sigma(c);
        double fd = sigma(d);
        double best = fc <= fd ? c : d;
        double fbest = std::min(fc, fd);
        for (int it = 0; it < 200 && (b - a) > coord_tol(best); ++it) {
            if (fc <= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = sigma(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = sigma(d);
            }
            if (fc < fbest) {
                fbest = fc;
                best = c;
            }
            if (fd < fbest) {
                fbest = fd;
                best = d;
            }
        }
        // Endpoints matter when the zero sits on the interval boundary.
        for (double e : {a, b}) {
            const double fe = sigma(e);
            if (fe < fbest) {
                fbest = fe;
                best = e;
            }
        }
        return best;
    }

    double bisect_sign(double a, double b, double det_a) const {
        const bool neg_a = det_a < 0.0;
        for (int it = 0; it < 200 && (b - a) > coord_tol(a); ++it) {
            const double m = 0.5 * (a + b);
            const double dm = det_detect(m);
            if (dm == 0.0) return m;
            if ((dm < 0.0) == neg_a) a = m;
            else b = m;
        }
        return 0.5 * (a + b);
    }

    void accept(double u, std::vector<Root>& roots) const {
        const int mult = nullity(g_, lambda_of(u), opts_.rel_tol);
        if (mult > 0) roots.push_back({u, mult});
    }

    static bool any_in(const std::vector<Root>& roots, double a, double b) {
        return std::any_of(roots.begin(), roots.end(), [&](const Root& r) {
            return r.u >= a - coord_tol(a) * 1e3 && r.u <= b + coord_tol(b) * 1e3;
        });
    }

    static int multiplicity_between(const std::vector<Root>& roots, double a, double b) {
        int m = 0;
        for (const auto& r : roots) {
            if (r.u > a && r.u < b) m += r.multiplicity;
        }
        return m;
    }

    static void replace_between(std::vector<Root>& roots, double a, double b, std::vector<Root> finer) {
        std::erase_if(roots, [&](const Root& r) { return r.u > a && r.u < b; });
        for (const auto& r : finer) {
            if (r.u > a && r.u < b) roots.push_back(r);
        }
    }

    static void dedupe(std::vector<Root>& roots) {
        std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.u < y.u; });
        std::vector<Root> out;
        for (const auto& r : roots) {
            if (!out.empty()) {
                const double l0 = lambda_of(out.back().u);
                const double l1 = lambda_of(r.u);
                if (std::abs(l1 - l0) <= kDuplicateTol * std::max(1.0, std::abs(l1))) {
                    out.back().multiplicity = std::max(out.back().multiplicity, r.multiplicity);
                    continue;
                }
            }
            out.push_back(r);
        }
        roots = std::move(out);
    }

    template <typename... Args>
    void warn(fmt::format_string<Args...> f, Args&&... args) {
        warnings_.push_back(fmt::format(f, std::forward<Args>(args)...));
    }

    const MetricGraph& g_;
    const SearchOptions& opts_;
    std::vector<std::string> warnings_;
};

}  // namespace

EigenSearchResult find_eigenvalues(const MetricGraph& g, double lo, double hi, const SearchOptions& opts) {
    if (!(lo < hi)) throw InputError("eigenvalue search needs lo < hi");
    if (!(opts.grid_step > 0.0)) throw InputError("grid step must be positive");
    Search search(g, opts);
    const auto roots = search.run(coord_of(lo), coord_of(hi), opts.grid_step, 0);
    EigenSearchResult result;
    for (const auto& r : roots) {
        const double lambda = lambda_of(r.u);
        if (lambda >= lo && lambda <= hi) result.eigenvalues.push_back({lambda, r.multiplicity, std::nullopt});
    }
    result.warnings = search.take_warnings();
    return result;
}

}  // namespace qgraph
