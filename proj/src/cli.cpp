#include "qgraph/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <omp.h>

#include "qgraph/asymptotics.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/graph_io.hpp"
#include "qgraph/scan.hpp"
#include "qgraph/spectral.hpp"
#include "qgraph/trees.hpp"

namespace qgraph::cli {

namespace {

struct GlobalOptions {
    std::string graph;
    std::string output;  // empty: the command's default
    int threads = 0;
    double grid_step = 0.01;
};

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::string fraction(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : fmt::format("{}/{}", r.numerator(), r.denominator());
}

bool wants_csv(const GlobalOptions& g, bool csv_default) {
    if (g.output.empty()) return csv_default;
    return g.output == "csv";
}

SearchOptions search_options(const GlobalOptions& g) {
    SearchOptions s;
    s.grid_step = g.grid_step;
    return s;
}

Parity parse_parity(const std::string& name, const MetricGraph& g) {
    if (name == "even") return Parity::even;
    if (name == "all") return Parity::all;
    return auto_parity(g);
}

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "all"; }

int cmd_scan(const MetricGraph& g, const GlobalOptions& opts, double lmin, double lmax, double step,
             std::ostream& out) {
    if (!(lmin < lmax) || !(step > 0.0)) throw InputError("scan needs lmin < lmax and step > 0");
    const auto n = static_cast<std::size_t>(std::floor((lmax - lmin) / step * (1.0 + 1e-12)));
    std::vector<double> grid(n + 1);
    for (std::size_t i = 0; i <= n; ++i) grid[i] = lmin + static_cast<double>(i) * step;
    const auto pts = scan_parallel(g, grid);
    if (wants_csv(opts, true)) {
        out << "lambda,det,sigma_min\n";
        for (const auto& p : pts) fmt::print(out, "{},{},{}\n", num(p.lambda), num(p.det), num(p.sigma_min));
    } else {
        fmt::print(out, "{:>24} {:>24} {:>24}\n", "lambda", "det", "sigma_min");
        for (const auto& p : pts) fmt::print(out, "{:>24.17g} {:>24.17g} {:>24.17g}\n", p.lambda, p.det, p.sigma_min);
    }
    return kSuccess;
}

int cmd_eigs(const MetricGraph& g, const GlobalOptions& opts, double lmin, double lmax, std::ostream& out,
             std::ostream& err) {
    const auto found = find_eigenvalues(g, lmin, lmax, search_options(opts));
    for (const auto& w : found.warnings) err << "warning: " << w << "\n";
    if (wants_csv(opts, false)) {
        out << "lambda,multiplicity\n";
        for (const auto& e : found.eigenvalues) fmt::print(out, "{},{}\n", num(e.lambda), e.multiplicity);
    } else {
        fmt::print(out, "{:>24} {:>12}\n", "lambda", "multiplicity");
        for (const auto& e : found.eigenvalues) fmt::print(out, "{:>24.17g} {:>12}\n", e.lambda, e.multiplicity);
    }
    return kSuccess;
}

int cmd_clusters(const MetricGraph& g, const GlobalOptions& opts, const std::vector<int>& ks,
                 const std::string& parity_opt, double window, std::ostream& out, std::ostream& err) {
    const Parity parity = parse_parity(parity_opt, g);
    ClusterOptions copts;
    copts.window = window;
    copts.search = search_options(opts);
    const auto poly = cluster_polynomial(g);
    const bool csv = wants_csv(opts, false);
    if (csv) out << "k,base,shift,multiplicity\n";
    for (int k : ks) {
        const auto rep = extract_cluster(g, poly, k, parity, copts);
        for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
        if (csv) {
            for (const auto& s : rep.shifts) fmt::print(out, "{},{},{},{}\n", k, num(rep.base), num(s.shift), s.multiplicity);
            continue;
        }
        fmt::print(out, "k={} parity={} base={:.12g} total_multiplicity={} expected={}\n", k, parity_name(parity),
                   rep.base, rep.total_multiplicity, g.cycle_rank() + 1);
        for (const auto& s : rep.shifts) fmt::print(out, "  shift {:>22.15g}  multiplicity {}\n", s.shift, s.multiplicity);
        for (const auto& m : rep.matches)
            fmt::print(out, "  match shift {:>22.15g} -> root {:>22.15g}  distance {:.3e}\n", m.shift, m.root, m.distance);
        for (double r : rep.unmatched_roots) fmt::print(out, "  unmatched root {:.15g}\n", r);
        for (double s : rep.unmatched_shifts) fmt::print(out, "  unmatched shift {:.15g}\n", s);
    }
    return kSuccess;
}

void print_poly(std::ostream& out, const char* name, const Polynomial& p) {
    fmt::print(out, "{}:", name);
    for (double c : p) fmt::print(out, " {}", num(c));
    out << "\n";
}

int cmd_poly(const MetricGraph& g, const GlobalOptions& opts, std::ostream& out) {
    const auto poly = cluster_polynomial(g);
    const double mean = mean_value_root(g);
    if (wants_csv(opts, false)) {
        out << "section,index,value,imag,multiplicity\n";
        for (std::size_t i = 0; i < poly.tree_factor.size(); ++i) fmt::print(out, "T,{},{},0,\n", i, num(poly.tree_factor[i]));
        for (std::size_t i = 0; i < poly.coefficients.size(); ++i) fmt::print(out, "p,{},{},0,\n", i, num(poly.coefficients[i]));
        for (std::size_t i = 0; i < poly.roots.size(); ++i) {
            const auto& r = poly.roots[i];
            fmt::print(out, "root,{},{},{},{}\n", i, num(r.value.real()), num(r.value.imag()), r.multiplicity);
        }
        fmt::print(out, "mean_root,0,{},0,\n", num(mean));
        return kSuccess;
    }
    fmt::print(out, "spanning trees: {}\nQ = {}\n|E| = {}\n", poly.tree_count, num(poly.total_potential), poly.edge_count);
    out << "coefficients in ascending powers of d\n";
    print_poly(out, "T(d)", poly.tree_factor);
    print_poly(out, "p(d)", poly.coefficients);
    out << "roots:\n";
    for (const auto& r : poly.roots) {
        if (r.value.imag() == 0.0) fmt::print(out, "  {}  multiplicity {}\n", num(r.value.real()), r.multiplicity);
        else fmt::print(out, "  {} {:+.17g}i  multiplicity {}\n", num(r.value.real()), r.value.imag(), r.multiplicity);
    }
    fmt::print(out, "mean-value root Q/|E| = {}\n", num(mean));
    return kSuccess;
}

int cmd_resistance(const MetricGraph& g, const GlobalOptions& opts, std::ostream& out) {
    const bool csv = wants_csv(opts, false);
    if (csv) out << "edge,resistance\n";
    else fmt::print(out, "{:<16} {}\n", "edge", "resistance");
    for (int j = 0; j < g.edge_count(); ++j) {
        const auto r = effective_resistance(g, j);
        if (csv) fmt::print(out, "{},{}\n", g.edge(j).id, fraction(r));
        else fmt::print(out, "{:<16} {}{}\n", g.edge(j).id, fraction(r), g.edge(j).is_loop() ? "  (loop)" : "");
    }
    const auto pre = equal_resistance_precondition(g);
    if (csv) return kSuccess;
    if (pre.holds) {
        fmt::print(out, "equal resistance: holds{}\n", pre.r ? " (r = " + fraction(*pre.r) + ")" : " (no non-loop edges)");
    } else {
        fmt::print(out, "equal resistance: fails{}\n", pre.r ? " (r = " + fraction(*pre.r) + " is not < 1)" : " (resistances differ)");
    }
    return kSuccess;
}

int cmd_check(const MetricGraph& g, const GlobalOptions& opts, const std::vector<int>& ks, double tol_zero,
              double tol_shift, bool weakened, const std::string& parity_opt, double window, std::ostream& out) {
    CheckOptions copts;
    copts.tol_zero = tol_zero;
    copts.tol_shift = tol_shift;
    copts.parity = parity_opt == "auto" ? auto_parity(g) : parse_parity(parity_opt, g);
    copts.cluster.window = window;
    copts.cluster.search = search_options(opts);
    const auto v = weakened ? weakened_check(g, ks, copts) : ambarzumian_check(g, ks, copts);
    fmt::print(out, "required multiplicity per cluster: {}\n", v.required_multiplicity);
    if (v.smallest_eigenvalue)
        fmt::print(out, "(i) smallest eigenvalue {:.12g}: {}\n", *v.smallest_eigenvalue, v.zero_is_smallest ? "holds" : "violated");
    else
        fmt::print(out, "(i) no eigenvalue found near 0: violated\n");
    for (const auto& h : v.clusters) {
        fmt::print(out, "(ii) k={}: {} of {} near zero (total {}), farthest shift {:.10g}: {}\n", h.k, h.near_zero,
                   h.required, h.total_multiplicity, h.worst_shift, h.holds ? "holds" : "violated");
    }
    if (v.consistent) {
        out << "verdict: consistent with q = 0\n";
        return kSuccess;
    }
    fmt::print(out, "verdict: hypotheses violated ({})\n", v.witness);
    return kHypothesisViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra of Schrodinger operators on equilateral metric graphs"};
    app.require_subcommand(1);
    GlobalOptions opts;
    app.add_option("--graph", opts.graph, "Graph file (JSON)")->required();
    app.add_option("--output", opts.output, "Output format")->check(CLI::IsMember({"csv", "table"}));
    app.add_option("--threads", opts.threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
    app.add_option("--grid-step", opts.grid_step, "Search grid step in sqrt(lambda)")->check(CLI::PositiveNumber);

    double lmin = 0.0, lmax = 0.0, step = 0.01;
    auto* scan_cmd = app.add_subcommand("scan", "Tabulate det M and sigma_min on a lambda grid");
    scan_cmd->add_option("--lmin", lmin)->required();
    scan_cmd->add_option("--lmax", lmax)->required();
    scan_cmd->add_option("--step", step);

    double elmin = 0.0, elmax = 0.0;
    auto* eigs_cmd = app.add_subcommand("eigs", "Eigenvalues with multiplicities in [lmin, lmax]");
    eigs_cmd->add_option("--lmin", elmin)->required();
    eigs_cmd->add_option("--lmax", elmax)->required();

    std::vector<int> ks{1, 2, 3};
    std::string parity = "auto";
    double window = 20.0;
    auto* clusters_cmd = app.add_subcommand("clusters", "Eigenvalue clusters near (2k pi)^2 or (k pi)^2");
    clusters_cmd->add_option("--k", ks)->delimiter(',')->check(CLI::PositiveNumber);
    clusters_cmd->add_option("--parity", parity)->check(CLI::IsMember({"auto", "even", "all"}));
    clusters_cmd->add_option("--window", window)->check(CLI::PositiveNumber);

    auto* poly_cmd = app.add_subcommand("poly", "Cluster polynomial p(d) and its roots");
    auto* res_cmd = app.add_subcommand("resistance", "Effective resistances as exact fractions");

    std::vector<int> check_ks{4, 8};
    double tol_zero = 1e-6, tol_shift = 5e-2;
    bool weakened = false;
    std::string check_parity = "even";
    double check_window = 20.0;
    auto* check_cmd = app.add_subcommand("check", "Check the hypotheses of the zero-potential criterion");
    check_cmd->add_option("--k", check_ks)->delimiter(',')->check(CLI::PositiveNumber);
    check_cmd->add_option("--tol-zero", tol_zero)->check(CLI::PositiveNumber);
    check_cmd->add_option("--tol-shift", tol_shift)->check(CLI::PositiveNumber);
    check_cmd->add_flag("--weakened", weakened, "Require |E|-|V|+1 (equal-resistance graphs)");
    check_cmd->add_option("--parity", check_parity)->check(CLI::IsMember({"auto", "even", "all"}));
    check_cmd->add_option("--window", check_window)->check(CLI::PositiveNumber);

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (opts.threads > 0) omp_set_num_threads(opts.threads);
        const auto g = build_graph(load_graph_file(opts.graph));
        if (*scan_cmd) return cmd_scan(g, opts, lmin, lmax, step, out);
        if (*eigs_cmd) return cmd_eigs(g, opts, elmin, elmax, out, err);
        if (*clusters_cmd) return cmd_clusters(g, opts, ks, parity, window, out, err);
        if (*poly_cmd) return cmd_poly(g, opts, out);
        if (*res_cmd) return cmd_resistance(g, opts, out);
        if (*check_cmd)
            return cmd_check(g, opts, check_ks, tol_zero, tol_shift, weakened, check_parity, check_window, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const PreconditionNotMet& e) {
        err << "precondition not met: " << e.what() << "\n";
        return kPreconditionNotMet;
    } catch (const Error& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumericalError;
    }
    return kUsageError;
}

}  // namespace qgraph::cli
