#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "qgraph/edge_solver.hpp"
#include "qgraph/errors.hpp"
#include "test_graphs.hpp"

using namespace qgraph;
using std::numbers::pi;

namespace {

// Independent oracle: classical RK4 on y'' = (q - lambda) y, stepping each
// segment separately so the integrand is smooth inside a step.
EdgeSolutionValues rk4_oracle(const PiecewisePotential& q, double lambda, int steps_per_segment = 4000) {
    std::array<double, 4> y{1.0, 0.0, 0.0, 1.0};  // c, c', s, s'
    const auto bp = q.breakpoints();
    const auto vals = q.values();
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double h = (bp[i + 1] - bp[i]) / steps_per_segment;
        const double k2 = vals[i] - lambda;
        auto f = [k2](const std::array<double, 4>& v) {
            return std::array<double, 4>{v[1], k2 * v[0], v[3], k2 * v[2]};
        };
        for (int n = 0; n < steps_per_segment; ++n) {
            auto a = f(y);
            std::array<double, 4> t{};
            for (int c = 0; c < 4; ++c) t[c] = y[c] + 0.5 * h * a[c];
            auto b = f(t);
            for (int c = 0; c < 4; ++c) t[c] = y[c] + 0.5 * h * b[c];
            auto cc = f(t);
            for (int c = 0; c < 4; ++c) t[c] = y[c] + h * cc[c];
            auto d = f(t);
            for (int c = 0; c < 4; ++c) y[c] += h / 6.0 * (a[c] + 2 * b[c] + 2 * cc[c] + d[c]);
        }
    }
    return {y[0], y[1], y[2], y[3], lambda};
}

}  // namespace

TEST_CASE("free edge at lambda = pi^2") {
    const auto v = fundamental_values(PiecewisePotential::zero(), pi * pi);
    CHECK(v.c == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(v.dc) < 1e-14);
    CHECK(std::abs(v.s) < 1e-14);
    CHECK(v.ds == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("hyperbolic regime at lambda = -1") {
    const auto v = fundamental_values(PiecewisePotential::zero(), -1.0);
    CHECK(v.c == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(v.dc == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(v.s == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(v.ds == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(std::abs(v.wronskian() - 1.0) < 1e-15);
}

TEST_CASE("constant shift of the potential equals a shift of lambda, bit for bit") {
    PiecewisePotential q({0.0, 0.25, 0.75, 1.0}, {1.5, -0.5, 4.0});
    for (double lambda : {-3.0, 0.0, 10.0, 250.0}) {
        const auto a = fundamental_values(q.shifted(2.0), lambda);
        const auto b = fundamental_values(q, lambda - 2.0);
        CHECK(a.c == b.c);
        CHECK(a.dc == b.dc);
        CHECK(a.s == b.s);
        CHECK(a.ds == b.ds);
    }
}

TEST_CASE("values at interior points") {
    const auto q0 = PiecewisePotential::zero();
    const auto at0 = fundamental_values_at(q0, 17.0, 0.0);
    CHECK(at0.c == 1.0);
    CHECK(at0.dc == 0.0);
    CHECK(at0.s == 0.0);
    CHECK(at0.ds == 1.0);

    const auto half = fundamental_values_at(q0, pi * pi, 0.5);
    CHECK(std::abs(half.c) < 1e-15);
    CHECK(half.dc == doctest::Approx(-pi).epsilon(1e-15));
    CHECK(half.s == doctest::Approx(1.0 / pi).epsilon(1e-15));
    CHECK(std::abs(half.ds) < 1e-15);

    PiecewisePotential q({0.0, 0.3, 1.0}, {2.0, -1.0});
    const auto end = fundamental_values_at(q, 5.0, 1.0);
    const auto full = fundamental_values(q, 5.0);
    CHECK(end.c == full.c);
    CHECK(end.s == full.s);

    CHECK_THROWS_AS(fundamental_values_at(q, 1.0, 1.5), XOutOfRange);
    CHECK_THROWS_AS(fundamental_values_at(q, 1.0, -0.1), XOutOfRange);
    CHECK_THROWS_AS(fundamental_values(q, NAN), NonFiniteInput);
}

TEST_CASE("transfer matrices agree with an RK4 oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const auto q = testing::random_potential(rng, 5, 10.0);
        for (double lambda : {-20.0, 0.5, 30.0, 150.0}) {
            const auto got = fundamental_values(q, lambda);
            const auto want = rk4_oracle(q, lambda);
            const double scale = std::max({1.0, std::abs(want.c), std::abs(want.dc), std::abs(want.ds)});
            CHECK(std::abs(got.c - want.c) < 1e-8 * scale);
            CHECK(std::abs(got.dc - want.dc) < 1e-8 * scale);
            CHECK(std::abs(got.s - want.s) < 1e-8 * scale);
            CHECK(std::abs(got.ds - want.ds) < 1e-8 * scale);
        }
    }
}

TEST_CASE("Wronskian is identically one") {
    std::mt19937_64 rng(2024);
    int cases = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto q = testing::random_potential(rng, 8, 10.0);
        for (double lambda : {-25.0, -1.0, 0.0, 0.3, pi * pi, 400.0}) {
            CHECK(std::abs(fundamental_values(q, lambda).wronskian() - 1.0) < 1e-10);
            ++cases;
        }
        // On a segment value: mu = 0 on that segment.
        CHECK(std::abs(fundamental_values(q, q.values()[0]).wronskian() - 1.0) < 1e-10);
    }
    CHECK(cases == 600);
}

TEST_CASE("continuous across the trigonometric/hyperbolic switch") {
    PiecewisePotential q({0.0, 0.4, 1.0}, {3.0, -2.0});
    for (double v : {3.0, -2.0}) {
        const auto lo = fundamental_values(q, v - 1e-8);
        const auto at = fundamental_values(q, v);
        const auto hi = fundamental_values(q, v + 1e-8);
        CHECK(std::abs(lo.c - hi.c) < 1e-6);
        CHECK(std::abs(lo.dc - hi.dc) < 1e-6);
        CHECK(std::abs(lo.s - hi.s) < 1e-6);
        CHECK(std::abs(lo.ds - hi.ds) < 1e-6);
        CHECK(std::abs(at.c - hi.c) < 1e-6);
    }
}

TEST_CASE("asymptotic predictions") {
    SUBCASE("zero potential, zero shift") {
        for (int k : {1, 2, 5}) {
            const auto p = asymptotic_values(0.0, k, 0.0);
            const double sign = k % 2 == 0 ? 1.0 : -1.0;
            CHECK(p.c == sign);
            CHECK(p.ds == sign);
            CHECK(p.dc == 0.0);
            CHECK(p.s == 0.0);
        }
    }
    SUBCASE("shift equal to the mean cancels") {
        const auto p = asymptotic_values(2.0, 4, 2.0);
        CHECK(p.dc == 0.0);
        CHECK(p.s == 0.0);
    }
    SUBCASE("c'/sqrt(lambda) for q = 1 at k = 10") {
        const auto p = asymptotic_values(1.0, 10, 0.0);
        const double root = std::sqrt(p.lambda);
        CHECK(p.dc / root == doctest::Approx(1.0 / (2.0 * 10.0 * pi)).epsilon(1e-14));
        const auto actual = fundamental_values(PiecewisePotential::constant(1.0), p.lambda);
        // The difference is o(1/sqrt(lambda)).
        CHECK(std::abs(actual.dc / root - p.dc / root) * root < 1e-2);
    }
}

TEST_CASE("asymptotic deviations decay along lambda = (2k pi)^2 + d") {
    const auto q = sample_potential([](double x) { return 1.0 + 0.5 * std::cos(2.0 * pi * x) + x; }, 2048);
    const double d = 0.7;
    std::array<double, 4> prev{INFINITY, INFINITY, INFINITY, INFINITY};
    std::array<double, 4> dev{};
    for (int k : {4, 8, 16, 32}) {
        const auto pred = asymptotic_values(q.mean(), 2 * k, d);
        const auto got = fundamental_values(q, pred.lambda);
        const double root = std::sqrt(pred.lambda);
        dev = {root * std::abs(got.dc / root - pred.dc / root), root * std::abs(got.ds - pred.ds),
               root * std::abs(got.c - pred.c), root * std::abs(root * got.s - root * pred.s)};
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(dev[i] < prev[i]);
            prev[i] = dev[i];
        }
    }
    for (double x : dev) CHECK(x < 1e-2);
}
