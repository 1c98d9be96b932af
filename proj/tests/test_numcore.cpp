#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "openph/numcore/grid.hpp"
#include "openph/numcore/ode.hpp"
#include "openph/numcore/quadrature.hpp"
#include "openph/numcore/rng.hpp"
#include "openph/numcore/series.hpp"
#include "openph/numcore/tridiag.hpp"

using namespace openph::numcore;

namespace {
constexpr double kPi = std::numbers::pi;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Residual ||T v - lambda v|| accumulated in long double.
double residual(const TridiagonalSymmetric& T, const EigenPair& p) {
    const auto& d = T.diag;
    const auto& e = T.offdiag;
    const auto& v = p.vector;
    long double sum = 0.0L;
    for (std::size_t i = 0; i < d.size(); ++i) {
        long double r = (static_cast<long double>(d[i]) - p.value) * v[i];
        if (i > 0) r += static_cast<long double>(e[i - 1]) * v[i - 1];
        if (i + 1 < d.size()) r += static_cast<long double>(e[i]) * v[i + 1];
        sum += r * r;
    }
    return static_cast<double>(std::sqrt(sum));
}
}  // namespace

TEST_CASE("Grid1D endpoints and spacing") {
    const Grid1D g(0.0, 1.0, 11);
    CHECK(g.point(0) == 0.0);
    CHECK(g.point(10) == 1.0);
    CHECK(g.dx() == doctest::Approx(0.1).epsilon(1e-15));
    for (int i = 0; i < 11; ++i)
        CHECK(g.point(i) == doctest::Approx(0.0 + i * g.dx()).epsilon(1e-14));

    const Grid1D shifted(-2.5, 3.5, 7);
    CHECK(shifted.point(0) == -2.5);
    CHECK(shifted.point(6) == 3.5);

    CHECK_THROWS_AS(Grid1D(1.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(2.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(0.0, std::numeric_limits<double>::infinity(), 5),
                    std::invalid_argument);
}

TEST_CASE("TimeSeries invariants") {
    TimeSeries ts({"t", "x"});
    ts.append({0.0, 1.0});
    ts.append({1.0, 2.0});
    CHECK(ts.rows() == 2);
    CHECK(ts.cols() == 2);
    CHECK(ts.column(1) == std::vector<double>{1.0, 2.0});
    CHECK(ts.column_index("x") == 1);
    CHECK_THROWS_AS(ts.column_index("missing"), std::invalid_argument);

    CHECK_THROWS_AS(ts.append({0.5, 1.0}), std::invalid_argument);       // t not increasing
    CHECK_THROWS_AS(ts.append({2.0}), std::invalid_argument);            // arity
    CHECK_THROWS_AS(ts.append({2.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(TimeSeries({}), std::invalid_argument);
}

TEST_CASE("trapezoid basics and exactness") {
    const std::array constant{1.0, 1.0, 1.0};
    CHECK(trapezoid(constant, 0.5) == 1.0);

    const std::array linear{0.0, 1.0, 2.0};
    CHECK(trapezoid(linear, 1.0) == 2.0);

    std::vector<double> s(1001);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::sin(kPi * i / 1000.0);
    CHECK(trapezoid(s, kPi / 1000.0) == doctest::Approx(2.0).epsilon(1e-5));

    // Linearity in the sampled values.
    std::vector<double> f{1.0, 4.0, 2.0, 5.0};
    std::vector<double> g{0.5, -1.0, 3.0, 2.5};
    std::vector<double> combo(4);
    for (int i = 0; i < 4; ++i) combo[i] = 2.0 * f[i] + 3.0 * g[i];
    CHECK(trapezoid(combo, 0.25) ==
          doctest::Approx(2.0 * trapezoid(f, 0.25) + 3.0 * trapezoid(g, 0.25)).epsilon(1e-14));

    CHECK_THROWS_AS(trapezoid(std::array{1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(trapezoid(constant, 0.0), std::invalid_argument);
}

TEST_CASE("rk4_step on reference fields") {
    const VectorField zero = [](double, std::span<const double>, std::span<double> dydt) {
        for (auto& v : dydt) v = 0.0;
    };
    const auto unchanged = rk4_step(zero, 0.0, std::array{1.0, 2.0}, 0.1);
    CHECK(unchanged == std::vector<double>{1.0, 2.0});

    // y' = y over one unit step is the degree-4 Taylor polynomial of e.
    const VectorField growth = [](double, std::span<const double> y, std::span<double> dydt) {
        dydt[0] = y[0];
    };
    const auto taylor = rk4_step(growth, 0.0, std::array{1.0}, 1.0);
    CHECK(taylor[0] == doctest::Approx(65.0 / 24.0).epsilon(1e-15));

    CHECK_THROWS_AS(rk4_step(growth, 0.0, std::array{1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("rk4 tracks the harmonic oscillator") {
    const VectorField sho = [](double, std::span<const double> y, std::span<double> dydt) {
        dydt[0] = y[1];
        dydt[1] = -y[0];
    };
    std::vector<double> y{1.0, 0.0};
    double t = 0.0;
    for (int i = 0; i < 628; ++i) {
        y = rk4_step(sho, t, y, 0.01);
        t += 0.01;
    }
    CHECK(y[0] == doctest::Approx(std::cos(6.28)).epsilon(1e-6));
}

TEST_CASE("integrate_fixed layout and accuracy") {
    const VectorField zero = [](double, std::span<const double>, std::span<double> dydt) {
        dydt[0] = 0.0;
    };
    const auto flat = integrate_fixed(zero, 0.0, std::array{5.0}, 1.0, 3);
    REQUIRE(flat.rows() == 4);
    CHECK(flat.labels() == std::vector<std::string>{"t", "y0"});
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(flat.at(i, 0) == static_cast<double>(i));
        CHECK(flat.at(i, 1) == 5.0);
    }

    const VectorField relax = [](double, std::span<const double> y, std::span<double> dydt) {
        dydt[0] = -y[0];
    };
    const auto decay = integrate_fixed(relax, 0.0, std::array{1.0}, 0.001, 1000, {"n"});
    CHECK(decay.labels()[1] == "n");
    CHECK(decay.at(1000, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));

    CHECK_THROWS_AS(integrate_fixed(relax, 0.0, std::array{1.0}, 0.001, 0),
                    std::invalid_argument);
}

TEST_CASE("divergence is reported with the failing time") {
    const VectorField blowup = [](double t, std::span<const double> y, std::span<double> dydt) {
        dydt[0] = t > 0.5 ? std::numeric_limits<double>::infinity() : y[0];
    };
    CHECK_THROWS_AS(integrate_fixed(blowup, 0.0, std::array{1.0}, 0.25, 8), IntegrationDiverged);
    try {
        integrate_fixed(blowup, 0.0, std::array{1.0}, 0.25, 8);
    } catch (const IntegrationDiverged& e) {
        CHECK(e.t() >= 0.5);
        CHECK(std::string(e.what()).find("diverged") != std::string::npos);
    }
}

TEST_CASE("rk4 order: halving dt divides the error by about 16") {
    const VectorField relax = [](double, std::span<const double> y, std::span<double> dydt) {
        dydt[0] = -y[0];
    };
    const auto run = [&](double dt, long steps) {
        const auto ts = integrate_fixed(relax, 0.0, std::array{1.0}, dt, steps);
        return std::abs(ts.at(ts.rows() - 1, 1) - std::exp(-1.0));
    };
    const double ratio = run(0.1, 10) / run(0.05, 20);
    CHECK(ratio >= 14.0);
    CHECK(ratio <= 18.0);
}

TEST_CASE("fixed_step_count handles near-integer quotients") {
    CHECK(fixed_step_count(1.0, 0.1) == 10);
    CHECK(fixed_step_count(0.3, 0.1) == 3);  // 0.3/0.1 sits just below 3
    CHECK(fixed_step_count(6000.0, 10.0) == 600);
    CHECK(fixed_step_count(1.0, 0.3) == 3);
    CHECK_THROWS_AS(fixed_step_count(0.05, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(fixed_step_count(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("RngStream golden sequences") {
    // SplitMix64 reference vector for seed 0.
    RngStream zero(0);
    CHECK(zero.next_u64() == 0xe220a8397b1dcdafull);
    CHECK(zero.next_u64() == 0x6e789e6aa1b965f4ull);
    CHECK(zero.next_u64() == 0x06c45d188009454full);
    CHECK(zero.next_u64() == 0xf88bb8a8724c81ecull);
    CHECK(zero.next_u64() == 0x1b39896a51a8749bull);

    RngStream pinned(42);
    CHECK(pinned.next_u64() == 0xbdd732262feb6e95ull);
    CHECK(pinned.next_u64() == 0x28efe333b266f103ull);

    RngStream a(1234567), b(1234567);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("rng_uniform range and mean") {
    RngStream s(7);
    double sum = 0.0;
    for (int i = 0; i < 1000000; ++i) {
        const double u = rng_uniform(s);
        if (!(u >= 0.0 && u < 1.0)) {
            CHECK(u >= 0.0);
            CHECK(u < 1.0);
        }
        sum += u;
    }
    CHECK(sum / 1e6 == doctest::Approx(0.5).epsilon(0.004));  // 0.002 absolute
}

TEST_CASE("eigs_tridiag 2x2 by hand") {
    const TridiagonalSymmetric T{{2.0, 2.0}, {-1.0}};
    const auto pairs = eigs_tridiag(T, 2);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pairs[1].value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::abs(dot(pairs[0].vector, pairs[1].vector)) < 1e-12);
    CHECK(dot(pairs[0].vector, pairs[0].vector) == doctest::Approx(1.0).epsilon(1e-14));
    // Sign rule: leading significant component positive.
    CHECK(pairs[0].vector[0] > 0.0);
    CHECK(pairs[1].vector[0] > 0.0);
}

TEST_CASE("eigs_tridiag fully degenerate diagonal") {
    const TridiagonalSymmetric T{{2.0, 2.0, 2.0}, {0.0, 0.0}};
    const auto pairs = eigs_tridiag(T, 3);
    REQUIRE(pairs.size() == 3);
    for (const auto& p : pairs) {
        CHECK(p.value == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(residual(T, p) < 1e-10);
    }
    // No basis is promised inside the cluster, only an orthonormal span.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double g = dot(pairs[i].vector, pairs[j].vector);
            CHECK(g == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
        }
}

TEST_CASE("eigs_tridiag matches the discrete Laplacian spectrum") {
    const int n = 50;
    TridiagonalSymmetric T;
    T.diag.assign(n, 2.0);
    T.offdiag.assign(n - 1, -1.0);
    const auto pairs = eigs_tridiag(T, n);
    REQUIRE(pairs.size() == static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const double exact = 2.0 - 2.0 * std::cos(j * kPi / (n + 1));
        CHECK(pairs[j - 1].value == doctest::Approx(exact).epsilon(1e-10));
        CHECK(residual(T, pairs[j - 1]) <= 1e-8 * std::max(1.0, std::abs(pairs[j - 1].value)));
    }
    for (int i = 0; i + 1 < n; ++i) CHECK(pairs[i].value <= pairs[i + 1].value);
    // Well separated eigenvalues: pairwise orthogonality.
    for (int i = 0; i < n; i += 7)
        for (int j = i + 1; j < n; j += 7)
            CHECK(std::abs(dot(pairs[i].vector, pairs[j].vector)) < 1e-8);
}

TEST_CASE("eigenvalue_count_below agrees with the Laplacian spectrum") {
    const int n = 30;
    TridiagonalSymmetric T;
    T.diag.assign(n, 2.0);
    T.offdiag.assign(n - 1, -1.0);
    for (double x : {0.0, 0.5, 1.0, 2.0, 3.7, 4.5}) {
        int exact = 0;
        for (int j = 1; j <= n; ++j)
            if (2.0 - 2.0 * std::cos(j * kPi / (n + 1)) < x) ++exact;
        CHECK(eigenvalue_count_below(T, x) == exact);
    }
}

TEST_CASE("eigs_tridiag parallel path is bit-identical to serial") {
    const int n = 201;
    TridiagonalSymmetric T;
    RngStream rng(99);
    for (int i = 0; i < n; ++i) T.diag.push_back(4.0 * rng.uniform() - 2.0);
    for (int i = 0; i + 1 < n; ++i) T.offdiag.push_back(2.0 * rng.uniform() - 1.0);

    const auto par = eigs_tridiag(T, 20);
    const auto ser = eigs_tridiag_serial(T, 20);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].value == ser[i].value);
        CHECK(par[i].vector == ser[i].vector);
    }
}

TEST_CASE("eigs_tridiag argument checks") {
    const TridiagonalSymmetric T{{1.0, 2.0}, {0.5}};
    CHECK_THROWS_AS(eigs_tridiag(T, 0), std::invalid_argument);
    CHECK_THROWS_AS(eigs_tridiag(T, 3), std::invalid_argument);
    const TridiagonalSymmetric bad{{1.0, 2.0}, {0.5, 0.5}};
    CHECK_THROWS_AS(eigs_tridiag(bad, 1), std::invalid_argument);
}
