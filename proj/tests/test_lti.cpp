#include "doctest.h"

#include <cmath>
#include <numbers>

#include "orthocomp/lti.hpp"
#include "orthocomp/random.hpp"

using namespace orthocomp;

namespace {

const Complex kI{0.0, 1.0};

/// Test oracle: exp(-i H t / hbar) by Taylor series with scaling and squaring.
Matrix2 expm_series(const TwoLevelHamiltonian &h, double t, double hbar = 1.0) {
    int squarings = 0;
    double scale = std::abs(t) * h.norm() / hbar;
    while (scale > 0.25) {
        scale /= 2;
        ++squarings;
    }
    const double tau = t / std::ldexp(1.0, squarings);
    Matrix2 a{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            a[i][j] = -kI * h(i, j) * tau / hbar;
    Matrix2 sum{{{1.0, 0.0}, {0.0, 1.0}}};
    Matrix2 term = sum;
    for (int k = 1; k < 40; ++k) {
        Matrix2 next{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                next[i][j] = (term[i][0] * a[0][j] + term[i][1] * a[1][j]) / double(k);
        term = next;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                sum[i][j] += term[i][j];
    }
    for (int s = 0; s < squarings; ++s) {
        Matrix2 sq{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                sq[i][j] = sum[i][0] * sum[0][j] + sum[i][1] * sum[1][j];
        sum = sq;
    }
    return sum;
}

double max_entry_diff(const Matrix2 &a, const Matrix2 &b) {
    double w = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            w = std::max(w, std::abs(a[i][j] - b[i][j]));
    return w;
}

const auto sigma_x = TwoLevelHamiltonian::make(0.0, 1.0, 1.0, 0.0);

} // namespace

TEST_CASE("hamiltonian validation") {
    CHECK_THROWS_AS(TwoLevelHamiltonian::make(0.0, 1.0, 2.0, 0.0), NonHermitianError);
    CHECK_THROWS_AS(TwoLevelHamiltonian::make(Complex(0, 1), 0.0, 0.0, 0.0),
                    NonHermitianError);
    CHECK_NOTHROW(TwoLevelHamiltonian::make(1.0, Complex(0, 2), Complex(0, -2), -1.0));
    CHECK(sigma_x.norm() == doctest::Approx(1.0));
    CHECK(TwoLevelHamiltonian::make(2.0, 0.0, 0.0, -3.0).norm() == doctest::Approx(3.0));
    CHECK_THROWS_AS(TwoLevelState::make(1.0, 1.0), NormalizationError);
}

TEST_CASE("propagator_closed_form") {
    SUBCASE("t = 0 gives the identity") {
        const auto u = propagator_closed_form(sigma_x, 0.0);
        CHECK(max_entry_diff(u.matrix, {{{1.0, 0.0}, {0.0, 1.0}}}) == 0.0);
    }
    SUBCASE("sigma_x for t = pi gives -I, matching the series oracle") {
        const auto u = propagator_closed_form(sigma_x, std::numbers::pi);
        const Matrix2 minus_identity{{{-1.0, 0.0}, {0.0, -1.0}}};
        CHECK(max_entry_diff(u.matrix, minus_identity) <= 1e-12);
        CHECK(max_entry_diff(expm_series(sigma_x, std::numbers::pi), minus_identity) <= 1e-12);
    }
    SUBCASE("semigroup U(t1) U(t2) = U(t1 + t2)") {
        Rng rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            const auto h = random_hamiltonian(rng, 0.0, 5.0);
            std::uniform_real_distribution<double> t(-5.0, 5.0);
            const double t1 = t(rng), t2 = t(rng);
            const auto composed = propagator_closed_form(h, t1).then(propagator_closed_form(h, t2));
            CHECK(max_entry_diff(composed.matrix, propagator_closed_form(h, t1 + t2).matrix) <= 1e-12);
            CHECK(composed.elapsed == doctest::Approx(t1 + t2));
        }
    }
    SUBCASE("agrees with the series oracle and is unitary") {
        Rng rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            const auto h = random_hamiltonian(rng, 0.0, 5.0);
            const double t = std::uniform_real_distribution<double>(-10.0, 10.0)(rng);
            const double hbar = trial % 2 ? 1.0 : 0.5;
            const auto u = propagator_closed_form(h, t, hbar);
            CHECK(unitarity_defect(u.matrix) <= 1e-12);
            CHECK(max_entry_diff(u.matrix, expm_series(h, t, hbar)) <= 1e-10);
        }
    }
    SUBCASE("degenerate spectrum is a global phase") {
        const auto h = TwoLevelHamiltonian::make(2.0, 0.0, 0.0, 2.0);
        const auto u = propagator_closed_form(h, 0.7);
        CHECK(std::abs(u.matrix[0][0] - std::polar(1.0, -1.4)) <= 1e-15);
        CHECK(std::abs(u.matrix[0][1]) == 0.0);
    }
}

TEST_CASE("evolve_rk4") {
    SUBCASE("sigma_x Rabi flop to t = pi/2") {
        const std::size_t steps = 1571;
        const TimeGrid grid{0.0, (std::numbers::pi / 2) / steps, steps};
        const auto traj = evolve_rk4(sigma_x, TwoLevelState::make(1.0, 0.0), grid);
        REQUIRE(traj.points.size() == steps + 1);
        const auto &end = traj.points.back();
        // Exact: (cos t, -i sin t) = (0, -i).
        CHECK(std::abs(end.c[0]) <= 1e-6);
        CHECK(std::abs(end.c[1] - Complex(0.0, -1.0)) <= 1e-6);
        for (const auto &p : traj.points) {
            const Complex e1 = std::cos(p.t), e2 = -kI * std::sin(p.t);
            CHECK(std::abs(p.c[0] - e1) + std::abs(p.c[1] - e2) <= 1e-6);
        }
    }
    SUBCASE("zero generator keeps the state fixed") {
        const auto s0 = TwoLevelState::make(0.6, Complex(0.0, 0.8));
        const auto traj = evolve_rk4(TwoLevelHamiltonian::zero(), s0, {0.0, 0.1, 20});
        for (const auto &p : traj.points) {
            CHECK(p.c[0] == s0.c1());
            CHECK(p.c[1] == s0.c2());
        }
        CHECK(traj.max_norm_drift() <= 1e-15);
    }
    SUBCASE("diag(E, E) only rotates the global phase") {
        const double e = 1.3;
        const auto s0 = TwoLevelState::make(0.6, 0.8);
        const auto traj = evolve_rk4(TwoLevelHamiltonian::make(e, 0.0, 0.0, e), s0,
                                     {0.0, 1e-3, 2000});
        for (const auto &p : traj.points) {
            const Complex phase = std::polar(1.0, -e * p.t);
            CHECK(std::abs(p.c[0] - phase * 0.6) <= 1e-9);
            CHECK(std::abs(p.c[1] - phase * 0.8) <= 1e-9);
            CHECK(std::abs(std::norm(p.c[0]) - 0.36) <= 1e-9);
        }
    }
    SUBCASE("step guard and grid validation") {
        CHECK_THROWS_AS(evolve_rk4(sigma_x, TwoLevelState::make(1.0, 0.0), {0.0, 0.6, 10}),
                        StepError);
        CHECK_THROWS_AS(evolve_rk4(sigma_x, TwoLevelState::make(1.0, 0.0), {0.0, -0.1, 10}),
                        RangeError);
        CHECK_THROWS_AS(evolve_rk4(sigma_x, TwoLevelState::make(1.0, 0.0), {0.0, 0.1, 0}),
                        RangeError);
        // hbar rescales the guard.
        CHECK_NOTHROW(evolve_rk4(sigma_x, TwoLevelState::make(1.0, 0.0), {0.0, 0.6, 10}, 2.0));
    }
    SUBCASE("fourth-order convergence") {
        const auto s0 = TwoLevelState::make(0.6, Complex(0.0, 0.8));
        const auto h = TwoLevelHamiltonian::make(0.5, Complex(1.0, -0.4), Complex(1.0, 0.4), -1.0);
        const double t = 4.0;
        const auto exact = propagator_closed_form(h, t).apply(s0.amplitudes());
        double errs[3];
        for (int level = 0; level < 3; ++level) {
            const std::size_t steps = std::size_t{40} << level;
            const auto end = evolve_rk4(h, s0, {0.0, t / steps, steps}).points.back();
            errs[level] = std::abs(end.c[0] - exact[0]) + std::abs(end.c[1] - exact[1]);
        }
        CHECK(errs[0] / errs[1] >= 12.0);
        CHECK(errs[0] / errs[1] <= 20.0);
        CHECK(errs[1] / errs[2] >= 12.0);
        CHECK(errs[1] / errs[2] <= 20.0);
    }
}

TEST_CASE("convolution_system") {
    SUBCASE("unit delta at lag 0 is the identity") {
        const auto sys = convolution_system({1.0});
        const std::vector<double> x{0.0, 1.5, -2.0, 3.0};
        CHECK(sys(x) == x);
    }
    SUBCASE("delta at lag k delays by k") {
        const auto sys = convolution_system({0.0, 0.0, 1.0});
        const std::vector<double> x{1.0, 2.0, 3.0, 4.0, 5.0};
        CHECK(sys(x) == std::vector<double>{0.0, 0.0, 1.0, 2.0, 3.0});
    }
    SUBCASE("matches a direct summation oracle") {
        Rng rng(3);
        std::normal_distribution<double> g;
        std::vector<double> h(9), x(50);
        for (auto &v : h) v = g(rng);
        for (auto &v : x) v = g(rng);
        const auto y = convolution_system(h)(x);
        for (std::size_t n = 0; n < x.size(); ++n) {
            double acc = 0.0;
            for (std::size_t m = 0; m <= n; ++m)
                if (n - m < h.size())
                    acc += x[m] * h[n - m];
            CHECK(y[n] == doctest::Approx(acc).epsilon(1e-12));
        }
    }
}

TEST_CASE("LTI checkers") {
    Rng rng(2026);
    const auto x1 = random_pulse(rng, 200, 25, 50);
    const auto x2 = random_pulse(rng, 200, 25, 50);
    std::vector<double> h(12);
    std::normal_distribution<double> g;
    for (auto &v : h) v = g(rng);
    const auto conv = convolution_system(h);
    const auto schr = schrodinger_system(sigma_x, 1, 0, 0.01);
    const auto schr2 = schrodinger_system(
        TwoLevelHamiltonian::make(0.3, Complex(0.7, 0.2), Complex(0.7, -0.2), -0.5), 2, 1, 0.02);

    SUBCASE("a1 = 1, a2 = 0 is exact for any system") {
        for (const auto *sys : {&conv, &schr}) {
            const auto r = check_linearity(*sys, x1, x2, 1.0, 0.0);
            CHECK(r.max_deviation == 0.0);
            CHECK(r.pass);
        }
        CHECK(check_linearity(squaring_system(), x1, x2, 1.0, 0.0).max_deviation == 0.0);
    }
    SUBCASE("shift 0 deviates by nothing") {
        CHECK(check_time_invariance(time_varying_gain_system(0.1), x1, 0).max_deviation == 0.0);
    }
    SUBCASE("LTI systems pass all three") {
        for (const auto *sys : {&conv, &schr, &schr2}) {
            CHECK(check_linearity(*sys, x1, x2, 1.7, -0.4).pass);
            for (std::size_t shift : {1u, 5u, 33u})
                CHECK(check_time_invariance(*sys, x1, shift).pass);
            CHECK(check_causality(*sys, x1).pass);
        }
    }
    SUBCASE("counterexamples fail their own axiom") {
        CHECK_FALSE(check_linearity(squaring_system(), x1, x2, 1.0, 1.0).pass);
        CHECK_FALSE(check_time_invariance(time_varying_gain_system(0.1), x1, 4).pass);
        CHECK_FALSE(check_causality(advance_system(), x1).pass);
        // and pass the others on pulses with quiet tails
        CHECK(check_time_invariance(squaring_system(), x1, 4).pass);
        CHECK(check_causality(squaring_system(), x1).pass);
        CHECK(check_linearity(time_varying_gain_system(0.1), x1, x2, 0.3, 2.0).pass);
        CHECK(check_causality(time_varying_gain_system(0.1), x1).pass);
        CHECK(check_linearity(advance_system(), x1, x2, 0.3, 2.0).pass);
        CHECK(check_time_invariance(advance_system(), x1, 4).pass);
    }
    SUBCASE("zero input gives zero output") {
        const std::vector<double> zero(64, 0.0);
        for (const auto *sys : {&conv, &schr})
            for (double v : (*sys)(zero))
                CHECK(v == 0.0);
        CHECK(check_causality(schr, zero).pass);
    }
    SUBCASE("driven schrodinger: scaling and delay by two-run comparison") {
        const auto y = schr(x1);
        std::vector<double> scaled(x1);
        for (auto &v : scaled) v *= 3.25;
        const auto ys = schr(scaled);
        for (std::size_t n = 0; n < y.size(); ++n)
            CHECK(std::abs(ys[n] - 3.25 * y[n]) <= 1e-9);
        const auto yd = schr(delay(x1, 10));
        for (std::size_t n = 10; n < y.size(); ++n)
            CHECK(std::abs(yd[n] - y[n - 10]) <= 1e-9);
    }
    SUBCASE("driven schrodinger responds to a drive") {
        double peak = 0.0;
        for (double v : schr(x1))
            peak = std::max(peak, std::abs(v));
        CHECK(peak > 1e-3);
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(schrodinger_system(sigma_x, 3, 0, 0.01), IndexError);
        CHECK_THROWS_AS(schrodinger_system(sigma_x, 1, 2, 0.01), IndexError);
        CHECK_THROWS_AS(schrodinger_system(sigma_x, 1, 0, 1.0), StepError);
        CHECK_THROWS_AS(check_linearity(conv, x1, std::vector<double>(3), 1.0, 1.0),
                        DimensionMismatchError);
    }
}
