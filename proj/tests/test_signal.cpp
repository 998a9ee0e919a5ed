#include "doctest.h"

#include <cmath>
#include <numbers>

#include "orthocomp/random.hpp"
#include "orthocomp/signal.hpp"

using namespace orthocomp;

namespace {

EncodingConfig cfg_of(std::size_t m, Quadrature q = Quadrature::trapezoid) {
    return {m, q};
}

} // namespace

TEST_CASE("basis_signal sample values") {
    const auto f0 = basis_signal(0, cfg_of(8));
    const auto f1 = basis_signal(1, cfg_of(8));
    CHECK(f0[2] == 1.0); // xi = pi/2
    CHECK(f1[0] == 1.0); // xi = 0
    for (std::size_t m : {8u, 10u, 64u, 256u})
        CHECK(basis_signal(0, cfg_of(m))[0] == 0.0);
    CHECK(f0.abscissa(2) == doctest::Approx(std::numbers::pi / 2));
    CHECK_THROWS_AS(basis_signal(2, cfg_of(8)), IndexError);
}

TEST_CASE("sample count validation") {
    CHECK_THROWS_AS(basis_signal(0, cfg_of(6)), SizeError);
    CHECK_THROWS_AS(basis_signal(0, cfg_of(9)), SizeError);
    CHECK_THROWS_AS(SampledSignal(std::vector<double>(8, NAN)), FormatError);
}

TEST_CASE("encode") {
    const auto cfg = cfg_of(64);
    const auto f0 = basis_signal(0, cfg);
    const auto f1 = basis_signal(1, cfg);
    CHECK(std::equal(f0.samples().begin(), f0.samples().end(),
                     encode(new_obit(1.0, 0.0), cfg).samples().begin()));
    CHECK(std::equal(f1.samples().begin(), f1.samples().end(),
                     encode(new_obit(0.0, 1.0), cfg).samples().begin()));

    const double r = 1.0 / std::sqrt(2.0);
    const auto mixed = encode(new_obit(r, r), cfg);
    for (std::size_t k = 0; k < mixed.size(); ++k) {
        const double xi = mixed.abscissa(k);
        CHECK(mixed[k] == doctest::Approx(std::sin(xi + std::numbers::pi / 4)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(encode(RealAmplitudeState::basis(4, 0), cfg), DimensionMismatchError);
}

TEST_CASE("inner products reproduce the orthonormality table") {
    // Oracle: (1/pi) int sin^2 = (1/pi) int cos^2 = pi/pi = 1, cross term 0.
    for (auto q : {Quadrature::trapezoid, Quadrature::simpson})
        for (std::size_t m : {8u, 12u, 64u, 256u}) {
            const auto f0 = basis_signal(0, cfg_of(m, q));
            const auto f1 = basis_signal(1, cfg_of(m, q));
            CHECK(std::abs(inner_product(f0, f0, q) - 1.0) <= 1e-12);
            CHECK(std::abs(inner_product(f1, f1, q) - 1.0) <= 1e-12);
            CHECK(std::abs(inner_product(f0, f1, q)) <= 1e-12);
            const auto r = verify_orthonormality(cfg_of(m, q));
            CHECK(r.max_deviation <= 1e-12);
        }
    const auto r = verify_orthonormality(cfg_of(64));
    CHECK(r.gram[0][0] == doctest::Approx(1.0));
    CHECK(r.gram[1][1] == doctest::Approx(1.0));

    // (f0 + f1 | f0) = (1/pi)(pi + 0) = 1
    const auto cfg = cfg_of(64);
    const auto sum = SampledSignal::combine(1.0, basis_signal(0, cfg), 1.0, basis_signal(1, cfg));
    CHECK(std::abs(inner_product(sum, basis_signal(0, cfg)) - 1.0) <= 1e-10);

    CHECK_THROWS_AS(inner_product(basis_signal(0, cfg_of(8)), basis_signal(0, cfg_of(16))),
                    DimensionMismatchError);
}

TEST_CASE("inner product properties on random signals") {
    Rng rng(1234);
    std::normal_distribution<double> g;
    auto random_signal = [&](std::size_t m) {
        std::vector<double> v(m);
        for (auto &x : v)
            x = g(rng);
        return SampledSignal(std::move(v));
    };
    for (int trial = 0; trial < 50; ++trial) {
        const auto s1 = random_signal(64), s2 = random_signal(64), s3 = random_signal(64);
        const double alpha = g(rng), beta = g(rng);
        const auto lhs = inner_product(SampledSignal::combine(alpha, s1, beta, s2), s3);
        const auto rhs = alpha * inner_product(s1, s3) + beta * inner_product(s2, s3);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
        CHECK(inner_product(s1, s2) == inner_product(s2, s1));
        CHECK(inner_product(s1, s2, Quadrature::simpson) ==
              inner_product(s2, s1, Quadrature::simpson));
    }
}

TEST_CASE("decode") {
    const auto cfg = cfg_of(256);
    const auto back = decode(encode(new_obit(0.6, 0.8), cfg), cfg);
    CHECK(std::abs(back[0] - 0.6) <= 1e-9);
    CHECK(std::abs(back[1] - 0.8) <= 1e-9);

    const auto sin_only = decode(basis_signal(0, cfg), cfg);
    CHECK(std::abs(sin_only[0] - 1.0) <= 1e-12);
    CHECK(std::abs(sin_only[1]) <= 1e-12);

    CHECK_THROWS_AS(decode(SampledSignal(std::vector<double>(256, 0.0)), cfg),
                    NormalizationError);
    // A doubled waveform is not a unit O-bit.
    CHECK_THROWS_AS(decode(SampledSignal::combine(2.0, basis_signal(0, cfg), 0.0,
                                                  basis_signal(1, cfg)),
                           cfg),
                    NormalizationError);
}

TEST_CASE("round trip and norm correspondence over random O-bits") {
    Rng rng(42);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (auto q : {Quadrature::trapezoid, Quadrature::simpson}) {
        const auto cfg = cfg_of(256, q);
        for (int trial = 0; trial < 100; ++trial) {
            const double th = angle(rng);
            const auto s = new_obit(std::cos(th), std::sin(th));
            const auto sig = encode(s, cfg);
            const auto back = decode(sig, cfg);
            CHECK(std::hypot(back[0] - s[0], back[1] - s[1]) <= 1e-9);
            CHECK(std::abs(inner_product(sig, sig, q) - (s[0] * s[0] + s[1] * s[1])) <= 1e-10);
        }
    }
}
