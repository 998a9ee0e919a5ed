#include "orthocomp/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace orthocomp {

namespace {

void check_sample_count(std::size_t m) {
    if (m < 8 || m % 2 != 0)
        throw SizeError("sample count must be even and >= 8 (got " +
                        std::to_string(m) + ")");
}

double grid_point(std::size_t k, std::size_t m) {
    return 2.0 * std::numbers::pi * static_cast<double>(k) /
           static_cast<double>(m);
}

} // namespace

Quadrature parse_quadrature(std::string_view name) {
    if (name == "trapezoid")
        return Quadrature::trapezoid;
    if (name == "simpson")
        return Quadrature::simpson;
    throw FormatError("unknown quadrature '" + std::string(name) + "'");
}

std::string_view to_string(Quadrature q) {
    return q == Quadrature::simpson ? "simpson" : "trapezoid";
}

void EncodingConfig::validate() const { check_sample_count(sample_count); }

SampledSignal::SampledSignal(std::vector<double> samples)
    : samples_(std::move(samples)) {
    check_sample_count(samples_.size());
    if (!std::all_of(samples_.begin(), samples_.end(),
                     [](double x) { return std::isfinite(x); }))
        throw FormatError("signal contains non-finite samples");
}

double SampledSignal::abscissa(std::size_t k) const {
    return grid_point(k, samples_.size());
}

SampledSignal SampledSignal::combine(double alpha, const SampledSignal &a,
                                     double beta, const SampledSignal &b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("signals have different sample counts");
    std::vector<double> out(a.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = alpha * a[k] + beta * b[k];
    return SampledSignal(std::move(out));
}

SampledSignal basis_signal(int bit, const EncodingConfig &cfg) {
    cfg.validate();
    if (bit != 0 && bit != 1)
        throw IndexError("O-bit basis label must be 0 or 1");
    std::vector<double> out(cfg.sample_count);
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double xi = grid_point(k, cfg.sample_count);
        out[k] = bit == 0 ? std::sin(xi) : std::cos(xi);
    }
    // sin/cos of 2pi k/M miss exact zeros and ones at the quarter points by an
    // ulp; pin them so basis samples are exact where the functions are.
    const std::size_t m = cfg.sample_count;
    const double zero_value = bit == 0 ? 0.0 : 1.0;
    const double half_value = bit == 0 ? 0.0 : -1.0;
    out[0] = zero_value;
    out[m / 2] = half_value;
    if (m % 4 == 0) {
        out[m / 4] = bit == 0 ? 1.0 : 0.0;
        out[3 * m / 4] = bit == 0 ? -1.0 : 0.0;
    }
    return SampledSignal(std::move(out));
}

SampledSignal encode(const RealAmplitudeState &s, const EncodingConfig &cfg) {
    if (s.dimension() != 2)
        throw DimensionMismatchError(
            "only single O-bit states can be encoded (dimension " +
            std::to_string(s.dimension()) + ")");
    return SampledSignal::combine(s[0], basis_signal(0, cfg), s[1],
                                  basis_signal(1, cfg));
}

double inner_product(const SampledSignal &s1, const SampledSignal &s2,
                     Quadrature rule) {
    if (s1.size() != s2.size())
        throw DimensionMismatchError("inner product of signals with " +
                                     std::to_string(s1.size()) + " and " +
                                     std::to_string(s2.size()) + " samples");
    const std::size_t m = s1.size();
    const double h = 2.0 * std::numbers::pi / static_cast<double>(m);
    double acc = 0.0;
    if (rule == Quadrature::trapezoid) {
        // Periodic trapezoid: every node has weight h.
        for (std::size_t k = 0; k < m; ++k)
            acc += s1[k] * s2[k];
        return acc * h / std::numbers::pi;
    }
    // Composite Simpson with f(2pi) = f(0): weights h/3 * (2, 4, 2, 4, ...).
    for (std::size_t k = 0; k < m; ++k)
        acc += (k % 2 == 0 ? 2.0 : 4.0) * (s1[k] * s2[k]);
    return acc * (h / 3.0) / std::numbers::pi;
}

RealAmplitudeState decode(const SampledSignal &sig, const EncodingConfig &cfg) {
    EncodingConfig local = cfg;
    local.sample_count = sig.size();
    const double a = inner_product(sig, basis_signal(0, local), cfg.quadrature);
    const double b = inner_product(sig, basis_signal(1, local), cfg.quadrature);
    const double norm = std::hypot(a, b);
    if (!(std::abs(norm - 1.0) <= kDecodeNormTolerance))
        throw NormalizationError("waveform does not encode a unit O-bit "
                                 "(recovered norm " +
                                 std::to_string(norm) + ")");
    return RealAmplitudeState::from_amplitudes({a / norm, b / norm});
}

GramReport verify_orthonormality(const EncodingConfig &cfg) {
    const SampledSignal basis[2] = {basis_signal(0, cfg), basis_signal(1, cfg)};
    GramReport r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            r.gram[i][j] = inner_product(basis[i], basis[j], cfg.quadrature);
            const double target = i == j ? 1.0 : 0.0;
            r.max_deviation =
                std::max(r.max_deviation, std::abs(r.gram[i][j] - target));
        }
    return r;
}

} // namespace orthocomp
