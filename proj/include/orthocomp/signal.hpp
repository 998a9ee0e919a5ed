#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "orthocomp/state.hpp"

namespace orthocomp {

enum class Quadrature { trapezoid, simpson };

Quadrature parse_quadrature(std::string_view name);
std::string_view to_string(Quadrature q);

struct EncodingConfig {
    std::size_t sample_count = 256;
    Quadrature quadrature = Quadrature::trapezoid;

    /// Throws SizeError unless sample_count is even and >= 8.
    void validate() const;
};

/**
 * A real waveform on xi in [0, 2pi), sampled at xi_k = 2 pi k / M for
 * k = 0..M-1. The endpoint 2pi is left out because the grid is periodic;
 * outside the window the waveform is zero and is never stored.
 */
class SampledSignal {
  public:
    /// Throws SizeError (bad M) or FormatError (non-finite sample).
    explicit SampledSignal(std::vector<double> samples);

    std::span<const double> samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double operator[](std::size_t k) const { return samples_[k]; }

    /// xi_k for this signal's grid.
    double abscissa(std::size_t k) const;

    /// alpha * a + beta * b, samplewise.
    static SampledSignal combine(double alpha, const SampledSignal &a,
                                 double beta, const SampledSignal &b);

  private:
    std::vector<double> samples_;
};

/// bit 0 -> sin(xi), bit 1 -> cos(xi).
SampledSignal basis_signal(int bit, const EncodingConfig &cfg);

/// a sin(xi) + b cos(xi) for the single O-bit (a, b).
/// DimensionMismatchError unless the state has dimension 2.
SampledSignal encode(const RealAmplitudeState &s, const EncodingConfig &cfg);

/// (1/pi) times the quadrature of s1 * s2 over one period.
double inner_product(const SampledSignal &s1, const SampledSignal &s2,
                     Quadrature rule = Quadrature::trapezoid);

/// Projects onto sin and cos. Renormalizes when the recovered norm is
/// within 1e-6 of 1, otherwise NormalizationError.
RealAmplitudeState decode(const SampledSignal &sig, const EncodingConfig &cfg);

inline constexpr double kDecodeNormTolerance = 1e-6;

struct GramReport {
    /// gram[i][j] = (i|j) under the configured quadrature.
    std::array<std::array<double, 2>, 2> gram{};
    /// max |gram - I|.
    double max_deviation = 0.0;
};

GramReport verify_orthonormality(const EncodingConfig &cfg);

} // namespace orthocomp
