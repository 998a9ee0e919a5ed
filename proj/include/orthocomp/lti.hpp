#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "orthocomp/matrix.hpp"

namespace orthocomp {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTwoLevelNormTolerance = 1e-10;
/// Largest dt * ||H|| / hbar the RK4 integrator accepts.
inline constexpr double kMaxStepPhase = 0.5;

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Hermitian 2x2 generator [[H11, H12], [H21, H22]].
class TwoLevelHamiltonian {
  public:
    /// NonHermitianError unless H21 = conj(H12) and H11, H22 are real
    /// (all within kHermitianTolerance).
    static TwoLevelHamiltonian make(Complex h11, Complex h12, Complex h21,
                                    Complex h22);
    static TwoLevelHamiltonian zero() { return make(0.0, 0.0, 0.0, 0.0); }

    const Matrix2 &matrix() const noexcept { return h_; }
    Complex operator()(int r, int c) const { return h_[r][c]; }

    /// Spectral norm, i.e. the largest |eigenvalue|.
    double norm() const;

  private:
    explicit TwoLevelHamiltonian(const Matrix2 &h) : h_(h) {}
    Matrix2 h_{};
};

/// Amplitudes (C1, C2) with |C1|^2 + |C2|^2 = 1 within 1e-10.
class TwoLevelState {
  public:
    static TwoLevelState make(Complex c1, Complex c2);

    Complex c1() const noexcept { return c_[0]; }
    Complex c2() const noexcept { return c_[1]; }
    const std::array<Complex, 2> &amplitudes() const noexcept { return c_; }
    double norm() const;

  private:
    explicit TwoLevelState(std::array<Complex, 2> c) : c_(c) {}
    std::array<Complex, 2> c_{};
};

struct Propagator {
    Matrix2 matrix{};
    double elapsed = 0.0;

    std::array<Complex, 2> apply(const std::array<Complex, 2> &c) const;
    Propagator then(const Propagator &later) const;
};

double unitarity_defect(const Matrix2 &u);

/// t_k = t0 + k dt for k = 0..steps.
struct TimeGrid {
    double t0 = 0.0;
    double dt = 1e-3;
    std::size_t steps = 1;

    /// RangeError unless dt > 0 and steps >= 1.
    void validate() const;
    double time(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
    double end() const { return time(steps); }
};

struct TrajectoryPoint {
    double t = 0.0;
    std::array<Complex, 2> c{};
    /// sqrt(|C1|^2 + |C2|^2) as integrated, never corrected.
    double norm = 1.0;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;

    /// max |norm - 1| over all points.
    double max_norm_drift() const;
};

/// Classical RK4 for dC/dt = -(i/hbar) H C. StepError if
/// dt * ||H|| / hbar exceeds kMaxStepPhase.
Trajectory evolve_rk4(const TwoLevelHamiltonian &h, const TwoLevelState &s0,
                      const TimeGrid &grid, double hbar = 1.0);

/// exp(-i H t / hbar) from the spectral decomposition of H.
Propagator propagator_closed_form(const TwoLevelHamiltonian &h, double t,
                                  double hbar = 1.0);

// ---------------------------------------------------------------------------
// Systems and LTI property checks

using Samples = std::vector<double>;

/// A deterministic map from an input sequence to an output sequence of the
/// same length on a uniform grid with step dt.
struct SystemUnderTest {
    std::string name;
    double dt = 1.0;
    std::function<Samples(std::span<const double>)> respond;

    Samples operator()(std::span<const double> x) const { return respond(x); }
};

/// y[n] = sum_k h[k] x[n-k], truncated to the input length.
SystemUnderTest convolution_system(std::vector<double> impulse_response,
                                   double dt = 1.0);

/**
 * Driven two-level system dC/dt = -(i/hbar) H C + e_basis x(t) with
 * C(t0) = 0, integrated by RK4 on the input grid (input between samples is
 * linear). Output is Re C_component at each grid point.
 * component is 1 or 2, basis is 0 or 1.
 */
SystemUnderTest schrodinger_system(const TwoLevelHamiltonian &h, int component,
                                   int basis, double dt, double hbar = 1.0);

/// y = x^2. Fails linearity.
SystemUnderTest squaring_system();
/// y(t) = t x(t). Fails time invariance.
SystemUnderTest time_varying_gain_system(double dt = 1.0);
/// y[n] = x[n+1]. Fails causality.
SystemUnderTest advance_system();

struct CheckReport {
    std::string check;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline constexpr double kLtiRelativeTolerance = 1e-9;
inline constexpr double kCausalityTolerance = 1e-12;

/// Compares f(a1 x1 + a2 x2) with a1 f(x1) + a2 f(x2).
CheckReport check_linearity(const SystemUnderTest &sys,
                            std::span<const double> x1,
                            std::span<const double> x2, double a1, double a2);

/// Compares f applied to x delayed by `shift` samples with f(x) delayed, on
/// samples shift..N-1.
CheckReport check_time_invariance(const SystemUnderTest &sys,
                                  std::span<const double> x, std::size_t shift);

/// Output must vanish before the first nonzero input sample.
CheckReport check_causality(const SystemUnderTest &sys,
                            std::span<const double> x);

/// x delayed by `shift` samples, zero-filled, same length.
Samples delay(std::span<const double> x, std::size_t shift);

} // namespace orthocomp
