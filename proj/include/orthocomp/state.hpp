#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orthocomp/errors.hpp"
#include "orthocomp/matrix.hpp"

namespace orthocomp {

/// Norm tolerance a state must meet when built from raw amplitudes.
inline constexpr double kStateNormTolerance = 1e-12;
/// Entrywise tolerance on M^† M = I for gates.
inline constexpr double kGateTolerance = 1e-10;
/// Accepted |a^2 + b^2 - 1| for a hand-specified O-bit.
inline constexpr double kObitInputTolerance = 1e-9;

template <typename T> double squared_norm(std::span<const T> v) {
    double s = 0.0;
    for (const T &x : v)
        s += std::norm(x);
    return s;
}

/**
 * Unit-norm register over a power-of-two basis, big-endian: the first
 * bit of a multi-bit label is the most significant bit of the index.
 *
 * Real amplitudes give the O-bit register (a|0) + b|1) with a^2 + b^2 = 1),
 * complex amplitudes the qubit register. The norm is validated when a state
 * is built from caller data; states produced by gates or tensor products are
 * trusted and only re-checked in debug builds.
 */
template <typename T> class AmplitudeState {
  public:
    using value_type = T;

    /// Validates length (power of two) and norm (within kStateNormTolerance).
    static AmplitudeState from_amplitudes(std::vector<T> amplitudes) {
        return from_amplitudes(std::move(amplitudes), kStateNormTolerance);
    }

    static AmplitudeState from_amplitudes(std::vector<T> amplitudes,
                                          double tolerance) {
        check_dimension(amplitudes.size());
        const double n2 = squared_norm<T>(amplitudes);
        if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tolerance)
            throw NormalizationError("squared norm " + std::to_string(n2) +
                                     " is not 1");
        return AmplitudeState(std::move(amplitudes));
    }

    /// Computational basis state |index> of the given dimension.
    static AmplitudeState basis(std::size_t dimension, std::size_t index) {
        check_dimension(dimension);
        if (index >= dimension)
            throw IndexError("basis index out of range");
        std::vector<T> a(dimension, T{});
        a[index] = T{1};
        return AmplitudeState(std::move(a));
    }

    /// Skips validation. For results of norm-preserving operations.
    static AmplitudeState trusted(std::vector<T> amplitudes) {
#ifndef NDEBUG
        return from_amplitudes(std::move(amplitudes), kGateTolerance);
#else
        return AmplitudeState(std::move(amplitudes));
#endif
    }

    std::span<const T> amplitudes() const noexcept { return amplitudes_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    /// Number of (qu/O-)bits, log2 of the dimension.
    unsigned width() const noexcept { return log2_exact(amplitudes_.size()); }
    const T &operator[](std::size_t i) const { return amplitudes_[i]; }

    friend bool operator==(const AmplitudeState &,
                           const AmplitudeState &) = default;

  private:
    explicit AmplitudeState(std::vector<T> a) : amplitudes_(std::move(a)) {}

    static void check_dimension(std::size_t d) {
        if (!is_power_of_two(d))
            throw DimensionMismatchError("state dimension " +
                                         std::to_string(d) +
                                         " is not a power of two");
    }

    std::vector<T> amplitudes_;
};

using RealAmplitudeState = AmplitudeState<double>;
using ComplexAmplitudeState = AmplitudeState<Complex>;
/// Either register kind; used where the kind is only known at runtime
/// (files, CLI).
using AnyState = std::variant<RealAmplitudeState, ComplexAmplitudeState>;

/// Square matrix with M^† M = I within kGateTolerance.
template <typename T> class Gate {
  public:
    static Gate from_matrix(DenseMatrix<T> m) {
        if (!m.square() || m.rows() == 0)
            throw DimensionMismatchError("gate matrix must be square");
        const double defect = unitarity_defect(m);
        if (!(defect <= kGateTolerance))
            throw NormalizationError("gate is not norm preserving (defect " +
                                     std::to_string(defect) + ")");
        return Gate(std::move(m));
    }

    static Gate identity(std::size_t n) {
        return Gate(DenseMatrix<T>::identity(n));
    }

    const DenseMatrix<T> &matrix() const noexcept { return matrix_; }
    std::size_t dimension() const noexcept { return matrix_.rows(); }

  private:
    explicit Gate(DenseMatrix<T> m) : matrix_(std::move(m)) {}
    DenseMatrix<T> matrix_;
};

using OrthogonalGate = Gate<double>;
using UnitaryGate = Gate<Complex>;

struct MeasurementDistribution {
    std::vector<double> probabilities;
};

/// O-bit a|0) + b|1). Throws NormalizationError unless
/// |a^2 + b^2 - 1| <= kObitInputTolerance.
RealAmplitudeState new_obit(double a, double b);

/// Scales v to unit norm. Throws ZeroVectorError on the zero vector.
RealAmplitudeState normalize(std::vector<double> v);
ComplexAmplitudeState normalize(std::vector<Complex> v);

/// Raw linear action of a gate on an arbitrary (not necessarily unit) vector.
template <typename T>
std::vector<T> apply_matrix(const Gate<T> &g, std::span<const T> v) {
    if (g.dimension() != v.size())
        throw DimensionMismatchError(
            "gate dimension " + std::to_string(g.dimension()) +
            " != vector dimension " + std::to_string(v.size()));
    return g.matrix() * v;
}

template <typename T>
AmplitudeState<T> apply_gate(const AmplitudeState<T> &s, const Gate<T> &g) {
    return AmplitudeState<T>::trusted(apply_matrix(g, s.amplitudes()));
}

/// Rotation by theta in the (i, j) plane of a dim-dimensional space.
/// Maps e_i to cos(theta) e_i + sin(theta) e_j.
OrthogonalGate givens_rotation(std::size_t dim, std::size_t i, std::size_t j,
                               double theta);

/// Kronecker product; s1 supplies the high-order bits of the result index.
template <typename T>
AmplitudeState<T> tensor(const AmplitudeState<T> &s1,
                         const AmplitudeState<T> &s2) {
    const auto a = s1.amplitudes();
    const auto b = s2.amplitudes();
    std::vector<T> out;
    out.reserve(a.size() * b.size());
    for (const T &x : a)
        for (const T &y : b)
            out.push_back(x * y);
    return AmplitudeState<T>::trusted(std::move(out));
}

/// Runtime-kind tensor product; KindMismatchError for real with complex.
AnyState tensor(const AnyState &s1, const AnyState &s2);

template <typename T>
MeasurementDistribution measure_probabilities(const AmplitudeState<T> &s) {
    MeasurementDistribution d;
    d.probabilities.reserve(s.dimension());
    for (const T &x : s.amplitudes())
        d.probabilities.push_back(std::norm(x));
    return d;
}

MeasurementDistribution measure_probabilities(const AnyState &s);

} // namespace orthocomp
