#include "orthocomp/state.hpp"

#include <cmath>

namespace orthocomp {

namespace {

template <typename T> AmplitudeState<T> normalize_impl(std::vector<T> v) {
    const double n2 = squared_norm<T>(v);
    if (n2 == 0.0)
        throw ZeroVectorError("cannot normalize the zero vector");
    if (!std::isfinite(n2))
        throw NormalizationError("vector has non-finite entries");
    const double inv = 1.0 / std::sqrt(n2);
    for (T &x : v)
        x *= inv;
    return AmplitudeState<T>::from_amplitudes(std::move(v));
}

} // namespace

RealAmplitudeState new_obit(double a, double b) {
    const double n2 = a * a + b * b;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kObitInputTolerance)
        throw NormalizationError("O-bit amplitudes violate a^2 + b^2 = 1 (got " +
                                 std::to_string(n2) + ")");
    return RealAmplitudeState::from_amplitudes({a, b}, kObitInputTolerance);
}

RealAmplitudeState normalize(std::vector<double> v) {
    return normalize_impl(std::move(v));
}

ComplexAmplitudeState normalize(std::vector<Complex> v) {
    return normalize_impl(std::move(v));
}

OrthogonalGate givens_rotation(std::size_t dim, std::size_t i, std::size_t j,
                               double theta) {
    if (!(i < j && j < dim))
        throw IndexError("givens_rotation needs 0 <= i < j < dim (got i=" +
                         std::to_string(i) + ", j=" + std::to_string(j) +
                         ", dim=" + std::to_string(dim) + ")");
    auto m = DenseMatrix<double>::identity(dim);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    m(i, i) = c;
    m(i, j) = -s;
    m(j, i) = s;
    m(j, j) = c;
    return OrthogonalGate::from_matrix(std::move(m));
}

AnyState tensor(const AnyState &s1, const AnyState &s2) {
    if (s1.index() != s2.index())
        throw KindMismatchError("tensor product of a real and a complex state");
    return std::visit(
        [&](const auto &a) -> AnyState {
            using S = std::decay_t<decltype(a)>;
            return tensor(a, std::get<S>(s2));
        },
        s1);
}

MeasurementDistribution measure_probabilities(const AnyState &s) {
    return std::visit([](const auto &x) { return measure_probabilities(x); },
                      s);
}

} // namespace orthocomp
