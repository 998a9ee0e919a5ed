#include "orthocomp/random.hpp"

#include <numbers>

namespace orthocomp {

ComplexAmplitudeState random_complex_state(Rng &rng, unsigned width) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(std::size_t{1} << width);
    for (auto &z : v)
        z = {g(rng), g(rng)};
    return normalize(std::move(v));
}

RealAmplitudeState random_real_state(Rng &rng, unsigned width) {
    std::normal_distribution<double> g;
    std::vector<double> v(std::size_t{1} << width);
    for (auto &x : v)
        x = g(rng);
    return normalize(std::move(v));
}

OrthogonalGate random_orthogonal_gate(Rng &rng, std::size_t dim) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                                 std::numbers::pi);
    auto m = DenseMatrix<double>::identity(dim);
    for (int sweep = 0; sweep < 2; ++sweep)
        for (std::size_t i = 0; i + 1 < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j)
                m = givens_rotation(dim, i, j, angle(rng)).matrix() * m;
    // A reflection now and then so both components of O(d) are reached.
    if (dim > 0 && std::bernoulli_distribution(0.5)(rng))
        for (std::size_t c = 0; c < dim; ++c)
            m(0, c) = -m(0, c);
    return OrthogonalGate::from_matrix(std::move(m));
}

TwoLevelHamiltonian random_hamiltonian(Rng &rng, double min_norm,
                                       double max_norm) {
    std::normal_distribution<double> g;
    const double h11 = g(rng), h22 = g(rng);
    const Complex h12{g(rng), g(rng)};
    const auto raw = TwoLevelHamiltonian::make(h11, h12, std::conj(h12), h22);
    const double target =
        std::uniform_real_distribution<double>(min_norm, max_norm)(rng);
    const double scale = raw.norm() > 0.0 ? target / raw.norm() : 0.0;
    return TwoLevelHamiltonian::make(h11 * scale, h12 * scale,
                                     std::conj(h12) * scale, h22 * scale);
}

std::vector<double> random_pulse(Rng &rng, std::size_t length,
                                 std::size_t lead, std::size_t tail) {
    std::normal_distribution<double> g;
    std::vector<double> x(length, 0.0);
    for (std::size_t n = lead; n + tail < length; ++n)
        x[n] = g(rng);
    return x;
}

} // namespace orthocomp
