#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orthocomp/lti.hpp"
#include "orthocomp/state.hpp"

namespace orthocomp {

/// Every seeded suite draws from this engine so a seed pins the whole run.
using Rng = std::mt19937_64;

/// Uniformly distributed unit vector (Gaussian components, normalized).
ComplexAmplitudeState random_complex_state(Rng &rng, unsigned width);
RealAmplitudeState random_real_state(Rng &rng, unsigned width);

/// Random orthogonal matrix: two sweeps of Givens rotations with random
/// angles, then an optional reflection.
OrthogonalGate random_orthogonal_gate(Rng &rng, std::size_t dim);

/// Random Hermitian H with spectral norm drawn uniformly in
/// [min_norm, max_norm].
TwoLevelHamiltonian random_hamiltonian(Rng &rng, double min_norm,
                                       double max_norm);

/// Gaussian samples with `lead` zeros in front and `tail` zeros at the end.
std::vector<double> random_pulse(Rng &rng, std::size_t length,
                                 std::size_t lead, std::size_t tail);

} // namespace orthocomp
