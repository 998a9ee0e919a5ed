#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthocomp/matrix.hpp"
#include "orthocomp/state.hpp"

namespace orthocomp {

/// Complex vector of power-of-two length. Normalized transforms map it to
/// another of the same length: y_k = N^{-1/2} sum_j x_j exp(2 pi i j k / N).
class SpectrumVector {
  public:
    /// SizeError unless the length is a power of two.
    explicit SpectrumVector(std::vector<Complex> values);

    std::span<const Complex> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    unsigned width() const noexcept { return log2_exact(values_.size()); }
    const Complex &operator[](std::size_t i) const { return values_[i]; }

  private:
    std::vector<Complex> values_;
};

/// max_i |a_i - b_i|.
double max_abs_difference(std::span<const Complex> a,
                          std::span<const Complex> b);
double l2_norm(std::span<const Complex> v);

/// Reference transform: straightforward double loop.
SpectrumVector dft_direct(const SpectrumVector &x);

/// Dense N x N matrix of the normalized transform.
DenseMatrix<Complex> dft_matrix(std::size_t n_points);

struct FftCounters {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
};

/// Iterative radix-2 decimation-in-time FFT. Each butterfly stage carries a
/// 1/sqrt(2) so the whole transform is unitary. If `counters` is given it
/// receives one complex multiply (the twiddle) and two complex additions per
/// butterfly; the real 1/sqrt(2) scaling is not counted.
SpectrumVector fft_radix2(const SpectrumVector &x,
                          FftCounters *counters = nullptr);

/// Bits j_1..j_n with j_1 the most significant.
class BitString {
  public:
    explicit BitString(std::vector<std::uint8_t> bits);
    static BitString from_index(std::size_t value, unsigned width);
    /// Parses e.g. "101". FormatError on other characters.
    static BitString parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    /// 1-based, matching j_1..j_n.
    std::uint8_t bit(std::size_t one_based) const {
        return bits_.at(one_based - 1);
    }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    /// j_l..j_n as a BitString.
    BitString suffix(std::size_t one_based_start) const;
    std::size_t to_index() const;

  private:
    std::vector<std::uint8_t> bits_;
};

/// 0.b_1 b_2 ... b_m = sum_m b_m 2^{-m}. Throws RangeError when empty.
double binary_fraction(const BitString &bits);

struct QftGate {
    enum class Kind { hadamard, controlled_phase, swap };

    Kind kind;
    /// H: {target}; CP: {control, target}; SWAP: {q1, q2}.
    std::vector<unsigned> qubits;
    /// Controlled phase applies exp(2 pi i / 2^k); absent for H and SWAP.
    std::optional<unsigned> k;

    std::string_view name() const;
};

/// Qubit 0 is the most significant bit of the basis index.
struct QftCircuit {
    unsigned width = 0;
    std::vector<QftGate> gates;
};

inline constexpr unsigned kMaxCircuitWidth = 20;

/// n(n+1)/2 + floor(n/2).
constexpr std::uint64_t qft_gate_count(unsigned n) {
    return std::uint64_t{n} * (n + 1) / 2 + n / 2;
}

/// Hadamard plus controlled phases per qubit, then floor(n/2) swaps to put
/// the output back in natural order. RangeError unless 1 <= n <= 20.
QftCircuit qft_build_circuit(unsigned n);

/// Simulates the circuit gate by gate. DimensionMismatchError when the
/// state width differs from the circuit width.
ComplexAmplitudeState qft_apply(const QftCircuit &c,
                                const ComplexAmplitudeState &s);

/// Output of the transform on basis input |j_1..j_n> assembled as the
/// tensor product of single-qubit factors (|0> + e^{2 pi i 0.j_l..j_n}|1>)/sqrt2,
/// factor for l = n first.
ComplexAmplitudeState qft_product_state(const BitString &j);

/// Row-major list of nonzeros of a square matrix.
struct SparseMatrix {
    struct Entry {
        std::size_t row;
        std::size_t col;
        Complex value;
    };

    std::size_t dimension = 0;
    std::vector<Entry> entries;

    std::size_t nonzeros() const noexcept { return entries.size(); }
    std::vector<Complex> apply(std::span<const Complex> v) const;
};

/**
 * The DFT matrix written as S_n ... S_1 P: P reorders the input by
 * bit-reversed index, and stage S_s combines pairs at distance 2^{s-1}
 * with twiddles exp(2 pi i j / 2^s) and a 1/sqrt(2), so every stage is
 * unitary and has exactly two nonzeros per row.
 */
struct StageFactorization {
    unsigned width = 0;
    /// Applied in order: stages[0] first.
    std::vector<SparseMatrix> stages;
    /// (P x)[i] = x[permutation[i]].
    std::vector<std::size_t> permutation;

    std::vector<Complex> apply(std::span<const Complex> v) const;
    /// S_n ... S_1 P as a dense matrix.
    DenseMatrix<Complex> dense_product() const;
};

inline constexpr unsigned kMaxFactorizationWidth = 10;

/// RangeError unless 1 <= n <= 10.
StageFactorization stage_factorization(unsigned n);

/// Induced infinity-norm (max row sum) of S_n ... S_1 P - F_N.
double verify_factorization(const StageFactorization &f);

std::size_t bit_reverse(std::size_t value, unsigned width);

/// Residuals of the three fast paths against dft_direct, and their norms.
struct FourierComparison {
    unsigned width = 0;
    double fft_residual = 0.0;
    double qft_residual = 0.0;
    double stage_residual = 0.0;
    /// max over paths of | ||y||_2 - ||x||_2 |
    double norm_defect = 0.0;
};

/// Requires a unit-norm input (QFT path acts on a state) and n <= 10.
FourierComparison compare_fourier_paths(const SpectrumVector &x);

struct ComplexityLedger {
    std::string method;
    unsigned n = 0;
    std::uint64_t complex_multiplications = 0;
    std::uint64_t complex_additions = 0;
    std::uint64_t gate_count = 0;
};

inline constexpr unsigned kMaxReportWidth = 30;

/// Three ledgers per n (dft_direct, fft_radix2, qft_circuit), ascending n.
/// Closed forms only; nothing is executed. RangeError unless
/// 1 <= n_min <= n_max <= 30.
std::vector<ComplexityLedger> complexity_report(unsigned n_min, unsigned n_max);

/// CSV with header n,N,dft_mults,fft_mults,fft_adds,qft_gates.
std::string complexity_csv(const std::vector<ComplexityLedger> &ledgers);

} // namespace orthocomp
