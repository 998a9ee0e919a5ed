#include "orthocomp/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "orthocomp/errors.hpp"

namespace orthocomp {

namespace {

/// w[m] = exp(2 pi i m / N), m = 0..N-1.
std::vector<Complex> roots_of_unity(std::size_t n_points) {
    std::vector<Complex> w(n_points);
    for (std::size_t m = 0; m < n_points; ++m)
        w[m] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) /
                                   static_cast<double>(n_points));
    return w;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

} // namespace

SpectrumVector::SpectrumVector(std::vector<Complex> values)
    : values_(std::move(values)) {
    if (!is_power_of_two(values_.size()))
        throw SizeError("transform length " + std::to_string(values_.size()) +
                        " is not a power of two");
}

double max_abs_difference(std::span<const Complex> a,
                          std::span<const Complex> b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("vectors differ in length");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

double l2_norm(std::span<const Complex> v) {
    return std::sqrt(squared_norm<Complex>(v));
}

SpectrumVector dft_direct(const SpectrumVector &x) {
    const std::size_t n = x.size();
    const auto w = roots_of_unity(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t j = 0; j < n; ++j)
            acc += x[j] * w[(j * k) % n];
        y[k] = acc * scale;
    }
    return SpectrumVector(std::move(y));
}

DenseMatrix<Complex> dft_matrix(std::size_t n_points) {
    if (!is_power_of_two(n_points))
        throw SizeError("transform length is not a power of two");
    const auto w = roots_of_unity(n_points);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_points));
    DenseMatrix<Complex> f(n_points, n_points);
    for (std::size_t k = 0; k < n_points; ++k)
        for (std::size_t j = 0; j < n_points; ++j)
            f(k, j) = w[(j * k) % n_points] * scale;
    return f;
}

std::size_t bit_reverse(std::size_t value, unsigned width) {
    std::size_t out = 0;
    for (unsigned b = 0; b < width; ++b) {
        out = (out << 1) | (value & 1U);
        value >>= 1;
    }
    return out;
}

SpectrumVector fft_radix2(const SpectrumVector &x, FftCounters *counters) {
    const std::size_t n = x.size();
    const unsigned width = x.width();
    std::vector<Complex> a(n);
    for (std::size_t i = 0; i < n; ++i)
        a[i] = x[bit_reverse(i, width)];

    const auto w = roots_of_unity(n);
    FftCounters local;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t base = 0; base < n; base += len)
            for (std::size_t j = 0; j < half; ++j) {
                const Complex t = w[j * stride] * a[base + j + half];
                const Complex u = a[base + j];
                a[base + j] = (u + t) * kInvSqrt2;
                a[base + j + half] = (u - t) * kInvSqrt2;
                ++local.multiplications;
                local.additions += 2;
            }
    }
    if (counters) {
        counters->multiplications += local.multiplications;
        counters->additions += local.additions;
    }
    return SpectrumVector(std::move(a));
}

// ---------------------------------------------------------------------------

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1)
            throw FormatError("bit values must be 0 or 1");
}

BitString BitString::from_index(std::size_t value, unsigned width) {
    std::vector<std::uint8_t> bits(width);
    for (unsigned i = 0; i < width; ++i)
        bits[i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1U);
    return BitString(std::move(bits));
}

BitString BitString::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw FormatError("bit string may only contain 0 and 1");
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return BitString(std::move(bits));
}

BitString BitString::suffix(std::size_t one_based_start) const {
    if (one_based_start < 1 || one_based_start > bits_.size() + 1)
        throw IndexError("suffix start out of range");
    return BitString({bits_.begin() + static_cast<std::ptrdiff_t>(one_based_start - 1),
                      bits_.end()});
}

std::size_t BitString::to_index() const {
    std::size_t v = 0;
    for (auto b : bits_)
        v = (v << 1) | b;
    return v;
}

double binary_fraction(const BitString &bits) {
    if (bits.size() == 0)
        throw RangeError("binary fraction of an empty bit string");
    double v = 0.0;
    for (std::size_t m = bits.size(); m >= 1; --m)
        v = (v + bits.bit(m)) * 0.5;
    return v;
}

std::string_view QftGate::name() const {
    switch (kind) {
    case Kind::hadamard:
        return "H";
    case Kind::controlled_phase:
        return "CP";
    case Kind::swap:
        return "SWAP";
    }
    return "?";
}

QftCircuit qft_build_circuit(unsigned n) {
    if (n < 1 || n > kMaxCircuitWidth)
        throw RangeError("QFT width must be in [1, " +
                         std::to_string(kMaxCircuitWidth) + "] (got " +
                         std::to_string(n) + ")");
    QftCircuit c;
    c.width = n;
    c.gates.reserve(qft_gate_count(n));
    for (unsigned q = 0; q < n; ++q) {
        c.gates.push_back({QftGate::Kind::hadamard, {q}, std::nullopt});
        for (unsigned m = 1; q + m < n; ++m)
            c.gates.push_back(
                {QftGate::Kind::controlled_phase, {q + m, q}, m + 1});
    }
    for (unsigned q = 0; q < n / 2; ++q)
        c.gates.push_back({QftGate::Kind::swap, {q, n - 1 - q}, std::nullopt});
    return c;
}

namespace {

/// exp(2 pi i 0.0...01) with the 1 in position k.
Complex controlled_phase_factor(unsigned k) {
    std::vector<std::uint8_t> bits(k, 0);
    bits.back() = 1;
    return std::polar(1.0, 2.0 * std::numbers::pi *
                               binary_fraction(BitString(std::move(bits))));
}

} // namespace

ComplexAmplitudeState qft_apply(const QftCircuit &c,
                                const ComplexAmplitudeState &s) {
    if (s.width() != c.width)
        throw DimensionMismatchError(
            "circuit width " + std::to_string(c.width) + " != state width " +
            std::to_string(s.width()));
    const unsigned n = c.width;
    std::vector<Complex> a(s.amplitudes().begin(), s.amplitudes().end());
    const std::size_t dim = a.size();
    auto mask_of = [n](unsigned q) { return std::size_t{1} << (n - 1 - q); };

    for (const QftGate &g : c.gates) {
        for (unsigned q : g.qubits)
            if (q >= n)
                throw IndexError("gate acts on qubit outside the register");
        switch (g.kind) {
        case QftGate::Kind::hadamard: {
            const std::size_t m = mask_of(g.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & m)
                    continue;
                const Complex lo = a[i];
                const Complex hi = a[i | m];
                a[i] = (lo + hi) * kInvSqrt2;
                a[i | m] = (lo - hi) * kInvSqrt2;
            }
            break;
        }
        case QftGate::Kind::controlled_phase: {
            if (!g.k)
                throw FormatError("controlled phase without k");
            const std::size_t both = mask_of(g.qubits[0]) | mask_of(g.qubits[1]);
            const Complex phase = controlled_phase_factor(*g.k);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & both) == both)
                    a[i] *= phase;
            break;
        }
        case QftGate::Kind::swap: {
            const std::size_t m1 = mask_of(g.qubits[0]);
            const std::size_t m2 = mask_of(g.qubits[1]);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & m1) && !(i & m2))
                    std::swap(a[i], a[(i & ~m1) | m2]);
            break;
        }
        }
    }
    return ComplexAmplitudeState::trusted(std::move(a));
}

ComplexAmplitudeState qft_product_state(const BitString &j) {
    const std::size_t n = j.size();
    if (n < 1 || n > kMaxCircuitWidth)
        throw RangeError("product state width out of range");
    // Output qubit l (l = 1 most significant) carries phase 0.j_{n-l+1}..j_n.
    auto state = ComplexAmplitudeState::basis(1, 0);
    for (std::size_t l = 1; l <= n; ++l) {
        const double frac = binary_fraction(j.suffix(n - l + 1));
        const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * frac);
        state = tensor(state, ComplexAmplitudeState::trusted(
                                  {kInvSqrt2, phase * kInvSqrt2}));
    }
    return state;
}

// ---------------------------------------------------------------------------

std::vector<Complex> SparseMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != dimension)
        throw DimensionMismatchError("sparse matrix dimension mismatch");
    std::vector<Complex> out(dimension);
    for (const Entry &e : entries)
        out[e.row] += e.value * v[e.col];
    return out;
}

std::vector<Complex>
StageFactorization::apply(std::span<const Complex> v) const {
    if (v.size() != permutation.size())
        throw DimensionMismatchError("factorization dimension mismatch");
    std::vector<Complex> cur(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        cur[i] = v[permutation[i]];
    for (const SparseMatrix &s : stages)
        cur = s.apply(cur);
    return cur;
}

DenseMatrix<Complex> StageFactorization::dense_product() const {
    const std::size_t n = permutation.size();
    DenseMatrix<Complex> out(n, n);
    std::vector<Complex> e(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::fill(e.begin(), e.end(), Complex{});
        e[col] = 1.0;
        const auto column = apply(e);
        for (std::size_t row = 0; row < n; ++row)
            out(row, col) = column[row];
    }
    return out;
}

StageFactorization stage_factorization(unsigned n) {
    if (n < 1 || n > kMaxFactorizationWidth)
        throw RangeError("factorization width must be in [1, " +
                         std::to_string(kMaxFactorizationWidth) + "] (got " +
                         std::to_string(n) + ")");
    const std::size_t dim = std::size_t{1} << n;
    const auto w = roots_of_unity(dim);

    StageFactorization f;
    f.width = n;
    f.permutation.resize(dim);
    for (std::size_t i = 0; i < dim; ++i)
        f.permutation[i] = bit_reverse(i, n);

    for (unsigned s = 1; s <= n; ++s) {
        const std::size_t half = std::size_t{1} << (s - 1);
        const std::size_t len = half * 2;
        const std::size_t stride = dim / len;
        SparseMatrix stage;
        stage.dimension = dim;
        stage.entries.reserve(2 * dim);
        for (std::size_t base = 0; base < dim; base += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const Complex tw = w[j * stride] * kInvSqrt2;
                stage.entries.push_back({base + j, base + j, kInvSqrt2});
                stage.entries.push_back({base + j, base + j + half, tw});
            }
            for (std::size_t j = 0; j < half; ++j) {
                const Complex tw = w[j * stride] * kInvSqrt2;
                stage.entries.push_back({base + j + half, base + j, kInvSqrt2});
                stage.entries.push_back({base + j + half, base + j + half, -tw});
            }
        }
        f.stages.push_back(std::move(stage));
    }
    return f;
}

double verify_factorization(const StageFactorization &f) {
    const std::size_t n = f.permutation.size();
    const auto product = f.dense_product();
    const auto reference = dft_matrix(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            row_sum += std::abs(product(i, j) - reference(i, j));
        worst = std::max(worst, row_sum);
    }
    return worst;
}

FourierComparison compare_fourier_paths(const SpectrumVector &x) {
    FourierComparison r;
    r.width = x.width();
    if (r.width > kMaxFactorizationWidth)
        throw RangeError("comparison width exceeds the dense bound");

    const auto reference = dft_direct(x);
    const auto fast = fft_radix2(x);
    const auto state = ComplexAmplitudeState::from_amplitudes(
        {x.values().begin(), x.values().end()}, kGateTolerance);
    const auto circuit_out = qft_apply(qft_build_circuit(std::max(r.width, 1U)), state);
    const auto staged = stage_factorization(std::max(r.width, 1U)).apply(x.values());

    r.fft_residual = max_abs_difference(reference.values(), fast.values());
    r.qft_residual = max_abs_difference(reference.values(), circuit_out.amplitudes());
    r.stage_residual = max_abs_difference(reference.values(), staged);

    const double in_norm = l2_norm(x.values());
    for (double out_norm :
         {l2_norm(reference.values()), l2_norm(fast.values()),
          l2_norm(circuit_out.amplitudes()), l2_norm(staged)})
        r.norm_defect = std::max(r.norm_defect, std::abs(out_norm - in_norm));
    return r;
}

// ---------------------------------------------------------------------------

std::vector<ComplexityLedger> complexity_report(unsigned n_min, unsigned n_max) {
    if (n_min < 1 || n_min > n_max || n_max > kMaxReportWidth)
        throw RangeError("complexity report needs 1 <= from <= to <= " +
                         std::to_string(kMaxReportWidth));
    std::vector<ComplexityLedger> out;
    for (unsigned n = n_min; n <= n_max; ++n) {
        const std::uint64_t big_n = std::uint64_t{1} << n;
        out.push_back({"dft_direct", n, big_n * big_n, big_n * (big_n - 1), 0});
        out.push_back({"fft_radix2", n, big_n / 2 * n, big_n * n, 0});
        out.push_back({"qft_circuit", n, 0, 0, qft_gate_count(n)});
    }
    return out;
}

std::string complexity_csv(const std::vector<ComplexityLedger> &ledgers) {
    struct Row {
        std::uint64_t dft = 0, fft_mults = 0, fft_adds = 0, qft = 0;
    };
    std::map<unsigned, Row> rows;
    for (const auto &l : ledgers) {
        Row &r = rows[l.n];
        if (l.method == "dft_direct")
            r.dft = l.complex_multiplications;
        else if (l.method == "fft_radix2") {
            r.fft_mults = l.complex_multiplications;
            r.fft_adds = l.complex_additions;
        } else if (l.method == "qft_circuit")
            r.qft = l.gate_count;
    }
    std::ostringstream os;
    os << "n,N,dft_mults,fft_mults,fft_adds,qft_gates\n";
    for (const auto &[n, r] : rows)
        os << n << ',' << (std::uint64_t{1} << n) << ',' << r.dft << ','
           << r.fft_mults << ',' << r.fft_adds << ',' << r.qft << '\n';
    return os.str();
}

} // namespace orthocomp
