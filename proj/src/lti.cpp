#include "orthocomp/lti.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthocomp/errors.hpp"

namespace orthocomp {

namespace {

constexpr Complex kI{0.0, 1.0};

using Vec2 = std::array<Complex, 2>;

Vec2 mul(const Matrix2 &m, const Vec2 &v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

Vec2 axpy(const Vec2 &y, Complex a, const Vec2 &x) {
    return {y[0] + a * x[0], y[1] + a * x[1]};
}

/// Hermitian H = mean * I + b . sigma.
struct PauliForm {
    double mean;
    double bx, by, bz;
    double radius() const { return std::sqrt(bx * bx + by * by + bz * bz); }
};

PauliForm pauli_form(const TwoLevelHamiltonian &h) {
    const double h11 = h(0, 0).real();
    const double h22 = h(1, 1).real();
    const Complex h12 = h(0, 1);
    // H12 = bx - i by
    return {0.5 * (h11 + h22), h12.real(), -h12.imag(), 0.5 * (h11 - h22)};
}

void check_step(const TwoLevelHamiltonian &h, double dt, double hbar) {
    if (!(hbar > 0.0))
        throw RangeError("hbar must be positive");
    const double phase = dt * h.norm() / hbar;
    if (phase > kMaxStepPhase)
        throw StepError("dt * ||H|| / hbar = " + std::to_string(phase) +
                        " exceeds " + std::to_string(kMaxStepPhase));
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

} // namespace

TwoLevelHamiltonian TwoLevelHamiltonian::make(Complex h11, Complex h12,
                                              Complex h21, Complex h22) {
    if (std::abs(h11.imag()) > kHermitianTolerance ||
        std::abs(h22.imag()) > kHermitianTolerance)
        throw NonHermitianError("diagonal entries must be real");
    if (std::abs(h21 - std::conj(h12)) > kHermitianTolerance)
        throw NonHermitianError("H21 must equal conj(H12)");
    for (Complex z : {h11, h12, h21, h22})
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NonHermitianError("non-finite Hamiltonian entry");
    // Store the exactly Hermitian part.
    return TwoLevelHamiltonian(Matrix2{{{h11.real(), h12}, {std::conj(h12), h22.real()}}});
}

double TwoLevelHamiltonian::norm() const {
    const PauliForm p = pauli_form(*this);
    return std::abs(p.mean) + p.radius();
}

TwoLevelState TwoLevelState::make(Complex c1, Complex c2) {
    const double n2 = std::norm(c1) + std::norm(c2);
    if (!(std::abs(n2 - 1.0) <= kTwoLevelNormTolerance))
        throw NormalizationError("|C1|^2 + |C2|^2 = " + std::to_string(n2));
    return TwoLevelState({c1, c2});
}

double TwoLevelState::norm() const {
    return std::sqrt(std::norm(c_[0]) + std::norm(c_[1]));
}

Vec2 Propagator::apply(const Vec2 &c) const { return mul(matrix, c); }

Propagator Propagator::then(const Propagator &later) const {
    Propagator out;
    out.elapsed = elapsed + later.elapsed;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.matrix[i][j] = later.matrix[i][0] * matrix[0][j] +
                               later.matrix[i][1] * matrix[1][j];
    return out;
}

double unitarity_defect(const Matrix2 &u) {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Complex g = std::conj(u[0][i]) * u[0][j] +
                              std::conj(u[1][i]) * u[1][j];
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

void TimeGrid::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw RangeError("time step must be positive");
    if (steps < 1)
        throw RangeError("time grid needs at least one step");
}

double Trajectory::max_norm_drift() const {
    double worst = 0.0;
    for (const auto &p : points)
        worst = std::max(worst, std::abs(p.norm - 1.0));
    return worst;
}

Trajectory evolve_rk4(const TwoLevelHamiltonian &h, const TwoLevelState &s0,
                      const TimeGrid &grid, double hbar) {
    grid.validate();
    check_step(h, grid.dt, hbar);

    // dC/dt = A C with A = -(i/hbar) H
    Matrix2 a{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            a[i][j] = -kI * h(i, j) / hbar;

    const double dt = grid.dt;
    Trajectory traj;
    traj.points.reserve(grid.steps + 1);
    Vec2 c = s0.amplitudes();
    auto record = [&](std::size_t k) {
        traj.points.push_back(
            {grid.time(k), c, std::sqrt(std::norm(c[0]) + std::norm(c[1]))});
    };
    record(0);
    for (std::size_t k = 1; k <= grid.steps; ++k) {
        const Vec2 k1 = mul(a, c);
        const Vec2 k2 = mul(a, axpy(c, 0.5 * dt, k1));
        const Vec2 k3 = mul(a, axpy(c, 0.5 * dt, k2));
        const Vec2 k4 = mul(a, axpy(c, dt, k3));
        for (int i = 0; i < 2; ++i)
            c[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        record(k);
    }
    return traj;
}

Propagator propagator_closed_form(const TwoLevelHamiltonian &h, double t,
                                  double hbar) {
    if (!(hbar > 0.0))
        throw RangeError("hbar must be positive");
    const PauliForm p = pauli_form(h);
    const double r = p.radius();
    Propagator u;
    u.elapsed = t;
    const Complex global = std::polar(1.0, -p.mean * t / hbar);
    if (r == 0.0) {
        u.matrix = {{{global, 0.0}, {0.0, global}}};
        return u;
    }
    // Eigenvalues mean +/- r with spectral projectors P± = (I ± n.sigma)/2.
    const double nx = p.bx / r, ny = p.by / r, nz = p.bz / r;
    const Matrix2 n_sigma{{{nz, Complex(nx, -ny)}, {Complex(nx, ny), -nz}}};
    const Complex e_plus = global * std::polar(1.0, -r * t / hbar);
    const Complex e_minus = global * std::polar(1.0, r * t / hbar);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Complex id = i == j ? 1.0 : 0.0;
            u.matrix[i][j] = e_plus * 0.5 * (id + n_sigma[i][j]) +
                             e_minus * 0.5 * (id - n_sigma[i][j]);
        }
    return u;
}

// ---------------------------------------------------------------------------

Samples delay(std::span<const double> x, std::size_t shift) {
    Samples out(x.size(), 0.0);
    for (std::size_t n = shift; n < x.size(); ++n)
        out[n] = x[n - shift];
    return out;
}

SystemUnderTest convolution_system(std::vector<double> impulse_response,
                                   double dt) {
    for (double v : impulse_response)
        if (!std::isfinite(v))
            throw FormatError("impulse response must be finite");
    return {"convolution", dt,
            [h = std::move(impulse_response)](std::span<const double> x) {
                Samples y(x.size(), 0.0);
                for (std::size_t n = 0; n < x.size(); ++n) {
                    const std::size_t taps = std::min(h.size(), n + 1);
                    double acc = 0.0;
                    for (std::size_t k = 0; k < taps; ++k)
                        acc += h[k] * x[n - k];
                    y[n] = acc;
                }
                return y;
            }};
}

SystemUnderTest schrodinger_system(const TwoLevelHamiltonian &h, int component,
                                   int basis, double dt, double hbar) {
    if (component != 1 && component != 2)
        throw IndexError("component must be 1 or 2");
    if (basis != 0 && basis != 1)
        throw IndexError("drive basis must be 0 or 1");
    if (!(dt > 0.0))
        throw RangeError("time step must be positive");
    check_step(h, dt, hbar);

    Matrix2 a{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            a[i][j] = -kI * h(i, j) / hbar;

    return {"schrodinger", dt, [a, component, basis, dt](std::span<const double> x) {
                Samples y(x.size(), 0.0);
                Vec2 c{0.0, 0.0};
                // RHS f(C, u) = A C + e_basis u
                auto rhs = [&](const Vec2 &v, double u) {
                    Vec2 out = mul(a, v);
                    out[basis] += u;
                    return out;
                };
                for (std::size_t n = 1; n < x.size(); ++n) {
                    const double u0 = x[n - 1];
                    const double u1 = x[n];
                    const double um = 0.5 * (u0 + u1);
                    const Vec2 k1 = rhs(c, u0);
                    const Vec2 k2 = rhs(axpy(c, 0.5 * dt, k1), um);
                    const Vec2 k3 = rhs(axpy(c, 0.5 * dt, k2), um);
                    const Vec2 k4 = rhs(axpy(c, dt, k3), u1);
                    for (int i = 0; i < 2; ++i)
                        c[i] += dt / 6.0 *
                                (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
                    y[n] = c[component - 1].real();
                }
                return y;
            }};
}

SystemUnderTest squaring_system() {
    return {"counterexample:nonlinear", 1.0, [](std::span<const double> x) {
                Samples y(x.begin(), x.end());
                for (double &v : y)
                    v *= v;
                return y;
            }};
}

SystemUnderTest time_varying_gain_system(double dt) {
    return {"counterexample:timevarying", dt,
            [dt](std::span<const double> x) {
                Samples y(x.size());
                for (std::size_t n = 0; n < x.size(); ++n)
                    y[n] = static_cast<double>(n) * dt * x[n];
                return y;
            }};
}

SystemUnderTest advance_system() {
    return {"counterexample:acausal", 1.0, [](std::span<const double> x) {
                Samples y(x.size(), 0.0);
                for (std::size_t n = 0; n + 1 < x.size(); ++n)
                    y[n] = x[n + 1];
                return y;
            }};
}

CheckReport check_linearity(const SystemUnderTest &sys,
                            std::span<const double> x1,
                            std::span<const double> x2, double a1, double a2) {
    if (x1.size() != x2.size())
        throw DimensionMismatchError("linearity inputs differ in length");
    Samples mix(x1.size());
    for (std::size_t n = 0; n < mix.size(); ++n)
        mix[n] = a1 * x1[n] + a2 * x2[n];
    const Samples y1 = sys(x1);
    const Samples y2 = sys(x2);
    const Samples y_mix = sys(mix);

    CheckReport r{"linearity"};
    double scale = std::max({max_abs(y1), max_abs(y2), max_abs(y_mix)});
    for (std::size_t n = 0; n < y_mix.size(); ++n)
        r.max_deviation = std::max(
            r.max_deviation, std::abs(y_mix[n] - (a1 * y1[n] + a2 * y2[n])));
    r.tolerance = kLtiRelativeTolerance * (1.0 + scale);
    r.pass = r.max_deviation <= r.tolerance;
    return r;
}

CheckReport check_time_invariance(const SystemUnderTest &sys,
                                  std::span<const double> x,
                                  std::size_t shift) {
    const Samples y = sys(x);
    const Samples y_shifted_input = sys(delay(x, shift));

    CheckReport r{"time_invariance"};
    for (std::size_t n = shift; n < x.size(); ++n)
        r.max_deviation = std::max(r.max_deviation,
                                   std::abs(y_shifted_input[n] - y[n - shift]));
    r.tolerance =
        kLtiRelativeTolerance * (1.0 + std::max(max_abs(y), max_abs(y_shifted_input)));
    r.pass = r.max_deviation <= r.tolerance;
    return r;
}

CheckReport check_causality(const SystemUnderTest &sys,
                            std::span<const double> x) {
    const auto first = std::find_if(x.begin(), x.end(),
                                    [](double v) { return v != 0.0; });
    const auto onset = static_cast<std::size_t>(first - x.begin());
    const Samples y = sys(x);

    CheckReport r{"causality"};
    for (std::size_t n = 0; n < onset && n < y.size(); ++n)
        r.max_deviation = std::max(r.max_deviation, std::abs(y[n]));
    r.tolerance = kCausalityTolerance;
    r.pass = r.max_deviation <= r.tolerance;
    return r;
}

} // namespace orthocomp
