#include "orthocomp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "orthocomp/errors.hpp"
#include "orthocomp/fourier.hpp"
#include "orthocomp/io.hpp"
#include "orthocomp/lti.hpp"
#include "orthocomp/random.hpp"
#include "orthocomp/signal.hpp"
#include "orthocomp/state.hpp"

namespace orthocomp::cli {

namespace {

using io::json;

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t sample_count = 256;
    std::string quadrature = "trapezoid";
    double hbar = 1.0;
    std::vector<std::string> tolerance_overrides;
    std::string format;

    std::map<std::string, double> tolerances;

    void validate() {
        EncodingConfig{sample_count, parse_quadrature(quadrature)}.validate();
        if (!(hbar > 0.0))
            throw RangeError("--hbar must be positive");
        if (!format.empty() && format != "json" && format != "csv")
            throw FormatError("--format must be json or csv");
        for (const auto &item : tolerance_overrides) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw FormatError("--tol expects name=value, got '" + item + "'");
            double v = 0.0;
            try {
                v = std::stod(item.substr(eq + 1));
            } catch (const std::logic_error &) {
                throw FormatError("--tol value is not a number: '" + item + "'");
            }
            if (!(v > 0.0))
                throw RangeError("tolerances must be positive");
            tolerances[item.substr(0, eq)] = v;
        }
    }

    EncodingConfig encoding() const {
        return {sample_count, parse_quadrature(quadrature)};
    }

    double tolerance(const std::string &name, double fallback) const {
        const auto it = tolerances.find(name);
        return it == tolerances.end() ? fallback : it->second;
    }

    bool csv(bool by_default) const {
        return format.empty() ? by_default : format == "csv";
    }
};

void emit(std::ostream &out, const std::optional<std::string> &path,
          const std::string &content) {
    if (path)
        io::write_file(*path, content);
    else
        out << content;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

json gram_to_json(const GramReport &r) {
    return json::array({json::array({r.gram[0][0], r.gram[0][1]}),
                        json::array({r.gram[1][0], r.gram[1][1]})});
}

SpectrumVector spectrum_of(const AnyState &s) {
    return std::visit(
        [](const auto &st) {
            std::vector<Complex> v(st.amplitudes().begin(), st.amplitudes().end());
            return SpectrumVector(std::move(v));
        },
        s);
}

ComplexAmplitudeState as_complex(const SpectrumVector &x) {
    return ComplexAmplitudeState::from_amplitudes(
        {x.values().begin(), x.values().end()}, kGateTolerance);
}

json spectrum_to_json(const SpectrumVector &y) {
    return io::state_to_json(AnyState{as_complex(y)});
}

/// Input for the fourier subcommands: a state file, or a basis vector.
SpectrumVector fourier_input(const std::optional<std::string> &input,
                             std::optional<unsigned> width,
                             std::optional<std::size_t> basis) {
    if (input)
        return spectrum_of(io::state_from_json(io::parse_json(io::read_file(*input))));
    if (!width)
        throw FormatError("give --input FILE or -n with --basis");
    if (*width > kMaxCircuitWidth)
        throw RangeError("-n must be at most " + std::to_string(kMaxCircuitWidth));
    const auto delta =
        ComplexAmplitudeState::basis(std::size_t{1} << *width, basis.value_or(0));
    return SpectrumVector({delta.amplitudes().begin(), delta.amplitudes().end()});
}

struct LtiScenario {
    SystemUnderTest system;
    std::array<bool, 3> expected; // linearity, time invariance, causality
};

LtiScenario lti_scenario(const std::string &name, Rng &rng, double dt,
                         const std::optional<std::string> &hamiltonian_file,
                         double hbar) {
    if (name == "convolution") {
        std::normal_distribution<double> g;
        std::vector<double> h(16);
        for (auto &v : h)
            v = g(rng);
        return {convolution_system(std::move(h), dt), {true, true, true}};
    }
    if (name == "schrodinger") {
        auto h = hamiltonian_file
                     ? io::hamiltonian_from_json(
                           io::parse_json(io::read_file(*hamiltonian_file)))
                     : TwoLevelHamiltonian::make(0.0, 1.0, 1.0, 0.0);
        return {schrodinger_system(h, 1, 0, dt, hbar), {true, true, true}};
    }
    if (name == "counterexample:nonlinear")
        return {squaring_system(), {false, true, true}};
    if (name == "counterexample:timevarying")
        return {time_varying_gain_system(dt), {true, false, true}};
    if (name == "counterexample:acausal")
        return {advance_system(), {true, true, false}};
    throw FormatError("unknown system '" + name +
                      "' (convolution, schrodinger, counterexample:nonlinear, "
                      "counterexample:timevarying, counterexample:acausal)");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Orthogonal-bit and Fourier verification toolkit", "orthocomp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a TOML/INI file");

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for every random draw");
    app.add_option("--samples", cfg.sample_count, "Samples per O-bit waveform");
    app.add_option("--quadrature", cfg.quadrature, "trapezoid or simpson")
        ->check(CLI::IsMember({"trapezoid", "simpson"}));
    app.add_option("--hbar", cfg.hbar, "Reduced Planck constant scale");
    app.add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", cfg.tolerance_overrides,
                   "Tolerance override name=value (gram, evolve, compare, factorize)");

    std::function<int()> action;

    // ---- obit ------------------------------------------------------------
    auto *obit = app.add_subcommand("obit", "O-bit waveform encoding");
    obit->require_subcommand(1);
    std::optional<std::string> state_path, signal_path, out_path;

    auto *encode_cmd = obit->add_subcommand("encode", "State JSON -> signal CSV");
    encode_cmd->add_option("--state", state_path, "O-bit state file")->required();
    encode_cmd->add_option("--out", out_path, "Output file (default stdout)");
    encode_cmd->callback([&] {
        action = [&] {
            const AnyState s =
                io::state_from_json(io::parse_json(io::read_file(*state_path)));
            const auto *real = std::get_if<RealAmplitudeState>(&s);
            if (!real)
                throw KindMismatchError("O-bit states have real amplitudes");
            emit(out, out_path, io::signal_to_csv(encode(*real, cfg.encoding())));
            return kOk;
        };
    });

    auto *decode_cmd = obit->add_subcommand("decode", "Signal CSV -> state JSON");
    decode_cmd->add_option("--signal", signal_path, "Signal CSV file")->required();
    decode_cmd->add_option("--out", out_path, "Output file (default stdout)");
    decode_cmd->callback([&] {
        action = [&] {
            const auto sig = io::signal_from_csv(io::read_file(*signal_path));
            const auto s = decode(sig, cfg.encoding());
            emit(out, out_path, dump(io::state_to_json(AnyState{s})));
            return kOk;
        };
    });

    auto *gram_cmd = obit->add_subcommand("gram", "Gram table of the two basis waveforms");
    gram_cmd->callback([&] {
        action = [&] {
            const auto r = verify_orthonormality(cfg.encoding());
            const double tol = cfg.tolerance("gram", 1e-12);
            const bool pass = r.max_deviation <= tol;
            if (cfg.csv(false)) {
                std::string csv = "i,j,value\n";
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        csv += std::to_string(i) + "," + std::to_string(j) + "," +
                               io::format_double(r.gram[i][j]) + "\n";
                out << csv;
            } else {
                out << dump({{"samples", cfg.sample_count},
                             {"quadrature", cfg.quadrature},
                             {"gram", gram_to_json(r)},
                             {"max_deviation", r.max_deviation},
                             {"tolerance", tol},
                             {"pass", pass}});
            }
            return pass ? kOk : kCheckFailed;
        };
    });

    // ---- evolve ----------------------------------------------------------
    auto *evolve_cmd = app.add_subcommand("evolve", "RK4 evolution of a two-level system");
    std::optional<std::string> hamiltonian_path, summary_path;
    double t_final = 1.0, dt = 1e-3, t0 = 0.0;
    evolve_cmd->add_option("--hamiltonian", hamiltonian_path, "Hamiltonian JSON")->required();
    evolve_cmd->add_option("--state", state_path, "Initial state JSON")->required();
    evolve_cmd->add_option("--t", t_final, "Elapsed time");
    evolve_cmd->add_option("--dt", dt, "Time step");
    evolve_cmd->add_option("--t0", t0, "Start time");
    evolve_cmd->add_option("--out", out_path, "Trajectory CSV file");
    evolve_cmd->add_option("--summary", summary_path, "Summary JSON file (default stdout)");
    evolve_cmd->callback([&] {
        action = [&] {
            const auto h = io::hamiltonian_from_json(
                io::parse_json(io::read_file(*hamiltonian_path)));
            const auto s0 = io::two_level_state_from_json(
                io::parse_json(io::read_file(*state_path)));
            if (!(t_final > 0.0) || !(dt > 0.0))
                throw RangeError("--t and --dt must be positive");
            const auto steps = std::max<long long>(1, std::llround(t_final / dt));
            const TimeGrid grid{t0, t_final / static_cast<double>(steps),
                                static_cast<std::size_t>(steps)};
            const auto traj = evolve_rk4(h, s0, grid, cfg.hbar);

            double max_error = 0.0;
            for (const auto &p : traj.points) {
                const auto exact =
                    propagator_closed_form(h, p.t - t0, cfg.hbar).apply(s0.amplitudes());
                const double e = std::sqrt(std::norm(p.c[0] - exact[0]) +
                                           std::norm(p.c[1] - exact[1]));
                max_error = std::max(max_error, e);
            }
            const double tol = cfg.tolerance("evolve", 1e-6);
            const auto &last = traj.points.back();
            const json summary{{"steps", grid.steps},
                               {"dt", grid.dt},
                               {"t_final", last.t},
                               {"hbar", cfg.hbar},
                               {"max_error_vs_closed_form", max_error},
                               {"max_norm_drift", traj.max_norm_drift()},
                               {"final_state",
                                json::array({json::array({last.c[0].real(), last.c[0].imag()}),
                                             json::array({last.c[1].real(), last.c[1].imag()})})},
                               {"tolerance", tol},
                               {"pass", max_error <= tol}};
            if (out_path)
                io::write_file(*out_path, io::trajectory_to_csv(traj));
            emit(out, summary_path, dump(summary));
            return max_error <= tol ? kOk : kCheckFailed;
        };
    });

    // ---- lticheck --------------------------------------------------------
    auto *lti_cmd = app.add_subcommand("lticheck", "Linearity, time-invariance and causality checks");
    std::string system_name;
    std::size_t length = 256, shift = 7;
    double lti_dt = 0.01;
    lti_cmd->add_option("system", system_name,
                        "convolution | schrodinger | counterexample:nonlinear | "
                        "counterexample:timevarying | counterexample:acausal")
        ->required();
    lti_cmd->add_option("--length", length, "Samples per test signal");
    lti_cmd->add_option("--shift", shift, "Delay in samples for time invariance");
    lti_cmd->add_option("--dt", lti_dt, "Sample spacing");
    lti_cmd->add_option("--hamiltonian", hamiltonian_path, "Hamiltonian for schrodinger (default sigma_x)");
    lti_cmd->callback([&] {
        action = [&] {
            if (length < 16)
                throw RangeError("--length must be at least 16");
            if (shift >= length / 4)
                throw RangeError("--shift must be below length/4");
            Rng rng(cfg.seed);
            auto scenario = lti_scenario(system_name, rng, lti_dt, hamiltonian_path, cfg.hbar);
            // Pulses start after a quiet lead-in and end before a quiet tail
            // at least as long as the shift.
            const std::size_t lead = length / 8, tail = length / 4;
            const auto x1 = random_pulse(rng, length, lead, tail);
            const auto x2 = random_pulse(rng, length, lead, tail);
            std::uniform_real_distribution<double> coef(-2.0, 2.0);
            const double a1 = coef(rng), a2 = coef(rng);

            const std::array<CheckReport, 3> reports{
                check_linearity(scenario.system, x1, x2, a1, a2),
                check_time_invariance(scenario.system, x1, shift),
                check_causality(scenario.system, x1)};
            bool matches = true;
            json reps = json::array();
            for (std::size_t i = 0; i < 3; ++i) {
                matches = matches && reports[i].pass == scenario.expected[i];
                json r = io::check_report_to_json(reports[i]);
                r["expected_pass"] = scenario.expected[i];
                reps.push_back(std::move(r));
            }
            out << dump({{"system", scenario.system.name},
                         {"reports", std::move(reps)},
                         {"pattern_matches", matches}});
            return matches ? kOk : kCheckFailed;
        };
    });

    // ---- fourier ---------------------------------------------------------
    auto *fourier = app.add_subcommand("fourier", "DFT, FFT, QFT circuit and stage factorization");
    fourier->require_subcommand(1);
    std::optional<unsigned> width;
    std::optional<std::size_t> basis;
    std::optional<std::string> input_path, circuit_path;
    unsigned trials = 20, n_from = 1, n_to = 10;

    auto add_input_opts = [&](CLI::App *c) {
        c->add_option("--input", input_path, "State JSON input");
        c->add_option("-n", width, "Register width (log2 N)");
        c->add_option("--basis", basis, "Basis index j for a delta input");
        c->add_option("--out", out_path, "Output file (default stdout)");
    };

    auto *dft_cmd = fourier->add_subcommand("dft", "Direct transform");
    add_input_opts(dft_cmd);
    dft_cmd->callback([&] {
        action = [&] {
            emit(out, out_path, dump(spectrum_to_json(dft_direct(fourier_input(input_path, width, basis)))));
            return kOk;
        };
    });

    auto *fft_cmd = fourier->add_subcommand("fft", "Radix-2 FFT");
    add_input_opts(fft_cmd);
    fft_cmd->callback([&] {
        action = [&] {
            FftCounters counters;
            const auto y = fft_radix2(fourier_input(input_path, width, basis), &counters);
            json j = spectrum_to_json(y);
            j["multiplications"] = counters.multiplications;
            j["additions"] = counters.additions;
            emit(out, out_path, dump(j));
            return kOk;
        };
    });

    auto *qft_cmd = fourier->add_subcommand("qft", "QFT circuit: dump and/or apply");
    add_input_opts(qft_cmd);
    qft_cmd->add_option("--circuit", circuit_path, "Write the gate list JSON here");
    qft_cmd->callback([&] {
        action = [&] {
            const bool has_input = input_path || basis;
            std::optional<SpectrumVector> x;
            if (has_input)
                x = fourier_input(input_path, width, basis);
            const unsigned n = x ? x->width() : width.value_or(0);
            if (!x && !width)
                throw FormatError("qft needs -n or an input state");
            const auto circuit = qft_build_circuit(n);
            if (circuit_path)
                io::write_file(*circuit_path, dump(io::circuit_to_json(circuit)));
            if (x)
                emit(out, out_path,
                     dump(io::state_to_json(AnyState{qft_apply(circuit, as_complex(*x))})));
            else if (!circuit_path)
                emit(out, out_path, dump(io::circuit_to_json(circuit)));
            return kOk;
        };
    });

    auto *fact_cmd = fourier->add_subcommand("factorize", "Sparse stage factorization of the DFT");
    fact_cmd->add_option("-n", width, "Register width (log2 N)")->required();
    fact_cmd->callback([&] {
        action = [&] {
            const auto f = stage_factorization(*width);
            const double residual = verify_factorization(f);
            const double tol = cfg.tolerance("factorize", 1e-10);
            json nnz = json::array();
            for (const auto &s : f.stages)
                nnz.push_back(s.nonzeros());
            out << dump({{"n", f.width},
                         {"N", f.permutation.size()},
                         {"stages", f.stages.size()},
                         {"nonzeros_per_stage", std::move(nnz)},
                         {"residual", residual},
                         {"tolerance", tol},
                         {"pass", residual <= tol}});
            return residual <= tol ? kOk : kCheckFailed;
        };
    });

    auto *cmp_cmd = fourier->add_subcommand("compare", "Four-way equivalence on seeded random states");
    cmp_cmd->add_option("-n", width, "Register width (log2 N)")->required();
    cmp_cmd->add_option("--trials", trials, "Random states to test");
    cmp_cmd->callback([&] {
        action = [&] {
            if (*width < 1 || *width > kMaxFactorizationWidth)
                throw RangeError("-n must be in [1, " + std::to_string(kMaxFactorizationWidth) + "]");
            const double tol = cfg.tolerance("compare", 1e-10);
            Rng rng(cfg.seed);
            FourierComparison worst;
            worst.width = *width;
            for (unsigned t = 0; t < trials; ++t) {
                const auto s = random_complex_state(rng, *width);
                const auto r = compare_fourier_paths(
                    SpectrumVector({s.amplitudes().begin(), s.amplitudes().end()}));
                worst.fft_residual = std::max(worst.fft_residual, r.fft_residual);
                worst.qft_residual = std::max(worst.qft_residual, r.qft_residual);
                worst.stage_residual = std::max(worst.stage_residual, r.stage_residual);
                worst.norm_defect = std::max(worst.norm_defect, r.norm_defect);
            }
            const double factor_residual = verify_factorization(stage_factorization(*width));
            const bool pass = worst.fft_residual <= tol && worst.qft_residual <= tol &&
                              worst.stage_residual <= tol && factor_residual <= tol &&
                              worst.norm_defect <= tol;
            out << dump({{"n", *width},
                         {"trials", trials},
                         {"seed", cfg.seed},
                         {"fft_vs_dft", worst.fft_residual},
                         {"qft_vs_dft", worst.qft_residual},
                         {"stages_vs_dft", worst.stage_residual},
                         {"factorization_residual", factor_residual},
                         {"norm_defect", worst.norm_defect},
                         {"tolerance", tol},
                         {"pass", pass}});
            return pass ? kOk : kCheckFailed;
        };
    });

    auto *cx_cmd = fourier->add_subcommand("complexity", "Operation and gate counts per width");
    cx_cmd->add_option("--from", n_from, "Smallest width");
    cx_cmd->add_option("--to", n_to, "Largest width");
    cx_cmd->add_option("--out", out_path, "Output file (default stdout)");
    cx_cmd->callback([&] {
        action = [&] {
            const auto ledgers = complexity_report(n_from, n_to);
            if (cfg.csv(true)) {
                emit(out, out_path, complexity_csv(ledgers));
            } else {
                json j = json::array();
                for (const auto &l : ledgers)
                    j.push_back(io::ledger_to_json(l));
                emit(out, out_path, dump(j));
            }
            return kOk;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }

    try {
        cfg.validate();
        return action ? action() : kValidationError;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const nlohmann::json::exception &e) {
        err << "error: FormatError: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }
}

} // namespace orthocomp::cli
