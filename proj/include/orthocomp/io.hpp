#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "orthocomp/fourier.hpp"
#include "orthocomp/lti.hpp"
#include "orthocomp/signal.hpp"
#include "orthocomp/state.hpp"

namespace orthocomp::io {

using nlohmann::json;

/// %.17g; round-trips every double.
std::string format_double(double v);

// States: {"kind": "real"|"complex", "amplitudes": [...]}, complex entries
// as [re, im]. Gates: {"kind", "matrix": [[...], ...]} row-major.
json state_to_json(const AnyState &s);
/// FormatError on schema violations; NormalizationError etc. from the state.
AnyState state_from_json(const json &j);
json gate_to_json(const OrthogonalGate &g);
json gate_to_json(const UnitaryGate &g);
std::variant<OrthogonalGate, UnitaryGate> gate_from_json(const json &j);

/// {"H11": x, "H12": x, "H21": x, "H22": x}; each entry a number or [re, im].
TwoLevelHamiltonian hamiltonian_from_json(const json &j);
/// Accepts a complex two-level state file (kind "complex", 2 amplitudes)
/// or a real one.
TwoLevelState two_level_state_from_json(const json &j);

/// CSV with header `xi,value`, xi ascending, 17 significant digits.
std::string signal_to_csv(const SampledSignal &s);
SampledSignal signal_from_csv(const std::string &text);

/// CSV `t,re_c1,im_c1,re_c2,im_c2,norm`.
std::string trajectory_to_csv(const Trajectory &t);

json check_report_to_json(const CheckReport &r);
/// [{"gate": "H"|"CP"|"SWAP", "qubits": [...], "k": int|null}, ...]
json circuit_to_json(const QftCircuit &c);

json ledger_to_json(const ComplexityLedger &l);

/// IoError when the file cannot be read/written.
std::string read_file(const std::filesystem::path &p);
void write_file(const std::filesystem::path &p, const std::string &content);
/// FormatError on malformed JSON.
json parse_json(const std::string &text);

} // namespace orthocomp::io
