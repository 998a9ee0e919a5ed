#include "orthocomp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "orthocomp/errors.hpp"

namespace orthocomp::io {

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

double number_from_json(const json &j, const char *what) {
    if (!j.is_number())
        throw FormatError(std::string(what) + " must be a number");
    return j.get<double>();
}

Complex complex_from_json(const json &j, const char *what) {
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return {number_from_json(j[0], what), number_from_json(j[1], what)};
    throw FormatError(std::string(what) + " must be a number or [re, im]");
}

const json &member(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string kind_of(const json &j) {
    const json &k = member(j, "kind");
    if (!k.is_string())
        throw FormatError("'kind' must be a string");
    auto s = k.get<std::string>();
    if (s != "real" && s != "complex")
        throw FormatError("'kind' must be \"real\" or \"complex\"");
    return s;
}

template <typename T> json matrix_to_json(const DenseMatrix<T> &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t jdx = 0; jdx < m.cols(); ++jdx) {
            if constexpr (std::is_same_v<T, Complex>)
                row.push_back(complex_to_json(m(i, jdx)));
            else
                row.push_back(m(i, jdx));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
std::vector<std::vector<T>> rows_from_json(const json &j) {
    if (!j.is_array())
        throw FormatError("'matrix' must be an array of rows");
    std::vector<std::vector<T>> rows;
    for (const json &r : j) {
        if (!r.is_array())
            throw FormatError("matrix rows must be arrays");
        std::vector<T> row;
        for (const json &e : r) {
            if constexpr (std::is_same_v<T, Complex>)
                row.push_back(complex_from_json(e, "matrix entry"));
            else
                row.push_back(number_from_json(e, "matrix entry"));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json state_to_json(const AnyState &s) {
    return std::visit(
        [](const auto &st) {
            using T = typename std::decay_t<decltype(st)>::value_type;
            json amps = json::array();
            for (const T &a : st.amplitudes()) {
                if constexpr (std::is_same_v<T, Complex>)
                    amps.push_back(complex_to_json(a));
                else
                    amps.push_back(a);
            }
            return json{{"kind", std::is_same_v<T, Complex> ? "complex" : "real"},
                        {"amplitudes", std::move(amps)}};
        },
        s);
}

AnyState state_from_json(const json &j) {
    const std::string kind = kind_of(j);
    const json &amps = member(j, "amplitudes");
    if (!amps.is_array())
        throw FormatError("'amplitudes' must be an array");
    if (kind == "real") {
        std::vector<double> v;
        for (const json &a : amps)
            v.push_back(number_from_json(a, "real amplitude"));
        return RealAmplitudeState::from_amplitudes(std::move(v));
    }
    std::vector<Complex> v;
    for (const json &a : amps) {
        if (!a.is_array() || a.size() != 2)
            throw FormatError("complex amplitude must be [re, im]");
        v.push_back(complex_from_json(a, "complex amplitude"));
    }
    return ComplexAmplitudeState::from_amplitudes(std::move(v));
}

json gate_to_json(const OrthogonalGate &g) {
    return {{"kind", "real"}, {"matrix", matrix_to_json(g.matrix())}};
}

json gate_to_json(const UnitaryGate &g) {
    return {{"kind", "complex"}, {"matrix", matrix_to_json(g.matrix())}};
}

std::variant<OrthogonalGate, UnitaryGate> gate_from_json(const json &j) {
    const std::string kind = kind_of(j);
    const json &m = member(j, "matrix");
    if (kind == "real")
        return OrthogonalGate::from_matrix(
            DenseMatrix<double>::from_rows(rows_from_json<double>(m)));
    return UnitaryGate::from_matrix(
        DenseMatrix<Complex>::from_rows(rows_from_json<Complex>(m)));
}

TwoLevelHamiltonian hamiltonian_from_json(const json &j) {
    return TwoLevelHamiltonian::make(complex_from_json(member(j, "H11"), "H11"),
                                     complex_from_json(member(j, "H12"), "H12"),
                                     complex_from_json(member(j, "H21"), "H21"),
                                     complex_from_json(member(j, "H22"), "H22"));
}

TwoLevelState two_level_state_from_json(const json &j) {
    const AnyState s = state_from_json(j);
    return std::visit(
        [](const auto &st) {
            if (st.dimension() != 2)
                throw DimensionMismatchError("two-level state needs 2 amplitudes");
            return TwoLevelState::make(Complex(st[0]), Complex(st[1]));
        },
        s);
}

std::string signal_to_csv(const SampledSignal &s) {
    std::string out = "xi,value\n";
    for (std::size_t k = 0; k < s.size(); ++k) {
        out += format_double(s.abscissa(k));
        out += ',';
        out += format_double(s[k]);
        out += '\n';
    }
    return out;
}

SampledSignal signal_from_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw FormatError("empty signal file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "xi,value")
        throw FormatError("signal CSV must start with header 'xi,value'");
    std::vector<double> xi, values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw FormatError("line " + std::to_string(line_no) + ": expected 'xi,value'");
        try {
            std::size_t used = 0;
            const std::string a = line.substr(0, comma);
            const std::string b = line.substr(comma + 1);
            xi.push_back(std::stod(a, &used));
            if (used != a.size())
                throw std::invalid_argument("trailing characters");
            values.push_back(std::stod(b, &used));
            if (used != b.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::logic_error &) {
            throw FormatError("line " + std::to_string(line_no) + ": not a number");
        }
    }
    SampledSignal sig(std::move(values));
    for (std::size_t k = 0; k < xi.size(); ++k)
        if (std::abs(xi[k] - sig.abscissa(k)) > 1e-9)
            throw FormatError("xi column does not match the periodic grid 2*pi*k/M");
    return sig;
}

std::string trajectory_to_csv(const Trajectory &t) {
    std::string out = "t,re_c1,im_c1,re_c2,im_c2,norm\n";
    for (const auto &p : t.points) {
        for (double v : {p.t, p.c[0].real(), p.c[0].imag(), p.c[1].real(),
                         p.c[1].imag()}) {
            out += format_double(v);
            out += ',';
        }
        out += format_double(p.norm);
        out += '\n';
    }
    return out;
}

json check_report_to_json(const CheckReport &r) {
    return {{"check", r.check},
            {"max_deviation", r.max_deviation},
            {"pass", r.pass},
            {"tolerance", r.tolerance}};
}

json circuit_to_json(const QftCircuit &c) {
    json out = json::array();
    for (const QftGate &g : c.gates) {
        json k = g.k ? json(*g.k) : json(nullptr);
        out.push_back({{"gate", std::string(g.name())}, {"qubits", g.qubits}, {"k", k}});
    }
    return out;
}

json ledger_to_json(const ComplexityLedger &l) {
    return {{"method", l.method},
            {"n", l.n},
            {"complex_multiplications", l.complex_multiplications},
            {"complex_additions", l.complex_additions},
            {"gate_count", l.gate_count}};
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + p.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &p, const std::string &content) {
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + p.string() + "'");
    out << content;
    if (!out)
        throw IoError("write failed for '" + p.string() + "'");
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace orthocomp::io
