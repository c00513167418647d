// config.cpp — INI-style sweep configuration parser

#include "dqd/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

namespace dqd {

namespace {

struct Cursor {
    const std::string& file;
    int line = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << file << ":" << line << ": " << msg;
        throw ParseError(os.str());
    }
};

std::string trim(std::string s) {
    const auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && is_space(s.front())) s.erase(s.begin());
    while (!s.empty() && is_space(s.back())) s.pop_back();
    return s;
}

double parse_number(const Cursor& cur, const std::string& key, const std::string& value) {
    if (value == "inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size())
            cur.fail("field '" + key + "': trailing characters in number '" + value + "'");
        return x;
    } catch (const std::exception&) {
        cur.fail("field '" + key + "': expected a number, got '" + value + "'");
    }
}

int parse_int(const Cursor& cur, const std::string& key, const std::string& value) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        cur.fail("field '" + key + "': expected an integer, got '" + value + "'");
    return out;
}

bool parse_bool(const Cursor& cur, const std::string& key, const std::string& value) {
    if (value == "true" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "no" || value == "0") return false;
    cur.fail("field '" + key + "': expected true/false, got '" + value + "'");
}

AxisKind parse_axis_kind(const Cursor& cur, const std::string& value) {
    if (value == "t") return AxisKind::time;
    if (value == "T") return AxisKind::temperature;
    if (value == "V") return AxisKind::coulomb;
    if (value == "omega_pair" || value == "omega") return AxisKind::omega_pair;
    if (value == "s") return AxisKind::decoherence_s;
    cur.fail("field 'name': unknown axis '" + value + "' (use t, T, V, omega_pair, s)");
}

MeasureKind parse_measure(const Cursor& cur, const std::string& value) {
    if (value == "concurrence_numeric" || value == "C") return MeasureKind::concurrence_numeric;
    if (value == "concurrence_paper" || value == "C_paper") return MeasureKind::concurrence_paper;
    if (value == "l1" || value == "C_l1") return MeasureKind::l1;
    if (value == "l1_paper" || value == "C_l1_eq16") return MeasureKind::l1_paper;
    cur.fail("field 'measures': unknown measure '" + value + "'");
}

struct PendingAxis {
    std::optional<AxisKind> kind;
    std::optional<double> min, max;
    std::optional<int> count;
    int line = 0;
};

} // namespace

SweepSpec parse_sweep_config(std::istream& in, const std::string& filename) {
    SweepSpec spec;
    spec.measures.clear();

    std::string section;
    std::vector<PendingAxis> axes;
    std::map<std::string, bool> seen; // section presence for required-field errors
    std::optional<std::string> dynamics_kind;
    bool have_tau = false, have_mu = false, have_channel = false, have_temperature = false;

    Cursor cur{filename, 0};
    std::string raw;
    while (std::getline(in, raw)) {
        ++cur.line;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                cur.fail("unterminated section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "model" && section != "dynamics" && section != "axis" &&
                section != "output")
                cur.fail("unknown section [" + section + "]");
            if (section == "axis") {
                PendingAxis ax;
                ax.line = cur.line;
                axes.push_back(ax);
            }
            seen[section] = true;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            cur.fail("expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) cur.fail("empty key");
        if (value.empty()) cur.fail("field '" + key + "': empty value");
        if (section.empty())
            cur.fail("key '" + key + "' outside of any section");

        if (section == "model") {
            if (key == "omega1") spec.model.omega1 = parse_number(cur, key, value);
            else if (key == "omega2") spec.model.omega2 = parse_number(cur, key, value);
            else if (key == "coulomb") spec.model.coulomb = parse_number(cur, key, value);
            else if (key == "temperature") {
                spec.model.temperature = parse_number(cur, key, value);
                have_temperature = true;
            } else cur.fail("unknown [model] field '" + key + "'");
        } else if (section == "dynamics") {
            if (key == "kind") {
                if (value == "markovian") spec.dynamics.kind = DynamicsKind::markovian;
                else if (value == "non_markovian") spec.dynamics.kind = DynamicsKind::non_markovian;
                else if (value == "channel") spec.dynamics.kind = DynamicsKind::channel;
                else cur.fail("field 'kind': unknown dynamics '" + value + "'");
                dynamics_kind = value;
            } else if (key == "tau") {
                spec.dynamics.tau = parse_number(cur, key, value);
                have_tau = true;
            } else if (key == "mu") {
                spec.dynamics.mu = parse_number(cur, key, value);
                have_mu = true;
            } else if (key == "channel") {
                if (value == "amplitude_damping") spec.dynamics.channel = ChannelKind::amplitude_damping;
                else if (value == "phase_flip") spec.dynamics.channel = ChannelKind::phase_flip;
                else if (value == "phase_damping") spec.dynamics.channel = ChannelKind::phase_damping;
                else cur.fail("field 'channel': unknown channel '" + value + "'");
                have_channel = true;
            } else cur.fail("unknown [dynamics] field '" + key + "'");
        } else if (section == "axis") {
            PendingAxis& ax = axes.back();
            if (key == "name") ax.kind = parse_axis_kind(cur, value);
            else if (key == "min") ax.min = parse_number(cur, key, value);
            else if (key == "max") ax.max = parse_number(cur, key, value);
            else if (key == "count") ax.count = parse_int(cur, key, value);
            else cur.fail("unknown [axis] field '" + key + "'");
        } else if (section == "output") {
            if (key == "measures") {
                std::stringstream ss(value);
                std::string item;
                while (std::getline(ss, item, ','))
                    spec.measures.push_back(parse_measure(cur, trim(item)));
            } else if (key == "mode") {
                if (value == "paper") {
                    spec.dephasing_mode = DephasingMode::paper_uniform_gamma;
                    spec.channel_route = ChannelRoute::paper_table;
                } else if (value == "kraus") {
                    spec.dephasing_mode = DephasingMode::kraus_exact;
                    spec.channel_route = ChannelRoute::kraus_exact;
                } else cur.fail("field 'mode': expected paper or kraus, got '" + value + "'");
            } else if (key == "regime_override") {
                spec.regime_override = parse_bool(cur, key, value);
            } else if (key == "seed") {
                spec.seed = static_cast<std::uint64_t>(parse_number(cur, key, value));
            } else cur.fail("unknown [output] field '" + key + "'");
        }
    }

    Cursor end{filename, cur.line};
    if (!seen.count("model")) end.fail("missing required section [model]");
    if (!have_temperature) end.fail("missing required field 'temperature' in [model]");
    if (!seen.count("dynamics")) end.fail("missing required section [dynamics]");
    if (!dynamics_kind) end.fail("missing required field 'kind' in [dynamics]");
    if (spec.dynamics.kind == DynamicsKind::channel) {
        if (!have_channel) end.fail("missing required field 'channel' in [dynamics]");
    } else {
        if (!have_tau) end.fail("missing required field 'tau' in [dynamics]");
        if (!have_mu) end.fail("missing required field 'mu' in [dynamics]");
    }
    if (axes.empty()) end.fail("missing required section [axis]");

    for (const auto& ax : axes) {
        Cursor at{filename, ax.line};
        if (!ax.kind) at.fail("missing required axis field 'name'");
        if (!ax.min) at.fail("missing required axis field 'min'");
        if (!ax.max) at.fail("missing required axis field 'max'");
        if (!ax.count) at.fail("missing required axis field 'count'");
        spec.axes.push_back(Axis{*ax.kind, *ax.min, *ax.max, *ax.count});
    }
    if (spec.measures.empty())
        spec.measures = {MeasureKind::concurrence_numeric, MeasureKind::l1};
    return spec;
}

SweepSpec load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");
    return parse_sweep_config(in, path);
}

} // namespace dqd
