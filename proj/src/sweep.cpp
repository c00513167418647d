#include "dqd/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "dqd/measures.hpp"

namespace dqd {

std::string axis_name(AxisKind k) {
    switch (k) {
    case AxisKind::time: return "t";
    case AxisKind::temperature: return "T";
    case AxisKind::coulomb: return "V";
    case AxisKind::omega_pair: return "omega";
    case AxisKind::decoherence_s: return "s";
    }
    return "?";
}

std::string measure_label(MeasureKind m) {
    switch (m) {
    case MeasureKind::concurrence_numeric: return "C";
    case MeasureKind::concurrence_paper: return "C_paper";
    case MeasureKind::l1: return "C_l1";
    case MeasureKind::l1_paper: return "C_l1_eq16";
    }
    return "?";
}

namespace {

std::string dynamics_name(DynamicsKind k) {
    switch (k) {
    case DynamicsKind::markovian: return "markovian";
    case DynamicsKind::non_markovian: return "non_markovian";
    case DynamicsKind::channel: return "channel";
    }
    return "?";
}

bool has_axis(const std::vector<Axis>& axes, AxisKind k) {
    for (const auto& a : axes)
        if (a.kind == k) return true;
    return false;
}

} // namespace

void SweepSpec::check() const {
    model.check();
    if (axes.empty() || axes.size() > 2)
        throw SpecError("a sweep needs 1 or 2 axes");
    for (const auto& a : axes) {
        if (a.count < 2)
            throw SpecError("axis '" + axis_name(a.kind) + "' needs count >= 2");
        if (!(a.min < a.max))
            throw SpecError("axis '" + axis_name(a.kind) + "' needs min < max");
        if (!std::isfinite(a.min) || !std::isfinite(a.max))
            throw SpecError("axis '" + axis_name(a.kind) + "' bounds must be finite");
    }
    if (axes.size() == 2 && axes[0].kind == axes[1].kind)
        throw SpecError("the two axes must sweep different quantities");
    if (measures.empty())
        throw SpecError("at least one measure must be requested");

    const bool dephasing =
        dynamics.kind == DynamicsKind::markovian || dynamics.kind == DynamicsKind::non_markovian;
    if (dephasing) {
        MemoryParams{dynamics.tau, dynamics.mu}.check();
        if (!has_axis(axes, AxisKind::time))
            throw SpecError("dephasing dynamics sweep needs a t axis");
        if (has_axis(axes, AxisKind::decoherence_s))
            throw SpecError("an s axis requires channel dynamics");
        if (!regime_override) {
            const double four_tau = 4.0 * dynamics.tau;
            if (dynamics.kind == DynamicsKind::markovian && !(four_tau < 1.0))
                throw SpecError("markovian dynamics requires 4*tau < 1 (tau = " +
                                std::to_string(dynamics.tau) +
                                "); declare non_markovian or set regime_override");
            if (dynamics.kind == DynamicsKind::non_markovian && !(four_tau > 1.0))
                throw SpecError("non_markovian dynamics requires 4*tau > 1 (tau = " +
                                std::to_string(dynamics.tau) +
                                "); declare markovian or set regime_override");
        }
    } else {
        if (!has_axis(axes, AxisKind::decoherence_s))
            throw SpecError("channel dynamics sweep needs an s axis");
        if (has_axis(axes, AxisKind::time))
            throw SpecError("a t axis requires dephasing dynamics");
    }
}

bool SweepResult::all_ok() const {
    for (const auto& s : status)
        if (s != "ok") return false;
    return true;
}

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

struct PointResult {
    std::vector<double> values;
    std::string status = "ok";
};

// One grid point: thermal state, declared dynamics, requested measures.
PointResult evaluate_point(const SweepSpec& spec, const std::vector<double>& axis_values) {
    PointResult out;
    ModelParams p = spec.model;
    double t = 0, s = 0;
    for (std::size_t i = 0; i < spec.axes.size(); ++i) {
        const double v = axis_values[i];
        switch (spec.axes[i].kind) {
        case AxisKind::time: t = v; break;
        case AxisKind::temperature: p.temperature = v; break;
        case AxisKind::coulomb: p.coulomb = v; break;
        case AxisKind::omega_pair: p.omega1 = p.omega2 = v; break;
        case AxisKind::decoherence_s: s = v; break;
        }
    }

    out.values.assign(spec.measures.size(), nan_value);
    Matrix4 evolved;          // state (or table matrix) after the dynamics
    ThermalElements paper_el; // input for the closed-form measure columns
    try {
        const DensityMatrix rho0 = thermal_state(p);
        if (spec.dynamics.kind == DynamicsKind::channel) {
            const ThermalElements el0 = elements_from_matrix(rho0.mat, 1e-9);
            paper_el = paper_element_table(el0, spec.dynamics.channel, s);
            if (spec.channel_route == ChannelRoute::kraus_exact)
                evolved = apply_channel(rho0, make_channel({spec.dynamics.channel, s})).mat;
            else
                evolved = paper_el.to_matrix();
        } else {
            evolved = correlated_dephasing(rho0, t, spec.dynamics.tau, spec.dynamics.mu,
                                           spec.dephasing_mode)
                          .mat;
            paper_el = elements_from_matrix(evolved, 1e-9);
        }
    } catch (const Error& err) {
        out.status = err.what();
        return out;
    }

    for (std::size_t m = 0; m < spec.measures.size(); ++m) {
        try {
            switch (spec.measures[m]) {
            case MeasureKind::concurrence_numeric:
                out.values[m] = wootters_combination(evolved);
                break;
            case MeasureKind::concurrence_paper:
                out.values[m] = concurrence_paper(paper_el).value;
                break;
            case MeasureKind::l1:
                out.values[m] = l1_off_diagonal(evolved);
                break;
            case MeasureKind::l1_paper:
                out.values[m] = l1_coherence_paper_eq16(paper_el).value;
                break;
            }
        } catch (const ComplexEigenvalue&) {
            out.status = "complex_eigenvalue"; // closed-form path outside its domain
        } catch (const Error& err) {
            out.status = err.what();
        }
    }
    return out;
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("DQDSIM_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec, int workers) {
    spec.check();
    workers = resolve_workers(workers);

    const std::size_t n_rows = [&] {
        std::size_t n = 1;
        for (const auto& a : spec.axes) n *= static_cast<std::size_t>(a.count);
        return n;
    }();

    // Row-major over the axes; axis value tuples fixed up front so workers
    // only fill value slots.
    std::vector<std::vector<double>> axis_tuples(n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
        std::vector<double>& tup = axis_tuples[r];
        tup.resize(spec.axes.size());
        std::size_t rem = r;
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            const auto count = static_cast<std::size_t>(spec.axes[a].count);
            tup[a] = spec.axes[a].at(static_cast<int>(rem % count));
            rem /= count;
        }
    }

    std::vector<PointResult> points(n_rows);
    auto work = [&](std::atomic<std::size_t>& next) {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_rows) break;
            points[i] = evaluate_point(spec, axis_tuples[i]);
        }
    };
    if (workers <= 1) {
        std::atomic<std::size_t> next{0};
        work(next);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] { work(next); });
        for (auto& th : pool) th.join();
    }

    SweepResult res;
    res.n_axis_columns = static_cast<int>(spec.axes.size());
    for (const auto& a : spec.axes)
        res.columns.push_back(axis_name(a.kind));
    for (const auto m : spec.measures)
        res.columns.push_back(measure_label(m));

    res.meta.emplace_back("generator", version_string);
    res.meta.emplace_back("dynamics", dynamics_name(spec.dynamics.kind));
    if (spec.dynamics.kind == DynamicsKind::channel) {
        res.meta.emplace_back("channel", channel_kind_name(spec.dynamics.channel));
        res.meta.emplace_back("route", spec.channel_route == ChannelRoute::paper_table
                                           ? "paper_table"
                                           : "kraus_exact");
    } else {
        res.meta.emplace_back("tau", format_value(spec.dynamics.tau));
        res.meta.emplace_back("mu", format_value(spec.dynamics.mu));
        res.meta.emplace_back("mode", spec.dephasing_mode == DephasingMode::paper_uniform_gamma
                                          ? "paper"
                                          : "kraus");
    }
    if (!has_axis(spec.axes, AxisKind::omega_pair)) {
        res.meta.emplace_back("omega1", format_value(spec.model.omega1));
        res.meta.emplace_back("omega2", format_value(spec.model.omega2));
    }
    if (!has_axis(spec.axes, AxisKind::coulomb))
        res.meta.emplace_back("coulomb", format_value(spec.model.coulomb));
    if (!has_axis(spec.axes, AxisKind::temperature))
        res.meta.emplace_back("temperature", format_value(spec.model.temperature));
    res.meta.emplace_back("seed", std::to_string(spec.seed));

    res.rows.resize(n_rows);
    res.status.resize(n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
        res.rows[r] = axis_tuples[r];
        res.rows[r].insert(res.rows[r].end(), points[r].values.begin(), points[r].values.end());
        res.status[r] = points[r].status;
    }
    return res;
}

SweepResult compare_measures(SweepSpec spec, int workers) {
    auto ensure = [&](MeasureKind m) {
        for (const auto have : spec.measures)
            if (have == m) return;
        spec.measures.push_back(m);
    };
    ensure(MeasureKind::concurrence_numeric);
    ensure(MeasureKind::l1);
    SweepResult res = run_sweep(spec, workers);

    std::size_t conc_col = 0, l1_col = 0;
    for (std::size_t c = 0; c < res.columns.size(); ++c) {
        if (res.columns[c] == measure_label(MeasureKind::concurrence_numeric)) conc_col = c;
        if (res.columns[c] == measure_label(MeasureKind::l1)) l1_col = c;
    }
    res.columns.push_back("Cl1_minus_C");
    for (auto& row : res.rows)
        row.push_back(row[l1_col] - row[conc_col]);
    return res;
}

std::string format_value(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    std::string s(buf);
    // tidy exponents: 1e-06 -> 1e-6, 1e+10 -> 1e10
    if (const auto epos = s.find('e'); epos != std::string::npos) {
        std::string exp = s.substr(epos + 1);
        const bool neg = !exp.empty() && exp[0] == '-';
        if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) exp.erase(0, 1);
        while (exp.size() > 1 && exp[0] == '0') exp.erase(0, 1);
        s = s.substr(0, epos) + "e" + (neg ? "-" : "") + exp;
    }
    return s;
}

void write_csv(const SweepResult& result, std::ostream& out, bool include_status) {
    for (const auto& [key, value] : result.meta)
        out << "# " << key << "=" << value << "\n";
    out << "# columns=";
    for (std::size_t c = 0; c < result.columns.size(); ++c)
        out << (c ? "," : "") << result.columns[c];
    if (include_status) out << ",status";
    out << "\n";

    for (std::size_t c = 0; c < result.columns.size(); ++c)
        out << (c ? "," : "") << result.columns[c];
    if (include_status) out << ",status";
    out << "\n";

    for (std::size_t r = 0; r < result.rows.size(); ++r) {
        const auto& row = result.rows[r];
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_value(row[c]);
        if (include_status) out << "," << result.status[r];
        out << "\n";
    }
}

std::string csv_string(const SweepResult& result, bool include_status) {
    std::ostringstream os;
    write_csv(result, os, include_status);
    return os.str();
}

} // namespace dqd
