// presets.cpp — the fig1..fig12 panel catalog and its CSV rendering

#include "dqd/presets.hpp"

#include <algorithm>
#include <sstream>

namespace dqd {

namespace {

constexpr int curve_points = 201;   // 1-D sweeps
constexpr int surface_points = 101; // per surface axis

Axis time_axis() { return Axis{AxisKind::time, 0.0, 40.0, curve_points}; }
Axis s_axis(int count) { return Axis{AxisKind::decoherence_s, 0.0, 1.0, count}; }

DynamicsSpec markovian() { return DynamicsSpec{DynamicsKind::markovian, 0.2, 0.3}; }
DynamicsSpec non_markovian() { return DynamicsSpec{DynamicsKind::non_markovian, 5.0, 0.3}; }

DynamicsSpec channel_dynamics(ChannelKind kind) {
    DynamicsSpec d;
    d.kind = DynamicsKind::channel;
    d.channel = kind;
    return d;
}

ModelParams base_model(double t_kelvin, double coulomb) {
    ModelParams p;
    p.omega1 = 10;
    p.omega2 = 15;
    p.coulomb = coulomb;
    p.temperature = t_kelvin;
    return p;
}

// Panel variants a/b/c share one parameterization across fig1..fig4 and
// fig6..fig11: (a) temperature varies, (b) Coulomb varies, (c) the joint
// coupling omega1 = omega2 varies.
struct Variant {
    char letter;
    AxisKind swept;
    std::vector<double> curve_values;      // wide panels
    Axis surface_axis;                     // surface panels
    ModelParams model;                     // fixed parameters
};

std::vector<Variant> panel_variants() {
    std::vector<Variant> v;
    v.push_back({'a', AxisKind::temperature, {1e-6, 5, 14, 20},
                 Axis{AxisKind::temperature, 0.01, 20.0, surface_points}, base_model(1.0, 25)});
    v.push_back({'b', AxisKind::coulomb, {5, 15, 25, 40},
                 Axis{AxisKind::coulomb, 0.0, 40.0, surface_points}, base_model(0.1, 0)});
    Variant c{'c', AxisKind::omega_pair, {5, 10, 15, 20},
              Axis{AxisKind::omega_pair, 0.0, 20.0, surface_points}, base_model(0.1, 40)};
    c.model.omega1 = c.model.omega2 = 0;
    v.push_back(c);
    return v;
}

FigurePanel wide_panel(int fig, const Variant& v, const DynamicsSpec& dyn, MeasureKind measure) {
    FigurePanel p;
    p.id = "fig" + std::to_string(fig) + v.letter;
    p.spec.model = v.model;
    p.spec.axes = {time_axis()};
    p.spec.dynamics = dyn;
    p.spec.measures = {measure};
    p.wide_measure = measure;
    p.curve_axis = v.swept;
    p.curve_values = v.curve_values;
    return p;
}

FigurePanel surface_panel(int fig, const Variant& v, ChannelKind kind, MeasureKind measure) {
    FigurePanel p;
    p.id = "fig" + std::to_string(fig) + v.letter;
    p.spec.model = v.model;
    p.spec.axes = {s_axis(surface_points), v.surface_axis};
    p.spec.dynamics = channel_dynamics(kind);
    p.spec.measures = {measure};
    return p;
}

FigurePanel comparison_panel(const std::string& id, const SweepSpec& spec) {
    FigurePanel p;
    p.id = id;
    p.spec = spec;
    p.spec.measures = {MeasureKind::concurrence_numeric, MeasureKind::l1};
    p.comparison = true;
    return p;
}

std::vector<FigurePanel> build_catalog() {
    std::vector<FigurePanel> all;
    const auto variants = panel_variants();

    for (const auto& v : variants)
        all.push_back(wide_panel(1, v, markovian(), MeasureKind::concurrence_numeric));
    for (const auto& v : variants)
        all.push_back(wide_panel(2, v, non_markovian(), MeasureKind::concurrence_numeric));
    for (const auto& v : variants)
        all.push_back(wide_panel(3, v, markovian(), MeasureKind::l1));
    for (const auto& v : variants)
        all.push_back(wide_panel(4, v, non_markovian(), MeasureKind::l1));

    // fig5: concurrence against coherence over time, both regimes
    {
        SweepSpec s;
        s.model = base_model(0.01, 15);
        s.axes = {time_axis()};
        s.dynamics = markovian();
        all.push_back(comparison_panel("fig5a", s));
        s.dynamics = non_markovian();
        all.push_back(comparison_panel("fig5b", s));
    }

    const ChannelKind kinds[3] = {ChannelKind::amplitude_damping, ChannelKind::phase_flip,
                                  ChannelKind::phase_damping};
    for (int f = 6; f <= 8; ++f)
        for (const auto& v : variants)
            all.push_back(surface_panel(f, v, kinds[f - 6], MeasureKind::concurrence_numeric));
    for (int f = 9; f <= 11; ++f)
        for (const auto& v : variants)
            all.push_back(surface_panel(f, v, kinds[f - 9], MeasureKind::l1));

    // fig12: concurrence against coherence per channel
    for (int i = 0; i < 3; ++i) {
        SweepSpec s;
        s.model = base_model(0.1, 25);
        s.axes = {s_axis(curve_points)};
        s.dynamics = channel_dynamics(kinds[i]);
        all.push_back(comparison_panel(std::string("fig12") + static_cast<char>('a' + i), s));
    }
    return all;
}

const std::vector<FigurePanel>& catalog() {
    static const std::vector<FigurePanel> panels = build_catalog();
    return panels;
}

void apply_curve_value(ModelParams& p, AxisKind k, double v) {
    switch (k) {
    case AxisKind::temperature: p.temperature = v; break;
    case AxisKind::coulomb: p.coulomb = v; break;
    case AxisKind::omega_pair: p.omega1 = p.omega2 = v; break;
    default: throw SpecError("unsupported curve axis");
    }
}

} // namespace

SweepSpec panel_curve_spec(const FigurePanel& panel, double curve_value) {
    SweepSpec spec = panel.spec;
    apply_curve_value(spec.model, panel.curve_axis, curve_value);
    return spec;
}

namespace {

std::string render_wide(const FigurePanel& panel, const SweepSpec& spec, const PanelOptions& opt) {
    std::vector<SweepResult> runs;
    runs.reserve(panel.curve_values.size());
    for (const double cv : panel.curve_values) {
        SweepSpec per_curve = spec;
        apply_curve_value(per_curve.model, panel.curve_axis, cv);
        runs.push_back(run_sweep(per_curve, opt.workers));
    }

    const std::string curve_name = axis_name(panel.curve_axis);
    const std::string measure = measure_label(spec.measures.front());

    std::ostringstream out;
    out << "# generator=" << version_string << "\n";
    out << "# preset=" << panel.id << "\n";
    // fixed parameters from the first run, minus the per-curve ones
    for (const auto& [key, value] : runs.front().meta) {
        if (key == "generator" || key == "seed") continue;
        if (panel.curve_axis == AxisKind::temperature && key == "temperature") continue;
        if (panel.curve_axis == AxisKind::coulomb && key == "coulomb") continue;
        if (panel.curve_axis == AxisKind::omega_pair && (key == "omega1" || key == "omega2"))
            continue;
        out << "# " << key << "=" << value << "\n";
    }
    out << "# seed=" << spec.seed << "\n";

    std::size_t flagged = 0;
    for (const auto& run : runs)
        for (const auto& st : run.status)
            if (st != "ok") ++flagged;
    if (flagged > 0) out << "# warning=flagged_points=" << flagged << "\n";

    std::ostringstream header;
    header << "t";
    for (const double cv : panel.curve_values)
        header << "," << measure << "(" << curve_name << "=" << format_value(cv) << ")";
    out << "# columns=" << header.str() << "\n" << header.str() << "\n";

    const std::size_t n_rows = runs.front().rows.size();
    for (std::size_t r = 0; r < n_rows; ++r) {
        out << format_value(runs.front().rows[r][0]);
        for (const auto& run : runs)
            out << "," << format_value(run.rows[r][1]);
        out << "\n";
    }
    return out.str();
}

} // namespace

std::vector<FigurePanel> figure_preset(const std::string& id) {
    std::vector<FigurePanel> out;
    for (const auto& p : catalog()) {
        if (p.id == id || p.id.substr(0, p.id.size() - 1) == id)
            out.push_back(p);
    }
    if (out.empty())
        throw UnknownPreset("unknown preset '" + id + "'; valid ids are fig1..fig12 or a panel like fig2a");
    return out;
}

std::vector<std::string> all_panel_ids() {
    std::vector<std::string> ids;
    for (const auto& p : catalog())
        ids.push_back(p.id);
    return ids;
}

std::string render_panel(const FigurePanel& panel, const PanelOptions& opt) {
    SweepSpec spec = panel.spec;
    spec.seed = opt.seed;
    if (opt.use_kraus_mode) {
        spec.dephasing_mode = DephasingMode::kraus_exact;
        spec.channel_route = ChannelRoute::kraus_exact;
    }
    if (!opt.measure_override.empty() && !panel.comparison)
        spec.measures = opt.measure_override;

    if (!panel.curve_values.empty())
        return render_wide(panel, spec, opt);

    SweepResult res =
        panel.comparison ? compare_measures(spec, opt.workers) : run_sweep(spec, opt.workers);
    res.meta.insert(res.meta.begin() + 1, {"preset", panel.id});
    if (!res.all_ok()) {
        std::size_t flagged = 0;
        for (const auto& st : res.status)
            if (st != "ok") ++flagged;
        res.meta.emplace_back("warning", "flagged_points=" + std::to_string(flagged));
    }
    return csv_string(res, /*include_status=*/false);
}

} // namespace dqd
