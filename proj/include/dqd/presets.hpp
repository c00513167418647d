// presets.hpp — built-in figure presets fig1..fig12 rendered as CSV panels

#pragma once

#include <string>
#include <vector>

#include "dqd/sweep.hpp"

namespace dqd {

// One output file. Wide panels sweep a single axis and emit one measure
// column per curve value (e.g. "C(T=5)"); surface panels run a two-axis grid
// in long format; comparison panels emit C, C_l1 and their difference.
struct FigurePanel {
    std::string id; // e.g. "fig1a"
    SweepSpec spec; // axes/model/dynamics template
    MeasureKind wide_measure = MeasureKind::concurrence_numeric;
    AxisKind curve_axis = AxisKind::temperature;
    std::vector<double> curve_values; // nonempty -> wide format
    bool comparison = false;
};

// Panels for an id like "fig2" (all panels) or "fig2a" (one panel).
// Throws UnknownPreset.
std::vector<FigurePanel> figure_preset(const std::string& id);

// Every panel id, in figure order.
std::vector<std::string> all_panel_ids();

struct PanelOptions {
    int workers = 1;
    std::uint64_t seed = default_seed;
    bool use_kraus_mode = false; // exact-Kraus evolution instead of the
                                 // published uniform-gamma / table routes
    std::vector<MeasureKind> measure_override; // empty keeps the preset default
};

// CSV text for one panel.
std::string render_panel(const FigurePanel& panel, const PanelOptions& opt);

// The per-curve sweep of a wide panel with one curve value applied to the model.
SweepSpec panel_curve_spec(const FigurePanel& panel, double curve_value);

} // namespace dqd
