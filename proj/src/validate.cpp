// validate.cpp — invariant suites shared by `dqdsim validate` and the
// acceptance harness

#include "dqd/validate.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dqd/channels.hpp"
#include "dqd/core.hpp"
#include "dqd/measures.hpp"
#include "dqd/presets.hpp"
#include "dqd/random_states.hpp"
#include "dqd/rtn.hpp"
#include "dqd/sweep.hpp"

namespace dqd::validate {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

constexpr double inf = std::numeric_limits<double>::infinity();

} // namespace

CheckResult spectral_oracle(int n_params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double max_gap = 0, max_resid = 0;
    for (int k = 0; k < n_params; ++k) {
        const ModelParams p = random_model_params(rng);
        const Spectrum sp = spectrum(p);
        const Matrix4d h = build_hamiltonian(p);
        Eigen::SelfAdjointEigenSolver<Matrix4d> es(h);

        std::array<double, 4> analytic = sp.e;
        std::array<double, 4> numeric{};
        for (int i = 0; i < 4; ++i) numeric[i] = es.eigenvalues()(i);
        std::sort(analytic.begin(), analytic.end());
        double scale = 1.0;
        for (double e : analytic) scale = std::max(scale, std::abs(e));
        for (int i = 0; i < 4; ++i)
            max_gap = std::max(max_gap, std::abs(analytic[i] - numeric[i]) / scale);

        const auto phi = eigenvectors(p);
        for (int i = 0; i < 4; ++i)
            max_resid = std::max(max_resid, (h * phi[i] - sp.e[i] * phi[i]).norm());
    }
    CheckResult r;
    r.name = "spectral_oracle";
    r.hard_ok = max_gap <= 1e-10 && max_resid < 1e-9;
    r.detail = "max relative eigenvalue gap " + num(max_gap) + ", max eigenvector residual " +
               num(max_resid) + " over " + std::to_string(n_params) + " parameter draws";
    return r;
}

CheckResult thermal_oracle(int n_params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double max_gap = 0, max_herm = 0, max_trace = 0, min_eig = 0, max_structure = 0;
    for (int k = 0; k < n_params; ++k) {
        const ModelParams p = random_model_params(rng);
        const Matrix4 closed = thermal_elements(p).to_matrix();
        const DensityMatrix numeric = thermal_state_numeric(p);
        max_gap = std::max(max_gap, (closed - numeric.mat).cwiseAbs().maxCoeff());
        const DensityMatrix closed_dm{closed};
        max_herm = std::max({max_herm, closed_dm.herm_defect(), numeric.herm_defect()});
        max_trace = std::max({max_trace, closed_dm.trace_defect(), numeric.trace_defect()});
        min_eig = std::min({min_eig, closed_dm.min_eigenvalue(), numeric.min_eigenvalue()});
        // layout symmetry on the oracle path
        const ThermalElements from_numeric = elements_from_matrix(numeric.mat, 1e-8);
        max_structure = std::max(
            max_structure, (numeric.mat - from_numeric.to_matrix()).cwiseAbs().maxCoeff());
    }

    // beta = 0: equal weights give the maximally mixed state
    ModelParams hot;
    hot.omega1 = 10;
    hot.omega2 = 15;
    hot.coulomb = 25;
    hot.temperature = inf;
    const double hot_gap =
        (thermal_state(hot).mat - 0.25 * Matrix4::Identity()).cwiseAbs().maxCoeff();

    CheckResult r;
    r.name = "thermal_oracle";
    r.hard_ok = max_gap <= 1e-10 && max_herm <= 1e-12 && max_trace <= 1e-12 &&
                min_eig >= -1e-10 && max_structure <= 1e-10 && hot_gap <= 1e-14;
    r.detail = "closed form vs eigendecomposition gap " + num(max_gap) + ", hermiticity " +
               num(max_herm) + ", trace " + num(max_trace) + ", lambda_min " + num(min_eig) +
               ", layout " + num(max_structure) + ", beta=0 vs I/4 " + num(hot_gap);
    return r;
}

CheckResult concurrence_ground_truth(int n_states, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double bell_err = std::abs(concurrence_numeric(bell_phi_plus()).value - 1.0);
    const double mixed_val = concurrence_numeric(maximally_mixed()).value;

    double max_pure_gap = 0;
    for (int k = 0; k < n_states; ++k) {
        const Vector4c psi = random_state_vector(rng);
        const double exact = 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
        const double numeric = concurrence_numeric(pure_state(psi)).value;
        max_pure_gap = std::max(max_pure_gap, std::abs(exact - numeric));
    }

    double max_lu_gap = 0, max_range = 0;
    for (int k = 0; k < n_states; ++k) {
        const DensityMatrix rho = random_mixed_state(rng);
        const double c = concurrence_numeric(rho).value;
        max_range = std::max(max_range, std::max(c - 1.0, -c));
        const Matrix4 u = kron(random_unitary_2(rng), random_unitary_2(rng));
        const DensityMatrix rotated{u * rho.mat * u.adjoint()};
        max_lu_gap = std::max(max_lu_gap, std::abs(c - concurrence_numeric(rotated).value));
    }

    CheckResult r;
    r.name = "concurrence_ground_truth";
    r.hard_ok = bell_err <= 1e-10 && mixed_val == 0.0 && max_pure_gap <= 1e-9 &&
                max_lu_gap <= 1e-9 && max_range <= 1e-10;
    r.detail = "Bell error " + num(bell_err) + ", mixed " + num(mixed_val) + ", pure-formula gap " +
               num(max_pure_gap) + ", local-unitary gap " + num(max_lu_gap) + " over " +
               std::to_string(n_states) + " states";
    return r;
}

CheckResult reconciliation_report(int n_points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int conc_disagree = 0, conc_complex = 0, coh_disagree = 0;
    double max_layout_gap = 0, max_range = 0, min_l1 = 0;
    for (int k = 0; k < n_points; ++k) {
        const ModelParams p = random_model_params(rng);
        const ThermalElements el = thermal_elements(p);
        const DensityMatrix rho{el.to_matrix()};

        const double c_num = concurrence_numeric(rho).value;
        max_range = std::max(max_range, std::max(c_num - 1.0, -c_num));
        try {
            const double c_pap = concurrence_paper(el).value;
            if (std::abs(c_pap - c_num) > 1e-6) ++conc_disagree;
        } catch (const ComplexEigenvalue&) {
            ++conc_complex;
            ++conc_disagree;
        }

        const double l1_def = l1_coherence(rho).value;
        min_l1 = std::min(min_l1, l1_def);
        max_layout_gap = std::max(max_layout_gap, std::abs(l1_def - l1_structured(el)));
        if (std::abs(l1_coherence_paper_eq16(el).value - l1_def) > 1e-6) ++coh_disagree;
    }
    CheckResult r;
    r.name = "reconciliation_report";
    // disagreement of the closed-form paths is reported, never failed; only
    // the authoritative paths' own invariants gate.
    r.hard_ok = max_range <= 1e-10 && min_l1 >= 0 && max_layout_gap <= 1e-12;
    std::ostringstream os;
    os << "closed-form concurrence differs at " << conc_disagree << "/" << n_points << " points ("
       << conc_complex << " complex); expanded coherence differs at " << coh_disagree << "/"
       << n_points << "; layout identity gap " << num(max_layout_gap);
    r.detail = os.str();
    r.notes.push_back("closed-form eigenvalue and expanded-coherence disagreement is a recorded "
                      "property of those formulas, not a failure");
    return r;
}

CheckResult kernel_properties() {
    const std::vector<double> taus = {0.1, 0.2, 0.25, 1.0, 5.0};
    const auto grid = linspace(0.0, 40.0, 1601);

    bool f0_exact = true;
    double max_abs = 0;
    for (double tau : taus) {
        if (memory_kernel_F(0.0, tau) != 1.0) f0_exact = false;
        for (double t : grid)
            max_abs = std::max(max_abs, std::abs(memory_kernel_F(t, tau)));
    }

    bool monotone = true;
    double prev = 2;
    for (double t : grid) {
        const double f = memory_kernel_F(t, 0.2);
        if (f > prev + 1e-12) monotone = false;
        prev = f;
    }

    int sign_changes = 0;
    double last = memory_kernel_F(grid[1], 5.0);
    for (std::size_t i = 2; i < grid.size(); ++i) {
        const double f = memory_kernel_F(grid[i], 5.0);
        if (f * last < 0) ++sign_changes;
        if (f != 0) last = f;
    }

    double boundary_dev = 0;
    for (double t : linspace(0.0, 20.0, 801)) {
        const double limit = memory_kernel_F(t, 0.25);
        boundary_dev = std::max(boundary_dev,
                                std::abs(memory_kernel_F(t, 0.25 + 1e-6) - limit));
        boundary_dev = std::max(boundary_dev,
                                std::abs(memory_kernel_F(t, 0.25 - 1e-6) - limit));
    }

    CheckResult r;
    r.name = "kernel_properties";
    r.hard_ok = f0_exact && max_abs <= 1.0 + 1e-12 && monotone && sign_changes >= 1 &&
                boundary_dev < 1e-4;
    r.detail = "F(0)=1 " + std::string(f0_exact ? "exact" : "VIOLATED") + ", max|F| " +
               num(max_abs) + ", tau=0.2 monotone " + (monotone ? "yes" : "NO") +
               ", tau=5 sign changes " + std::to_string(sign_changes) + ", 4tau=1 continuity " +
               num(boundary_dev);
    return r;
}

CheckResult channel_soundness(int n_states, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TwoQubitChannel> channels;
    for (const ChannelKind kind :
         {ChannelKind::amplitude_damping, ChannelKind::phase_flip, ChannelKind::phase_damping})
        for (double s : {0.0, 0.25, 0.5, 0.75, 1.0})
            channels.push_back(make_channel({kind, s}));
    channels.push_back(correlated_dephasing_channel(0.3, 0.0));
    channels.push_back(correlated_dephasing_channel(0.5, 0.3));
    channels.push_back(correlated_dephasing_channel(0.2, 1.0));

    double max_completeness = 0;
    for (const auto& ch : channels)
        max_completeness = std::max(max_completeness, ch.completeness_defect());

    double max_trace = 0, max_herm = 0, min_eig = 0;
    for (int k = 0; k < n_states; ++k) {
        const DensityMatrix rho = random_mixed_state(rng);
        const DensityMatrix out = apply_channel(rho, channels[k % channels.size()]);
        max_trace = std::max(max_trace, out.trace_defect());
        max_herm = std::max(max_herm, out.herm_defect());
        min_eig = std::min(min_eig, out.min_eigenvalue());
    }

    const TwoQubitChannel full_damping = make_channel({ChannelKind::amplitude_damping, 1.0});
    Matrix4 ground = Matrix4::Zero();
    ground(0, 0) = 1.0;
    double max_ground_gap = 0;
    for (int k = 0; k < 50; ++k) {
        const DensityMatrix out = apply_channel(random_mixed_state(rng), full_damping);
        max_ground_gap = std::max(max_ground_gap, (out.mat - ground).cwiseAbs().maxCoeff());
    }

    CheckResult r;
    r.name = "channel_soundness";
    r.hard_ok = max_completeness <= 1e-12 && max_trace <= 1e-12 && max_herm <= 1e-12 &&
                min_eig >= -1e-10 && max_ground_gap <= 1e-12;
    r.detail = "completeness defect " + num(max_completeness) + ", trace " + num(max_trace) +
               ", hermiticity " + num(max_herm) + ", lambda_min " + num(min_eig) +
               ", AD(s=1) vs |00><00| " + num(max_ground_gap) + " over " +
               std::to_string(n_states) + " states";
    return r;
}

CheckResult table_adjudication() {
    ModelParams p1;
    p1.omega1 = 10;
    p1.omega2 = 15;
    p1.coulomb = 25;
    p1.temperature = 0.1;
    ModelParams p2 = p1;
    p2.coulomb = 40;
    p2.temperature = 0.5;

    double pf_pd_gap = 0, ad_trace_defect = 0, ad_min_eig = 0, kraus_min_eig = 0,
           kraus_trace = 0;
    for (const ModelParams& p : {p1, p2}) {
        const ThermalElements el = thermal_elements(p);
        for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            for (const ChannelKind kind : {ChannelKind::phase_flip, ChannelKind::phase_damping})
                pf_pd_gap = std::max(pf_pd_gap, paper_element_tables(el, kind, s).max_abs_gap);
            const TableComparison ad =
                paper_element_tables(el, ChannelKind::amplitude_damping, s);
            ad_trace_defect = std::max(ad_trace_defect, ad.trace_defect);
            ad_min_eig = std::min(ad_min_eig, ad.min_eigenvalue);
            const DensityMatrix evolved = apply_channel(
                DensityMatrix{el.to_matrix()}, make_channel({ChannelKind::amplitude_damping, s}));
            kraus_min_eig = std::min(kraus_min_eig, evolved.min_eigenvalue());
            kraus_trace = std::max(kraus_trace, evolved.trace_defect());
        }
    }

    CheckResult r;
    r.name = "table_adjudication";
    r.hard_ok = pf_pd_gap <= 1e-12 && ad_trace_defect > 1e-6 && ad_min_eig < -1e-6 &&
                kraus_min_eig >= -1e-10 && kraus_trace <= 1e-12;
    r.detail = "PF/PD table vs Kraus gap " + num(pf_pd_gap) + "; AD table trace defect " +
               num(ad_trace_defect) + ", min eigenvalue " + num(ad_min_eig) +
               " (expected nonzero); Kraus path trace " + num(kraus_trace) + ", lambda_min " +
               num(kraus_min_eig);
    r.notes.push_back("the AD table's defects are the published formulas' own; the Kraus "
                      "applicator stays the authoritative AD evolution");
    return r;
}

namespace {

struct WideColumns {
    std::vector<double> t;
    std::vector<std::vector<double>> curves;
};

WideColumns wide_columns(const std::string& panel_id, int workers) {
    const FigurePanel panel = figure_preset(panel_id).front();
    WideColumns out;
    for (const double cv : panel.curve_values) {
        const SweepResult res = run_sweep(panel_curve_spec(panel, cv), workers);
        std::vector<double> col;
        col.reserve(res.rows.size());
        if (out.t.empty())
            for (const auto& row : res.rows) out.t.push_back(row[0]);
        for (const auto& row : res.rows) col.push_back(row[1]);
        out.curves.push_back(std::move(col));
    }
    return out;
}

bool non_increasing(const std::vector<double>& v, double tol) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1] + tol) return false;
    return true;
}

// first grid value where the column is (numerically) zero; +inf when never
double first_zero(const std::vector<double>& axis, const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] <= 1e-12) return axis[i];
    return inf;
}

int local_maxima(const std::vector<double>& v) {
    int n = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] > v[i - 1] && v[i] > v[i + 1]) ++n;
    return n;
}

// column of a 2-axis sweep at fixed inner-axis index
std::vector<double> surface_slice(const SweepResult& res, int inner_count, int inner_index,
                                  std::size_t value_col) {
    std::vector<double> out;
    for (std::size_t r = inner_index; r < res.rows.size();
         r += static_cast<std::size_t>(inner_count))
        out.push_back(res.rows[r][value_col]);
    return out;
}

} // namespace

CheckResult figure_shapes(int workers) {
    std::vector<std::string> problems;

    // fig1a: monotone decay, hotter columns die first
    {
        const WideColumns w = wide_columns("fig1a", workers);
        for (const auto& col : w.curves)
            if (!non_increasing(col, 1e-10)) problems.push_back("fig1a column not monotone");
        const double z_cold = first_zero(w.t, w.curves.front());
        const double z_hot = first_zero(w.t, w.curves.back());
        if (!(z_hot < z_cold))
            problems.push_back("fig1a hottest column does not reach zero first");
    }

    // fig2a: memory revivals in the coldest column
    {
        const WideColumns w = wide_columns("fig2a", workers);
        if (local_maxima(w.curves.front()) < 2)
            problems.push_back("fig2a cold column lacks revivals");
    }

    // fig5: coherence dominates concurrence on the whole grid
    for (const std::string id : {"fig5a", "fig5b"}) {
        const FigurePanel panel = figure_preset(id).front();
        const SweepResult res = compare_measures(panel.spec, workers);
        for (const auto& row : res.rows)
            if (!(row[2] >= row[1] - 1e-12)) {
                problems.push_back(id + " has C_l1 < C");
                break;
            }
    }

    // fig7/fig10: phase-flip symmetry about s = 1/2 with an interior minimum
    for (const std::string id : {"fig7a", "fig10a"}) {
        const FigurePanel panel = figure_preset(id).front();
        const SweepResult res = run_sweep(panel.spec, workers);
        const int n_inner = panel.spec.axes[1].count;
        const int n_s = panel.spec.axes[0].count;
        int tested = 0;
        for (int j = 0; j < n_inner; ++j) {
            const auto col = surface_slice(res, n_inner, j, 2);
            for (int i = 0; i < n_s; ++i)
                if (std::abs(col[i] - col[n_s - 1 - i]) > 1e-10) {
                    problems.push_back(id + " not symmetric about s=1/2");
                    j = n_inner;
                    break;
                }
            if (j >= n_inner) break;
            if (col.front() > 1e-8) {
                ++tested;
                const double interior = *std::min_element(col.begin() + 1, col.end() - 1);
                if (!(interior < col.front() - 1e-12 && interior < col.back() - 1e-12))
                    problems.push_back(id + " lacks an interior minimum");
            }
        }
        if (tested == 0) problems.push_back(id + " had no rows above threshold to test");
    }

    // fig8/fig11: phase damping is monotone in s
    for (const std::string id : {"fig8a", "fig11a"}) {
        const FigurePanel panel = figure_preset(id).front();
        const SweepResult res = run_sweep(panel.spec, workers);
        const int n_inner = panel.spec.axes[1].count;
        for (int j = 0; j < n_inner; ++j)
            if (!non_increasing(surface_slice(res, n_inner, j, 2), 1e-12)) {
                problems.push_back(id + " not monotone in s");
                break;
            }
    }

    // fig12a: entanglement dies before coherence drops below 0.01
    {
        const FigurePanel panel = figure_preset("fig12a").front();
        const SweepResult res = compare_measures(panel.spec, workers);
        std::vector<double> s, conc, coh;
        for (const auto& row : res.rows) {
            s.push_back(row[0]);
            conc.push_back(row[1]);
            coh.push_back(row[2]);
        }
        if (!non_increasing(conc, 1e-10) || !non_increasing(coh, 1e-10))
            problems.push_back("fig12a columns not monotone");
        const double s_conc = first_zero(s, conc);
        double s_coh = inf;
        for (std::size_t i = 0; i < coh.size(); ++i)
            if (coh[i] < 0.01) {
                s_coh = s[i];
                break;
            }
        if (!(s_conc < s_coh))
            problems.push_back("fig12a concurrence does not vanish before coherence < 0.01");
    }

    CheckResult r;
    r.name = "figure_shapes";
    r.hard_ok = problems.empty();
    if (problems.empty()) {
        r.detail = "fig1a/fig2a/fig5/fig7/fig8/fig10/fig11/fig12a shape properties hold";
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < problems.size(); ++i)
            os << (i ? "; " : "") << problems[i];
        r.detail = os.str();
    }
    return r;
}

CheckResult sweep_determinism(int workers) {
    bool identical = true;
    for (const std::string id : {"fig1a", "fig9b"}) {
        const FigurePanel panel = figure_preset(id).front();
        PanelOptions serial;
        serial.workers = 1;
        PanelOptions parallel;
        parallel.workers = std::max(4, workers);
        const std::string a = render_panel(panel, serial);
        const std::string b = render_panel(panel, parallel);
        const std::string c = render_panel(panel, serial);
        if (a != b || a != c) identical = false;
    }
    CheckResult r;
    r.name = "sweep_determinism";
    r.hard_ok = identical;
    r.detail = identical ? "fig1a and fig9b byte-identical across reruns and worker counts"
                         : "worker count or rerun changed CSV bytes";
    return r;
}

CheckResult rtn_oracle(std::size_t n_traj, std::uint64_t seed) {
    CheckResult r;
    r.name = "rtn_oracle";
    r.hard_ok = true;
    std::ostringstream os;
    os << n_traj << " trajectories:";
    const struct {
        double tau;
        double lo, hi;
    } cases[] = {{0.2, 0.5, 10.0}, {5.0, 2.0, 40.0}};
    for (const auto& c : cases) {
        const auto grid = linspace(c.lo, c.hi, 20);
        const RtnEstimate est = rtn_monte_carlo_kernel(c.tau, grid, n_traj, seed);
        int within = 0;
        double max_z = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double gap = std::abs(est.mean[i] - memory_kernel_F(grid[i], c.tau));
            const double z = gap / std::max(est.std_err[i], 1e-300);
            max_z = std::max(max_z, z);
            if (gap <= 3.0 * est.std_err[i]) ++within;
        }
        const double frac = static_cast<double>(within) / grid.size();
        if (frac < 0.95) r.hard_ok = false;
        os << " tau=" << c.tau << ": " << within << "/20 within 3 sigma (max z " << num(max_z)
           << ")";
    }
    r.detail = os.str();
    return r;
}

std::vector<CheckResult> run_validation(const ValidateOptions& opt) {
    const std::uint64_t seed = opt.seed ? opt.seed : default_seed;
    std::vector<CheckResult> out;
    out.push_back(spectral_oracle(500, seed));
    out.push_back(thermal_oracle(500, seed + 1));
    out.push_back(concurrence_ground_truth(500, seed + 2));
    out.push_back(reconciliation_report(500, seed + 3));
    out.push_back(kernel_properties());
    out.push_back(channel_soundness(500, seed + 4));
    out.push_back(table_adjudication());
    out.push_back(figure_shapes(opt.workers));
    out.push_back(sweep_determinism(opt.workers));
    if (opt.include_rtn)
        out.push_back(rtn_oracle(opt.rtn_trajectories, seed + 5));

    if (opt.inject_broken_kraus) {
        CheckResult broken;
        broken.name = "injected_broken_kraus";
        broken.hard_ok = false;
        TwoQubitChannel bad;
        bad.label = "injected_broken";
        bad.kraus_ops.push_back(0.9 * Matrix4::Identity());
        try {
            apply_channel(maximally_mixed(), bad);
            broken.detail = "broken Kraus set was NOT rejected";
        } catch (const NotCptp& e) {
            broken.detail = std::string("NotCPTP raised as expected: ") + e.what();
        }
        out.push_back(broken);
    }
    return out;
}

} // namespace dqd::validate
