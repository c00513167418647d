// dqdsim — thermal entanglement and coherence of two coupled charge qubits
// under correlated dephasing and standard noise channels.
//
// Subcommands:
//   figure <id>     render a built-in preset (fig1..fig12, or a panel: fig2a)
//   sweep <config>  run a sweep described by an INI-style config file
//   validate        run the self-check suites
//
// Exit codes: 0 success, 2 parse/spec error, 3 numeric hard failure, 4 I/O.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "dqd/config.hpp"
#include "dqd/presets.hpp"
#include "dqd/sweep.hpp"
#include "dqd/validate.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_spec = 2;
constexpr int exit_numeric = 3;
constexpr int exit_io = 4;

struct CommonOpts {
    std::string out = ".";
    std::uint64_t seed = dqd::default_seed;
    int workers = 0; // 0 -> DQDSIM_WORKERS or 1
    std::string format = "csv";
    std::string mode = "paper";
    std::vector<std::string> measures;
};

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("DQDSIM_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

std::vector<dqd::MeasureKind> parse_measures(const std::vector<std::string>& names) {
    std::vector<dqd::MeasureKind> out;
    for (const auto& m : names) {
        if (m == "concurrence_numeric" || m == "C") out.push_back(dqd::MeasureKind::concurrence_numeric);
        else if (m == "concurrence_paper" || m == "C_paper") out.push_back(dqd::MeasureKind::concurrence_paper);
        else if (m == "l1" || m == "C_l1") out.push_back(dqd::MeasureKind::l1);
        else if (m == "l1_paper" || m == "C_l1_eq16") out.push_back(dqd::MeasureKind::l1_paper);
        else throw dqd::SpecError("unknown measure '" + m + "'");
    }
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw dqd::IoError("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out)
        throw dqd::IoError("write to '" + path.string() + "' failed");
}

fs::path prepare_out_dir(const std::string& out) {
    fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir))
        throw dqd::IoError("cannot create output directory '" + out + "': " + ec.message());
    return dir;
}

int cmd_figure(const std::string& preset, const CommonOpts& o) {
    if (o.format != "csv")
        throw dqd::SpecError("unsupported format '" + o.format + "'");
    const auto panels = dqd::figure_preset(preset);
    const fs::path dir = prepare_out_dir(o.out);

    dqd::PanelOptions popt;
    popt.workers = resolve_workers(o.workers);
    popt.seed = o.seed;
    popt.use_kraus_mode = (o.mode == "kraus");
    popt.measure_override = parse_measures(o.measures);

    for (const auto& panel : panels) {
        const fs::path file = dir / (panel.id + ".csv");
        write_file(file, dqd::render_panel(panel, popt));
        std::cout << file.string() << "\n";
    }
    return exit_ok;
}

int cmd_sweep(const std::string& config_path, const CommonOpts& o) {
    if (o.format != "csv")
        throw dqd::SpecError("unsupported format '" + o.format + "'");
    dqd::SweepSpec spec = dqd::load_sweep_config(config_path);
    spec.seed = o.seed;
    if (o.mode == "kraus") {
        spec.dephasing_mode = dqd::DephasingMode::kraus_exact;
        spec.channel_route = dqd::ChannelRoute::kraus_exact;
    }
    if (!o.measures.empty())
        spec.measures = parse_measures(o.measures);

    const dqd::SweepResult res = dqd::run_sweep(spec, resolve_workers(o.workers));
    const fs::path out(o.out);
    if (out == ".") {
        dqd::write_csv(res, std::cout);
    } else {
        if (out.has_parent_path()) {
            std::error_code ec;
            fs::create_directories(out.parent_path(), ec);
        }
        write_file(out, dqd::csv_string(res));
        std::cout << out.string() << "\n";
    }
    return exit_ok;
}

int cmd_validate(const std::string& level, const CommonOpts& o, std::size_t n_traj,
                 bool inject_broken_kraus) {
    dqd::validate::ValidateOptions vopt;
    vopt.seed = o.seed;
    vopt.include_rtn = (level == "full");
    vopt.rtn_trajectories = n_traj;
    vopt.workers = resolve_workers(o.workers);
    vopt.inject_broken_kraus = inject_broken_kraus;

    const auto results = dqd::validate::run_validation(vopt);
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.hard_ok ? "[ok]   " : "[FAIL] ") << r.name << " — " << r.detail << "\n";
        for (const auto& note : r.notes)
            std::cout << "       note: " << note << "\n";
        all_ok = all_ok && r.hard_ok;
    }
    std::cout << (all_ok ? "validation passed" : "validation FAILED") << "\n";
    return all_ok ? exit_ok : exit_numeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two coupled charge qubits: thermal entanglement and coherence under noise"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string preset_id, config_path;
    std::string level = "fast";
    std::size_t n_traj = 100000;
    bool inject_broken_kraus = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "output directory (figure) or file (sweep)");
        cmd->add_option("--seed", o.seed, "seed echoed into headers and used by stochastic checks");
        cmd->add_option("--workers", o.workers, "worker threads (default: DQDSIM_WORKERS or 1)");
        cmd->add_option("--format", o.format, "output format (csv)");
        cmd->add_option("--mode", o.mode, "evolution route: paper (published formulas) or kraus (exact map)")
            ->check(CLI::IsMember({"paper", "kraus"}));
        cmd->add_option("--measure", o.measures,
                        "measure column override (repeatable): C, C_paper, C_l1, C_l1_eq16");
    };

    CLI::App* figure = app.add_subcommand("figure", "render a built-in preset as CSV");
    figure->add_option("preset", preset_id, "fig1..fig12 or a single panel like fig2a")
        ->required();
    add_common(figure);

    CLI::App* sweep = app.add_subcommand("sweep", "run a sweep from a config file");
    sweep->add_option("config", config_path, "INI-style sweep description")->required();
    add_common(sweep);

    CLI::App* validate = app.add_subcommand("validate", "run the self-check suites");
    validate->add_option("--level", level, "fast (no Monte Carlo) or full")
        ->check(CLI::IsMember({"fast", "full"}));
    validate->add_option("--rtn-trajectories", n_traj, "Monte Carlo trajectory count (full level)");
    validate->add_flag("--inject-broken-kraus", inject_broken_kraus,
                       "test hook: add a non-CPTP Kraus set and expect rejection");
    add_common(validate);

    try {
        app.parse(argc, argv);
        if (figure->parsed()) return cmd_figure(preset_id, o);
        if (sweep->parsed()) return cmd_sweep(config_path, o);
        return cmd_validate(level, o, n_traj, inject_broken_kraus);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? exit_spec : exit_ok;
    } catch (const dqd::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_spec;
    } catch (const dqd::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_spec;
    } catch (const dqd::UnknownPreset& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_spec;
    } catch (const dqd::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_spec;
    } catch (const dqd::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const dqd::Error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numeric;
    }
}
