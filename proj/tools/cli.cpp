#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "coex/csv.hpp"
#include "coex/scenario.hpp"
#include "coex/svg_chart.hpp"
#include "coex/sweep.hpp"

namespace coex::cli {
namespace {

struct ConfigFlags {
    std::string config_path;
    std::vector<std::string> overrides;
};

void add_config_flags(CLI::App& cmd, ConfigFlags& flags) {
    cmd.add_option("--config", flags.config_path, "Scenario file (key = value)")->check(CLI::ExistingFile);
    cmd.add_option("--set", flags.overrides, "Override a config key, KEY=VALUE (repeatable)");
}

ScenarioConfig resolve_config(const ConfigFlags& flags) {
    ScenarioConfig config = flags.config_path.empty() ? ScenarioConfig{} : load_config_file(flags.config_path);
    for (const std::string& kv : flags.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(kv, 0, "override must look like KEY=VALUE");
        }
        apply_override(config, kv.substr(0, eq), kv.substr(eq + 1));
    }
    config.validate();
    return config;
}

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void line(std::string_view name, double value, std::string_view unit) {
        out_ << std::left << std::setw(22) << name << ' ' << format_sig6(value);
        if (!unit.empty()) {
            out_ << ' ' << unit;
        }
        out_ << '\n';
    }
    void section(std::string_view title) { out_ << "# " << title << '\n'; }

private:
    std::ostream& out_;
};

int cmd_point(const ScenarioConfig& config, double slant_km, double alpha_deg, std::ostream& out, std::ostream& err) {
    const double folded = fold_alpha_deg(alpha_deg);
    if (folded != alpha_deg) {
        err << "warning: alpha " << format_sig6(alpha_deg) << " deg folded to " << format_sig6(folded)
            << " deg (mirror symmetry)\n";
    }
    const BeamGeometry beam = make_beam_geometry(slant_km, config.earth);
    const CoexGeometry geo =
        build_coex_geometry(beam, config.separation_km, Angle::from_degrees(folded), config.earth);
    const PathLossBreakdown pl = path_loss(geo.d_u_km, geo.elevation_ue, config.propagation);
    const double noise = noise_power_dbw(config.noise);
    const double rx = rx_power_dbw(geo.theta, pl, config.tx, config.pattern);
    const SinrResult s = sinr_db(config.snr_db, rx, noise);

    Report r(out);
    r.section("geometry");
    r.line("alpha_deg", folded, "deg");
    r.line("slant_km", slant_km, "km");
    r.line("elevation_beam_deg", beam.elevation.degrees(), "deg");
    r.line("central_angle_beam_deg", beam.central_angle.degrees(), "deg");
    r.line("separation_km", config.separation_km, "km");
    r.line("theta_deg", geo.theta.degrees(), "deg");
    r.line("d_u_km", geo.d_u_km, "km");
    r.line("elevation_ue_deg", geo.elevation_ue.degrees(), "deg");
    r.section("antenna");
    r.line("gain_linear", gain_linear(geo.theta, config.pattern), "");
    r.line("gain_db", gain_db(geo.theta, config.pattern), "dB");
    r.line("tx_eirp_dbw", tx_eirp_toward(geo.theta, config.tx, config.pattern), "dBW");
    r.section("path loss");
    r.line("pl_fspl_db", pl.fspl_db, "dB");
    r.line("pl_gas_db", pl.gas_db, "dB");
    r.line("pl_rain_cloud_db", pl.rain_cloud_db, "dB");
    r.line("pl_scint_db", pl.scintillation_db, "dB");
    r.line("pl_entry_db", pl.entry_db, "dB");
    r.line("pl_total_db", pl.total_db, "dB");
    r.section("link budget");
    r.line("channel_gain_db", config.tx.channel_gain_db, "dB");
    r.line("rx_power_dbw", rx, "dBW");
    r.line("noise_dbw", noise, "dBW");
    r.line("inr_db", s.inr_db, "dB");
    r.line("snr_db", s.snr_db, "dB");
    r.line("sinr_db", s.sinr_db, "dB");
    r.line("degradation_db", s.degradation_db, "dB");
    return kExitOk;
}

int cmd_sweep(const ScenarioConfig& config, const std::string& out_path, unsigned threads, std::ostream& err) {
    for (const std::string& w : alpha_fold_warnings(config)) {
        err << "warning: " << w << '\n';
    }
    const std::vector<SweepRow> rows = run_sweep(config, threads);
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot write '" << out_path << "'\n";
        return kExitRuntime;
    }
    write_sweep_csv(file, rows);
    file.close();
    if (!file) {
        err << "error: failed writing '" << out_path << "'\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_plot(const std::string& csv_path, const std::string& metric_name, const std::string& out_path, double snr_db,
             const std::string& title, std::ostream& err) {
    const auto metric = parse_chart_metric(metric_name);
    if (!metric) {
        err << "error: unknown metric '" << metric_name << "'; valid metrics:";
        for (ChartMetric m : all_chart_metrics()) {
            err << ' ' << chart_metric_name(m);
        }
        err << '\n';
        return kExitUsage;
    }
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) {
        err << "error: cannot read '" << csv_path << "'\n";
        return kExitRuntime;
    }
    const std::vector<SweepRow> rows = read_sweep_csv(in);
    if (rows.empty()) {
        err << "error: '" << csv_path << "' has no data rows\n";
        return kExitRuntime;
    }
    ChartSpec spec = default_chart_spec(*metric, snr_db);
    if (!title.empty()) {
        spec.title = title;
    }
    const std::string svg = render_svg(rows, spec);
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot write '" << out_path << "'\n";
        return kExitRuntime;
    }
    file << svg;
    file.close();
    if (!file) {
        err << "error: failed writing '" << out_path << "'\n";
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Satellite-to-terrestrial co-channel interference link simulator", "coexsim"};
    app.require_subcommand(1);

    ConfigFlags point_cfg;
    double slant_km = 0.0;
    double alpha_deg = 0.0;
    auto* point = app.add_subcommand("point", "Print the full link budget at one (slant, alpha) point");
    point->add_option("--slant-km", slant_km, "Satellite to beam-center slant range (km)")->required();
    point->add_option("--alpha-deg", alpha_deg, "UE bearing at the beam center from the sub-satellite direction (deg)")
        ->required();
    add_config_flags(*point, point_cfg);

    ConfigFlags sweep_cfg;
    std::string sweep_out;
    unsigned threads = 1;
    auto* sweep = app.add_subcommand("sweep", "Sweep slant range x alpha and write a CSV");
    add_config_flags(*sweep, sweep_cfg);
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();
    sweep->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

    std::string csv_path;
    std::string metric;
    std::string plot_out;
    std::string title;
    double snr_db = ScenarioConfig{}.snr_db;
    auto* plot = app.add_subcommand("plot", "Render one sweep metric as an SVG line chart");
    plot->add_option("--csv", csv_path, "Sweep CSV produced by `coexsim sweep`")->required();
    plot->add_option("--metric", metric, "tx_eirp_dbw | pl_total_db | rx_power_dbw | sinr_db | degradation_db")
        ->required();
    plot->add_option("--out", plot_out, "Output SVG path")->required();
    plot->add_option("--snr-db", snr_db, "SNR reference line for sinr_db charts");
    plot->add_option("--title", title, "Chart title");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (point->parsed()) {
            return cmd_point(resolve_config(point_cfg), slant_km, alpha_deg, out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(resolve_config(sweep_cfg), sweep_out, threads, err);
        }
        return cmd_plot(csv_path, metric, plot_out, snr_db, title, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace coex::cli
