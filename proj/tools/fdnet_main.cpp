// fdnet: Monte Carlo system-level simulator for full-duplex small-cell
// networks. Emits plot-ready CSV/JSON; see README.md for usage.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "fdnet/engine.hpp"
#include "fdnet/geom.hpp"
#include "fdnet/report_io.hpp"
#include "fdnet/rng.hpp"

namespace fs = std::filesystem;
using namespace fdnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 0;
    std::int64_t realizations = 0;
    int algorithm = 0;
    std::string opa;
    bool dump_topology = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "Config file (JSON); defaults to the baseline");
    cmd->add_option("--out", o.out_dir, "Output directory");
    cmd->add_option("--seed", o.seed, "Root seed")->each([&](const std::string&) {
        o.seed_set = true;
    });
    cmd->add_option("--workers", o.workers, "Worker threads (env FDNET_WORKERS as fallback)");
    cmd->add_option("--realizations", o.realizations, "Monte Carlo realizations");
    cmd->add_option("--algorithm", o.algorithm, "Scheduling algorithm {1,2,3}")
        ->check(CLI::Range(1, 3));
    cmd->add_option("--opa", o.opa, "Power allocation {off,local,genie}")
        ->check(CLI::IsMember({"off", "local", "genie"}));
}

int resolve_workers(const CommonOpts& o) {
    if (o.workers > 0) return o.workers;
    if (const char* env = std::getenv("FDNET_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

SimConfig load_effective_config(const CommonOpts& o) {
    SimConfig cfg;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path, std::ios::binary);
        if (!in) throw IoError("cannot read config file: " + o.config_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        cfg = load_config(ss.str());
    }
    if (o.seed_set) cfg.seed = o.seed;
    if (o.realizations > 0) cfg.realizations = o.realizations;
    if (o.algorithm == 1) cfg.algorithm = Algorithm::Alg1;
    if (o.algorithm == 2) cfg.algorithm = Algorithm::Alg2;
    if (o.algorithm == 3) cfg.algorithm = Algorithm::Alg3;
    if (o.opa == "off") cfg.opa_enabled = false;
    if (o.opa == "local") {
        cfg.opa_enabled = true;
        cfg.opa_knowledge = OpaKnowledge::Local;
    }
    if (o.opa == "genie") {
        cfg.opa_enabled = true;
        cfg.opa_knowledge = OpaKnowledge::Genie;
    }
    validate(cfg);
    return cfg;
}

void dump_topologies(const SimConfig& cfg, const fs::path& dir, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) {
        std::mt19937_64 rng = make_stream(cfg.seed, static_cast<std::uint64_t>(i));
        Topology topo = sample_topology(cfg, rng);
        char name[48];
        std::snprintf(name, sizeof(name), "topology_%05lld.csv", static_cast<long long>(i));
        write_topology_csv(topo, dir / name);
    }
}

Report timed_run(const SimConfig& cfg, int workers, const std::string& label) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = run(cfg, workers);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << label << ": " << rep.realizations << " realizations in " << dt << " s\n";
    return rep;
}

std::string opa_tag(const SimConfig& cfg) {
    if (!cfg.opa_enabled) return "noopa";
    return cfg.opa_knowledge == OpaKnowledge::Local ? "opa" : "opa_genie";
}

int cmd_run(const CommonOpts& o) {
    SimConfig cfg = load_effective_config(o);
    Report rep = timed_run(cfg, resolve_workers(o), "run");
    fs::path out(o.out_dir);
    write_output_bundle(rep, out);
    if (o.dump_topology) dump_topologies(cfg, out, cfg.realizations);
    return kExitOk;
}

int cmd_sweep(const CommonOpts& o, const std::string& axis_name, std::vector<double> values) {
    SimConfig cfg = load_effective_config(o);
    SweepAxis axis = parse_axis(axis_name);
    int workers = resolve_workers(o);

    fs::path out(o.out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError("cannot create output directory: " + out.string());

    std::vector<SweepRow> rows;
    for (const auto& point : sweep(cfg, axis, values, workers)) {
        rows.push_back(make_sweep_row(point.value, point.report));
        std::cerr << "sweep " << axis_name << "=" << point.value
                  << " mean_sum_bps=" << point.report.rate_sum.mean << "\n";
    }
    write_sweep_csv(rows, out / "sweep.csv");
    return kExitOk;
}

// Figure presets reproducing the evaluation scenarios at baseline
// parameters. Output is the figure's underlying data, not a plot.
int cmd_figure(const CommonOpts& o, int id) {
    SimConfig base = load_effective_config(o);
    int workers = resolve_workers(o);
    fs::path out = fs::path(o.out_dir) / ("figure" + std::to_string(id));
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError("cannot create output directory: " + out.string());

    const Algorithm algs[] = {Algorithm::Alg1, Algorithm::Alg2, Algorithm::Alg3};

    auto run_combo = [&](SimConfig cfg, const std::string& label) {
        Report rep = timed_run(cfg, workers, "figure" + std::to_string(id) + " " + label);
        return rep;
    };

    switch (id) {
        case 2:
        case 3: {
            // Rate CDFs, every algorithm with and without OPA, SISO baseline.
            for (Algorithm alg : algs) {
                for (bool with_opa : {false, true}) {
                    SimConfig cfg = base;
                    cfg.algorithm = alg;
                    cfg.opa_enabled = with_opa;
                    std::string tag = to_string(alg) + "_" + opa_tag(cfg);
                    Report rep = run_combo(cfg, tag);
                    if (id == 2) {
                        write_cdf_csv(rep.samples_ul, out / ("cdf_ul_" + tag + ".csv"));
                        write_cdf_csv(rep.samples_dl, out / ("cdf_dl_" + tag + ".csv"));
                    } else {
                        write_cdf_csv(rep.samples_sum, out / ("cdf_sum_" + tag + ".csv"));
                    }
                }
            }
            return kExitOk;
        }
        case 4: {
            // Mean SINR contributions per algorithm, no OPA.
            for (Algorithm alg : algs) {
                SimConfig cfg = base;
                cfg.algorithm = alg;
                cfg.opa_enabled = false;
                Report rep = run_combo(cfg, to_string(alg));
                write_decomposition_csv(rep,
                                        out / ("decomposition_" + to_string(alg) + ".csv"));
            }
            return kExitOk;
        }
        case 5: {
            // Density sweep, all algorithms, with and without OPA.
            std::vector<double> densities = {1e-5, 2.5e-5, 1e-4};
            std::vector<SweepRow> rows;
            for (Algorithm alg : algs) {
                for (bool with_opa : {false, true}) {
                    SimConfig cfg = base;
                    cfg.algorithm = alg;
                    cfg.opa_enabled = with_opa;
                    for (const auto& point : sweep(cfg, SweepAxis::Density, densities, workers))
                        rows.push_back(make_sweep_row(point.value, point.report));
                }
            }
            write_sweep_csv(rows, out / "sweep.csv");
            return kExitOk;
        }
        case 6: {
            // Antenna comparison, Alg. 3.
            std::vector<double> antennas = {1, 2};
            SimConfig cfg = base;
            cfg.algorithm = Algorithm::Alg3;
            std::vector<SweepRow> rows;
            for (const auto& point : sweep(cfg, SweepAxis::Antennas, antennas, workers)) {
                rows.push_back(make_sweep_row(point.value, point.report));
                std::string tag = std::to_string(static_cast<int>(point.value)) + "x" +
                                  std::to_string(static_cast<int>(point.value));
                write_cdf_csv(point.report.samples_ul, out / ("cdf_ul_" + tag + ".csv"));
                write_cdf_csv(point.report.samples_dl, out / ("cdf_dl_" + tag + ".csv"));
            }
            write_sweep_csv(rows, out / "sweep.csv");
            return kExitOk;
        }
        case 7: {
            // SIC-capability sweep, all algorithms with OPA.
            std::vector<double> omegas = {60, 70, 80, 90, 100, 110, 120, 130};
            std::vector<SweepRow> rows;
            for (Algorithm alg : algs) {
                SimConfig cfg = base;
                cfg.algorithm = alg;
                cfg.opa_enabled = true;
                for (const auto& point : sweep(cfg, SweepAxis::Sic, omegas, workers))
                    rows.push_back(make_sweep_row(point.value, point.report));
            }
            write_sweep_csv(rows, out / "sweep.csv");
            return kExitOk;
        }
        default:
            throw ValidationError("figure id must be one of {2,3,4,5,6,7}");
    }
}

int cmd_dump_topology(const CommonOpts& o) {
    SimConfig cfg = load_effective_config(o);
    fs::path out(o.out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError("cannot create output directory: " + out.string());
    dump_topologies(cfg, out, cfg.realizations);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fdnet: full-duplex small-cell network Monte Carlo simulator"};
    app.require_subcommand(1);

    CommonOpts run_opts;
    CLI::App* run_cmd = app.add_subcommand("run", "Single Monte Carlo run");
    add_common_flags(run_cmd, run_opts);
    run_cmd->add_flag("--dump-topology", run_opts.dump_topology,
                      "Also write one topology CSV per realization");

    CommonOpts sweep_opts;
    std::string axis;
    std::vector<double> values;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep");
    add_common_flags(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--axis", axis, "Sweep axis {density,sic,antennas}")->required();
    sweep_cmd->add_option("--values", values, "Axis values")->required()->expected(-1);

    CommonOpts figure_opts;
    int figure_id = 0;
    CLI::App* figure_cmd = app.add_subcommand("figure", "Preset evaluation scenario");
    add_common_flags(figure_cmd, figure_opts);
    figure_cmd->add_option("--id", figure_id, "Figure id {2,3,4,5,6,7}")->required();

    CommonOpts dump_opts;
    CLI::App* dump_cmd = app.add_subcommand("dump-topology", "Write sampled topologies as CSV");
    add_common_flags(dump_cmd, dump_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_opts);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_opts, axis, values);
        if (figure_cmd->parsed()) return cmd_figure(figure_opts, figure_id);
        if (dump_cmd->parsed()) return cmd_dump_topology(dump_opts);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
