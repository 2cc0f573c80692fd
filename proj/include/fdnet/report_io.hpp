#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fdnet/engine.hpp"
#include "fdnet/geom.hpp"

namespace fdnet {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal representation (byte-stable goldens).
std::string format_double(double x);

std::string summary_json(const Report& rep);

/// Writes summary.json, cdf_ul.csv, cdf_dl.csv, cdf_sum.csv, and
/// decomposition.csv into out_dir (created if missing).
void write_output_bundle(const Report& rep, const std::filesystem::path& out_dir);

void write_cdf_csv(const std::vector<double>& sorted_samples, const std::filesystem::path& path);
void write_decomposition_csv(const Report& rep, const std::filesystem::path& path);

struct SweepRow {
    double axis_value = 0.0;
    std::string algorithm;
    std::string opa;
    double mean_ul_bps = 0.0;
    double mean_dl_bps = 0.0;
    double mean_sum_bps = 0.0;
    double se_sum_bps = 0.0;
    double fd_fraction = 0.0;
    double saturated_fraction = 0.0;
};

SweepRow make_sweep_row(double axis_value, const Report& rep);

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

/// Columns: kind in {bs, ul_mark, ul_cand, dl_cand}, x_m, y_m.
void write_topology_csv(const Topology& topo, const std::filesystem::path& path);

}  // namespace fdnet
