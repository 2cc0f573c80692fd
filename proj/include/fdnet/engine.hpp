#pragma once

#include <utility>
#include <vector>

#include "fdnet/config.hpp"
#include "fdnet/phy.hpp"
#include "fdnet/sched.hpp"

namespace fdnet {

struct RealizationResult {
    RatePair rates;
    SinrBreakdown breakdown;
    ScheduleDecision decision;
    int interferer_count = 0;
    bool saturated = false;
};

struct MeanStdErr {
    double mean = 0.0;
    double se = 0.0;
};

/// Aggregated Monte Carlo output for one run.
struct Report {
    // Sorted per-realization samples (empirical CDF support), bps.
    std::vector<double> samples_ul;
    std::vector<double> samples_dl;
    std::vector<double> samples_sum;
    MeanStdErr rate_ul, rate_dl, rate_sum;
    // Mean linear power of every breakdown field (interference decomposition).
    UlBreakdown mean_ul_power;
    DlBreakdown mean_dl_power;
    double mode_frac_fd = 0.0;
    double mode_frac_hd_ul = 0.0;
    double mode_frac_hd_dl = 0.0;
    double saturated_fraction = 0.0;
    double mean_interferers = 0.0;
    std::int64_t realizations = 0;
    SimConfig config;
};

/// One Monte Carlo realization on its own derived rng stream; independent
/// of execution order.
RealizationResult run_realization(const SimConfig& cfg, std::int64_t index);

/// Runs all realizations, optionally fanned out over worker threads.
/// The Report is identical regardless of the parallelism degree.
Report run(const SimConfig& cfg, int workers = 1);

enum class SweepAxis { Density, Sic, Antennas };

SweepAxis parse_axis(const std::string& s);
std::string to_string(SweepAxis axis);

struct SweepPoint {
    double value = 0.0;
    Report report;
};

/// One run per axis value, each on its own derived seed domain. The
/// antennas axis sets n_tx = n_rx = value.
std::vector<SweepPoint> sweep(const SimConfig& cfg, SweepAxis axis,
                              const std::vector<double>& values, int workers = 1);

/// Applies one sweep-axis value to a copy of the config (validated).
SimConfig apply_axis(const SimConfig& cfg, SweepAxis axis, double value);

/// Sorted (value, k/n) pairs; throws std::invalid_argument on empty input.
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> samples);

}  // namespace fdnet
