#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fdnet {

/// Raised when a config document cannot be parsed as JSON or contains
/// unknown keys / wrongly typed values.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a parsed config violates an invariant; the message names
/// every violated field.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

/// Thermal noise floor: -174 dBm/Hz + 10 log10(B) + NF, in watts.
double noise_power(double bandwidth_hz, double noise_figure_db);

enum class Algorithm { Alg1, Alg2, Alg3 };
enum class OpaKnowledge { Local, Genie };

std::string to_string(Algorithm a);
std::string to_string(OpaKnowledge k);

/// Single-slope pathloss law for one link class:
/// PL(d) = intercept_db + slope_db_per_decade * log10(d / 1 km),
/// with lognormal shadowing and a near-field distance clamp.
struct PathlossLaw {
    double intercept_db = 0.0;
    double slope_db_per_decade = 20.0;
    double shadowing_sigma_db = 0.0;
    double min_distance_m = 1.0;

    bool operator==(const PathlossLaw&) const = default;
};

/// One law per link class of the system model.
struct PathlossProfile {
    PathlossLaw bs_mt;  // BS -> MT (downlink)
    PathlossLaw mt_bs;  // MT -> BS (uplink)
    PathlossLaw bs_bs;  // BS -> BS (cross-cell, downlink into uplink)
    PathlossLaw mt_mt;  // MT -> MT (inter-terminal)

    bool operator==(const PathlossProfile&) const = default;
};

PathlossProfile default_pathloss_profile();

struct SimConfig {
    double lambda_bs = 2.5e-5;      // interfering-BS density, BSs/m^2
    double window_radius = 1000.0;  // simulation disc radius, m
    double r0 = 40.0;               // cell radius, m (hardcore distance = 2*r0)
    int num_ul_candidates = 10;     // U0
    int num_dl_candidates = 10;     // D0
    int n_tx = 1;                   // N_T
    int n_rx = 1;                   // N_R
    double p_ul_max = 23.0;         // dBm
    double p_dl_max = 24.0;         // dBm
    double sic_capability = 110.0;  // Omega, dB
    double bandwidth = 20e6;        // Hz
    double noise_figure_bs = 5.0;   // dB
    double noise_figure_mt = 9.0;   // dB
    Algorithm algorithm = Algorithm::Alg1;
    bool opa_enabled = false;
    OpaKnowledge opa_knowledge = OpaKnowledge::Local;
    std::int64_t realizations = 10000;
    std::uint64_t seed = 1;
    double mark_radius_sq = 1600.0;       // m^2; default r0^2 (set 1 for the literal mark rule)
    int hardcore_attempt_budget = 10000;  // placement attempts per point
    PathlossProfile pathloss_profile = default_pathloss_profile();

    bool operator==(const SimConfig&) const = default;

    // Derived linear-unit accessors (dB/dBm only at the boundaries).
    double p_ul_max_w() const { return dbm_to_watt(p_ul_max); }
    double p_dl_max_w() const { return dbm_to_watt(p_dl_max); }
    double omega_linear() const { return db_to_linear(sic_capability); }
    double noise_bs_w() const { return noise_power(bandwidth, noise_figure_bs); }
    double noise_mt_w() const { return noise_power(bandwidth, noise_figure_mt); }
};

/// Throws ValidationError naming every violated invariant.
void validate(const SimConfig& cfg);

/// Parses a JSON config document; omitted keys take baseline defaults,
/// unknown keys are an error. The result is validated.
SimConfig load_config(const std::string& text);

/// JSON serialization; load_config(serialize(c)) == c for any valid c.
std::string serialize(const SimConfig& cfg);

}  // namespace fdnet
