#pragma once

#include <functional>
#include <utility>

#include "fdnet/chan.hpp"
#include "fdnet/config.hpp"

namespace fdnet {

enum class Mode { FD, HD_UL, HD_DL };

std::string to_string(Mode m);

struct ScheduleDecision {
    int u0 = 0;
    int d0 = 0;
    double p_ul = 0.0;  // W
    double p_dl = 0.0;  // W
    Mode mode = Mode::FD;
    bool rescheduled = false;
};

/// Intra-cell quantities the schedulers may read: per-candidate desired
/// powers under matched filtering and the inter-MT leakage matrix, all at
/// maximum transmit powers.
struct CandidateMetrics {
    std::vector<double> s_ul;   // S_{0,u} = p_ul * g * ||h_{0,u}||^2
    std::vector<double> s_dl;   // S_{d,0} = p_dl * g * ||h_{d,0}||^2
    Eigen::MatrixXd i_cross;    // I_{d,u} = p_ul * g * |h_{d,u}|^2, D0 x U0
    double noise_bs = 0.0;
    double noise_mt = 0.0;
};

CandidateMetrics candidate_metrics(const ChannelSet& ch, const SimConfig& cfg, double p_ul_w,
                                   double p_dl_w);

/// Alg. 1: independent argmax of the desired UL and DL powers.
std::pair<int, int> schedule_alg1(const CandidateMetrics& m);

/// Alg. 2: UL as in Alg. 1, then DL by max intra-cell SINR.
std::pair<int, int> schedule_alg2(const CandidateMetrics& m);

/// Alg. 3: DL as in Alg. 1, then UL by max SLNR.
std::pair<int, int> schedule_alg3(const CandidateMetrics& m);

std::pair<int, int> schedule(Algorithm alg, const CandidateMetrics& m);

/// Sum-rate objective evaluated at reference powers (p_ul, p_dl), watts.
using SumRateObjective = std::function<double(double, double)>;

/// Binary optimal power allocation: picks the corner of
/// {0, P_UL} x {0, P_DL} maximizing the objective, tie-broken
/// FD > HD_DL > HD_UL > off.
ScheduleDecision opa(const ScheduleDecision& decision, const SumRateObjective& objective,
                     double p_ul_max_w, double p_dl_max_w);

/// After an HD outcome, re-picks the surviving direction's MT by its
/// plain desired-power argmax. Powers are unchanged.
ScheduleDecision reschedule_after_opa(const ScheduleDecision& decision,
                                      const CandidateMetrics& m);

}  // namespace fdnet
