#include "fdnet/sched.hpp"

#include <stdexcept>

namespace fdnet {

namespace {

// Lowest-index argmax.
int argmax(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("schedule: empty candidate set");
    int best = 0;
    for (int i = 1; i < static_cast<int>(xs.size()); ++i)
        if (xs[i] > xs[best]) best = i;
    return best;
}

}  // namespace

std::string to_string(Mode m) {
    switch (m) {
        case Mode::FD: return "FD";
        case Mode::HD_UL: return "HD_UL";
        case Mode::HD_DL: return "HD_DL";
    }
    return "FD";
}

CandidateMetrics candidate_metrics(const ChannelSet& ch, const SimConfig& cfg, double p_ul_w,
                                   double p_dl_w) {
    CandidateMetrics m;
    m.s_ul.reserve(ch.h_bs_ul.size());
    for (std::size_t u = 0; u < ch.h_bs_ul.size(); ++u)
        m.s_ul.push_back(p_ul_w * ch.g_bs_ul[u] * ch.h_bs_ul[u].squaredNorm());
    m.s_dl.reserve(ch.h_dl_bs.size());
    for (std::size_t d = 0; d < ch.h_dl_bs.size(); ++d)
        m.s_dl.push_back(p_dl_w * ch.g_dl_bs[d] * ch.h_dl_bs[d].squaredNorm());
    m.i_cross.resize(ch.h_mt_mt.rows(), ch.h_mt_mt.cols());
    for (int d = 0; d < ch.h_mt_mt.rows(); ++d)
        for (int u = 0; u < ch.h_mt_mt.cols(); ++u)
            m.i_cross(d, u) = p_ul_w * ch.g_mt_mt(d, u) * std::norm(ch.h_mt_mt(d, u));
    m.noise_bs = cfg.noise_bs_w();
    m.noise_mt = cfg.noise_mt_w();
    return m;
}

std::pair<int, int> schedule_alg1(const CandidateMetrics& m) {
    return {argmax(m.s_ul), argmax(m.s_dl)};
}

std::pair<int, int> schedule_alg2(const CandidateMetrics& m) {
    int u0 = argmax(m.s_ul);
    if (m.s_dl.empty()) throw std::invalid_argument("schedule: empty candidate set");
    int d0 = 0;
    double best = -1.0;
    for (int d = 0; d < static_cast<int>(m.s_dl.size()); ++d) {
        double metric = m.s_dl[d] / (m.i_cross(d, u0) + m.noise_mt);
        if (metric > best) {
            best = metric;
            d0 = d;
        }
    }
    return {u0, d0};
}

std::pair<int, int> schedule_alg3(const CandidateMetrics& m) {
    int d0 = argmax(m.s_dl);
    if (m.s_ul.empty()) throw std::invalid_argument("schedule: empty candidate set");
    int u0 = 0;
    double best = -1.0;
    for (int u = 0; u < static_cast<int>(m.s_ul.size()); ++u) {
        // The SLNR denominator deliberately uses the BS noise floor.
        double metric = m.s_ul[u] / (m.i_cross(d0, u) + m.noise_bs);
        if (metric > best) {
            best = metric;
            u0 = u;
        }
    }
    return {u0, d0};
}

std::pair<int, int> schedule(Algorithm alg, const CandidateMetrics& m) {
    switch (alg) {
        case Algorithm::Alg1: return schedule_alg1(m);
        case Algorithm::Alg2: return schedule_alg2(m);
        case Algorithm::Alg3: return schedule_alg3(m);
    }
    return schedule_alg1(m);
}

ScheduleDecision opa(const ScheduleDecision& decision, const SumRateObjective& objective,
                     double p_ul_max_w, double p_dl_max_w) {
    struct Corner {
        double p_ul, p_dl;
        Mode mode;
    };
    // Tie-break order: earlier corners win ties.
    const Corner corners[] = {
        {p_ul_max_w, p_dl_max_w, Mode::FD},
        {0.0, p_dl_max_w, Mode::HD_DL},
        {p_ul_max_w, 0.0, Mode::HD_UL},
        {0.0, 0.0, Mode::FD},  // never selected when any rate is positive
    };
    int best = 0;
    double best_value = objective(corners[0].p_ul, corners[0].p_dl);
    for (int i = 1; i < 4; ++i) {
        double value = objective(corners[i].p_ul, corners[i].p_dl);
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    ScheduleDecision out = decision;
    out.p_ul = corners[best].p_ul;
    out.p_dl = corners[best].p_dl;
    out.mode = corners[best].mode;
    return out;
}

ScheduleDecision reschedule_after_opa(const ScheduleDecision& decision,
                                      const CandidateMetrics& m) {
    if (decision.mode == Mode::FD)
        throw std::invalid_argument("reschedule_after_opa: decision is FD");
    ScheduleDecision out = decision;
    if (decision.mode == Mode::HD_UL)
        out.u0 = argmax(m.s_ul);
    else
        out.d0 = argmax(m.s_dl);
    out.rescheduled = true;
    return out;
}

}  // namespace fdnet
