#include "fdnet/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "fdnet/geom.hpp"
#include "fdnet/rng.hpp"

namespace fdnet {

RealizationResult run_realization(const SimConfig& cfg, std::int64_t index) {
    std::mt19937_64 rng = make_stream(cfg.seed, static_cast<std::uint64_t>(index));

    Topology topo = sample_topology(cfg, rng);
    ChannelSet ch = draw_channels(topo, cfg, rng);
    std::vector<CVector> w_int =
        draw_interferer_beamformers(static_cast<int>(topo.interferer_bs.size()), cfg.n_tx, rng);

    const double p_ul_max = cfg.p_ul_max_w();
    const double p_dl_max = cfg.p_dl_max_w();
    CandidateMetrics metrics = candidate_metrics(ch, cfg, p_ul_max, p_dl_max);

    auto [u0, d0] = schedule(cfg.algorithm, metrics);
    ScheduleDecision decision{u0, d0, p_ul_max, p_dl_max, Mode::FD, false};

    if (cfg.opa_enabled) {
        // Corner objective. LOCAL drops the unknown inter-cell terms;
        // interferers never back off their own powers. Half-duplex corners are
        // valued at the users rescheduling would pick, since any HD choice is
        // followed by that deterministic reschedule.
        auto [u_star, d_star] = schedule(Algorithm::Alg1, metrics);
        const bool genie = cfg.opa_knowledge == OpaKnowledge::Genie;
        SumRateObjective objective = [&, u_star, d_star](double p_ul, double p_dl) {
            int eu = (p_dl == 0.0) ? u_star : u0;
            int ed = (p_ul == 0.0) ? d_star : d0;
            Beamformers bf = make_beamformers(ch, eu, ed, w_int);
            TxPowers p{p_ul, p_dl, genie ? p_ul_max : 0.0, genie ? p_dl_max : 0.0};
            SinrBreakdown bd = compute_breakdown(topo, ch, bf, eu, ed, p, cfg);
            SinrPair s = sinr(bd);
            return rates(s.ul, s.dl, cfg.bandwidth).r_sum;
        };
        decision = opa(decision, objective, p_ul_max, p_dl_max);
        if (decision.mode != Mode::FD) decision = reschedule_after_opa(decision, metrics);
    }

    Beamformers bf = make_beamformers(ch, decision.u0, decision.d0, std::move(w_int));
    TxPowers powers{decision.p_ul, decision.p_dl, p_ul_max, p_dl_max};
    SinrBreakdown bd = compute_breakdown(topo, ch, bf, decision.u0, decision.d0, powers, cfg);
    SinrPair s = sinr(bd);

    RealizationResult result;
    result.rates = rates(s.ul, s.dl, cfg.bandwidth);
    result.breakdown = bd;
    result.decision = decision;
    result.interferer_count = static_cast<int>(topo.interferer_bs.size());
    result.saturated = topo.saturated;
    return result;
}

namespace {

MeanStdErr mean_stderr(const std::vector<double>& xs) {
    MeanStdErr ms;
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    ms.mean = sum / n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - ms.mean) * (x - ms.mean);
        ms.se = std::sqrt(ss / (n - 1.0) / n);
    }
    return ms;
}

Report aggregate(const SimConfig& cfg, const std::vector<RealizationResult>& results) {
    Report rep;
    rep.config = cfg;
    rep.realizations = static_cast<std::int64_t>(results.size());
    const double n = static_cast<double>(results.size());

    rep.samples_ul.reserve(results.size());
    rep.samples_dl.reserve(results.size());
    rep.samples_sum.reserve(results.size());
    for (const auto& r : results) {
        rep.samples_ul.push_back(r.rates.r_ul);
        rep.samples_dl.push_back(r.rates.r_dl);
        rep.samples_sum.push_back(r.rates.r_sum);

        rep.mean_ul_power.S += r.breakdown.ul.S;
        rep.mean_ul_power.I_si += r.breakdown.ul.I_si;
        rep.mean_ul_power.I_bs += r.breakdown.ul.I_bs;
        rep.mean_ul_power.I_ulmt += r.breakdown.ul.I_ulmt;
        rep.mean_ul_power.noise += r.breakdown.ul.noise;
        rep.mean_dl_power.S += r.breakdown.dl.S;
        rep.mean_dl_power.I_intra_mt += r.breakdown.dl.I_intra_mt;
        rep.mean_dl_power.I_bs += r.breakdown.dl.I_bs;
        rep.mean_dl_power.I_ulmt += r.breakdown.dl.I_ulmt;
        rep.mean_dl_power.noise += r.breakdown.dl.noise;

        switch (r.decision.mode) {
            case Mode::FD: rep.mode_frac_fd += 1.0; break;
            case Mode::HD_UL: rep.mode_frac_hd_ul += 1.0; break;
            case Mode::HD_DL: rep.mode_frac_hd_dl += 1.0; break;
        }
        rep.saturated_fraction += r.saturated ? 1.0 : 0.0;
        rep.mean_interferers += r.interferer_count;
    }

    rep.rate_ul = mean_stderr(rep.samples_ul);
    rep.rate_dl = mean_stderr(rep.samples_dl);
    rep.rate_sum = mean_stderr(rep.samples_sum);

    auto scale_ul = [&](UlBreakdown& b) {
        b.S /= n; b.I_si /= n; b.I_bs /= n; b.I_ulmt /= n; b.noise /= n;
    };
    auto scale_dl = [&](DlBreakdown& b) {
        b.S /= n; b.I_intra_mt /= n; b.I_bs /= n; b.I_ulmt /= n; b.noise /= n;
    };
    scale_ul(rep.mean_ul_power);
    scale_dl(rep.mean_dl_power);
    rep.mode_frac_fd /= n;
    rep.mode_frac_hd_ul /= n;
    rep.mode_frac_hd_dl /= n;
    rep.saturated_fraction /= n;
    rep.mean_interferers /= n;

    std::sort(rep.samples_ul.begin(), rep.samples_ul.end());
    std::sort(rep.samples_dl.begin(), rep.samples_dl.end());
    std::sort(rep.samples_sum.begin(), rep.samples_sum.end());
    return rep;
}

}  // namespace

Report run(const SimConfig& cfg, int workers) {
    validate(cfg);
    const std::int64_t n = cfg.realizations;
    std::vector<RealizationResult> results(static_cast<std::size_t>(n));

    if (workers <= 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) results[i] = run_realization(cfg, i);
    } else {
        std::atomic<std::int64_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::int64_t i = next.fetch_add(1);
                if (i >= n) return;
                results[i] = run_realization(cfg, i);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Aggregation reads results in index order, so the Report does not
    // depend on the worker count.
    return aggregate(cfg, results);
}

SweepAxis parse_axis(const std::string& s) {
    if (s == "density") return SweepAxis::Density;
    if (s == "sic") return SweepAxis::Sic;
    if (s == "antennas") return SweepAxis::Antennas;
    throw ValidationError("unknown sweep axis \"" + s + "\" (expected density, sic, or antennas)");
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Density: return "density";
        case SweepAxis::Sic: return "sic";
        case SweepAxis::Antennas: return "antennas";
    }
    return "density";
}

SimConfig apply_axis(const SimConfig& cfg, SweepAxis axis, double value) {
    SimConfig point = cfg;
    switch (axis) {
        case SweepAxis::Density:
            point.lambda_bs = value;
            break;
        case SweepAxis::Sic:
            point.sic_capability = value;
            break;
        case SweepAxis::Antennas: {
            int n = static_cast<int>(std::llround(value));
            if (n < 1 || std::abs(value - n) > 1e-9)
                throw ValidationError("antenna sweep values must be positive integers");
            point.n_tx = n;
            point.n_rx = n;
            break;
        }
    }
    validate(point);
    return point;
}

std::vector<SweepPoint> sweep(const SimConfig& cfg, SweepAxis axis,
                              const std::vector<double>& values, int workers) {
    if (values.empty()) throw ValidationError("sweep: values must be nonempty");
    std::vector<SweepPoint> points;
    points.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        SimConfig point_cfg;
        try {
            point_cfg = apply_axis(cfg, axis, values[i]);
        } catch (const ValidationError& e) {
            throw ValidationError("sweep value #" + std::to_string(i) + " (" +
                                  std::to_string(values[i]) + "): " + e.what());
        }
        // Each sweep point gets its own seed domain and stays individually
        // reproducible.
        point_cfg.seed = derive_seed(cfg.seed, 0x5eb0 + i);
        points.push_back({values[i], run(point_cfg, workers)});
    }
    return points;
}

std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("empirical_cdf: empty sample set");
    std::sort(samples.begin(), samples.end());
    std::vector<std::pair<double, double>> cdf;
    cdf.reserve(samples.size());
    const double n = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        cdf.emplace_back(samples[i], static_cast<double>(i + 1) / n);
    return cdf;
}

}  // namespace fdnet
