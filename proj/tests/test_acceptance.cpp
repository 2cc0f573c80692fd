// Acceptance gate: one test case per shipped claim, each printing a
// PASS/FAIL line so the run log doubles as a checklist.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fdnet/engine.hpp"
#include "fdnet/report_io.hpp"
#include "fdnet/rng.hpp"

namespace fs = std::filesystem;
using namespace fdnet;

namespace {

void report(int id, const char* what, bool ok) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what);
    std::fflush(stdout);
}

double pooled2se(const MeanStdErr& a, const MeanStdErr& b) {
    return 2.0 * std::sqrt(a.se * a.se + b.se * b.se);
}

// Baseline Monte Carlo results shared by the ordering criteria: each
// algorithm with and without power allocation, defaults otherwise.
struct BaselineRuns {
    Report plain[3];
    Report opa[3];
    double plain_seconds = 0.0;
};

const BaselineRuns& baseline() {
    static const BaselineRuns runs = [] {
        BaselineRuns r;
        const auto t0 = std::chrono::steady_clock::now();
        for (int a = 0; a < 3; ++a) {
            SimConfig cfg;
            cfg.algorithm = static_cast<Algorithm>(a);
            r.plain[a] = run(cfg, 1);
        }
        r.plain_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (int a = 0; a < 3; ++a) {
            SimConfig cfg;
            cfg.algorithm = static_cast<Algorithm>(a);
            cfg.opa_enabled = true;
            r.opa[a] = run(cfg, 1);
        }
        return r;
    }();
    return runs;
}

// Scalar power-term skeleton: per-watt gains for the own-cell terms plus
// fixed inter-cell interference (other cells stay at maximum power).
struct ScalarInstance {
    double ul_gain, dl_gain, cross_gain, omega_lin;
    double ul_ibs, ul_iulmt, dl_ibs, dl_iulmt;
    double noise_bs, noise_mt;

    double objective(double p_ul, double p_dl, bool genie) const {
        const double ul_x = genie ? ul_ibs + ul_iulmt : 0.0;
        const double dl_x = genie ? dl_ibs + dl_iulmt : 0.0;
        const double ul = p_ul * ul_gain / (p_dl / omega_lin + ul_x + noise_bs);
        const double dl = p_dl * dl_gain / (p_ul * cross_gain + dl_x + noise_mt);
        return std::log2(1 + ul) + std::log2(1 + dl);
    }
};

ScalarInstance random_instance(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(1e-3, 1e3);
    std::uniform_real_distribution<double> om(1.0, 1e8);
    return {u(rng), u(rng), u(rng), om(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("criterion 1: power-allocation corner beats a 51x51 grid") {
    std::mt19937_64 rng = make_stream(1001, 0);
    const double p_ul_max = dbm_to_watt(23.0);
    const double p_dl_max = dbm_to_watt(24.0);
    const auto t0 = std::chrono::steady_clock::now();
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const ScalarInstance inst = random_instance(rng);
        for (bool genie : {false, true}) {
            auto obj = [&](double a, double b) { return inst.objective(a, b, genie); };
            ScheduleDecision out =
                opa({0, 0, p_ul_max, p_dl_max, Mode::FD, false}, obj, p_ul_max, p_dl_max);
            const double corner = obj(out.p_ul, out.p_dl);
            double grid_best = 0.0;
            for (int i = 0; i <= 50; ++i)
                for (int j = 0; j <= 50; ++j)
                    grid_best = std::max(
                        grid_best, obj(p_ul_max * i / 50.0, p_dl_max * j / 50.0));
            if (corner < grid_best * (1.0 - 1e-12)) ++failures;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = failures == 0 && secs < 10.0;
    report(1, "corner optimality vs 51x51 grid, LOCAL and GENIE, 1000 instances", ok);
    CHECK(failures == 0);
    CHECK(secs < 10.0);
}

TEST_CASE("criterion 2: scheduling matches exhaustive metric scans") {
    std::mt19937_64 rng = make_stream(1002, 0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        CandidateMetrics m;
        for (int i = 0; i < 10; ++i) m.s_ul.push_back(u(rng));
        for (int i = 0; i < 10; ++i) m.s_dl.push_back(u(rng));
        m.i_cross = Eigen::MatrixXd::Zero(10, 10);
        for (int d = 0; d < 10; ++d)
            for (int c = 0; c < 10; ++c) m.i_cross(d, c) = u(rng);
        m.noise_bs = u(rng) + 1e-3;
        m.noise_mt = u(rng) + 1e-3;

        auto argmax = [](const std::vector<double>& xs) {
            int best = 0;
            for (int i = 1; i < static_cast<int>(xs.size()); ++i)
                if (xs[i] > xs[best]) best = i;
            return best;
        };
        const int u_star = argmax(m.s_ul);
        const int d_star = argmax(m.s_dl);
        std::vector<double> a2(10), a3(10);
        for (int d = 0; d < 10; ++d) a2[d] = m.s_dl[d] / (m.i_cross(d, u_star) + m.noise_mt);
        for (int c = 0; c < 10; ++c) a3[c] = m.s_ul[c] / (m.i_cross(d_star, c) + m.noise_bs);

        if (schedule_alg1(m) != std::pair{u_star, d_star}) ++failures;
        if (schedule_alg2(m) != std::pair{u_star, argmax(a2)}) ++failures;
        if (schedule_alg3(m) != std::pair{argmax(a3), d_star}) ++failures;
    }
    report(2, "algorithm selections vs exhaustive scans, 1000 instances", failures == 0);
    CHECK(failures == 0);
}

TEST_CASE("criterion 3: sum-rate ordering across the three algorithms") {
    const BaselineRuns& b = baseline();
    const double gap21 = b.plain[1].rate_sum.mean - b.plain[0].rate_sum.mean;
    const double gap32 = b.plain[2].rate_sum.mean - b.plain[1].rate_sum.mean;
    const double thr21 = pooled2se(b.plain[1].rate_sum, b.plain[0].rate_sum);
    const double thr32 = pooled2se(b.plain[2].rate_sum, b.plain[1].rate_sum);
    const bool ok = gap21 > thr21 && gap32 > thr32 && b.plain_seconds < 300.0;
    std::printf("  sum rate Mbps: %.2f < %.2f < %.2f (gaps %.2f/%.2f vs 2se %.2f/%.2f), %.0f s\n",
                b.plain[0].rate_sum.mean / 1e6, b.plain[1].rate_sum.mean / 1e6,
                b.plain[2].rate_sum.mean / 1e6, gap21 / 1e6, gap32 / 1e6, thr21 / 1e6,
                thr32 / 1e6, b.plain_seconds);
    report(3, "mean sum rate third > second > first algorithm beyond 2 pooled se", ok);
    CHECK(gap21 > thr21);
    CHECK(gap32 > thr32);
    CHECK(b.plain_seconds < 300.0);
}

TEST_CASE("criterion 4: directional ordering between the first and third algorithm") {
    const BaselineRuns& b = baseline();
    const double ul_gap = b.plain[0].rate_ul.mean - b.plain[2].rate_ul.mean;
    const double dl_gap = b.plain[2].rate_dl.mean - b.plain[0].rate_dl.mean;
    const bool ok = ul_gap > pooled2se(b.plain[0].rate_ul, b.plain[2].rate_ul) &&
                    dl_gap > pooled2se(b.plain[2].rate_dl, b.plain[0].rate_dl);
    report(4, "UL favors the first algorithm, DL the third, beyond 2 se", ok);
    CHECK(ul_gap > pooled2se(b.plain[0].rate_ul, b.plain[2].rate_ul));
    CHECK(dl_gap > pooled2se(b.plain[2].rate_dl, b.plain[0].rate_dl));
}

TEST_CASE("criterion 5: power allocation never hurts, and helps at low density") {
    const BaselineRuns& b = baseline();
    bool ok = true;
    for (int a = 0; a < 3; ++a) {
        const double gain = b.opa[a].rate_sum.mean - b.plain[a].rate_sum.mean;
        const double thr = pooled2se(b.opa[a].rate_sum, b.plain[a].rate_sum);
        std::printf("  algorithm %d allocation gain %+0.2f Mbps (floor -%.2f)\n", a + 1,
                    gain / 1e6, thr / 1e6);
        if (gain < -thr) ok = false;
        CHECK(gain >= -thr);
    }
    SimConfig sparse;
    sparse.lambda_bs = 1e-5;
    sparse.algorithm = Algorithm::Alg2;
    Report off = run(sparse, 1);
    sparse.opa_enabled = true;
    Report on = run(sparse, 1);
    const double sparse_gain = on.rate_sum.mean - off.rate_sum.mean;
    std::printf("  sparse-density gain %+0.2f Mbps (%.1f%%)\n", sparse_gain / 1e6,
                100.0 * sparse_gain / off.rate_sum.mean);
    if (sparse_gain <= 0.0) ok = false;
    report(5, "allocation gain >= -2 se everywhere, strictly positive at low density", ok);
    CHECK(sparse_gain > 0.0);
}

TEST_CASE("criterion 6: cancellation sweep converges to half duplex") {
    bool mono_ok = true, hd_ok = true;
    double ul60[3] = {0, 0, 0};
    for (int a = 0; a < 3; ++a) {
        MeanStdErr prev{};
        bool first = true;
        for (int omega = 60; omega <= 130; omega += 10) {
            SimConfig cfg;
            cfg.algorithm = static_cast<Algorithm>(a);
            cfg.opa_enabled = true;
            cfg.sic_capability = omega;
            Report r = run(cfg, 1);
            if (omega == 60) {
                ul60[a] = r.rate_ul.mean;
                const double hd = r.mode_frac_hd_ul + r.mode_frac_hd_dl;
                if (hd <= r.mode_frac_fd) hd_ok = false;
            }
            if (!first && r.rate_ul.mean < prev.mean - pooled2se(r.rate_ul, prev))
                mono_ok = false;
            prev = r.rate_ul;
            first = false;
        }
    }
    const double lo = std::min({ul60[0], ul60[1], ul60[2]});
    const double hi = std::max({ul60[0], ul60[1], ul60[2]});
    const bool agree = (hi - lo) / lo < 0.05;
    std::printf("  UL at 60 dB: %.2f / %.2f / %.2f Mbps (spread %.2f%%)\n", ul60[0] / 1e6,
                ul60[1] / 1e6, ul60[2] / 1e6, 100.0 * (hi - lo) / lo);
    const bool ok = mono_ok && hd_ok && agree;
    report(6, "UL nondecreasing in cancellation; algorithms agree in the HD regime", ok);
    CHECK(mono_ok);
    CHECK(hd_ok);
    CHECK(agree);
}

TEST_CASE("criterion 7: a second antenna pair helps both directions") {
    const BaselineRuns& b = baseline();
    SimConfig cfg;
    cfg.algorithm = Algorithm::Alg3;
    cfg.n_tx = 2;
    cfg.n_rx = 2;
    Report mimo = run(cfg, 1);
    const Report& siso = b.plain[2];
    const double ul_gap = mimo.rate_ul.mean - siso.rate_ul.mean;
    const double dl_gap = mimo.rate_dl.mean - siso.rate_dl.mean;
    const bool ok = ul_gap > pooled2se(mimo.rate_ul, siso.rate_ul) &&
                    dl_gap > pooled2se(mimo.rate_dl, siso.rate_dl);
    report(7, "2x2 beats 1x1 in both UL and DL beyond 2 se", ok);
    CHECK(ul_gap > pooled2se(mimo.rate_ul, siso.rate_ul));
    CHECK(dl_gap > pooled2se(mimo.rate_dl, siso.rate_dl));
}

TEST_CASE("criterion 8: half-duplex terms vanish field-exactly") {
    SimConfig cfg;
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 rng = make_stream(1008, static_cast<std::uint64_t>(i));
        Topology topo = sample_topology(cfg, rng);
        ChannelSet ch = draw_channels(topo, cfg, rng);
        auto w_int = draw_interferer_beamformers(static_cast<int>(topo.interferer_bs.size()),
                                                 cfg.n_tx, rng);
        Beamformers bf = make_beamformers(ch, 0, 0, w_int);
        TxPowers no_dl{cfg.p_ul_max_w(), 0.0, cfg.p_ul_max_w(), 0.0};
        SinrBreakdown a = compute_breakdown(topo, ch, bf, 0, 0, no_dl, cfg);
        if (a.ul.I_si != 0.0 || a.ul.I_bs != 0.0 || a.dl.S != 0.0 || a.dl.I_bs != 0.0)
            ok = false;
        TxPowers no_ul{0.0, cfg.p_dl_max_w(), 0.0, cfg.p_dl_max_w()};
        SinrBreakdown b = compute_breakdown(topo, ch, bf, 0, 0, no_ul, cfg);
        if (b.dl.I_intra_mt != 0.0 || b.dl.I_ulmt != 0.0 || b.ul.S != 0.0 ||
            b.ul.I_ulmt != 0.0)
            ok = false;
    }
    report(8, "zero DL / zero UL power zeroes the FD-induced terms exactly", ok);
    CHECK(ok);
}

TEST_CASE("criterion 9: layout invariants over 1000 topologies") {
    SimConfig cfg;
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        std::mt19937_64 rng = make_stream(1009, static_cast<std::uint64_t>(i));
        Topology t = sample_topology(cfg, rng);
        std::vector<Vec2> all{{0.0, 0.0}};
        all.insert(all.end(), t.interferer_bs.begin(), t.interferer_bs.end());
        if (all.size() >= 2 && min_pairwise_distance(all) < 80.0) ok = false;
        for (const Vec2& p : t.ul_candidates)
            if (distance(p, {0, 0}) > 40.0) ok = false;
        for (const Vec2& p : t.dl_candidates)
            if (distance(p, {0, 0}) > 40.0) ok = false;
    }
    report(9, "hardcore distance >= 80 m and candidates within 40 m, always", ok);
    CHECK(ok);
}

TEST_CASE("criterion 10: output files byte-identical across worker counts") {
    SimConfig cfg;
    cfg.realizations = 500;
    cfg.seed = 2026;
    cfg.algorithm = Algorithm::Alg2;
    cfg.opa_enabled = true;

    auto bundle = [&](int workers, const fs::path& dir) {
        Report rep = run(cfg, workers);
        write_output_bundle(rep, dir);
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    const fs::path base = fs::temp_directory_path() / "fdnet_accept10";
    fs::remove_all(base);
    bundle(1, base / "w1");
    bundle(2, base / "w2");
    bundle(8, base / "w8");
    bool ok = true;
    for (const char* f :
         {"summary.json", "cdf_ul.csv", "cdf_dl.csv", "cdf_sum.csv", "decomposition.csv"}) {
        const std::string ref = slurp(base / "w1" / f);
        if (ref.empty() || ref != slurp(base / "w2" / f) || ref != slurp(base / "w8" / f))
            ok = false;
    }
    fs::remove_all(base);
    report(10, "fixed seed gives byte-identical outputs at 1, 2, and 8 workers", ok);
    CHECK(ok);
}

TEST_CASE("criterion 11: matched filter is the optimal combiner") {
    std::mt19937_64 rng = make_stream(1011, 0);
    bool ok = true;
    for (int c = 0; c < 1000; ++c) {
        CVector h(4);
        for (int i = 0; i < 4; ++i) h(i) = complex_gaussian(rng);
        const double best = std::norm(matched_filter(h).dot(h));
        for (int z = 0; z < 1000; ++z)
            if (std::norm(random_unit_vector(4, rng).dot(h)) > best + 1e-12) ok = false;
    }
    report(11, "no random unit combiner beats the matched filter, 1000x1000", ok);
    CHECK(ok);
}
