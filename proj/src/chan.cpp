#include "fdnet/chan.hpp"

namespace fdnet {

namespace {

CVector draw_cvector(int n, std::mt19937_64& rng) {
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = complex_gaussian(rng);
    return v;
}

CMatrix draw_cmatrix(int rows, int cols, std::mt19937_64& rng) {
    CMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = complex_gaussian(rng);
    return m;
}

}  // namespace

double pathloss_gain(const PathlossLaw& law, double distance_m, double shadow_db) {
    double d = std::max(distance_m, law.min_distance_m);
    double pl_db = law.intercept_db + law.slope_db_per_decade * std::log10(d / 1000.0);
    double g = db_to_linear(-pl_db - shadow_db);
    return std::min(g, 1.0);
}

double sample_gain(const PathlossLaw& law, double distance_m, std::mt19937_64& rng) {
    double shadow = 0.0;
    if (law.shadowing_sigma_db > 0.0) {
        std::normal_distribution<double> n(0.0, law.shadowing_sigma_db);
        shadow = n(rng);
    }
    return pathloss_gain(law, distance_m, shadow);
}

ChannelSet draw_channels(const Topology& topo, const SimConfig& cfg, std::mt19937_64& rng) {
    const auto& prof = cfg.pathloss_profile;
    const int u_count = static_cast<int>(topo.ul_candidates.size());
    const int d_count = static_cast<int>(topo.dl_candidates.size());
    const int b_count = static_cast<int>(topo.interferer_bs.size());
    if (u_count != cfg.num_ul_candidates || d_count != cfg.num_dl_candidates)
        throw std::invalid_argument("draw_channels: topology/config candidate counts differ");

    const Vec2 origin{0.0, 0.0};
    ChannelSet ch;

    ch.h_bs_ul.reserve(u_count);
    ch.g_bs_ul.reserve(u_count);
    for (const Vec2& u : topo.ul_candidates) {
        ch.h_bs_ul.push_back(draw_cvector(cfg.n_rx, rng));
        ch.g_bs_ul.push_back(sample_gain(prof.mt_bs, distance(origin, u), rng));
    }

    ch.h_dl_bs.reserve(d_count);
    ch.g_dl_bs.reserve(d_count);
    for (const Vec2& d : topo.dl_candidates) {
        ch.h_dl_bs.push_back(draw_cvector(cfg.n_tx, rng));
        ch.g_dl_bs.push_back(sample_gain(prof.bs_mt, distance(origin, d), rng));
    }

    ch.h_mt_mt.resize(d_count, u_count);
    ch.g_mt_mt.resize(d_count, u_count);
    for (int d = 0; d < d_count; ++d) {
        for (int u = 0; u < u_count; ++u) {
            ch.h_mt_mt(d, u) = complex_gaussian(rng);
            ch.g_mt_mt(d, u) =
                sample_gain(prof.mt_mt, distance(topo.dl_candidates[d], topo.ul_candidates[u]), rng);
        }
    }

    ch.H_bs_bs.reserve(b_count);
    ch.g_bs_bs.reserve(b_count);
    ch.h_bs_ulmark.reserve(b_count);
    ch.g_bs_ulmark.reserve(b_count);
    for (int b = 0; b < b_count; ++b) {
        ch.H_bs_bs.push_back(draw_cmatrix(cfg.n_rx, cfg.n_tx, rng));
        ch.g_bs_bs.push_back(sample_gain(prof.bs_bs, distance(origin, topo.interferer_bs[b]), rng));
        ch.h_bs_ulmark.push_back(draw_cvector(cfg.n_rx, rng));
        ch.g_bs_ulmark.push_back(
            sample_gain(prof.mt_bs, distance(origin, topo.interferer_ul_mt[b]), rng));
    }

    ch.h_dl_intbs.assign(d_count, {});
    ch.g_dl_intbs.assign(d_count, {});
    ch.h_dl_ulmark.resize(d_count, b_count);
    ch.g_dl_ulmark.resize(d_count, b_count);
    for (int d = 0; d < d_count; ++d) {
        ch.h_dl_intbs[d].reserve(b_count);
        ch.g_dl_intbs[d].reserve(b_count);
        for (int b = 0; b < b_count; ++b) {
            ch.h_dl_intbs[d].push_back(draw_cvector(cfg.n_tx, rng));
            ch.g_dl_intbs[d].push_back(
                sample_gain(prof.bs_mt, distance(topo.dl_candidates[d], topo.interferer_bs[b]), rng));
            ch.h_dl_ulmark(d, b) = complex_gaussian(rng);
            ch.g_dl_ulmark(d, b) = sample_gain(
                prof.mt_mt, distance(topo.dl_candidates[d], topo.interferer_ul_mt[b]), rng);
        }
    }

    return ch;
}

CVector matched_filter(const CVector& h) {
    double norm = h.norm();
    if (norm <= 0.0) throw std::invalid_argument("matched_filter: zero channel vector");
    return h / norm;
}

CVector random_unit_vector(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_unit_vector: n must be >= 1");
    CVector v = draw_cvector(n, rng);
    double norm = v.norm();
    while (norm <= 0.0) {  // measure-zero, but keep the contract airtight
        v = draw_cvector(n, rng);
        norm = v.norm();
    }
    return v / norm;
}

std::vector<CVector> draw_interferer_beamformers(int count, int n_tx, std::mt19937_64& rng) {
    std::vector<CVector> w;
    w.reserve(count);
    for (int b = 0; b < count; ++b) w.push_back(random_unit_vector(n_tx, rng));
    return w;
}

Beamformers make_beamformers(const ChannelSet& ch, int u0, int d0, std::vector<CVector> w_int) {
    Beamformers bf;
    bf.v0 = matched_filter(ch.h_bs_ul.at(u0));
    bf.w0 = matched_filter(ch.h_dl_bs.at(d0));
    bf.w_int = std::move(w_int);
    return bf;
}

}  // namespace fdnet
