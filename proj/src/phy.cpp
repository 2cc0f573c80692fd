#include "fdnet/phy.hpp"

namespace fdnet {

SinrBreakdown compute_breakdown(const Topology& topo, const ChannelSet& ch,
                                const Beamformers& bf, int u0, int d0,
                                const TxPowers& powers, const SimConfig& cfg) {
    const int u_count = static_cast<int>(ch.h_bs_ul.size());
    const int d_count = static_cast<int>(ch.h_dl_bs.size());
    const int b_count = static_cast<int>(topo.interferer_bs.size());
    if (u0 < 0 || u0 >= u_count) throw std::out_of_range("compute_breakdown: u0 out of range");
    if (d0 < 0 || d0 >= d_count) throw std::out_of_range("compute_breakdown: d0 out of range");

    SinrBreakdown bd;

    bd.ul.S = powers.ul_ref * ch.g_bs_ul[u0] * std::norm(bf.v0.dot(ch.h_bs_ul[u0]));
    bd.ul.I_si = powers.dl_ref / cfg.omega_linear();
    for (int b = 0; b < b_count; ++b) {
        bd.ul.I_bs +=
            powers.dl_int * ch.g_bs_bs[b] * std::norm(bf.v0.dot(ch.H_bs_bs[b] * bf.w_int[b]));
        bd.ul.I_ulmt +=
            powers.ul_int * ch.g_bs_ulmark[b] * std::norm(bf.v0.dot(ch.h_bs_ulmark[b]));
    }
    bd.ul.noise = cfg.noise_bs_w();

    bd.dl.S = powers.dl_ref * ch.g_dl_bs[d0] * std::norm(ch.h_dl_bs[d0].dot(bf.w0));
    bd.dl.I_intra_mt = powers.ul_ref * ch.g_mt_mt(d0, u0) * std::norm(ch.h_mt_mt(d0, u0));
    for (int b = 0; b < b_count; ++b) {
        bd.dl.I_bs +=
            powers.dl_int * ch.g_dl_intbs[d0][b] * std::norm(ch.h_dl_intbs[d0][b].dot(bf.w_int[b]));
        bd.dl.I_ulmt += powers.ul_int * ch.g_dl_ulmark(d0, b) * std::norm(ch.h_dl_ulmark(d0, b));
    }
    bd.dl.noise = cfg.noise_mt_w();

    return bd;
}

SinrPair sinr(const SinrBreakdown& bd) {
    SinrPair s;
    s.ul = bd.ul.S / (bd.ul.I_si + bd.ul.I_bs + bd.ul.I_ulmt + bd.ul.noise);
    s.dl = bd.dl.S / (bd.dl.I_intra_mt + bd.dl.I_bs + bd.dl.I_ulmt + bd.dl.noise);
    return s;
}

RatePair rates(double sinr_ul, double sinr_dl, double bandwidth_hz) {
    // log1p keeps precision at small SINR.
    constexpr double ln2 = 0.69314718055994530942;
    RatePair r;
    r.r_ul = bandwidth_hz * std::log1p(sinr_ul) / ln2;
    r.r_dl = bandwidth_hz * std::log1p(sinr_dl) / ln2;
    r.r_sum = r.r_ul + r.r_dl;
    return r;
}

}  // namespace fdnet
