#pragma once

#include "fdnet/chan.hpp"
#include "fdnet/config.hpp"
#include "fdnet/geom.hpp"

namespace fdnet {

/// Linear received powers at the reference BS (uplink direction).
struct UlBreakdown {
    double S = 0.0;       // desired UL signal
    double I_si = 0.0;    // residual self-interference, p_dl / Omega
    double I_bs = 0.0;    // interfering BSs' DL transmissions
    double I_ulmt = 0.0;  // interfering cells' scheduled UL MTs
    double noise = 0.0;
};

/// Linear received powers at the scheduled DL MT.
struct DlBreakdown {
    double S = 0.0;
    double I_intra_mt = 0.0;  // same-cell scheduled UL MT
    double I_bs = 0.0;
    double I_ulmt = 0.0;
    double noise = 0.0;
};

struct SinrBreakdown {
    UlBreakdown ul;
    DlBreakdown dl;
};

struct RatePair {
    double r_ul = 0.0;
    double r_dl = 0.0;
    double r_sum = 0.0;
};

/// Transmit powers, watts. Reference-cell powers may differ from the
/// interferers' (under OPA the other cells stay at maximum).
struct TxPowers {
    double ul_ref = 0.0;
    double dl_ref = 0.0;
    double ul_int = 0.0;
    double dl_int = 0.0;

    /// Network-wide common powers (the no-OPA setting).
    static TxPowers uniform(double p_ul, double p_dl) { return {p_ul, p_dl, p_ul, p_dl}; }
};

SinrBreakdown compute_breakdown(const Topology& topo, const ChannelSet& ch,
                                const Beamformers& bf, int u0, int d0,
                                const TxPowers& powers, const SimConfig& cfg);

struct SinrPair {
    double ul = 0.0;
    double dl = 0.0;
};

SinrPair sinr(const SinrBreakdown& bd);

/// Shannon rates: B * log2(1 + SINR) per direction, summed.
RatePair rates(double sinr_ul, double sinr_dl, double bandwidth_hz);

}  // namespace fdnet
