#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "fdnet/config.hpp"
#include "fdnet/geom.hpp"

namespace fdnet {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// One CN(0,1) draw.
inline cplx complex_gaussian(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    return {n(rng), n(rng)};
}

/// Small-scale fading plus large-scale linear gains for every link class.
/// Indexing: u over UL candidates, d over DL candidates, b over interferers.
/// The self-interference channel is not drawn; it is the constant 1/Omega.
struct ChannelSet {
    std::vector<CVector> h_bs_ul;   // h_{0,u}, length N_R
    std::vector<double> g_bs_ul;
    std::vector<CVector> h_dl_bs;   // h_{d,0}, length N_T
    std::vector<double> g_dl_bs;
    CMatrix h_mt_mt;                // h_{d,u}, D0 x U0 scalars
    Eigen::MatrixXd g_mt_mt;
    std::vector<CMatrix> H_bs_bs;   // H_{0,b}, N_R x N_T
    std::vector<double> g_bs_bs;
    std::vector<CVector> h_bs_ulmark;  // h_{0,u_b}, length N_R
    std::vector<double> g_bs_ulmark;
    std::vector<std::vector<CVector>> h_dl_intbs;  // h_{d,b}, length N_T
    std::vector<std::vector<double>> g_dl_intbs;
    CMatrix h_dl_ulmark;            // h_{d,u_b}, D0 x B scalars
    Eigen::MatrixXd g_dl_ulmark;
};

/// MRC/MRT vectors for the scheduled pair, plus the interferers' transmit
/// directions (isotropic, since their DL users are not modeled).
struct Beamformers {
    CVector v0;                  // receive, length N_R, unit norm
    CVector w0;                  // transmit, length N_T, unit norm
    std::vector<CVector> w_int;  // per interferer, length N_T, unit norm
};

/// Linear large-scale gain for one link: pathloss law plus a lognormal
/// shadowing draw, clamped so the gain never exceeds 0 dB.
double pathloss_gain(const PathlossLaw& law, double distance_m, double shadow_db);
double sample_gain(const PathlossLaw& law, double distance_m, std::mt19937_64& rng);

ChannelSet draw_channels(const Topology& topo, const SimConfig& cfg, std::mt19937_64& rng);

/// v = h / ||h||; throws std::invalid_argument on the zero vector.
CVector matched_filter(const CVector& h);

/// Uniform on the complex unit sphere.
CVector random_unit_vector(int n, std::mt19937_64& rng);

std::vector<CVector> draw_interferer_beamformers(int count, int n_tx, std::mt19937_64& rng);

Beamformers make_beamformers(const ChannelSet& ch, int u0, int d0, std::vector<CVector> w_int);

}  // namespace fdnet
