#pragma once

#include <random>
#include <vector>

#include "fdnet/config.hpp"

namespace fdnet {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Vec2&) const = default;
};

inline double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// One sampled network instance. The reference BS sits at the origin and is
/// not stored; candidate MTs belong to the reference cell.
struct Topology {
    std::vector<Vec2> interferer_bs;
    std::vector<Vec2> interferer_ul_mt;  // one mark per interfering BS
    std::vector<Vec2> ul_candidates;     // U0 points within r0 of the origin
    std::vector<Vec2> dl_candidates;     // D0 points within r0 of the origin
    bool saturated = false;              // target density not achieved

    bool operator==(const Topology&) const = default;
};

/// Sequential-inhibition hardcore sample: Poisson count at intensity
/// lambda over the window disc, points placed one at a time under the
/// 2*r0 exclusion (against the origin and each other) with a bounded
/// attempt budget. Saturation is a flagged outcome, not an error.
Topology sample_topology(const SimConfig& cfg, std::mt19937_64& rng);

/// Exact minimum over all pairs; throws std::invalid_argument on < 2 points.
double min_pairwise_distance(const std::vector<Vec2>& points);

}  // namespace fdnet
