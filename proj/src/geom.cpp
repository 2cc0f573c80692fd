#include "fdnet/geom.hpp"

#include <limits>
#include <numbers>

namespace fdnet {

namespace {

// Uniform point on the disc of radius R around the origin (radius = R*sqrt(u)).
Vec2 uniform_in_disc(double radius, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double r = radius * std::sqrt(unit(rng));
    double phi = 2.0 * std::numbers::pi * unit(rng);
    return {r * std::cos(phi), r * std::sin(phi)};
}

}  // namespace

Topology sample_topology(const SimConfig& cfg, std::mt19937_64& rng) {
    Topology topo;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const double area = std::numbers::pi * cfg.window_radius * cfg.window_radius;
    const double mean_count = cfg.lambda_bs * area;
    long target = 0;
    if (mean_count > 0.0) {
        std::poisson_distribution<long>
            poisson(mean_count);
        target = poisson(rng);
    }

    const double exclusion = 2.0 * cfg.r0;
    topo.interferer_bs.reserve(static_cast<std::size_t>(target));
    for (long i = 0; i < target; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < cfg.hardcore_attempt_budget; ++attempt) {
            Vec2 p = uniform_in_disc(cfg.window_radius, rng);
            if (std::hypot(p.x, p.y) < exclusion) continue;  // reference BS at origin
            bool clear = true;
            for (const Vec2& q : topo.interferer_bs) {
                if (distance(p, q) < exclusion) {
                    clear = false;
                    break;
                }
            }
            if (clear) {
                topo.interferer_bs.push_back(p);
                placed = true;
                break;
            }
        }
        if (!placed) {
            topo.saturated = true;
            break;
        }
    }

    // Mark: u_b = b + sqrt(r_b) (cos phi_b, sin phi_b), r_b ~ U[0, mark_radius_sq].
    topo.interferer_ul_mt.reserve(topo.interferer_bs.size());
    for (const Vec2& b : topo.interferer_bs) {
        double rad = std::sqrt(cfg.mark_radius_sq * unit(rng));
        double phi = 2.0 * std::numbers::pi * unit(rng);
        topo.interferer_ul_mt.push_back({b.x + rad * std::cos(phi), b.y + rad * std::sin(phi)});
    }

    topo.ul_candidates.reserve(cfg.num_ul_candidates);
    for (int u = 0; u < cfg.num_ul_candidates; ++u)
        topo.ul_candidates.push_back(uniform_in_disc(cfg.r0, rng));
    topo.dl_candidates.reserve(cfg.num_dl_candidates);
    for (int d = 0; d < cfg.num_dl_candidates; ++d)
        topo.dl_candidates.push_back(uniform_in_disc(cfg.r0, rng));

    return topo;
}

double min_pairwise_distance(const std::vector<Vec2>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("min_pairwise_distance: need at least 2 points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            best = std::min(best, distance(points[i], points[j]));
    return best;
}

}  // namespace fdnet
