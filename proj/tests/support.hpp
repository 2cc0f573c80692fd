#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace fdnet::test {

// One-sample Kolmogorov-Smirnov statistic against a CDF given as a callable.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
    }
    return d;
}

// Asymptotic 1% critical value for the one-sample KS test.
inline double ks_critical_1pct(std::size_t n) {
    return 1.628 / std::sqrt(static_cast<double>(n));
}

inline double normal_cdf(double x, double mu, double sigma) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

inline double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double stderr_of(const std::vector<double>& xs) {
    const double m = mean_of(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    const double n = static_cast<double>(xs.size());
    return std::sqrt(ss / (n - 1.0) / n);
}

}  // namespace fdnet::test
