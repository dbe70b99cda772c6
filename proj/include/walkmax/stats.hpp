#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace walkmax::stats {

/// Distribution-free empirical-CDF band: sqrt(log(2/delta) / (2m)).
double dkw_threshold(std::uint64_t m, double delta);

/// Kolmogorov-Smirnov distance of a sample against a target CDF,
/// both one-sided gaps included.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov distance.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Which order statistic divides inside the log, X_(k+1) (standard) or X_(k).
enum class HillThreshold { order_k_plus_one, order_k };

/// Hill estimator of the inverse tail index 1/alpha from the top k order
/// statistics of a positive sample.
double hill(const std::vector<double>& sample, std::size_t k,
            HillThreshold threshold = HillThreshold::order_k_plus_one);

/// Half-open interval (lo, hi]; hi may be +infinity for (lo, inf).
struct TailInterval {
    double lo;
    double hi;
};

struct TailMeasureEstimate {
    std::vector<TailInterval> intervals;
    std::vector<double> masses;  // (1/k) * count per interval
    std::size_t k = 0;
    std::size_t point_count = 0;
};

/// Tail empirical measure: per interval, (1/k) * #{points inside}.
TailMeasureEstimate tail_empirical_measure(const std::vector<double>& points, std::size_t k,
                                           const std::vector<TailInterval>& intervals);

/// One named pass/fail verdict: pass iff observed <= threshold.
struct GofReport {
    std::string statistic;
    double observed = 0.0;
    double threshold = 0.0;
    std::size_t sample_size = 0;
    std::string target;
    bool pass = false;
};

GofReport make_gof(std::string statistic, double observed, double threshold, std::size_t sample_size,
                   std::string target);

/// Compares the empirical joint CDF of (max, min) pairs at (x, y) against
/// the product limit Gumbel(x) * (1 - Gumbel(-y)).
GofReport joint_maxmin_check(const std::vector<double>& maxima, const std::vector<double>& minima,
                             double x, double y, double threshold);

double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace walkmax::stats
