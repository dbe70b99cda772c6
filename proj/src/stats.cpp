#include "walkmax/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "walkmax/ldtheory.hpp"

namespace walkmax::stats {

namespace {
void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}
}  // namespace

double dkw_threshold(std::uint64_t m, double delta) {
    require(m >= 1, "dkw_threshold: sample size must be >= 1");
    require(delta > 0.0 && delta < 1.0, "dkw_threshold: level must lie in (0,1)");
    return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(m)));
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
    require(!sample.empty(), "ks_distance: sample must be nonempty");
    std::sort(sample.begin(), sample.end());
    const double m = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / m - f));
        d = std::max(d, std::fabs(f - static_cast<double>(i) / m));
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    require(!a.empty() && !b.empty(), "ks_two_sample: samples must be nonempty");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double hill(const std::vector<double>& sample, std::size_t k, HillThreshold threshold) {
    require(k >= 1, "hill: k must be >= 1");
    require(k < sample.size(), "hill: need k < sample size");
    std::vector<double> top(sample);
    const std::size_t take = k + 1;
    std::partial_sort(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(take), top.end(),
                      std::greater<double>());
    const double pivot = threshold == HillThreshold::order_k_plus_one ? top[k] : top[k - 1];
    require(pivot > 0.0, "hill: top k+1 order statistics must be positive");
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) acc += std::log(top[i] / pivot);
    return acc / static_cast<double>(k);
}

TailMeasureEstimate tail_empirical_measure(const std::vector<double>& points, std::size_t k,
                                           const std::vector<TailInterval>& intervals) {
    require(k >= 1, "tail_empirical_measure: k must be >= 1");
    require(k <= points.size(), "tail_empirical_measure: k must not exceed the number of points");
    TailMeasureEstimate out;
    out.intervals = intervals;
    out.k = k;
    out.point_count = points.size();
    out.masses.reserve(intervals.size());
    for (const auto& iv : intervals) {
        std::size_t count = 0;
        for (const double v : points)
            if (v > iv.lo && v <= iv.hi) ++count;
        out.masses.push_back(static_cast<double>(count) / static_cast<double>(k));
    }
    return out;
}

GofReport make_gof(std::string statistic, double observed, double threshold, std::size_t sample_size,
                   std::string target) {
    GofReport r;
    r.statistic = std::move(statistic);
    r.observed = observed;
    r.threshold = threshold;
    r.sample_size = sample_size;
    r.target = std::move(target);
    r.pass = observed <= threshold;
    return r;
}

GofReport joint_maxmin_check(const std::vector<double>& maxima, const std::vector<double>& minima,
                             double x, double y, double threshold) {
    require(!maxima.empty(), "joint_maxmin_check: samples must be nonempty");
    require(maxima.size() == minima.size(), "joint_maxmin_check: samples must be aligned by replication");
    std::size_t inside = 0;
    for (std::size_t i = 0; i < maxima.size(); ++i)
        if (maxima[i] <= x && minima[i] <= y) ++inside;
    const double emp = static_cast<double>(inside) / static_cast<double>(maxima.size());
    const double target = ldtheory::limit_cdf_gumbel(x) * (1.0 - ldtheory::limit_cdf_gumbel(-y));
    return make_gof("joint-maxmin-abs-diff", std::fabs(emp - target), threshold, maxima.size(),
                    "Gumbel(x)*(1-Gumbel(-y))");
}

double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    require(a.size() == b.size() && a.size() >= 2, "pearson_correlation: need two aligned samples");
    const double n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma, db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    require(saa > 0.0 && sbb > 0.0, "pearson_correlation: degenerate sample");
    return sab / std::sqrt(saa * sbb);
}

}  // namespace walkmax::stats
