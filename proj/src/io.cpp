#include "walkmax/io.hpp"

#include <cstdio>

namespace walkmax::io {

std::string format_double(double v, int significant) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

std::string ensemble_csv(const simulate::EnsembleSummary& summary, std::uint32_t k, bool with_walk_total) {
    std::string out = "rep";
    for (std::uint32_t j = 1; j <= k; ++j) out += ",top_" + std::to_string(j);
    out += ",min,argmax,empty";
    if (with_walk_total) out += ",walk_total";
    out += "\n";
    for (std::size_t i = 0; i < summary.reps.size(); ++i) {
        const auto& rep = summary.reps[i];
        out += std::to_string(i);
        for (std::uint32_t j = 0; j < k; ++j) {
            out += ",";
            out += j < rep.top.size() ? format_double(rep.top[j]) : "";
        }
        out += "," + (rep.empty ? std::string() : format_double(rep.min_value));
        out += "," + std::to_string(rep.argmax);
        out += rep.empty ? ",1" : ",0";
        if (with_walk_total) out += "," + format_double(rep.walk_total);
        out += "\n";
    }
    return out;
}

std::string mv_csv(const simulate::MvMaximaSummary& summary) {
    const std::size_t d = summary.scales.size();
    std::string out = "rep";
    for (std::size_t j = 1; j <= d; ++j) out += ",comp_" + std::to_string(j);
    out += "\n";
    for (std::size_t i = 0; i < summary.rows.size(); ++i) {
        out += std::to_string(i);
        for (const double v : summary.rows[i]) out += "," + format_double(v);
        out += "\n";
    }
    return out;
}

std::string gof_csv(const std::vector<stats::GofReport>& reports) {
    std::string out = "statistic,observed,threshold,sample_size,target,pass\n";
    for (const auto& r : reports) {
        out += r.statistic + "," + format_double(r.observed) + "," + format_double(r.threshold) + "," +
               std::to_string(r.sample_size) + "," + r.target + "," + (r.pass ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace walkmax::io
