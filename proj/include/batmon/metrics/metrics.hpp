#pragma once

#include <span>
#include <string>
#include <vector>

namespace batmon::metrics {

/// Root mean-squared error as reported in the study tables:
/// sqrt(sum((x - xhat)^2)) / N. With `conventional` set the usual
/// sqrt(sum / N) is returned instead; the two differ by exactly sqrt(N).
double rmse(std::span<const double> truth, std::span<const double> estimate,
            bool conventional = false);

/// Per-filter error summary for one case.
struct RmseTable {
    struct Entry {
        std::string filter;
        double v_cb = 0.0;
        double v_cc = 0.0;
        double c_b = 0.0;
        double c_c = 0.0;
        double voltage = 0.0;  // combined over both voltage channels
        double wall_time_s = 0.0;
        bool diverged = false;
    };
    std::vector<Entry> entries;
};

enum class RankKey { VCb, VCc, Cb, Cc, Voltage };

/// Filters ordered by ascending RMSE on the key. Ties break on wall time,
/// then on the fixed variant order ekf, pf, qkf, svsf.
struct RankTable {
    RankKey key = RankKey::Voltage;
    std::vector<std::string> order;
};

RankTable rank_filters(const RmseTable& table, RankKey key);

}  // namespace batmon::metrics
