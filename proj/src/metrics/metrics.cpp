#include "batmon/metrics/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "batmon/core/types.hpp"

namespace batmon::metrics {

double rmse(std::span<const double> truth, std::span<const double> estimate,
            bool conventional) {
    if (truth.size() != estimate.size()) {
        throw LengthMismatch("rmse: series lengths differ");
    }
    if (truth.empty()) {
        throw LengthMismatch("rmse: empty series");
    }
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double e = truth[i] - estimate[i];
        sum_sq += e * e;
    }
    const double n = static_cast<double>(truth.size());
    return conventional ? std::sqrt(sum_sq / n) : std::sqrt(sum_sq) / n;
}

namespace {

double key_value(const RmseTable::Entry& e, RankKey key) {
    switch (key) {
        case RankKey::VCb: return e.v_cb;
        case RankKey::VCc: return e.v_cc;
        case RankKey::Cb: return e.c_b;
        case RankKey::Cc: return e.c_c;
        case RankKey::Voltage: return e.voltage;
    }
    return e.voltage;
}

int variant_rank(const std::string& name) {
    static constexpr std::array<const char*, 4> order = {"ekf", "pf", "qkf",
                                                         "svsf"};
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (name == order[i]) {
            return static_cast<int>(i);
        }
    }
    return static_cast<int>(order.size());
}

}  // namespace

RankTable rank_filters(const RmseTable& table, RankKey key) {
    std::vector<RmseTable::Entry> sorted = table.entries;
    std::sort(sorted.begin(), sorted.end(),
              [key](const RmseTable::Entry& a, const RmseTable::Entry& b) {
                  const double ka = key_value(a, key);
                  const double kb = key_value(b, key);
                  if (ka != kb) {
                      return ka < kb;
                  }
                  if (a.wall_time_s != b.wall_time_s) {
                      return a.wall_time_s < b.wall_time_s;
                  }
                  return variant_rank(a.filter) < variant_rank(b.filter);
              });

    RankTable ranking;
    ranking.key = key;
    ranking.order.reserve(sorted.size());
    for (const auto& entry : sorted) {
        ranking.order.push_back(entry.filter);
    }
    return ranking;
}

}  // namespace batmon::metrics
