#include "batmon/battery/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace batmon::battery {

bool Breakpoints::strictly_increasing() const {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].first <= points[i - 1].first) {
            return false;
        }
    }
    return true;
}

double Breakpoints::at(double t) const {
    if (points.empty()) {
        return 0.0;
    }
    if (t <= points.front().first) {
        return points.front().second;
    }
    if (t >= points.back().first) {
        return points.back().second;
    }
    // first breakpoint strictly after t
    auto it = std::upper_bound(
        points.begin(), points.end(), t,
        [](double value, const auto& bp) { return value < bp.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    if (mode == Interpolation::Step) {
        return lo.second;
    }
    const double frac = (t - lo.first) / (hi.first - lo.first);
    return lo.second + frac * (hi.second - lo.second);
}

bool FaultProfile::valid() const {
    if (schedule.points.empty() || !schedule.strictly_increasing()) {
        return false;
    }
    return std::all_of(schedule.points.begin(), schedule.points.end(),
                       [](const auto& bp) { return bp.second > 0.0; });
}

double evaluate_fault(const FaultProfile& profile, double t) {
    return profile.schedule.at(t);
}

double CurrentProfile::at(double t) const {
    double i_s = segments.at(t);
    for (const auto& s : sinusoids) {
        i_s += s.amplitude *
               std::sin(2.0 * std::numbers::pi * s.frequency * t + s.phase);
    }
    return i_s;
}

}  // namespace batmon::battery
