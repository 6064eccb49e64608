#pragma once

#include <vector>

#include "batmon/core/types.hpp"

namespace batmon::battery {

enum class Interpolation { Step, Ramp };

/// Time-tagged breakpoints. Step mode holds the last value; ramp mode
/// interpolates linearly between breakpoints. Before the first breakpoint
/// the first value applies; after the last, the last.
struct Breakpoints {
    Interpolation mode = Interpolation::Step;
    std::vector<std::pair<double, double>> points;  // (t [s], value)

    double at(double t) const;
    bool strictly_increasing() const;
};

/// Scheduled variation of one capacitance, in farads. Values must stay
/// strictly positive.
struct FaultProfile {
    Breakpoints schedule;

    bool valid() const;
};

double evaluate_fault(const FaultProfile& profile, double t);

/// Supplied current: piecewise breakpoints plus an optional sum of
/// sinusoids. Covers both tabulated traces and closed-form test inputs.
struct CurrentProfile {
    Breakpoints segments;

    struct Sinusoid {
        double amplitude = 0.0;  // [A]
        double frequency = 0.0;  // [Hz]
        double phase = 0.0;      // [rad]
    };
    std::vector<Sinusoid> sinusoids;

    double at(double t) const;
};

}  // namespace batmon::battery
