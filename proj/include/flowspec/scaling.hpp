#pragma once

#include <utility>
#include <vector>

namespace flowspec {

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; ///< RMS residual in log-log space
};

/// Ordinary least squares on (log n, log value). Needs at least two points
/// with distinct n; all coordinates must be positive.
ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points);

} // namespace flowspec
