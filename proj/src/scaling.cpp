#include "flowspec/scaling.hpp"

#include <cmath>

#include "flowspec/errors.hpp"

namespace flowspec {

ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points) {
    const int k = static_cast<int>(points.size());
    require(k >= 2, "fit_scaling needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [n, value] : points) {
        require(n > 0.0 && value > 0.0, "fit_scaling needs positive coordinates");
        double x = std::log(n), y = std::log(value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double det = k * sxx - sx * sx;
    require(det > 0.0, "fit_scaling needs at least two distinct n values");
    ScalingFit fit;
    fit.slope = (k * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / k;
    double ss = 0.0;
    for (auto [n, value] : points) {
        double r = std::log(value) - (fit.intercept + fit.slope * std::log(n));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / k);
    return fit;
}

} // namespace flowspec
