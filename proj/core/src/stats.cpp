#include "weylwalk/stats.hpp"

#include <cmath>

#include "weylwalk/errors.hpp"

namespace weylwalk {

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    check_invariant(successes <= trials, "wilson_interval: successes exceed trials");
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054; // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

LinearFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    require(xs.size() == ys.size() && xs.size() >= 2, "linear_fit: need >= 2 points");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        syy += ys[i] * ys[i];
    }
    const double vx = sxx - sx * sx / n;
    const double vy = syy - sy * sy / n;
    const double cov = sxy - sx * sy / n;
    check_invariant(vx > 0, "linear_fit: degenerate x values");
    LinearFit fit;
    fit.slope = cov / vx;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.r2 = vy > 0 ? (cov * cov) / (vx * vy) : 1.0;
    return fit;
}

} // namespace weylwalk
