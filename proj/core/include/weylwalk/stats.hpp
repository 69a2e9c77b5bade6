#pragma once

#include <cstdint>
#include <vector>

namespace weylwalk {

// Wilson 95% score interval for a binomial proportion.
struct WilsonInterval {
    double lo = 0;
    double hi = 1;
};
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};
// Least squares y = a x + b; r2 is the squared correlation.
LinearFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace weylwalk
