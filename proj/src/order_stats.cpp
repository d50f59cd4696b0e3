#include "eigenfence/order_stats.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eigenfence {

double split_difference(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    const std::size_t m = values.size();
    const std::size_t half = m / 2;
    double top = 0.0, bottom = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
        top += values[i];
        bottom += values[m - 1 - i];
    }
    return top - bottom;
}

double kth_largest(std::vector<double> values, std::size_t k) {
    if (k == 0 || k > values.size()) throw std::out_of_range("kth_largest: rank out of range");
    auto nth = values.begin() + static_cast<std::ptrdiff_t>(k - 1);
    std::nth_element(values.begin(), nth, values.end(), std::greater<>());
    return *nth;
}

}  // namespace eigenfence
