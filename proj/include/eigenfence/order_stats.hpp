#pragma once

#include <cstddef>
#include <vector>

namespace eigenfence {

/// Sorts `values` descending and returns the sum of the top floor(m/2)
/// entries minus the sum of the bottom floor(m/2); for odd m the median is
/// left out. Both the second-type disc radius and the column statistic of
/// the infinity semi-norm are this quantity over different lists.
double split_difference(std::vector<double> values);

/// k-th largest value counting multiplicity (k is 1-based).
double kth_largest(std::vector<double> values, std::size_t k);

}  // namespace eigenfence
