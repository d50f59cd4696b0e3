#include "eigenfence/discs.hpp"

#include <cmath>
#include <vector>

#include "eigenfence/errors.hpp"
#include "eigenfence/order_stats.hpp"
#include "eigenfence/similarity.hpp"

namespace eigenfence {

double second_type_radius(std::span<const double> off_diagonal) {
    if (off_diagonal.size() < 2) {
        throw SizeError("second-type discs need n >= 3 (got " + std::to_string(off_diagonal.size() + 1) + ")");
    }
    std::vector<double> values(off_diagonal.begin(), off_diagonal.end());
    values.push_back(0.0);
    return split_difference(std::move(values));
}

DiscUnion second_type_discs_of_transpose(const RealMatrix& m) {
    if (m.size() < 3) throw SizeError("second-type discs need n >= 3");
    DiscUnion u;
    u.discs.reserve(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
        const auto off = m.column_off_diagonal(j);
        u.discs.push_back({m(j, j), second_type_radius(off)});
    }
    return u;
}

DiscUnion classic_discs(const RealMatrix& m, Axis axis) {
    DiscUnion u;
    u.discs.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        double r = 0.0;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k == i) continue;
            r += std::abs(axis == Axis::rows ? m(i, k) : m(k, i));
        }
        u.discs.push_back({m(i, i), r});
    }
    return u;
}

DiscUnion eigenpair_region(const RealMatrix& a, const Eigenpair& p, double tol) {
    if (a.size() < 3) throw SizeError("second-type discs need n >= 3");
    return second_type_discs_of_transpose(constant_row_sum_form(a, p, tol).matrix);
}

}  // namespace eigenfence
