#include "eigenfence/refine.hpp"

#include <cmath>
#include <sstream>

#include "eigenfence/discs.hpp"
#include "eigenfence/errors.hpp"
#include "eigenfence/order_stats.hpp"

namespace eigenfence {

namespace {

void require_constant_row_sum(const RealMatrix& b) {
    if (!is_constant_row_sum(b)) {
        std::ostringstream msg;
        msg << "matrix is not constant row-sum (row sums spread by " << row_sum_spread(b) << ")";
        throw NotConstantRowSumError(msg.str());
    }
}

// Adds shift[j] to every entry of column j.
RealMatrix shift_columns(const RealMatrix& b, const std::vector<double>& shift) {
    RealMatrix out = b;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out(i, j) += shift[j];
    return out;
}

}  // namespace

bool is_constant_row_sum(const RealMatrix& b) {
    if (b.empty()) return true;
    const double lambda = b.row_sums().front();
    return row_sum_spread(b) <= 1e-9 * (1.0 + std::abs(lambda));
}

RefinedEven refine_even(const RealMatrix& b) {
    const std::size_t n = b.size();
    if (n % 2 != 0) throw OddSizeError("even refinement needs an even size, got " + std::to_string(n));
    if (n < 4) throw SizeError("even refinement needs n >= 4");
    require_constant_row_sum(b);

    RefinedEven out;
    out.betas.resize(n);
    std::vector<double> shift(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.betas[j] = kth_largest(b.column_off_diagonal(j), n / 2);
        shift[j] = -out.betas[j];
    }
    out.f = shift_columns(b, shift);
    return out;
}

RefinedOdd refine_odd(const RealMatrix& b) {
    const std::size_t n = b.size();
    if (n % 2 == 0) throw EvenSizeError("odd refinement needs an odd size, got " + std::to_string(n));
    if (n < 3) throw SizeError("odd refinement needs n >= 3");
    require_constant_row_sum(b);

    RefinedOdd out;
    out.betas.resize(n);
    out.gammas.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto off = b.column_off_diagonal(j);
        out.betas[j] = -kth_largest(off, (n - 1) / 2);
        out.gammas[j] = -kth_largest(off, (n + 1) / 2);
    }
    out.f = shift_columns(b, out.betas);
    out.g = shift_columns(b, out.gammas);
    return out;
}

PairwiseIntersectionUnion refined_region_odd(const RealMatrix& b) {
    const auto r = refine_odd(b);
    const auto df = second_type_discs_of_transpose(r.f);
    const auto dg = second_type_discs_of_transpose(r.g);
    PairwiseIntersectionUnion out;
    out.pairs.reserve(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) out.pairs.push_back({df.discs[j], dg.discs[j]});
    return out;
}

Region corollary2_region(const RealMatrix& b) {
    const auto r = refine_odd(b);
    return intersect({Region(second_type_discs_of_transpose(r.f)),
                      Region(second_type_discs_of_transpose(r.g))});
}

}  // namespace eigenfence
