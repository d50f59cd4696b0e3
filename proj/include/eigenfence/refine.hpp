#pragma once

#include <vector>

#include "eigenfence/matrix.hpp"
#include "eigenfence/region.hpp"

namespace eigenfence {

/// Even-size refinement: F = B - e betas^T, betas_j the (n/2)-th largest
/// off-diagonal entry of column j of B.
struct RefinedEven {
    RealMatrix f;
    std::vector<double> betas;
};

/// Odd-size refinement: f_ij = b_ij + betas_j, g_ij = b_ij + gammas_j where
/// betas_j and gammas_j are the negated ((n-1)/2)-th and ((n+1)/2)-th largest
/// off-diagonal entries of column j.
struct RefinedOdd {
    RealMatrix f;
    RealMatrix g;
    std::vector<double> betas;
    std::vector<double> gammas;
};

/// Requires a constant row-sum B (NotConstantRowSumError) of even size
/// n >= 4 (OddSizeError / SizeError). The second-type region of F^T is
/// contained in that of B^T and still holds every non-trivial eigenvalue.
RefinedEven refine_even(const RealMatrix& b);

/// Requires a constant row-sum B of odd size n >= 3 (EvenSizeError).
RefinedOdd refine_odd(const RealMatrix& b);

/// Union over columns j of (disc from column j of F) intersect (disc from
/// column j of G).
PairwiseIntersectionUnion refined_region_odd(const RealMatrix& b);

/// Second-type region of F^T intersected with that of G^T. Contains the
/// pairwise region and is simpler to draw.
Region corollary2_region(const RealMatrix& b);

/// Whether every row sum lies within 1e-9 (1 + |lambda|) of the first.
bool is_constant_row_sum(const RealMatrix& b);

}  // namespace eigenfence
