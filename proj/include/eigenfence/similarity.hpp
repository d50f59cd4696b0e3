#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eigenfence/matrix.hpp"

namespace eigenfence {

/// Constant row-sum matrix B = S^-1 A S with S = diag(v).
struct SimilarityResult {
    RealMatrix matrix;
    double row_sum = 0.0;           // equals the eigenvalue
    std::vector<double> scaling;    // diagonal of S
};

/// Zero-component desingularization C = S P A P^T S^-1.
///
/// `permutation[i]` is the 0-based index of the original component placed at
/// position i, so P v = (v[permutation[0]], v[permutation[1]], ...).
struct Desingularization {
    RealMatrix matrix;
    std::vector<double> eigenvector;  // w = S P v, no zero entries
    std::vector<std::size_t> permutation;
    std::size_t zero_count = 0;
};

/// Components with |v_i| at or below this are treated as zero.
double zero_tolerance(std::span<const double> v);

bool has_zero_component(std::span<const double> v);

/// b_ij = a_ij v_j / v_i. Requires a validated eigenpair with no zero
/// component (ZeroComponentError otherwise).
SimilarityResult diag_similar(const RealMatrix& a, const Eigenpair& p,
                              double tol = kDefaultEigenpairTol);

/// Moves the zero components of v to the front (stable) and applies the
/// shear that copies the first nonzero component into them. The shear and its
/// inverse act as row/column additions, so no inversion is performed.
Desingularization desingularize(const RealMatrix& a, const Eigenpair& p,
                                double tol = kDefaultEigenpairTol);

/// (1/lambda) diag_similar(a, p).matrix for a nonnegative matrix with a
/// positive eigenvector and positive eigenvalue; the result is row-stochastic.
RealMatrix normalize_stochastic(const RealMatrix& a, const Eigenpair& p,
                                double tol = kDefaultEigenpairTol);

/// The constant row-sum matrix every localization result is built from:
/// diag_similar directly, or after desingularize when v has zero components.
struct ConstantRowSumForm {
    RealMatrix matrix;
    double row_sum = 0.0;
    bool desingularized = false;
    /// Zero-free eigenpair of the matrix the diagonal scaling was applied to
    /// (A itself, or C after desingularization).
    RealMatrix scaled_from;
    Eigenpair zero_free_pair;
};

ConstantRowSumForm constant_row_sum_form(const RealMatrix& a, const Eigenpair& p,
                                         double tol = kDefaultEigenpairTol);

}  // namespace eigenfence
