#pragma once

#include <span>

#include "eigenfence/matrix.hpp"
#include "eigenfence/region.hpp"

namespace eigenfence {

/// Radius of a Gershgorin disc of the second type from the n-1 off-diagonal
/// entries of one line of the matrix. The mandatory 0 is inserted here; the
/// n values are sorted non-increasingly and the bottom half is subtracted
/// from the top half (the median is dropped when n is odd).
///
/// Throws SizeError when fewer than 2 values are given (n < 3).
double second_type_radius(std::span<const double> off_diagonal);

/// Second-type discs of M^T: disc i is centred at m_ii with radius taken
/// from column i of M.
DiscUnion second_type_discs_of_transpose(const RealMatrix& m);

enum class Axis { rows, columns };

/// Classic Gershgorin discs, radius = sum of |off-diagonal| along the axis.
/// `Axis::columns` gives the discs of M^T.
DiscUnion classic_discs(const RealMatrix& m, Axis axis);

/// Inclusion region for every eigenvalue of A other than (one copy of) the
/// known eigenvalue: second-type discs of B^T for the constant row-sum
/// matrix B similar to A. Zero components of v are handled by
/// desingularization first.
///
/// For a nonnegative irreducible A with its Perron pair this locates the
/// non-Perron eigenvalues; irreducibility is not checked.
DiscUnion eigenpair_region(const RealMatrix& a, const Eigenpair& p,
                           double tol = kDefaultEigenpairTol);

}  // namespace eigenfence
