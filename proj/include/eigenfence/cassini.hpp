#pragma once

#include "eigenfence/matrix.hpp"
#include "eigenfence/region.hpp"

namespace eigenfence {

/// Ostrowski-Brauer set of M: one oval per index pair i < j with foci m_ii,
/// m_jj and bound R_i R_j, R_i the sum of |off-diagonal| entries of row i.
/// Every eigenvalue of M lies in it. Throws SizeError for n < 2.
CassiniUnion obr_set(const RealMatrix& m);

/// Intersection of the Ostrowski-Brauer sets of F and F^T (even n), or of F,
/// F^T, G and G^T (odd n), where F and G refine the constant row-sum matrix
/// similar to A. Contains every eigenvalue of A other than the known one.
Region theorem8_region(const RealMatrix& a, const Eigenpair& p, double tol = kDefaultEigenpairTol);

}  // namespace eigenfence
