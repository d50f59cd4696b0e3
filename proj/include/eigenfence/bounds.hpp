#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenfence/matrix.hpp"

namespace eigenfence {

/// Closed-form semi-norms on constant row-sum matrices.
enum class SemiNorm { l1, linf };

std::string to_string(SemiNorm kind);

/// One upper bound on the moduli of the eigenvalues other than the known one.
struct BoundReport {
    std::string name;    // e.g. "m_B", "tau1_k3", "det_tauinf_k1"
    double value = 0.0;
    std::string source;  // which construction produced it
    std::optional<int> k;
};

/// max_i (|m_ii| + second-type radius of column i). Applied to B, F or G.
double bound_from_discs(const RealMatrix& m);

/// Half the largest L1 distance between two rows.
double tau1(const RealMatrix& m);

/// max_j cs_j(M), where cs_j sorts all n entries of column j (diagonal
/// included) and subtracts the bottom half from the top half.
double tau_inf(const RealMatrix& m);

double column_statistic(const RealMatrix& m, std::size_t j);

double tau(const RealMatrix& m, SemiNorm kind);

/// M^k by repeated multiplication. Throws OverflowError if an entry of any
/// intermediate power exceeds 1e300 in magnitude.
RealMatrix matrix_power(const RealMatrix& m, int k);

/// tau(M^k)^(1/k) for a constant row-sum M. Every eigenvalue of M other
/// than the row sum is bounded in modulus by this, for every k >= 1.
double powered_bound(const RealMatrix& m, int k, SemiNorm kind);

/// |lambda| tau(B^k)^((n-1)/k) with B = D^-1 A D, D = diag(v); bounds |det A|.
/// Requires v without zero components.
double det_bound(const RealMatrix& a, const Eigenpair& p, int k, SemiNorm kind,
                 double tol = kDefaultEigenpairTol);

struct BoundOptions {
    std::vector<int> powers{1};
    std::vector<SemiNorm> norms{SemiNorm::l1, SemiNorm::linf};
    bool determinant = false;  // adds det bounds at `powers` and at k = n - 1
};

/// Every bound available for (A, p): disc bounds on B and its refinements,
/// powered semi-norm bounds and optionally the determinant bounds. Zero
/// components of v are handled by desingularization.
std::vector<BoundReport> bound_report(const RealMatrix& a, const Eigenpair& p, const BoundOptions& opts,
                                      double tol = kDefaultEigenpairTol);

}  // namespace eigenfence
