#pragma once

#include <cstdint>
#include <vector>

#include "eigenfence/errors.hpp"
#include "eigenfence/matrix.hpp"

// Verification oracle. The localization library never links against this;
// tests and the `eig` command use it to check the results it produces.
namespace eigenfence::oracle {

struct Spectrum {
    std::vector<ComplexPoint> values;  // with multiplicity, conjugate pairs adjacent
    double residual_bound = 0.0;       // backward-error estimate
};

class ConvergenceError : public MathError {
public:
    ConvergenceError(const std::string& what, Spectrum partial)
        : MathError(what), partial_(std::move(partial)) {}
    const Spectrum& partial() const noexcept { return partial_; }

private:
    Spectrum partial_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

/// Seed from EIGENFENCE_SEED when set and numeric, else kDefaultSeed.
std::uint64_t seed_from_environment();

/// All eigenvalues of a (n <= 64): balancing, Householder reduction to
/// Hessenberg form, Francis double-shift QR. After 100 n sweeps without
/// convergence the input is rotated by a random orthogonal similarity
/// (seeded) and the iteration restarts; after three restarts
/// ConvergenceError carries what was found.
Spectrum eigenvalues(const RealMatrix& a, std::uint64_t seed = kDefaultSeed);

/// LU with partial pivoting; exactly 0 for a matrix found singular.
double determinant(const RealMatrix& a);

/// Sorted by modulus descending, then real part descending, then imaginary
/// part descending.
std::vector<ComplexPoint> sorted_by_modulus(std::vector<ComplexPoint> values);

/// Removes the value nearest to `lambda` (one copy).
std::vector<ComplexPoint> without_nearest(std::vector<ComplexPoint> values, double lambda);

}  // namespace eigenfence::oracle
