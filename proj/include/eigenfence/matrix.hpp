#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eigenfence {

/// A point of the complex plane. Eigenvalues of real matrices and region
/// queries are expressed with it.
using ComplexPoint = std::complex<double>;

/// Dense square real matrix stored row-major.
///
/// Entries are finite on construction from external data (from_rows, the
/// initializer-list constructor and the parsers). Mutable element access is
/// kept for building results in place.
class RealMatrix {
public:
    RealMatrix() = default;
    explicit RealMatrix(std::size_t n, double fill = 0.0);
    RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

    /// Throws DimensionError for non-square input and ParseError for
    /// non-finite entries.
    static RealMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static RealMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    std::vector<double> column(std::size_t j) const;
    /// Column j without its diagonal entry, in row order.
    std::vector<double> column_off_diagonal(std::size_t j) const;
    /// Row i without its diagonal entry, in column order.
    std::vector<double> row_off_diagonal(std::size_t i) const;
    std::vector<double> diagonal() const;
    std::vector<double> row_sums() const;

    RealMatrix transpose() const;
    double max_abs_entry() const;
    std::vector<std::vector<double>> to_rows() const;

    bool operator==(const RealMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double s, const RealMatrix& a);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
std::vector<double> operator*(const RealMatrix& a, std::span<const double> x);

/// Maximum absolute column sum.
double norm_one(const RealMatrix& a);
/// Maximum absolute row sum.
double norm_inf(const RealMatrix& a);

/// Largest deviation of any row sum from the first row sum.
double row_sum_spread(const RealMatrix& a);

/// Real eigenvalue with a real eigenvector. The vector must be nonzero and
/// match the dimension of the matrix it belongs to; validate_eigenpair
/// enforces both.
struct Eigenpair {
    double lambda = 0.0;
    std::vector<double> v;
};

/// Matrix with an optional known eigenpair, as read from a problem file.
struct Problem {
    RealMatrix matrix;
    std::optional<Eigenpair> eigenpair;
};

inline constexpr double kDefaultEigenpairTol = 1e-9;

/// Accepts whitespace-separated rows (one per line) or the JSON problem
/// format; in the JSON case the eigenpair is ignored.
RealMatrix parse_matrix(std::string_view text);

/// JSON problem format: {"matrix": [[...]], "eigenvalue": x, "eigenvector": [...]}.
/// The eigenpair keys are optional but must appear together. Plain-text
/// matrices are accepted too and yield a problem without eigenpair.
Problem parse_problem(std::string_view text);

/// One row per line, entries separated by single spaces, shortest exact
/// decimal representation.
std::string render_text(const RealMatrix& a);

/// Scale-aware residual max_i |(Av - lambda v)_i| / (1 + max_i |v_i|).
double check_eigenpair(const RealMatrix& a, const Eigenpair& p);

/// Throws DimensionError on size mismatch and InvalidEigenpairError when v is
/// zero, not finite, or the residual exceeds tol.
void validate_eigenpair(const RealMatrix& a, const Eigenpair& p, double tol = kDefaultEigenpairTol);

}  // namespace eigenfence
