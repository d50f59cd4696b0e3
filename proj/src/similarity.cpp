#include "eigenfence/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eigenfence/errors.hpp"

namespace eigenfence {

double zero_tolerance(std::span<const double> v) {
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    return 1e-12 * vmax;
}

bool has_zero_component(std::span<const double> v) {
    const double zt = zero_tolerance(v);
    return std::any_of(v.begin(), v.end(), [zt](double x) { return std::abs(x) <= zt; });
}

SimilarityResult diag_similar(const RealMatrix& a, const Eigenpair& p, double tol) {
    validate_eigenpair(a, p, tol);
    if (has_zero_component(p.v)) {
        throw ZeroComponentError("eigenvector has a zero component; desingularize first");
    }

    const std::size_t n = a.size();
    RealMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = (a(i, j) * p.v[j]) / p.v[i];

    // Rows of B sum to (Av)_i / v_i; a residual that is small relative to v can
    // still be large relative to a tiny v_i.
    const double spread = row_sum_spread(b);
    double worst = 0.0;
    for (double s : b.row_sums()) worst = std::max(worst, std::abs(s - p.lambda));
    if (worst > 1e-9 * (1.0 + std::abs(p.lambda))) {
        std::ostringstream msg;
        msg << "eigenpair too inaccurate for scaling: row sums deviate from the eigenvalue by "
            << worst << " (spread " << spread << ")";
        throw InvalidEigenpairError(msg.str());
    }
    return SimilarityResult{std::move(b), p.lambda, p.v};
}

Desingularization desingularize(const RealMatrix& a, const Eigenpair& p, double tol) {
    if (p.v.size() == a.size() && std::all_of(p.v.begin(), p.v.end(), [](double x) { return x == 0.0; }))
        throw AllZeroError("eigenvector is zero");
    validate_eigenpair(a, p, tol);
    const std::size_t n = a.size();
    const double zt = zero_tolerance(p.v);

    Desingularization out;
    out.permutation.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(p.v[i]) <= zt) out.permutation.push_back(i);
    out.zero_count = out.permutation.size();
    if (out.zero_count == n) throw AllZeroError("eigenvector is zero");
    if (out.zero_count == 0) throw NoZeroError("eigenvector has no zero component; use diag_similar");
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(p.v[i]) > zt) out.permutation.push_back(i);

    const std::size_t k = out.zero_count;
    const auto& perm = out.permutation;

    // P A P^T
    RealMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = a(perm[i], perm[j]);

    // S from the left: each of the first k rows gains row k.
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < n; ++j) c(r, j) += c(k, j);
    // S^-1 from the right: column k loses columns 0..k-1.
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t r = 0; r < k; ++r) s += c(i, r);
        c(i, k) -= s;
    }

    out.eigenvector.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvector[i] = i < k ? 0.0 : p.v[perm[i]];
    for (std::size_t r = 0; r < k; ++r) out.eigenvector[r] = out.eigenvector[k];
    out.matrix = std::move(c);
    return out;
}

RealMatrix normalize_stochastic(const RealMatrix& a, const Eigenpair& p, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (double x : a.row(i))
            if (x < 0.0) throw NotApplicableError("matrix has a negative entry");
    if (std::any_of(p.v.begin(), p.v.end(), [](double x) { return x <= 0.0; }))
        throw NotApplicableError("eigenvector is not strictly positive");
    if (!(p.lambda > 0.0)) throw NotApplicableError("eigenvalue is not positive");

    const auto sim = diag_similar(a, p, tol);
    return (1.0 / p.lambda) * sim.matrix;
}

ConstantRowSumForm constant_row_sum_form(const RealMatrix& a, const Eigenpair& p, double tol) {
    validate_eigenpair(a, p, tol);
    ConstantRowSumForm form;
    if (has_zero_component(p.v)) {
        auto d = desingularize(a, p, tol);
        form.desingularized = true;
        form.scaled_from = std::move(d.matrix);
        form.zero_free_pair = Eigenpair{p.lambda, std::move(d.eigenvector)};
    } else {
        form.scaled_from = a;
        form.zero_free_pair = p;
    }
    auto sim = diag_similar(form.scaled_from, form.zero_free_pair, tol);
    form.matrix = std::move(sim.matrix);
    form.row_sum = sim.row_sum;
    return form;
}

}  // namespace eigenfence
