#include "eigenfence/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "eigenfence/discs.hpp"
#include "eigenfence/errors.hpp"
#include "eigenfence/order_stats.hpp"
#include "eigenfence/refine.hpp"
#include "eigenfence/similarity.hpp"

namespace eigenfence {

namespace {

constexpr double kOverflowLimit = 1e300;

void require_power(int k) {
    if (k < 1) throw std::invalid_argument("power k must be >= 1");
}

void require_constant_row_sum(const RealMatrix& m) {
    if (!is_constant_row_sum(m)) throw NotConstantRowSumError("semi-norm bounds need a constant row-sum matrix");
}

std::string power_suffix(int k) { return "_k" + std::to_string(k); }

}  // namespace

std::string to_string(SemiNorm kind) { return kind == SemiNorm::l1 ? "tau1" : "tauinf"; }

double bound_from_discs(const RealMatrix& m) {
    double best = 0.0;
    for (const auto& d : second_type_discs_of_transpose(m).discs)
        best = std::max(best, std::abs(d.center) + d.radius);
    return best;
}

double tau1(const RealMatrix& m) {
    const std::size_t n = m.size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += std::abs(m(i, k) - m(j, k));
            best = std::max(best, s);
        }
    return 0.5 * best;
}

double column_statistic(const RealMatrix& m, std::size_t j) { return split_difference(m.column(j)); }

double tau_inf(const RealMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) best = std::max(best, column_statistic(m, j));
    return best;
}

double tau(const RealMatrix& m, SemiNorm kind) { return kind == SemiNorm::l1 ? tau1(m) : tau_inf(m); }

RealMatrix matrix_power(const RealMatrix& m, int k) {
    require_power(k);
    RealMatrix p = m;
    for (int i = 1; i < k; ++i) {
        p = p * m;
        if (!(p.max_abs_entry() <= kOverflowLimit))
            throw OverflowError("matrix power overflows at k = " + std::to_string(i + 1));
    }
    return p;
}

double powered_bound(const RealMatrix& m, int k, SemiNorm kind) {
    require_power(k);
    require_constant_row_sum(m);
    const double t = tau(matrix_power(m, k), kind);
    return k == 1 ? t : std::pow(t, 1.0 / k);
}

double det_bound(const RealMatrix& a, const Eigenpair& p, int k, SemiNorm kind, double tol) {
    require_power(k);
    const auto b = diag_similar(a, p, tol).matrix;
    const double t = tau(matrix_power(b, k), kind);
    const double exponent = static_cast<double>(a.size() - 1) / k;
    return std::abs(p.lambda) * std::pow(t, exponent);
}

std::vector<BoundReport> bound_report(const RealMatrix& a, const Eigenpair& p, const BoundOptions& opts,
                                      double tol) {
    const auto form = constant_row_sum_form(a, p, tol);
    const auto& b = form.matrix;
    const std::size_t n = b.size();
    std::vector<BoundReport> out;

    if (n >= 3) {
        out.push_back({"m_B", bound_from_discs(b), "second-type discs of B^T", std::nullopt});
        if (n % 2 == 0) {
            out.push_back({"m_F", bound_from_discs(refine_even(b).f), "second-type discs of F^T", std::nullopt});
        } else {
            const auto r = refine_odd(b);
            const double mf = bound_from_discs(r.f);
            const double mg = bound_from_discs(r.g);
            out.push_back({"m_F", mf, "second-type discs of F^T", std::nullopt});
            out.push_back({"m_G", mg, "second-type discs of G^T", std::nullopt});
            out.push_back({"m_FG", std::min(mf, mg), "min of the F^T and G^T disc bounds", std::nullopt});
        }
    }

    for (SemiNorm kind : opts.norms)
        for (int k : opts.powers)
            out.push_back({to_string(kind) + power_suffix(k), powered_bound(b, k, kind),
                           "powered semi-norm of B", k});

    if (opts.determinant) {
        // the listed powers plus k = n - 1
        std::vector<int> det_powers = opts.powers;
        const int last = static_cast<int>(n) - 1;
        if (last >= 1 && std::find(det_powers.begin(), det_powers.end(), last) == det_powers.end())
            det_powers.push_back(last);
        for (SemiNorm kind : opts.norms)
            for (int k : det_powers)
                out.push_back({"det_" + to_string(kind) + power_suffix(k),
                               det_bound(form.scaled_from, form.zero_free_pair, k, kind, tol),
                               "determinant bound", k});
    }
    return out;
}

}  // namespace eigenfence
