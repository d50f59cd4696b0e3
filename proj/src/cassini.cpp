#include "eigenfence/cassini.hpp"

#include <cmath>

#include "eigenfence/errors.hpp"
#include "eigenfence/refine.hpp"
#include "eigenfence/similarity.hpp"

namespace eigenfence {

CassiniUnion obr_set(const RealMatrix& m) {
    const std::size_t n = m.size();
    if (n < 2) throw SizeError("Ostrowski-Brauer sets need n >= 2");
    std::vector<double> deleted(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) deleted[i] += std::abs(m(i, k));

    CassiniUnion u;
    u.ovals.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u.ovals.push_back({m(i, i), m(j, j), deleted[i] * deleted[j]});
    return u;
}

Region theorem8_region(const RealMatrix& a, const Eigenpair& p, double tol) {
    if (a.size() < 3) throw SizeError("refined Ostrowski-Brauer regions need n >= 3");
    const auto b = constant_row_sum_form(a, p, tol).matrix;
    if (b.size() % 2 == 0) {
        const auto f = refine_even(b).f;
        return intersect({Region(obr_set(f)), Region(obr_set(f.transpose()))});
    }
    const auto r = refine_odd(b);
    return intersect({Region(obr_set(r.f)), Region(obr_set(r.f.transpose())), Region(obr_set(r.g)),
                      Region(obr_set(r.g.transpose()))});
}

}  // namespace eigenfence
