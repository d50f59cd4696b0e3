// Acceptance criteria 1-12 on the worked matrices. Prints one [PASS] or
// [FAIL] line per criterion followed by indented diagnostics, and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eigenfence/bounds.hpp"
#include "eigenfence/cassini.hpp"
#include "eigenfence/discs.hpp"
#include "eigenfence/oracle.hpp"
#include "eigenfence/refine.hpp"
#include "eigenfence/render.hpp"
#include "eigenfence/similarity.hpp"
#include "fixtures.hpp"
#include "property_checks.hpp"
#include "reference.hpp"
#include "scenes.hpp"

using namespace eigenfence;

namespace {

struct Report {
    bool pass = true;
    std::vector<std::string> lines;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        lines.push_back(std::string(ok ? "ok    " : "FAILED") + "  " + what);
    }
    void note(const std::string& what) { lines.push_back("note    " + what); }
};

std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string str(ComplexPoint z) {
    if (z.imag() == 0.0) return str(z.real());
    return str(z.real()) + (z.imag() < 0 ? "-" : "+") + str(std::abs(z.imag())) + "i";
}

std::string str(const std::vector<Disc>& ds) {
    std::string s;
    for (const auto& d : ds) s += (s.empty() ? "" : " ") + ("(" + str(d.center) + "," + str(d.radius) + ")");
    return s;
}

std::string str(const std::vector<ComplexPoint>& zs) {
    std::string s;
    for (auto z : zs) s += (s.empty() ? "" : " ") + str(z);
    return s;
}

std::vector<Disc> discs(std::initializer_list<std::pair<double, double>> list) {
    std::vector<Disc> out;
    for (auto [c, r] : list) out.push_back({c, r});
    return out;
}

void require_discs(Report& r, const std::string& label, const std::vector<Disc>& got, const std::vector<Disc>& want) {
    r.require(got == want, label + ": " + str(got) + (got == want ? "" : " expected " + str(want)));
}

void require_near(Report& r, const std::string& label, double got, double want, double tol) {
    r.require(std::abs(got - want) <= tol, label + " = " + str(got) + " (expected " + str(want) + " +- " + str(tol) + ")");
}

void require_exact(Report& r, const std::string& label, double got, double want) {
    r.require(got == want, label + " = " + str(got) + (got == want ? "" : " expected " + str(want)));
}

std::vector<ComplexPoint> others(const RealMatrix& a, double lambda) {
    return oracle::sorted_by_modulus(oracle::without_nearest(oracle::eigenvalues(a).values, lambda));
}

Report classic_and_second_type_discs() {
    Report r;
    const auto b = diag_similar(fixtures::perron6(), fixtures::perron6_pair()).matrix;
    r.require(b == fixtures::perron6_b(), "B = D^-1 A D equals the reference B");
    require_discs(r, "second-type discs of B^T", second_type_discs_of_transpose(b).discs,
                  discs({{10, 12}, {6, 8}, {8, 10}, {4, 6}, {2, 9}, {6, 9}}));
    require_discs(r, "classic column discs", classic_discs(fixtures::perron6(), Axis::columns).discs,
                  discs({{10, 8}, {6, 22}, {8, 34}, {4, 12}, {2, 16}, {6, 22}}));
    require_discs(r, "classic row discs", classic_discs(fixtures::perron6(), Axis::rows).discs,
                  discs({{10, 28}, {6, 16}, {8, 15}, {4, 20}, {2, 18}, {6, 17}}));
    return r;
}

Report perron_region_membership() {
    Report r;
    const Region region = eigenpair_region(fixtures::perron6(), fixtures::perron6_pair());
    const auto zs = others(fixtures::perron6(), 24.0);
    r.require(reference::same_multiset(zs, {{7.76, 0}, {-3.05, 0}, {2.65, 1.34}, {2.65, -1.34}, {2, 0}}, 0.01),
              "non-Perron eigenvalues " + str(zs) + " match the reference values within 0.01");
    for (auto z : zs) r.require(contains(region, z), "inside: " + str(z));
    r.require(!contains(region, ComplexPoint(24, 0)), "24 is outside the region");
    return r;
}

Report singular_matrix_discs() {
    Report r;
    const auto form = constant_row_sum_form(fixtures::singular6(), fixtures::singular6_pair());
    r.require(!form.desingularized, "no zero component, plain diagonal similarity");
    r.require(form.matrix == fixtures::singular6_b(), "B equals the reference B");
    const auto region = second_type_discs_of_transpose(form.matrix);
    require_discs(r, "second-type discs of B^T", region.discs,
                  discs({{-2, 16}, {2, 13}, {4, 13}, {-4, 16}, {-6, 12}, {-8, 12}}));
    const auto zs = others(fixtures::singular6(), 0.0);
    r.require(zs.size() == 5, "five nonzero eigenvalues: " + str(zs));
    r.note("reference values: -13.32, -3.71+-4.39i, 3.37+-2.12i; match within 0.01: " +
           std::string(reference::same_multiset(zs, {{-13.32, 0}, {-3.71, 4.39}, {-3.71, -4.39}, {3.37, 2.12}, {3.37, -2.12}},
                                                0.01)
                           ? "yes"
                           : "no"));
    for (auto z : zs) r.require(contains(Region(region), z), "inside: " + str(z));
    return r;
}

Report second_type_not_inside_classic() {
    Report r;
    const Region second = eigenpair_region(fixtures::wide3(), fixtures::wide3_pair());
    const Region classic = classic_discs(fixtures::wide3(), Axis::columns);
    r.note("second-type discs " + str(std::get<DiscUnion>(second.shape).discs) + ", classic discs of A^T " +
           str(std::get<DiscUnion>(classic.shape).discs));
    const auto s = sampled_subset(second, classic);
    r.require(!s.subset, "sampled_subset(second-type, classic) is false");
    r.require(s.witness.has_value(), "a witness is reported");
    if (s.witness) {
        r.require(contains(second, *s.witness) && !contains(classic, *s.witness),
                  "witness " + str(*s.witness) + " lies in the second-type region only");
    }
    return r;
}

Report even_refinement() {
    Report r;
    const auto b = constant_row_sum_form(fixtures::perron6(), fixtures::perron6_pair()).matrix;
    const auto f = refine_even(b).f;
    r.require(f == fixtures::perron6_f(), "F equals the reference F");
    const auto fd = second_type_discs_of_transpose(f);
    require_discs(r, "second-type discs of F^T", fd.discs, discs({{8, 10}, {2, 4}, {2, 4}, {2, 4}, {-1, 6}, {2, 5}}));
    const auto s = sampled_subset(fd, second_type_discs_of_transpose(b), {128, 512});
    r.require(s.subset, "region(F^T) inside region(B^T) at resolution 128 (" + std::to_string(s.samples_checked) +
                            " samples)");
    return r;
}

Report odd_refinement() {
    Report r;
    const auto b = constant_row_sum_form(fixtures::perron7(), fixtures::perron7_pair()).matrix;
    r.require(b == fixtures::perron7_b(), "B equals the reference B");
    const auto fg = refine_odd(b);
    const auto pf = fixtures::perron7_f_reference(), pg = fixtures::perron7_g_reference();
    const std::size_t n = b.size();
    std::vector<std::size_t> swapped;
    bool all = true;
    for (std::size_t j = 0; j < n; ++j) {
        bool same = true, exchanged = true;
        for (std::size_t i = 0; i < n; ++i) {
            same = same && fg.f(i, j) == pf(i, j) && fg.g(i, j) == pg(i, j);
            exchanged = exchanged && fg.f(i, j) == pg(i, j) && fg.g(i, j) == pf(i, j);
        }
        if (!same && exchanged) swapped.push_back(j + 1);
        all = all && (same || exchanged);
    }
    std::string cols;
    for (auto j : swapped) cols += " " + std::to_string(j);
    r.require(all, "F and G match the reference pair column by column");
    r.require(swapped.size() <= 1, "columns with exchanged F/G labels:" + (cols.empty() ? std::string(" none") : cols));

    const PairwiseIntersectionUnion s = refined_region_odd(b);
    const auto zs = others(fixtures::perron7(), 15.0);
    r.require(zs.size() == 6, "six non-Perron eigenvalues: " + str(zs));
    for (auto z : zs) r.require(contains(Region(s), z), "inside S: " + str(z));
    const Region big = DiscUnion{{{2, 15}}};
    bool nested = true;
    for (const auto& p : s.pairs)
        nested = nested && sampled_subset(intersect({DiscUnion{{p.first}}, DiscUnion{{p.second}}}), big, {128, 512}).subset;
    r.require(nested, "every pair intersection lies in the disc (2,15)");
    return r;
}

Report zero_component_pipeline() {
    Report r;
    const auto a = fixtures::zero_component4();
    const auto p = fixtures::zero_component4_pair();
    const auto d = desingularize(a, p);
    r.require(d.matrix == fixtures::zero_component4_c(), "C = S P A P^T S^-1 equals the reference C");
    const auto form = constant_row_sum_form(a, p);
    const auto f = refine_even(form.matrix).f;
    r.require(f == fixtures::zero_component4_f(), "F equals the reference F");
    const auto spec_a = oracle::eigenvalues(a).values;
    const auto spec_c = oracle::eigenvalues(d.matrix).values;
    r.require(reference::same_multiset(spec_a, spec_c, 1e-8),
              "spectra of A and C agree within 1e-8: " + str(oracle::sorted_by_modulus(spec_a)));
    r.require(reference::same_multiset(spec_a, {{-1, 0}, {0, 0}, {1, 0}, {2, 0}}, 1e-8), "spectrum is {-1, 0, 1, 2}");
    const Region region = second_type_discs_of_transpose(f);
    for (auto z : spec_a) {
        if (std::abs(z) < 1e-6) {
            r.note("eigenvalue 0 (the known one) inside region(F^T): " + std::string(contains(region, z) ? "yes" : "no"));
            continue;
        }
        r.require(contains(region, z), "inside region(F^T): " + str(z));
    }
    return r;
}

Report disc_and_seminorm_bounds() {
    Report r;
    const auto report = bound_report(fixtures::perron4(), fixtures::perron4_pair(), {});
    auto find = [&](const std::string& name) {
        for (const auto& b : report)
            if (b.name == name) return b.value;
        return std::nan("");
    };
    require_exact(r, "m_B of the 4x4 Perron matrix", find("m_B"), 14);
    require_exact(r, "m_F of the 4x4 Perron matrix", find("m_F"), 6);

    const auto b7 = constant_row_sum_form(fixtures::singular7(), fixtures::singular7_pair()).matrix;
    require_exact(r, "disc bound of the singular 7x7 B", bound_from_discs(b7), 42);
    require_exact(r, "||B||_1", norm_one(b7), 48);
    require_exact(r, "||A||_1", norm_one(fixtures::singular7()), 78);
    require_exact(r, "||A||_inf", norm_inf(fixtures::singular7()), 87);

    const auto g = refine_odd(constant_row_sum_form(fixtures::row_sum3(), fixtures::row_sum3_pair()).matrix).g;
    require_exact(r, "disc bound of G", bound_from_discs(g), 14);
    require_exact(r, "tau_inf(G)", tau_inf(g), 12);
    require_near(r, "tau_inf(G^2)^(1/2)", powered_bound(g, 2, SemiNorm::linf), 7.75, 0.01);
    require_near(r, "tau_1(G)", tau1(g), 6, 0.0);
    r.note("vertex oracle: tau_inf(G^2) = " + str(reference::tau_inf_vertices(reference::power(g, 2))) +
           ", tau_1(G) = " + str(reference::tau1_vertices(g)));
    return r;
}

Report seminorm_tables() {
    Report r;
    const auto f = refine_even(constant_row_sum_form(fixtures::perron4(), fixtures::perron4_pair()).matrix).f;
    require_exact(r, "4x4 Perron F: tau_inf(F)", tau_inf(f), 6);
    require_near(r, "4x4 Perron F: tau_inf(F^3)^(1/3)", powered_bound(f, 3, SemiNorm::linf), 6, 0.01);
    require_exact(r, "4x4 Perron F: tau_1(F)", tau1(f), 8);
    require_near(r, "4x4 Perron F: tau_1(F^3)^(1/3)", powered_bound(f, 3, SemiNorm::l1), 6.93, 0.01);
    r.note("4x4 Perron F: tau_1(F^2)^(1/2) = " + str(powered_bound(f, 2, SemiNorm::l1)));

    const auto fz = refine_even(constant_row_sum_form(fixtures::zero_component4(), fixtures::zero_component4_pair()).matrix).f;
    const int ks[] = {1, 2, 5};
    const double inf_table[] = {8, 3.16, 2.51};
    const double one_table[] = {10, 3, 2.34};
    for (int i = 0; i < 3; ++i) {
        const std::string k = std::to_string(ks[i]);
        require_near(r, "zero-component F: tau_inf(F^" + k + ")^(1/" + k + ")", powered_bound(fz, ks[i], SemiNorm::linf),
                     inf_table[i], 0.01);
        require_near(r, "zero-component F: tau_1(F^" + k + ")^(1/" + k + ")", powered_bound(fz, ks[i], SemiNorm::l1),
                     one_table[i], 0.01);
    }
    r.note("vertex oracle: tau_inf(F) = " + str(reference::tau_inf_vertices(fz)) + ", tau_1(F^2) = " +
           str(reference::tau1_vertices(reference::power(fz, 2))));
    return r;
}

Report oval_set_degenerates_to_points() {
    Report r;
    const auto b = diag_similar(fixtures::small3(), fixtures::small3_pair()).matrix;
    const auto degenerate = refine_odd(b).g;  // the refinement whose oval sets collapse to points
    const Region both = intersect({obr_set(degenerate), obr_set(degenerate.transpose())});
    const Region full = theorem8_region(fixtures::small3(), fixtures::small3_pair());
    constexpr int steps = 400;
    long members = 0, stray = 0, full_members = 0, full_stray = 0;
    ComplexPoint first_stray;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps; ++j) {
            const ComplexPoint z(-3.0 + 4.0 * i / steps, -1.0 + 2.0 * j / steps);
            const bool near_points = std::min(std::abs(z), std::abs(z + 2.0)) <= 1e-6;
            if (contains(both, z)) {
                ++members;
                if (!near_points && stray++ == 0) first_stray = z;
            }
            if (contains(full, z)) {
                ++full_members;
                full_stray += near_points ? 0 : 1;
            }
        }
    r.require(stray == 0, "grid members of Gamma(F) & Gamma(F^T): " + std::to_string(members) + ", away from {0,-2}: " +
                              std::to_string(stray) + (stray ? " first " + str(first_stray) : ""));
    r.require(contains(both, ComplexPoint(0, 0)) && contains(both, ComplexPoint(-2, 0)), "0 and -2 are members");
    r.require(full_stray == 0 && full_members == members,
              "four-way oval intersection has the same " + std::to_string(full_members) + " grid members");
    return r;
}

Report property_suite() {
    Report r;
    const auto start = std::chrono::steady_clock::now();
    const std::pair<const char*, std::function<properties::Tally()>> checks[] = {
        {"(a) B is invariant under v -> alpha v", properties::scale_invariance},
        {"(b) tau_1 and tau_inf survive refinement", properties::seminorms_survive_refinement},
        {"(c) powered bounds hold for k <= 6", properties::powered_bounds_sound},
        {"(d) refined regions nest in the second-type region", properties::refined_regions_nested},
        {"(e) determinant bounds at k = 1, n - 1", properties::determinant_bounds_hold},
        {"(f) oval sets contain the spectrum", properties::oval_sets_contain_spectrum},
    };
    for (const auto& [label, check] : checks) {
        const auto t = check();
        r.require(t.ok() && t.checked > 0, std::string(label) + ": " + std::to_string(t.checked) + " checks" +
                                               (t.ok() ? "" : ", " + std::to_string(t.failed) +
                                                                  " failed, first " + t.first_failure));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.require(secs < 60.0, "suite time " + str(secs) + " s");
    return r;
}

Report golden_renders() {
    Report r;
    const std::pair<const char*, Scene (*)()> cases[] = {
        {"classic_vs_second.svg", scenes::classic_vs_second},
        {"refined_on_top.svg", scenes::refined_on_top},
        {"oval_intersection.svg", scenes::oval_intersection},
    };
    for (const auto& [name, make] : cases) {
        const std::string first = render_svg(make());
        const std::string second = render_svg(make());
        const std::string golden = scenes::read_file(std::string(EIGENFENCE_GOLDEN_DIR) + "/" + name);
        r.require(!golden.empty() && first == second && first == golden,
                  std::string(name) + ": " + std::to_string(first.size()) + " bytes, repeatable " +
                      (first == second ? "yes" : "no") + ", matches golden " + (first == golden ? "yes" : "no"));
    }
    return r;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Report()>> criteria[] = {
        {"6x6 Perron similarity and disc lists", classic_and_second_type_discs},
        {"6x6 Perron region holds the other eigenvalues", perron_region_membership},
        {"singular 6x6 similarity and disc list", singular_matrix_discs},
        {"second-type region is not inside the classic one", second_type_not_inside_classic},
        {"even refinement F and its nested region", even_refinement},
        {"odd refinement F, G and the pairwise region", odd_refinement},
        {"zero-component desingularization and refinement", zero_component_pipeline},
        {"disc, norm and semi-norm bounds", disc_and_seminorm_bounds},
        {"powered semi-norm tables", seminorm_tables},
        {"oval intersection degenerates to two points", oval_set_degenerates_to_points},
        {"randomized property suite", property_suite},
        {"golden SVG renders", golden_renders},
    };
    int failed = 0, index = 0;
    for (const auto& [label, run] : criteria) {
        ++index;
        Report r;
        const auto start = std::chrono::steady_clock::now();
        try {
            r = run();
        } catch (const std::exception& e) {
            r.require(false, std::string("threw: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += r.pass ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", index, label, secs);
        for (const auto& line : r.lines) std::printf("    %s\n", line.c_str());
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
