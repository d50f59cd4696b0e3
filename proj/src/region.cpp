#include "eigenfence/region.hpp"

#include <algorithm>
#include <stdexcept>
#include <cmath>
#include <limits>
#include <numbers>

namespace eigenfence {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kRelEps = 1e-9;

Box disc_box(const Disc& d) {
    return {d.center - d.radius, d.center + d.radius, -d.radius, d.radius};
}

Box oval_box(const CassiniOval& o) {
    const double s = std::sqrt(std::max(o.bound, 0.0));
    return {std::min(o.c1, o.c2) - s, std::max(o.c1, o.c2) + s, -s, s};
}

Box hull(const Box& a, const Box& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return {std::min(a.x0, b.x0), std::max(a.x1, b.x1), std::min(a.y0, b.y0), std::max(a.y1, b.y1)};
}

Box overlap(const Box& a, const Box& b) {
    return {std::max(a.x0, b.x0), std::min(a.x1, b.x1), std::max(a.y0, b.y0), std::min(a.y1, b.y1)};
}

constexpr Box kEmptyBox{1.0, -1.0, 1.0, -1.0};

// min over u in [-1, 1] of |z - c1|^2 |z - c2|^2 for z = R e^{i phi}, u = cos(phi).
double min_product_on_circle(double radius, double c1, double c2) {
    const double a1 = radius * radius + c1 * c1, b1 = 2.0 * radius * c1;
    const double a2 = radius * radius + c2 * c2, b2 = 2.0 * radius * c2;
    auto q = [&](double u) { return (a1 - b1 * u) * (a2 - b2 * u); };
    double best = std::min(q(-1.0), q(1.0));
    if (b1 * b2 > 0.0) {
        const double u = (a1 * b2 + a2 * b1) / (2.0 * b1 * b2);
        if (u > -1.0 && u < 1.0) best = std::min(best, q(u));
    }
    return best;
}

void circle_points(const Disc& d, std::size_t angles, std::vector<ComplexPoint>& out) {
    out.emplace_back(d.center, 0.0);
    if (d.radius == 0.0) return;
    for (std::size_t k = 0; k < angles; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles);
        out.push_back(ComplexPoint(d.center, 0.0) + std::polar(d.radius, t));
    }
}

// Boundary points on rays from each focus.
void oval_points(const CassiniOval& o, std::size_t angles, std::vector<ComplexPoint>& out) {
    out.emplace_back(o.c1, 0.0);
    out.emplace_back(o.c2, 0.0);
    if (o.bound <= 0.0) return;
    for (const auto& [from, to] : {std::pair{o.c1, o.c2}, std::pair{o.c2, o.c1}}) {
        const double d = std::abs(from - to);
        const double t_hi = 0.5 * (d + std::sqrt(d * d + 4.0 * o.bound)) * (1.0 + 1e-12) + 1e-300;
        for (std::size_t k = 0; k < angles; ++k) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles);
            const ComplexPoint dir = std::polar(1.0, t);
            auto f = [&](double s) {
                const ComplexPoint z = ComplexPoint(from, 0.0) + s * dir;
                return std::abs(z - o.c1) * std::abs(z - o.c2) - o.bound;
            };
            double lo = 0.0, hi = t_hi;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                (f(mid) <= 0.0 ? lo : hi) = mid;
            }
            out.push_back(ComplexPoint(from, 0.0) + lo * dir);
        }
    }
}

void boundary_points(const Region& r, std::size_t angles, std::vector<ComplexPoint>& out) {
    std::visit(overloaded{
                   [&](const DiscUnion& u) {
                       for (const auto& d : u.discs) circle_points(d, angles, out);
                   },
                   [&](const PairwiseIntersectionUnion& u) {
                       for (const auto& p : u.pairs) {
                           circle_points(p.first, angles, out);
                           circle_points(p.second, angles, out);
                       }
                   },
                   [&](const CassiniUnion& u) {
                       for (const auto& o : u.ovals) oval_points(o, angles, out);
                   },
                   [&](const Intersection& x) {
                       for (const auto& part : x.parts) boundary_points(part, angles, out);
                   },
               },
               r.shape);
}

}  // namespace

Region intersect(std::vector<Region> parts) { return Region(Intersection{std::move(parts)}); }

bool contains(const Disc& d, ComplexPoint z) {
    return std::abs(z - d.center) <= d.radius + kRelEps * (1.0 + d.radius);
}

bool contains(const CassiniOval& o, ComplexPoint z) {
    return std::abs(z - o.c1) * std::abs(z - o.c2) <= o.bound + kRelEps * (1.0 + o.bound);
}

bool contains(const Region& r, ComplexPoint z) {
    return std::visit(
        overloaded{
            [&](const DiscUnion& u) {
                return std::any_of(u.discs.begin(), u.discs.end(), [&](const Disc& d) { return contains(d, z); });
            },
            [&](const PairwiseIntersectionUnion& u) {
                return std::any_of(u.pairs.begin(), u.pairs.end(), [&](const DiscPair& p) {
                    return contains(p.first, z) && contains(p.second, z);
                });
            },
            [&](const CassiniUnion& u) {
                return std::any_of(u.ovals.begin(), u.ovals.end(),
                                   [&](const CassiniOval& o) { return contains(o, z); });
            },
            [&](const Intersection& x) {
                return std::all_of(x.parts.begin(), x.parts.end(),
                                   [&](const Region& part) { return contains(part, z); });
            },
        },
        r.shape);
}

double margin(const Region& r, ComplexPoint z) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    auto disc_margin = [&](const Disc& d) { return std::abs(z - d.center) - d.radius; };
    return std::visit(overloaded{
                          [&](const DiscUnion& u) {
                              double m = inf;
                              for (const auto& d : u.discs) m = std::min(m, disc_margin(d));
                              return m;
                          },
                          [&](const PairwiseIntersectionUnion& u) {
                              double m = inf;
                              for (const auto& p : u.pairs)
                                  m = std::min(m, std::max(disc_margin(p.first), disc_margin(p.second)));
                              return m;
                          },
                          [&](const CassiniUnion& u) {
                              double m = inf;
                              for (const auto& o : u.ovals)
                                  m = std::min(m, std::abs(z - o.c1) * std::abs(z - o.c2) - o.bound);
                              return m;
                          },
                          [&](const Intersection& x) {
                              double m = -inf;
                              for (const auto& part : x.parts) m = std::max(m, margin(part, z));
                              return m;
                          },
                      },
                      r.shape);
}

double max_abs(const CassiniOval& o) {
    const double top_focus = std::max(std::abs(o.c1), std::abs(o.c2));
    if (o.bound <= 0.0) return top_focus;
    const double b2 = o.bound * o.bound;
    auto outside = [&](double radius) { return min_product_on_circle(radius, o.c1, o.c2) > b2; };
    const double r_hi = top_focus + std::sqrt(o.bound);

    // Each connected piece of the oval contains a focus, so the moduli it
    // reaches form an interval containing |c1| or |c2|. Walk up from both.
    double best = top_focus;
    for (double start : {std::abs(o.c1), std::abs(o.c2)}) {
        constexpr int kSteps = 512;
        const double step = (r_hi - start) / kSteps;
        double lo = start, hi = r_hi;
        for (int k = 1; k <= kSteps; ++k) {
            const double radius = start + step * k;
            if (outside(radius)) {
                hi = radius;
                break;
            }
            lo = radius;
        }
        if (lo >= r_hi) {
            best = std::max(best, r_hi);
            continue;
        }
        for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            (outside(mid) ? hi : lo) = mid;
        }
        best = std::max(best, lo);
    }
    return best;
}

ModulusBound max_abs(const Region& r) {
    auto disc_abs = [](const Disc& d) { return std::abs(d.center) + d.radius; };
    return std::visit(overloaded{
                          [&](const DiscUnion& u) {
                              double m = 0.0;
                              for (const auto& d : u.discs) m = std::max(m, disc_abs(d));
                              return ModulusBound{m, true};
                          },
                          [&](const PairwiseIntersectionUnion& u) {
                              double m = 0.0;
                              for (const auto& p : u.pairs)
                                  m = std::max(m, std::min(disc_abs(p.first), disc_abs(p.second)));
                              return ModulusBound{m, false};
                          },
                          [&](const CassiniUnion& u) {
                              double m = 0.0;
                              for (const auto& o : u.ovals) m = std::max(m, max_abs(o));
                              return ModulusBound{m, true};
                          },
                          [&](const Intersection& x) {
                              double m = std::numeric_limits<double>::infinity();
                              for (const auto& part : x.parts) m = std::min(m, max_abs(part).value);
                              if (x.parts.empty()) m = 0.0;
                              return ModulusBound{m, false};
                          },
                      },
                      r.shape);
}

Box bounding_box(const Region& r) {
    return std::visit(overloaded{
                          [&](const DiscUnion& u) {
                              Box b = kEmptyBox;
                              for (const auto& d : u.discs) b = hull(b, disc_box(d));
                              return b;
                          },
                          [&](const PairwiseIntersectionUnion& u) {
                              Box b = kEmptyBox;
                              for (const auto& p : u.pairs) {
                                  const Box o = overlap(disc_box(p.first), disc_box(p.second));
                                  if (!o.empty()) b = hull(b, o);
                              }
                              return b;
                          },
                          [&](const CassiniUnion& u) {
                              Box b = kEmptyBox;
                              for (const auto& o : u.ovals) b = hull(b, oval_box(o));
                              return b;
                          },
                          [&](const Intersection& x) {
                              if (x.parts.empty()) return kEmptyBox;
                              Box b = bounding_box(x.parts.front());
                              for (std::size_t i = 1; i < x.parts.size(); ++i)
                                  b = overlap(b, bounding_box(x.parts[i]));
                              return b;
                          },
                      },
                      r.shape);
}

std::vector<ComplexPoint> sample_points(const Region& r, SamplingOptions opts) {
    std::vector<ComplexPoint> pts;
    boundary_points(r, opts.angles, pts);
    const Box box = bounding_box(r);
    if (!box.empty() && opts.grid >= 2) {
        const double g = static_cast<double>(opts.grid - 1);
        for (std::size_t i = 0; i < opts.grid; ++i)
            for (std::size_t j = 0; j < opts.grid; ++j)
                pts.emplace_back(box.x0 + box.width() * static_cast<double>(i) / g,
                                 box.y0 + box.height() * static_cast<double>(j) / g);
    }
    return pts;
}

SubsetResult sampled_subset(const Region& a, const Region& b, SamplingOptions opts) {
    if (opts.grid < 16) throw std::invalid_argument("sampling grid must be at least 16");
    SubsetResult result;
    for (const auto& z : sample_points(a, opts)) {
        if (!contains(a, z)) continue;
        ++result.samples_checked;
        if (!contains(b, z)) {
            result.subset = false;
            result.witness = z;
            return result;
        }
    }
    return result;
}

}  // namespace eigenfence
