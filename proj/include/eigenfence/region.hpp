#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "eigenfence/matrix.hpp"

namespace eigenfence {

/// Closed disc of the complex plane centred on the real axis.
struct Disc {
    double center = 0.0;
    double radius = 0.0;

    bool operator==(const Disc&) const = default;
};

/// Union of discs, index-aligned with the rows/columns of the source matrix.
struct DiscUnion {
    std::vector<Disc> discs;
};

struct DiscPair {
    Disc first;
    Disc second;
};

/// Union over j of (first_j intersect second_j).
struct PairwiseIntersectionUnion {
    std::vector<DiscPair> pairs;
};

/// {z : |z - c1| |z - c2| <= bound}.
struct CassiniOval {
    double c1 = 0.0;
    double c2 = 0.0;
    double bound = 0.0;
};

struct CassiniUnion {
    std::vector<CassiniOval> ovals;
};

struct Region;

struct Intersection {
    std::vector<Region> parts;
};

/// Inclusion region: one of the four shapes the localization results produce.
struct Region {
    using Shape = std::variant<DiscUnion, PairwiseIntersectionUnion, CassiniUnion, Intersection>;
    Shape shape;

    Region() = default;
    Region(DiscUnion u) : shape(std::move(u)) {}
    Region(PairwiseIntersectionUnion u) : shape(std::move(u)) {}
    Region(CassiniUnion u) : shape(std::move(u)) {}
    Region(Intersection u) : shape(std::move(u)) {}
};

Region intersect(std::vector<Region> parts);

/// Membership tolerance: a point is inside a disc iff |z - c| <= r + 1e-9 (1 + r),
/// inside an oval iff the product is <= bound + 1e-9 (1 + bound).
bool contains(const Disc& d, ComplexPoint z);
bool contains(const CassiniOval& o, ComplexPoint z);
bool contains(const Region& r, ComplexPoint z);

/// Signed membership score: <= 0 exactly on the region (before tolerance).
/// Disc parts score |z - c| - r, ovals |z - c1||z - c2| - bound; unions take
/// the minimum and intersections the maximum. Only the sign is meaningful
/// across shape kinds.
double margin(const Region& r, ComplexPoint z);

struct ModulusBound {
    double value = 0.0;
    bool exact = false;
};

/// Largest |z| over the region. Exact for disc unions and Cassini unions;
/// intersections report the smallest bound among their parts (conservative;
/// emptiness is not detected).
ModulusBound max_abs(const Region& r);
double max_abs(const CassiniOval& o);

struct Box {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool empty() const { return !(x0 <= x1 && y0 <= y1); }
};

/// Axis-aligned box enclosing the region. Intersections use the overlap of
/// their parts' boxes, which may be empty.
Box bounding_box(const Region& r);

struct SamplingOptions {
    std::size_t grid = 64;     // grid points per axis over the bounding box
    std::size_t angles = 256;  // boundary points per disc or oval
};

struct SubsetResult {
    bool subset = true;
    std::optional<ComplexPoint> witness;  // a sample in a but not in b
    std::size_t samples_checked = 0;
};

/// Samples a's boundaries and a grid over its bounding box; every sample
/// inside a must be inside b. Throws std::invalid_argument for grid < 16.
SubsetResult sampled_subset(const Region& a, const Region& b, SamplingOptions opts = {});

/// The sample points used by sampled_subset, before filtering by membership.
std::vector<ComplexPoint> sample_points(const Region& r, SamplingOptions opts = {});

}  // namespace eigenfence
