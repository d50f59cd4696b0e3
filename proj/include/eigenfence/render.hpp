#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenfence/region.hpp"

namespace eigenfence {

namespace colors {
inline constexpr const char* gray = "#c8c8c8";
inline constexpr const char* blue = "#4477dd";
inline constexpr const char* turquoise = "#33ccbb";
inline constexpr const char* black = "#000000";
}  // namespace colors

struct Layer {
    Region region;
    std::string fill = colors::blue;
    double opacity = 0.6;
};

struct Marker {
    ComplexPoint z;
    std::string color = colors::black;
};

/// Layers are painted in order, later on top. Without a viewport the scene
/// is fitted to the layers and markers with 10% padding.
struct Scene {
    std::vector<Layer> layers;
    std::vector<Marker> points;
    std::optional<Box> viewport;
    int size_px = 512;  // longer side of the image
    int raster = 256;   // marching-squares cells along the longer side
};

/// The viewport the renderer will use for `s`.
Box scene_viewport(const Scene& s);

/// SVG 1.1 document. Disc unions become circles; every other region kind is
/// traced by marching squares on the sign of `margin`. Identical scenes give
/// identical bytes. Throws ViewportError for a viewport without positive
/// width and height, and std::invalid_argument for size_px or raster < 1.
std::string render_svg(const Scene& s);

}  // namespace eigenfence
