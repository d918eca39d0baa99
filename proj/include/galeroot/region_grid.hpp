// Rectangular scalar/boolean fields over a window of the complex plane,
// marching-squares contour extraction, and the CSV/SVG emitters.
//
// CSV grids carry their manifest in a leading `# manifest: <json>` line and
// then one `x,y,value` row per sample, row-major with 17 significant
// digits, so a written grid parses back bit-identically.  SVG output is one
// path per contour polyline with a class name and no other styling.

#pragma once

#include <galeroot/manifest.hpp>

#include <functional>
#include <string>
#include <vector>

namespace galeroot {

enum class FieldKind {
    DValue,
    Excluded,
    ExcludedConstrained,
    AngleSum,
    BarycenterAbs,
    CustomDet,
};

const char* field_kind_name(FieldKind kind);

struct RegionGrid {
    Window window;
    int nx = 0, ny = 0;
    FieldKind field_kind = FieldKind::DValue;
    std::vector<double> values;  // row-major: values[iy * nx + ix]

    double x_at(int ix) const { return window.x_min + (window.x_max - window.x_min) * ix / (nx - 1); }
    double y_at(int iy) const { return window.y_min + (window.y_max - window.y_min) * iy / (ny - 1); }
    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }

    bool operator==(const RegionGrid&) const = default;
};

/// Samples fn(x, y) over the window; rows run in parallel.
RegionGrid sample_grid(const Window& window, int nx, int ny, FieldKind kind,
                       const std::function<double(double, double)>& fn);

struct Polyline {
    std::vector<std::pair<double, double>> points;
    bool closed = false;
};

/// Level contours of the grid by marching squares; segments are stitched
/// along shared cell edges, so closed loops come back as closed polylines.
std::vector<Polyline> extract_contours(const RegionGrid& grid, double level = 0.0);

std::string grid_to_csv(const RegionGrid& grid, const RunManifest& manifest);
std::pair<RegionGrid, RunManifest> parse_grid_csv(const std::string& text);

struct SvgMarker {
    double x, y;
    std::string css_class;
};

/// An SVG document over the window (y axis flipped into screen space).
std::string svg_document(const Window& window, const std::vector<Polyline>& contours,
                         const std::vector<SvgMarker>& markers,
                         const std::string& contour_class = "contour");

/// Default window for a basis/degree, and the limiting-circle auto window.
Window default_window(const std::string& basis, int d);
Window auto_window(int d, int j, int k);

}  // namespace galeroot
