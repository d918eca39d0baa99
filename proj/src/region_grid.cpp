#include <galeroot/region_grid.hpp>

#include <galeroot/parallel.hpp>
#include <galeroot/root_locus.hpp>

#include <cmath>
#include <cstdio>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace galeroot {

const char* field_kind_name(FieldKind kind) {
    switch (kind) {
        case FieldKind::DValue: return "d-value";
        case FieldKind::Excluded: return "excluded";
        case FieldKind::ExcludedConstrained: return "excluded-constrained";
        case FieldKind::AngleSum: return "angle-sum";
        case FieldKind::BarycenterAbs: return "barycenter-abs";
        case FieldKind::CustomDet: return "custom-det";
    }
    return "?";
}

static FieldKind field_kind_from_name(const std::string& name) {
    for (FieldKind k : {FieldKind::DValue, FieldKind::Excluded, FieldKind::ExcludedConstrained,
                        FieldKind::AngleSum, FieldKind::BarycenterAbs, FieldKind::CustomDet})
        if (name == field_kind_name(k)) return k;
    return FieldKind::DValue;
}

RegionGrid sample_grid(const Window& window, int nx, int ny, FieldKind kind,
                       const std::function<double(double, double)>& fn) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("grid resolution must be at least 2x2");
    RegionGrid grid;
    grid.window = window;
    grid.nx = nx;
    grid.ny = ny;
    grid.field_kind = kind;
    grid.values.assign(static_cast<std::size_t>(nx) * ny, 0.0);
    parallel_for(ny, [&](int iy) {
        const double y = grid.y_at(iy);
        for (int ix = 0; ix < nx; ++ix)
            grid.values[static_cast<std::size_t>(iy) * nx + ix] = fn(grid.x_at(ix), y);
    });
    return grid;
}

namespace {

// edge keys: horizontal edge (ix..ix+1, iy) and vertical edge (ix, iy..iy+1)
std::int64_t h_edge(int ix, int iy, int nx) { return ((static_cast<std::int64_t>(iy) * nx + ix) << 1); }
std::int64_t v_edge(int ix, int iy, int nx) {
    return ((static_cast<std::int64_t>(iy) * (nx + 1) + ix) << 1) | 1;
}

struct Segment {
    std::int64_t a, b;
};

}  // namespace

std::vector<Polyline> extract_contours(const RegionGrid& grid, double level) {
    const int nx = grid.nx, ny = grid.ny;
    auto inside = [&](double v) { return v >= level; };

    std::vector<Segment> segments;
    for (int iy = 0; iy + 1 < ny; ++iy)
        for (int ix = 0; ix + 1 < nx; ++ix) {
            const bool a = inside(grid.at(ix, iy));        // bottom-left
            const bool b = inside(grid.at(ix + 1, iy));    // bottom-right
            const bool c = inside(grid.at(ix + 1, iy + 1));// top-right
            const bool d = inside(grid.at(ix, iy + 1));    // top-left
            const int count = a + b + c + d;
            if (count == 0 || count == 4) continue;

            const std::int64_t eb = h_edge(ix, iy, nx);
            const std::int64_t et = h_edge(ix, iy + 1, nx);
            const std::int64_t el = v_edge(ix, iy, nx);
            const std::int64_t er = v_edge(ix + 1, iy, nx);
            auto emit = [&](std::int64_t e1, std::int64_t e2) { segments.push_back({e1, e2}); };

            if (count == 1) {
                if (a) emit(el, eb);
                else if (b) emit(eb, er);
                else if (c) emit(er, et);
                else emit(et, el);
            } else if (count == 3) {
                if (!a) emit(el, eb);
                else if (!b) emit(eb, er);
                else if (!c) emit(er, et);
                else emit(et, el);
            } else {  // count == 2
                if (a && b) emit(el, er);
                else if (c && d) emit(el, er);
                else if (b && c) emit(eb, et);
                else if (a && d) emit(eb, et);
                else {
                    // saddle: resolve by the cell-center average
                    double center = (grid.at(ix, iy) + grid.at(ix + 1, iy) +
                                     grid.at(ix + 1, iy + 1) + grid.at(ix, iy + 1)) /
                                    4.0;
                    bool center_in = inside(center);
                    if (a && c) {
                        if (center_in) {
                            emit(eb, er);
                            emit(et, el);
                        } else {
                            emit(el, eb);
                            emit(er, et);
                        }
                    } else {  // b && d
                        if (center_in) {
                            emit(el, eb);
                            emit(er, et);
                        } else {
                            emit(eb, er);
                            emit(et, el);
                        }
                    }
                }
            }
        }

    // stitch segments along shared edges
    std::unordered_map<std::int64_t, std::vector<int>> by_edge;
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
        by_edge[segments[s].a].push_back(s);
        by_edge[segments[s].b].push_back(s);
    }

    auto edge_point = [&](std::int64_t key) -> std::pair<double, double> {
        const bool vertical = key & 1;
        const std::int64_t cell = key >> 1;
        if (!vertical) {
            int iy = static_cast<int>(cell / nx), ix = static_cast<int>(cell % nx);
            double va = grid.at(ix, iy), vb = grid.at(ix + 1, iy);
            double t = (vb == va) ? 0.5 : (level - va) / (vb - va);
            return {grid.x_at(ix) + t * (grid.x_at(ix + 1) - grid.x_at(ix)), grid.y_at(iy)};
        }
        int iy = static_cast<int>(cell / (nx + 1)), ix = static_cast<int>(cell % (nx + 1));
        double va = grid.at(ix, iy), vb = grid.at(ix, iy + 1);
        double t = (vb == va) ? 0.5 : (level - va) / (vb - va);
        return {grid.x_at(ix), grid.y_at(iy) + t * (grid.y_at(iy + 1) - grid.y_at(iy))};
    };

    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> out;
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
        if (used[s]) continue;
        used[s] = true;
        std::deque<std::int64_t> chain{segments[s].a, segments[s].b};
        bool closed = false;

        auto advance = [&](bool at_back) {
            while (true) {
                std::int64_t tip = at_back ? chain.back() : chain.front();
                int next = -1;
                for (int cand : by_edge[tip])
                    if (!used[cand]) {
                        next = cand;
                        break;
                    }
                if (next < 0) return;
                used[next] = true;
                std::int64_t other = segments[next].a == tip ? segments[next].b : segments[next].a;
                if (other == (at_back ? chain.front() : chain.back())) {
                    closed = true;
                    return;
                }
                if (at_back) chain.push_back(other);
                else chain.push_front(other);
            }
        };
        advance(true);
        if (!closed) advance(false);

        Polyline line;
        line.closed = closed;
        for (auto key : chain) line.points.push_back(edge_point(key));
        out.push_back(std::move(line));
    }
    return out;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string grid_to_csv(const RegionGrid& grid, const RunManifest& manifest) {
    std::string out = "# manifest: " + manifest.to_json() + "\n";
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix) {
            out += fmt17(grid.x_at(ix));
            out += ',';
            out += fmt17(grid.y_at(iy));
            out += ',';
            out += fmt17(grid.at(ix, iy));
            out += '\n';
        }
    return out;
}

std::pair<RegionGrid, RunManifest> parse_grid_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty grid CSV");
    const std::string prefix = "# manifest: ";
    if (line.rfind(prefix, 0) != 0) throw std::invalid_argument("grid CSV is missing its manifest line");
    RunManifest manifest = RunManifest::from_json(line.substr(prefix.size()));

    RegionGrid grid;
    grid.window = manifest.window;
    grid.nx = manifest.nx;
    grid.ny = manifest.ny;
    grid.field_kind = field_kind_from_name(manifest.field);
    grid.values.reserve(static_cast<std::size_t>(grid.nx) * grid.ny);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("malformed grid CSV row: " + line);
        grid.values.push_back(std::strtod(line.c_str() + c2 + 1, nullptr));
    }
    if (grid.values.size() != static_cast<std::size_t>(grid.nx) * grid.ny)
        throw std::invalid_argument("grid CSV row count does not match the manifest resolution");
    return {std::move(grid), std::move(manifest)};
}

std::string svg_document(const Window& window, const std::vector<Polyline>& contours,
                         const std::vector<SvgMarker>& markers, const std::string& contour_class) {
    std::ostringstream out;
    // y is negated so the math orientation survives SVG's downward axis
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt17(window.x_min) << " "
        << fmt17(-window.y_max) << " " << fmt17(window.width()) << " " << fmt17(window.height())
        << "\">\n";
    for (const auto& line : contours) {
        if (line.points.empty()) continue;
        out << "  <path class=\"" << contour_class << "\" fill=\"none\" d=\"";
        for (std::size_t t = 0; t < line.points.size(); ++t)
            out << (t == 0 ? "M" : " L") << fmt17(line.points[t].first) << ","
                << fmt17(-line.points[t].second);
        if (line.closed) out << " Z";
        out << "\"/>\n";
    }
    const double r = 0.004 * std::max(window.width(), window.height());
    for (const auto& m : markers)
        out << "  <circle class=\"" << m.css_class << "\" cx=\"" << fmt17(m.x) << "\" cy=\""
            << fmt17(-m.y) << "\" r=\"" << fmt17(r) << "\"/>\n";
    out << "</svg>\n";
    return out.str();
}

Window default_window(const std::string& basis, int d) {
    (void)basis;
    return {-static_cast<double>(d) - 1.0, static_cast<double>(d), -(d / 2.0 + 1.0), d / 2.0 + 1.0};
}

Window auto_window(int d, int j, int k) {
    auto circles = limiting_circles(d, j, k);
    Window box{1e300, -1e300, 1e300, -1e300};
    for (const auto& c : circles) {
        box.x_min = std::min(box.x_min, c.center.real() - c.radius);
        box.x_max = std::max(box.x_max, c.center.real() + c.radius);
        box.y_min = std::min(box.y_min, c.center.imag() - c.radius);
        box.y_max = std::max(box.y_max, c.center.imag() + c.radius);
    }
    // the circle family is conjugation-symmetric only as a set; force the
    // box symmetric in y, then pad
    double ymax = std::max(std::abs(box.y_min), std::abs(box.y_max));
    box.y_min = -ymax;
    box.y_max = ymax;
    const double cx = (box.x_min + box.x_max) / 2, cy = 0.0;
    const double hw = 1.15 * (box.x_max - box.x_min) / 2, hh = 1.15 * ymax;
    return {cx - hw, cx + hw, cy - hh, cy + hh};
}

}  // namespace galeroot
