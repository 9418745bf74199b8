// Copyright 2026 The gpt-gtt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gpt/plot.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace gpt {
namespace {

struct P2 {
    double x, y;
};

struct Panel {
    std::string title;
    std::vector<P2> points;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    std::vector<P2> rays;  // drawn from the origin
    bool show_origin = false;
};

// Vertex pairs sharing enough tight facets that no third vertex shares them.
std::vector<std::pair<std::size_t, std::size_t>> polytope_edges(const Polyhedron &p) {
    const auto &v = p.points();
    const auto &f = p.facets();
    std::vector<boost::dynamic_bitset<>> tight(v.size(), boost::dynamic_bitset<>(f.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t k = 0; k < f.size(); ++k)
            if (f[k].normal.dot(v[i]) == f[k].offset) tight[i].set(k);
    const std::size_t need = p.affine_dimension() >= 2 ? p.affine_dimension() - 2 + 1 : 0;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            auto common = tight[i] & tight[j];
            if (common.count() < need) continue;
            bool blocked = false;
            for (std::size_t k = 0; k < v.size() && !blocked; ++k)
                if (k != i && k != j && common.is_subset_of(tight[k])) blocked = true;
            if (!blocked) out.emplace_back(i, j);
        }
    return out;
}

std::string label(const QVec &v, bool decimals) {
    if (!decimals) return v.str();
    std::ostringstream os;
    os << std::setprecision(3) << "(";
    auto d = v.to_doubles();
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

// Coordinates [0, k) of each point, projected to the plane.
Panel panel_from(const Polyhedron &p, std::size_t k, const std::string &title, bool decimals) {
    Panel panel;
    panel.title = title;
    for (const auto &v : p.points()) {
        auto d = v.to_doubles();
        if (k == 2) {
            panel.points.push_back({d[0], d[1]});
        } else {
            // Rotate about the third axis, then tilt towards the viewer.
            const double a = 0.45, b = 0.35;
            double x = d[0] * std::cos(a) - d[1] * std::sin(a);
            double depth = d[0] * std::sin(a) + d[1] * std::cos(a);
            panel.points.push_back({x, d[2] * std::cos(b) + depth * std::sin(b)});
        }
        panel.labels.push_back(label(v, decimals));
    }
    panel.edges = polytope_edges(p);
    return panel;
}

Polyhedron head_coords(const Polyhedron &p, std::size_t k) {
    std::vector<QVec> pts;
    for (const auto &v : p.points()) pts.push_back(QVec(std::vector<Rational>(v.begin(), v.begin() + k)));
    return hull_reduce(pts);
}

void draw(std::ostringstream &os, const Panel &panel, double ox) {
    const double size = 360, pad = 70;
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (const auto &p : panel.points) {
        if (first) {
            lo_x = hi_x = p.x;
            lo_y = hi_y = p.y;
            first = false;
        }
        lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
    }
    if (panel.show_origin) {
        lo_x = std::min(lo_x, 0.0), hi_x = std::max(hi_x, 0.0);
        lo_y = std::min(lo_y, 0.0), hi_y = std::max(hi_y, 0.0);
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    double scale = (size - 2 * pad) / span;
    double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
    auto X = [&](double x) { return ox + size / 2 + (x - cx) * scale; };
    auto Y = [&](double y) { return size / 2 + 20 - (y - cy) * scale; };

    os << "<g>\n<text x=\"" << ox + size / 2 << "\" y=\"24\" text-anchor=\"middle\">" << panel.title << "</text>\n";
    for (const auto &r : panel.rays) {
        double len = std::hypot(r.x, r.y);
        double t = span * 0.6 / len;
        os << "<line class=\"ray\" x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(r.x * t) << "\" y2=\"" << Y(r.y * t)
           << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (auto [i, j] : panel.edges) {
        os << "<line class=\"edge\" x1=\"" << X(panel.points[i].x) << "\" y1=\"" << Y(panel.points[i].y) << "\" x2=\""
           << X(panel.points[j].x) << "\" y2=\"" << Y(panel.points[j].y) << "\" stroke=\"#1f4e99\" stroke-width=\"2\"/>\n";
    }
    for (std::size_t i = 0; i < panel.points.size(); ++i) {
        os << "<circle class=\"vertex\" cx=\"" << X(panel.points[i].x) << "\" cy=\"" << Y(panel.points[i].y)
           << "\" r=\"3\" fill=\"#c0392b\"/>\n";
        os << "<text x=\"" << X(panel.points[i].x) + 5 << "\" y=\"" << Y(panel.points[i].y) - 5
           << "\" font-size=\"10\">" << panel.labels[i] << "</text>\n";
    }
    os << "</g>\n";
}

}  // namespace

Polyhedron cut(const Polyhedron &p, std::size_t k, const Rational &value) {
    std::vector<Hyperplane> eq{{QVec::basis(p.dim(), k), value}};
    return polytope_intersect(p, Polyhedron::from_constraints(p.dim(), {}, eq));
}

std::string render_svg(const GptSystem &sys, const PlotOptions &opt) {
    const std::size_t dim = sys.ambient_dim();
    if (dim < 2 || dim > 4) throw Error(ErrorCode::DimensionMismatch, "plots cover dimensions 2 to 4");
    const Polyhedron &s = sys.states().body();
    const Polyhedron &e = sys.effects().body();
    Panel left, right;
    if (dim == 2) {
        left = panel_from(s, 2, "states", opt.float_view);
        left.show_origin = true;
        right = panel_from(e, 2, "effects", opt.float_view);
        right.show_origin = true;
        if (opt.dual_cone) {
            Cone s_dual = dual_cone(positive_cone(s));
            for (const auto &r : s_dual.rays()) {
                auto d = r.to_doubles();
                right.rays.push_back({d[0], d[1]});
            }
        }
    } else {
        const std::size_t k = dim - 1;
        left = panel_from(head_coords(s, k), k, "states (last coordinate 1)", opt.float_view);
        Polyhedron slice_e = cut(e, k, opt.slice);
        right = panel_from(head_coords(slice_e, k), k, "effects (last coordinate " + to_string(opt.slice) + ")",
                           opt.float_view);
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"400\" viewBox=\"0 0 720 400\" "
          "font-family=\"sans-serif\">\n";
    if (!sys.name().empty()) os << "<title>" << sys.name() << "</title>\n";
    os << "<rect width=\"720\" height=\"400\" fill=\"white\"/>\n";
    draw(os, left, 0);
    draw(os, right, 360);
    os << "</svg>\n";
    return os.str();
}

}  // namespace gpt
