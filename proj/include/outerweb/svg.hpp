/*
   Copyright 2026 The outerweb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OUTERWEB_SVG_HPP
#define OUTERWEB_SVG_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "outerweb/dynamics.hpp"
#include "outerweb/family.hpp"

namespace ow {

enum class LayerKind { Cloud, Tiles, StarPolygon, SymmetryLines, StarPoints };

struct Style {
    std::string stroke = "#000000";
    std::string fill = "none";
    double stroke_width = 1.0;  // pixels
    double point_radius = 0.75;  // pixels
    double opacity = 1.0;
};

struct Line {
    FloatPoint through;
    FloatPoint direction;
};

struct Layer {
    LayerKind kind = LayerKind::Tiles;
    std::string label;
    Style style;
    std::vector<FloatPoint> points;             // Cloud, StarPoints
    std::vector<std::vector<FloatPoint>> paths;  // Tiles, StarPolygon: closed outlines
    std::vector<Line> lines;                     // SymmetryLines, clipped to the viewport
};

struct Viewport {
    double x0 = -1, y0 = -1, x1 = 1, y1 = 1;
};

// Layers render in order, so later layers sit on top.
struct SceneSpec {
    Viewport viewport;
    int width_px = 1000;
    size_t max_points = 200000;  // per point layer; larger layers are decimated by stride
    std::string background = "#ffffff";
    std::vector<Layer> layers;
};

std::string render_svg(const SceneSpec& scene);

Layer tiles_layer(const std::vector<Tile>& tiles, const std::string& label = "tiles");
Layer outline_layer(const std::vector<std::vector<FloatPoint>>& outlines, const std::string& label);
// Star polygon {m/step} on the tile's vertices.
Layer star_polygon_layer(const Tile& t, int step);
// The m mirror lines of the tile.
Layer symmetry_lines_layer(const Tile& t);
Layer star_points_layer(const Tile& t);
Layer cloud_layer(const PointCloud& pc, const std::string& label = "cloud");

// Scene description:
// {"viewport": [x0, y0, x1, y1], "width": px, "max_points": n, "layers": [
//    {"type": "ngon", "N": 26},
//    {"type": "family", "N": 26, "members": [1, 2]},
//    {"type": "s2_family", "N": 26, "side": "right", "members": [2, 3]},
//    {"type": "weave", "N": 33, "k": 21},
//    {"type": "star_polygon", "N": 26, "step": 5},
//    {"type": "symmetry_lines", "N": 26},
//    {"type": "star_points", "N": 26, "of": "ngon" | "s2"},
//    {"type": "cloud", "path": "web.pgw"}], each with optional "style"}.
// Relative cloud paths resolve against base_dir.
SceneSpec scene_from_json(const nlohmann::json& j, const std::string& base_dir = ".");

}  // namespace ow

#endif
