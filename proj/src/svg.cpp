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

#include "outerweb/svg.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>

#include "outerweb/cloud_io.hpp"
#include "outerweb/errors.hpp"

namespace ow {

using nlohmann::json;

namespace {

std::string num(double v) {
    if (std::abs(v) < 5e-7) v = 0;
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
    std::string s(buf, r.ptr);
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Mapper {
    Viewport v;
    double scale, height_px;
    FloatPoint operator()(const FloatPoint& p) const { return {(p.x - v.x0) * scale, (v.y1 - p.y) * scale}; }
};

std::string style_attrs(const Style& s, bool filled_points) {
    std::string a;
    if (filled_points) {
        a += " fill=\"" + escape(s.stroke) + "\" stroke=\"none\"";
    } else {
        a += " fill=\"" + escape(s.fill) + "\" stroke=\"" + escape(s.stroke) + "\" stroke-width=\"" +
             num(s.stroke_width) + "\"";
    }
    if (s.opacity != 1.0) a += " opacity=\"" + num(s.opacity) + "\"";
    return a;
}

// Liang-Barsky clip of the infinite line to the viewport.
bool clip_line(const Line& l, const Viewport& v, FloatPoint& a, FloatPoint& b) {
    double t0 = -INFINITY, t1 = INFINITY;
    const double p[4] = {-l.direction.x, l.direction.x, -l.direction.y, l.direction.y};
    const double q[4] = {l.through.x - v.x0, v.x1 - l.through.x, l.through.y - v.y0, v.y1 - l.through.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0) {
            if (q[i] < 0) return false;
            continue;
        }
        double t = q[i] / p[i];
        if (p[i] < 0)
            t0 = std::max(t0, t);
        else
            t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
    a = {l.through.x + t0 * l.direction.x, l.through.y + t0 * l.direction.y};
    b = {l.through.x + t1 * l.direction.x, l.through.y + t1 * l.direction.y};
    return true;
}

}  // namespace

std::string render_svg(const SceneSpec& scene) {
    const Viewport& v = scene.viewport;
    if (!(v.x1 > v.x0) || !(v.y1 > v.y0) || scene.width_px <= 0) throw EmptyScene("viewport is empty");
    if (scene.layers.empty()) throw EmptyScene("scene has no layers");
    Mapper map{v, scene.width_px / (v.x1 - v.x0), 0};
    map.height_px = (v.y1 - v.y0) * map.scale;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(scene.width_px) +
           "\" height=\"" + num(map.height_px) + "\" viewBox=\"0 0 " + std::to_string(scene.width_px) + " " +
           num(map.height_px) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"" + escape(scene.background) + "\"/>\n";
    for (const auto& layer : scene.layers) {
        out += "<g id=\"" + escape(layer.label) + "\"" +
               style_attrs(layer.style, layer.kind == LayerKind::Cloud || layer.kind == LayerKind::StarPoints) +
               ">\n";
        switch (layer.kind) {
            case LayerKind::Tiles:
            case LayerKind::StarPolygon:
                for (const auto& path : layer.paths) {
                    if (path.empty()) continue;
                    out += "<path d=\"";
                    for (size_t i = 0; i < path.size(); ++i) {
                        FloatPoint q = map(path[i]);
                        out += (i ? " L" : "M") + num(q.x) + "," + num(q.y);
                    }
                    out += " Z\"/>\n";
                }
                break;
            case LayerKind::SymmetryLines:
                for (const auto& l : layer.lines) {
                    FloatPoint a, b;
                    if (!clip_line(l, v, a, b)) continue;
                    FloatPoint qa = map(a), qb = map(b);
                    out += "<line x1=\"" + num(qa.x) + "\" y1=\"" + num(qa.y) + "\" x2=\"" + num(qb.x) + "\" y2=\"" +
                           num(qb.y) + "\"/>\n";
                }
                break;
            case LayerKind::Cloud:
            case LayerKind::StarPoints: {
                std::vector<FloatPoint> inside;
                for (const auto& p : layer.points)
                    if (p.x >= v.x0 && p.x <= v.x1 && p.y >= v.y0 && p.y <= v.y1) inside.push_back(p);
                size_t stride = 1;
                if (scene.max_points > 0 && inside.size() > scene.max_points)
                    stride = (inside.size() + scene.max_points - 1) / scene.max_points;
                const std::string r = num(layer.style.point_radius);
                for (size_t i = 0; i < inside.size(); i += stride) {
                    FloatPoint q = map(inside[i]);
                    out += "<circle cx=\"" + num(q.x) + "\" cy=\"" + num(q.y) + "\" r=\"" + r + "\"/>\n";
                }
                break;
            }
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

Layer tiles_layer(const std::vector<Tile>& tiles, const std::string& label) {
    Layer l;
    l.kind = LayerKind::Tiles;
    l.label = label;
    for (const auto& t : tiles) l.paths.push_back(t.vertices_float());
    return l;
}

Layer outline_layer(const std::vector<std::vector<FloatPoint>>& outlines, const std::string& label) {
    Layer l;
    l.kind = LayerKind::Tiles;
    l.label = label;
    l.paths = outlines;
    return l;
}

Layer star_polygon_layer(const Tile& t, int step) {
    const int m = t.gon;
    if (step < 1 || 2 * step >= m) throw DomainError("star polygon step must satisfy 1 <= step < m/2");
    auto v = t.vertices_float();
    Layer l;
    l.kind = LayerKind::StarPolygon;
    l.label = "star_polygon";
    std::vector<bool> used(m, false);
    for (int s = 0; s < m; ++s) {
        if (used[s]) continue;
        std::vector<FloatPoint> path;
        for (int j = s; !used[j]; j = (j + step) % m) {
            used[j] = true;
            path.push_back(v[j]);
        }
        l.paths.push_back(path);
    }
    return l;
}

Layer symmetry_lines_layer(const Tile& t) {
    auto v = t.vertices_float();
    const int m = t.gon;
    FloatPoint c{to_double(t.center.x), to_double(t.center.y)};
    Layer l;
    l.kind = LayerKind::SymmetryLines;
    l.label = "symmetry_lines";
    // Vertex lines and edge-midpoint lines; for even m opposite ones coincide.
    const int count = m % 2 ? m : m / 2;
    for (int j = 0; j < count; ++j) {
        l.lines.push_back({c, {v[j].x - c.x, v[j].y - c.y}});
        FloatPoint mid{(v[j].x + v[(j + 1) % m].x) / 2, (v[j].y + v[(j + 1) % m].y) / 2};
        if (m % 2 == 0) l.lines.push_back({c, {mid.x - c.x, mid.y - c.y}});
    }
    return l;
}

Layer star_points_layer(const Tile& t) {
    auto sp = star_points(t);
    Layer l;
    l.kind = LayerKind::StarPoints;
    l.label = "star_points";
    for (const auto& p : sp.left) l.points.push_back({to_double(p.x), to_double(p.y)});
    for (const auto& p : sp.right) l.points.push_back({to_double(p.x), to_double(p.y)});
    l.style.point_radius = 2.0;
    l.style.stroke = "#d00000";
    return l;
}

Layer cloud_layer(const PointCloud& pc, const std::string& label) {
    Layer l;
    l.kind = LayerKind::Cloud;
    l.label = label;
    l.points = pc.points;
    return l;
}

SceneSpec scene_from_json(const json& j, const std::string& base_dir) {
    try {
        SceneSpec s;
        auto vp = j.at("viewport").get<std::vector<double>>();
        if (vp.size() != 4) throw DomainError("viewport needs four numbers");
        s.viewport = {vp[0], vp[1], vp[2], vp[3]};
        s.width_px = j.value("width", s.width_px);
        s.max_points = j.value("max_points", s.max_points);
        s.background = j.value("background", s.background);
        for (const auto& lj : j.at("layers")) {
            const std::string type = lj.at("type").get<std::string>();
            Layer layer;
            if (type == "cloud") {
                std::filesystem::path p = lj.at("path").get<std::string>();
                if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
                layer = cloud_layer(load_cloud(p.string()), lj.value("label", "cloud"));
            } else {
                const int N = lj.at("N").get<int>();
                if (type == "ngon") {
                    layer = tiles_layer({build_ngon(N)}, "ngon");
                } else if (type == "family") {
                    auto ff = first_family(N);
                    std::vector<Tile> tiles;
                    for (int k : lj.at("members").get<std::vector<int>>()) tiles.push_back(ff.member(k));
                    layer = tiles_layer(tiles, "family");
                } else if (type == "s2_family") {
                    auto f = s2_family(N);
                    int sigma = lj.value("side", std::string("right")) == "left" ? -1 : +1;
                    std::vector<Tile> tiles;
                    for (int k : lj.at("members").get<std::vector<int>>()) tiles.push_back(f.ds(k, sigma));
                    layer = tiles_layer(tiles, "s2_family");
                } else if (type == "weave") {
                    const int k = lj.at("k").get<int>();
                    auto m = mutation_spec(N, k, N % 2 ? TileClass::DSofOddN : TileClass::DSofEvenN);
                    if (!m) throw DomainError("DS[" + std::to_string(k) + "] of N=" + std::to_string(N) + " is not mutated");
                    Weave w = weave(*m, s2_family(N).ds(k));
                    std::vector<FloatPoint> outline;
                    for (const auto& p : w.boundary) outline.push_back({to_double(p.x), to_double(p.y)});
                    layer = outline_layer({outline}, "weave");
                } else if (type == "star_polygon") {
                    layer = star_polygon_layer(build_ngon(N), lj.value("step", (N - 1) / 2));
                } else if (type == "symmetry_lines") {
                    layer = symmetry_lines_layer(build_ngon(N));
                    layer.style.stroke = "#0000ff";
                } else if (type == "star_points") {
                    std::string of = lj.value("of", std::string("ngon"));
                    if (of != "ngon" && of != "s2") throw DomainError("star_points.of must be ngon or s2");
                    layer = star_points_layer(of == "s2" ? s2_family(N).s2 : build_ngon(N));
                } else {
                    throw DomainError("unknown layer type " + type);
                }
            }
            if (lj.contains("style")) {
                Style base = layer.style;
                const auto& sj = lj.at("style");
                base.stroke = sj.value("stroke", base.stroke);
                base.fill = sj.value("fill", base.fill);
                base.stroke_width = sj.value("stroke_width", base.stroke_width);
                base.point_radius = sj.value("radius", base.point_radius);
                base.opacity = sj.value("opacity", base.opacity);
                layer.style = base;
            }
            if (lj.contains("label")) layer.label = lj.at("label").get<std::string>();
            s.layers.push_back(std::move(layer));
        }
        return s;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed scene: ") + e.what());
    }
}

}  // namespace ow
