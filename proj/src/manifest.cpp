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

#include "outerweb/manifest.hpp"

#include <filesystem>
#include <fstream>

#include "outerweb/cloud_io.hpp"
#include "outerweb/errors.hpp"

namespace ow {

using nlohmann::json;

json manifest_to_json(const RunManifest& m) {
    json j;
    j["command_line"] = m.command_line;
    j["config"] = m.config;
    j["N"] = m.N;
    j["map"] = m.map;
    j["seeds"] = m.seeds;
    j["iteration_budget"] = m.iteration_budget;
    j["rng_seed"] = m.rng_seed;
    j["outputs"] = json::array();
    for (const auto& o : m.outputs) j["outputs"].push_back({{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
    j["wall_time_s"] = m.wall_time_s;
    j["mode"] = m.mode;
    return j;
}

RunManifest manifest_from_json(const json& j) {
    try {
        RunManifest m;
        m.command_line = j.at("command_line").get<std::vector<std::string>>();
        m.config = j.at("config");
        m.N = j.at("N").get<int>();
        m.map = j.at("map").get<std::string>();
        m.seeds = j.at("seeds").get<std::vector<std::string>>();
        m.iteration_budget = j.at("iteration_budget").get<long long>();
        m.rng_seed = j.at("rng_seed").get<uint64_t>();
        for (const auto& o : j.at("outputs"))
            m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>(),
                                 o.at("bytes").get<uint64_t>()});
        m.wall_time_s = j.at("wall_time_s").get<double>();
        m.mode = j.at("mode").get<std::string>();
        return m;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed manifest: ") + e.what());
    }
}

void save_manifest(const RunManifest& m, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw DomainError("cannot open " + path + " for writing");
    out << manifest_to_json(m).dump(2) << "\n";
}

RunManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError(path + ": " + e.what());
    }
    return manifest_from_json(j);
}

OutputRecord record_output(const std::string& path) {
    return {path, sha256_file(path), static_cast<uint64_t>(std::filesystem::file_size(path))};
}

bool verify_outputs(const RunManifest& m) {
    for (const auto& o : m.outputs) {
        if (!std::filesystem::exists(o.path)) return false;
        if (std::filesystem::file_size(o.path) != o.bytes || sha256_file(o.path) != o.sha256) return false;
    }
    return true;
}

json cyclo_to_json(const CycloNum& a) {
    json c = json::array();
    for (const auto& q : a.coeffs()) c.push_back(q.get_str());
    return {{"conductor", a.conductor()}, {"coeffs", c}};
}

CycloNum cyclo_from_json(const json& j) {
    try {
        std::vector<mpq_class> c;
        for (const auto& s : j.at("coeffs")) {
            mpq_class q(s.get<std::string>());
            q.canonicalize();
            c.push_back(q);
        }
        return CycloNum::from_coeffs(j.at("conductor").get<int>(), c);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed exact number: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DomainError(std::string("malformed rational: ") + e.what());
    }
}

json web_config(const WebRun& run) {
    const auto& o = run.options;
    return {{"N", run.N},
            {"map", map_name(run.map.kind)},
            {"theta", run.map.theta},
            {"samples_per_edge", o.samples_per_edge},
            {"iters", o.iters},
            {"crop", {o.crop.x0, o.crop.y0, o.crop.x1, o.crop.y1}},
            {"mode", o.mode == ArithMode::Exact ? "exact" : "float"},
            {"with_inverse", o.with_inverse},
            {"rng_seed", o.rng_seed},
            {"offset", o.offset},
            {"keep_all", o.keep_all}};
}

WebRun web_run_from_config(const json& c) {
    try {
        WebRun r;
        r.N = c.at("N").get<int>();
        MapKind k = parse_map(c.at("map").get<std::string>());
        switch (k) {
            case MapKind::Tau: r.map = MapSpec::tau(r.N); break;
            case MapKind::TauInverse: r.map = MapSpec::tau_inverse(r.N); break;
            case MapKind::Dc: r.map = MapSpec::dc(r.N); break;
            case MapKind::Df:
                r.map = MapSpec::df(r.N, 1);
                r.map.theta = c.at("theta").get<double>();
                break;
        }
        auto& o = r.options;
        o.samples_per_edge = c.at("samples_per_edge").get<int>();
        o.iters = c.at("iters").get<long long>();
        auto crop = c.at("crop").get<std::vector<double>>();
        if (crop.size() != 4) throw DomainError("crop needs four numbers");
        o.crop = {crop[0], crop[1], crop[2], crop[3]};
        std::string mode = c.at("mode").get<std::string>();
        if (mode != "exact" && mode != "float") throw DomainError("unknown mode " + mode);
        o.mode = mode == "exact" ? ArithMode::Exact : ArithMode::Float;
        o.with_inverse = c.at("with_inverse").get<bool>();
        o.rng_seed = c.at("rng_seed").get<uint64_t>();
        o.offset = c.at("offset").get<double>();
        o.keep_all = c.at("keep_all").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed web config: ") + e.what());
    }
}

RunManifest web_manifest(const WebRun& run, const std::vector<std::string>& command_line) {
    RunManifest m;
    m.command_line = command_line;
    m.config = web_config(run);
    m.N = run.N;
    m.map = map_name(run.map.kind);
    m.seeds = {"web_seeds(samples_per_edge=" + std::to_string(run.options.samples_per_edge) + ")"};
    m.rng_seed = run.options.rng_seed;
    m.mode = run.options.mode == ArithMode::Exact ? "exact" : "float";
    return m;
}

PointCloud replay_web(const RunManifest& m) {
    WebRun r = web_run_from_config(m.config);
    return web_generate(r.N, r.map, r.options);
}

}  // namespace ow
