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

#ifndef OUTERWEB_MANIFEST_HPP
#define OUTERWEB_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "outerweb/cyclo.hpp"
#include "outerweb/dynamics.hpp"

namespace ow {

struct OutputRecord {
    std::string path;
    std::string sha256;
    uint64_t bytes = 0;
};

struct RunManifest {
    std::vector<std::string> command_line;
    nlohmann::json config = nlohmann::json::object();
    int N = 0;
    std::string map;
    std::vector<std::string> seeds;
    long long iteration_budget = 0;
    uint64_t rng_seed = 0;
    std::vector<OutputRecord> outputs;
    double wall_time_s = 0;
    std::string mode;
};

nlohmann::json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);
void save_manifest(const RunManifest& m, const std::string& path);
RunManifest load_manifest(const std::string& path);

// Records path, size and SHA-256 of an existing file.
OutputRecord record_output(const std::string& path);
// True when every listed output exists and hashes to its recorded value.
bool verify_outputs(const RunManifest& m);

// Exact numbers: {"conductor": M, "coeffs": ["p/q", ...]} in the power basis.
nlohmann::json cyclo_to_json(const CycloNum& a);
CycloNum cyclo_from_json(const nlohmann::json& j);

struct WebRun {
    int N = 0;
    MapSpec map;
    WebOptions options;
};

nlohmann::json web_config(const WebRun& run);
WebRun web_run_from_config(const nlohmann::json& config);
RunManifest web_manifest(const WebRun& run, const std::vector<std::string>& command_line);
// Regenerates the cloud described by a web manifest.
PointCloud replay_web(const RunManifest& m);

}  // namespace ow

#endif
