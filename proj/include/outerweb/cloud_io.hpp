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

#ifndef OUTERWEB_CLOUD_IO_HPP
#define OUTERWEB_CLOUD_IO_HPP

#include <cstdint>
#include <string>

#include "outerweb/dynamics.hpp"

namespace ow {

// PGW1 point-cloud file, little-endian:
//   0  "PGW1"       4 bytes
//   4  version      u16 (1)
//   6  flags        u16 (0)
//   8  N            u32
//  12  map id       u8  (MapKind)
//  13  mode         u8  (ArithMode)
//  14  reserved     10 bytes, zero
//  24  count        u64
//  32  count x (f64 x, f64 y)
inline constexpr uint16_t kCloudVersion = 1;
inline constexpr size_t kCloudHeaderBytes = 32;

void save_cloud(const PointCloud& pc, const std::string& path);
// Restores points, N, map and mode; other PointCloud fields come from the manifest.
PointCloud load_cloud(const std::string& path);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

}  // namespace ow

#endif
