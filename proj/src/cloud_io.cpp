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

#include "outerweb/cloud_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

#include "outerweb/errors.hpp"

namespace ow {

namespace {

template <typename T>
void put_le(unsigned char* dst, T v) {
    for (size_t i = 0; i < sizeof(T); ++i) dst[i] = static_cast<unsigned char>((static_cast<uint64_t>(v) >> (8 * i)) & 0xff);
}

template <typename T>
T get_le(const unsigned char* src) {
    uint64_t v = 0;
    for (size_t i = 0; i < sizeof(T); ++i) v |= static_cast<uint64_t>(src[i]) << (8 * i);
    return static_cast<T>(v);
}

void put_f64(unsigned char* dst, double d) { put_le<uint64_t>(dst, std::bit_cast<uint64_t>(d)); }
double get_f64(const unsigned char* src) { return std::bit_cast<double>(get_le<uint64_t>(src)); }

constexpr size_t kChunkPoints = 1 << 16;

std::string to_hex(const unsigned char* md, unsigned int len) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

}  // namespace

void save_cloud(const PointCloud& pc, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot open " + path + " for writing");
    std::array<unsigned char, kCloudHeaderBytes> h{};
    std::memcpy(h.data(), "PGW1", 4);
    put_le<uint16_t>(h.data() + 4, kCloudVersion);
    put_le<uint16_t>(h.data() + 6, 0);
    put_le<uint32_t>(h.data() + 8, static_cast<uint32_t>(pc.N));
    h[12] = static_cast<unsigned char>(pc.map);
    h[13] = static_cast<unsigned char>(pc.mode);
    put_le<uint64_t>(h.data() + 24, pc.points.size());
    out.write(reinterpret_cast<const char*>(h.data()), h.size());
    std::vector<unsigned char> buf;
    for (size_t i = 0; i < pc.points.size(); i += kChunkPoints) {
        size_t n = std::min(kChunkPoints, pc.points.size() - i);
        buf.resize(16 * n);
        for (size_t j = 0; j < n; ++j) {
            put_f64(buf.data() + 16 * j, pc.points[i + j].x);
            put_f64(buf.data() + 16 * j + 8, pc.points[i + j].y);
        }
        out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    }
    if (!out) throw DomainError("write failed for " + path);
}

PointCloud load_cloud(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    std::array<unsigned char, kCloudHeaderBytes> h{};
    in.read(reinterpret_cast<char*>(h.data()), h.size());
    if (in.gcount() >= 4 && std::memcmp(h.data(), "PGW1", 4) != 0) throw BadMagic(path + ": not a PGW1 file");
    if (in.gcount() != static_cast<std::streamsize>(h.size())) throw TruncatedFile(path + ": header is truncated");
    uint16_t version = get_le<uint16_t>(h.data() + 4);
    if (version != kCloudVersion)
        throw VersionMismatch(path + ": version " + std::to_string(version) + ", expected " +
                              std::to_string(kCloudVersion));
    PointCloud pc;
    pc.N = static_cast<int>(get_le<uint32_t>(h.data() + 8));
    if (h[12] > static_cast<unsigned char>(MapKind::Dc)) throw DomainError(path + ": unknown map id");
    if (h[13] > static_cast<unsigned char>(ArithMode::Exact)) throw DomainError(path + ": unknown mode");
    pc.map = static_cast<MapKind>(h[12]);
    pc.mode = static_cast<ArithMode>(h[13]);
    uint64_t count = get_le<uint64_t>(h.data() + 24);

    in.seekg(0, std::ios::end);
    auto size = static_cast<uint64_t>(in.tellg());
    if (size < kCloudHeaderBytes || (size - kCloudHeaderBytes) / 16 < count)
        throw TruncatedFile(path + ": expected " + std::to_string(count) + " points");
    in.seekg(kCloudHeaderBytes);
    pc.points.resize(count);
    std::vector<unsigned char> buf;
    for (uint64_t i = 0; i < count; i += kChunkPoints) {
        size_t n = static_cast<size_t>(std::min<uint64_t>(kChunkPoints, count - i));
        buf.resize(16 * n);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (in.gcount() != static_cast<std::streamsize>(buf.size())) throw TruncatedFile(path + ": short read");
        for (size_t j = 0; j < n; ++j)
            pc.points[i + j] = {get_f64(buf.data() + 16 * j), get_f64(buf.data() + 16 * j + 8)};
    }
    pc.recorded = static_cast<long long>(count);
    return pc;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
        throw DomainError("sha256 failed");
    return to_hex(md, len);
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::vector<char> buf(1 << 20);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        EVP_DigestUpdate(ctx, buf.data(), static_cast<size_t>(in.gcount()));
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    return to_hex(md, len);
}

}  // namespace ow
