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

#ifndef OUTERWEB_DYNAMICS_HPP
#define OUTERWEB_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "outerweb/family.hpp"
#include "outerweb/geometry.hpp"

namespace ow {

enum class MapKind : uint8_t { Tau = 0, TauInverse = 1, Df = 2, Dc = 3 };
enum class Frame { Centered, DcFrame };
enum class ArithMode : uint8_t { Float = 0, Exact = 1 };
enum class Termination { Return, Limit, Singular };

std::string map_name(MapKind k);
MapKind parse_map(const std::string& s);
std::string termination_name(Termination t);

struct MapSpec {
    MapKind kind = MapKind::Tau;
    int N = 0;
    double theta = 0;  // Df
    double w = 0;      // Dc, 2 pi / N
    Frame frame = Frame::Centered;

    static MapSpec tau(int N) { return {MapKind::Tau, N, 0, 0, Frame::Centered}; }
    static MapSpec tau_inverse(int N) { return {MapKind::TauInverse, N, 0, 0, Frame::Centered}; }
    static MapSpec df(int N, int k_prime);  // theta = 2 pi k'/N
    static MapSpec dc(int N);
};

struct OrbitResult {
    std::optional<long long> period;
    bool doubling = false;
    std::optional<long long> half_period;
    long long iterations_used = 0;
    ArithMode mode = ArithMode::Exact;
    Termination terminated_by = Termination::Limit;
};

struct Crop {
    double x0 = -1e300, y0 = -1e300, x1 = 1e300, y1 = 1e300;
    bool contains(const FloatPoint& p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    static Crop everything() { return {}; }
};

struct PointCloud {
    std::vector<FloatPoint> points;
    Crop crop;
    int N = 0;
    MapKind map = MapKind::Tau;
    ArithMode mode = ArithMode::Float;
    std::string source;
    long long budget = 0;
    long long recorded = 0;  // points that landed in the crop
    long long total = 0;     // map steps taken
    uint64_t rng_seed = 0;
};

// Float tau about the regular N-gon (center origin, apothem 1).
class FloatTau {
   public:
    explicit FloatTau(int N, bool inverse = false);

    enum class Status { Ok, Singular, Inside };
    // One step. `hint` is the vertex index to start the search from and is
    // updated to the chosen vertex.
    Status step(FloatPoint& p, int& hint) const;
    // Supporting vertex of p, or -1 if singular / inside.
    int support(const FloatPoint& p, int hint, Status* status = nullptr) const;
    // Steps until `steps` are done or a singular point is hit; returns steps done.
    long long run(FloatPoint& p, long long steps) const;

    int N() const { return N_; }
    bool inverse() const { return inverse_; }
    const std::vector<FloatPoint>& vertices() const { return v_; }
    static constexpr double kSingularTol = 1e-14;

   private:
    int N_;
    bool inverse_;
    double edge_;
    std::vector<FloatPoint> v_;
};

FloatPoint tau_step(FloatPoint p, int N);
FloatPoint tau_inverse_step(FloatPoint p, int N);

// Exact tau about the regular N-gon. The iterate is tracked as
// p_t = s (seed + 2 sum_j m_j v_j) with integer counts m_j; vertex choice uses
// a float filter with a rigorous error bound and falls back to certified
// exact signs when the filter cannot decide.
class ExactTau {
   public:
    ExactTau(int N, const ExactPoint& seed, bool inverse = false);

    // Returns false on a singular point (orbit stops).
    bool step();
    long long time() const { return t_; }
    int sign() const { return s_; }
    const std::vector<long long>& counts() const { return m_; }
    FloatPoint approx() const { return pf_; }
    double error_bound() const { return err_; }
    // Correctly rounded coordinates (256-bit evaluation from the counts).
    FloatPoint rounded() const;
    ExactPoint exact() const;
    // Exact test p_t == q, with a float pre-filter.
    bool equals(const ExactPoint& q, const FloatPoint& qf) const;
    long long fallbacks() const { return fallbacks_; }
    const std::vector<ExactPoint>& exact_vertices() const { return vx_; }

   private:
    int choose_vertex();
    int choose_vertex_exact();
    void resync();

    int N_;
    bool inverse_;
    FloatTau ftau_;
    ExactPoint seed_;
    std::vector<ExactPoint> vx_;
    std::vector<BigFloat> vbx_, vby_;
    BigFloat seedbx_, seedby_;
    double vmax_ = 0, vdelta_ = 0;
    int s_ = 1;
    std::vector<long long> m_;
    FloatPoint pf_;
    double err_ = 0;
    long long t_ = 0;
    int hint_[2] = {0, 0};
    long long fallbacks_ = 0;
};

// Exact-mode period search for tau (or its inverse) about the N-gon.
OrbitResult find_period(const ExactPoint& seed, int N, long long limit,
                        const std::optional<ExactPoint>& doubling_center = std::nullopt, bool inverse = false);
// Float-mode period search; return tolerance 1e-12.
OrbitResult find_period_float(FloatPoint seed, const MapSpec& map, long long limit,
                              const std::optional<FloatPoint>& doubling_center = std::nullopt);

// Digital filter map on [-1,1)^2: (x, y) -> (y, wrap(2 cos(theta) y - x)).
FloatPoint df_step(FloatPoint s, double theta);
double df_wrap(double v);
// Dual-center map in the Dc frame: z -> e^{iw} (z + sigma h), sigma = sign(y)
// (y >= -1e-12 counts as +), h = 2 tan(pi/N). The upper piece rotates about the
// N-gon centered at (-tan(pi/N), 1), whose star[1] is the origin.
FloatPoint dc_step(FloatPoint z, int N);
FloatPoint dc_fixed_point(int N, int sigma);
FloatPoint centered_to_dc(FloatPoint p, int N);
FloatPoint dc_to_centered(FloatPoint p, int N);
// Below-axis workaround: rotate by -2 pi about the origin is the identity on
// points, so the transform is a rotation by `angle` followed by a crop.
std::vector<FloatPoint> rotate_and_crop(const std::vector<FloatPoint>& pts, double angle, const Crop& crop);

struct WebOptions {
    int samples_per_edge = 100;
    long long iters = 1000;
    Crop crop;
    ArithMode mode = ArithMode::Float;
    bool with_inverse = true;
    uint64_t rng_seed = 1;
    double offset = 1e-11;  // seeds sit this far outside the extended edge
    bool keep_all = false;  // record points outside the crop too
};

// Seeds on the extended edges of N (beyond each vertex, out to the last star
// point), symmetric under the dihedral group when jitter is shared.
std::vector<FloatPoint> web_seeds(int N, int samples_per_edge, uint64_t rng_seed, double offset);
std::vector<ExactPoint> web_seeds_exact(int N, int samples_per_edge, uint64_t rng_seed, const mpq_class& offset);
PointCloud web_generate(int N, const MapSpec& map, const WebOptions& opt);

struct CandleResult {
    PointCloud cloud;
    std::vector<long long> visits;  // per recorded point, in orbit order
    OrbitResult orbit;
};
CandleResult candle_trace(const ExactPoint& seed, int N, long long iters, const Crop& crop);
CandleResult candle_trace_float(FloatPoint seed, const MapSpec& map, long long iters, const Crop& crop);

}  // namespace ow

#endif
