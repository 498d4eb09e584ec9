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

#include "outerweb/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "outerweb/errors.hpp"

namespace ow {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kReturnTol = 1e-12;
// Points this close to the real axis count as upper, so N-gon vertices that
// sit on the axis do not flip pieces through rounding.
constexpr double kDcAxisTol = 1e-12;

double inf_dist(const FloatPoint& a, const FloatPoint& b) { return std::max(std::fabs(a.x - b.x), std::fabs(a.y - b.y)); }

int star_limit(int N) { return (N % 2) ? (N - 1) / 2 : N / 2 - 1; }

}  // namespace

std::string map_name(MapKind k) {
    switch (k) {
        case MapKind::Tau:
            return "tau";
        case MapKind::TauInverse:
            return "tau-inverse";
        case MapKind::Df:
            return "df";
        case MapKind::Dc:
            return "dc";
    }
    return "?";
}

MapKind parse_map(const std::string& s) {
    if (s == "tau") return MapKind::Tau;
    if (s == "tau-inverse" || s == "tau-inv") return MapKind::TauInverse;
    if (s == "df") return MapKind::Df;
    if (s == "dc") return MapKind::Dc;
    throw DomainError("unknown map: " + s);
}

std::string termination_name(Termination t) {
    switch (t) {
        case Termination::Return:
            return "return";
        case Termination::Limit:
            return "limit";
        case Termination::Singular:
            return "singular";
    }
    return "?";
}

MapSpec MapSpec::df(int N, int k_prime) {
    if (N < 3) throw DomainError("N must be >= 3");
    return {MapKind::Df, N, 2 * kPi * k_prime / N, 0, Frame::Centered};
}

MapSpec MapSpec::dc(int N) {
    if (N < 3) throw DomainError("N must be >= 3");
    return {MapKind::Dc, N, 0, 2 * kPi / N, Frame::DcFrame};
}

FloatTau::FloatTau(int N, bool inverse) : N_(N), inverse_(inverse) {
    if (N < 3) throw DomainError("N must be >= 3");
    double r = 1.0 / std::cos(kPi / N);
    v_.resize(N);
    for (int j = 0; j < N; ++j) {
        double a = -kPi / 2 + (2 * j + 1) * kPi / N;
        v_[j] = {r * std::cos(a), r * std::sin(a)};
    }
    edge_ = 2 * std::tan(kPi / N);
}

int FloatTau::support(const FloatPoint& p, int j, Status* status) const {
    const int n = N_;
    const double tol = kSingularTol * edge_;
    if (j < 0 || j >= n) j = 0;
    for (int it = 0; it < 2 * n + 2; ++it) {
        const FloatPoint& a = v_[j];
        const FloatPoint& nx = v_[j + 1 == n ? 0 : j + 1];
        const FloatPoint& pv = v_[j == 0 ? n - 1 : j - 1];
        double o1 = orient(p, a, nx);
        double o2 = orient(p, a, pv);
        if (inverse_) {
            o1 = -o1;
            o2 = -o2;
        }
        if (o1 < -tol) {
            j = j + 1 == n ? 0 : j + 1;
            continue;
        }
        if (o2 < -tol) {
            j = j == 0 ? n - 1 : j - 1;
            continue;
        }
        if (o1 <= tol || o2 <= tol) {
            if (status) *status = Status::Singular;
            return -1;
        }
        if (status) *status = Status::Ok;
        return j;
    }
    if (status) *status = Status::Inside;
    return -1;
}

FloatTau::Status FloatTau::step(FloatPoint& p, int& hint) const {
    Status st;
    int j = support(p, hint, &st);
    if (j < 0) return st;
    hint = j;
    p = {2 * v_[j].x - p.x, 2 * v_[j].y - p.y};
    return Status::Ok;
}

long long FloatTau::run(FloatPoint& p, long long steps) const {
    int hint[2] = {0, 0};
    Status st;
    int j0 = support(p, 0, &st);
    if (j0 < 0) return 0;
    hint[0] = j0;
    hint[1] = (j0 + N_ / 2) % N_;
    for (long long t = 0; t < steps; ++t) {
        if (step(p, hint[t & 1]) != Status::Ok) return t;
    }
    return steps;
}

static FloatPoint tau_any(FloatPoint p, int N, bool inverse) {
    FloatTau f(N, inverse);
    int hint = 0;
    auto st = f.step(p, hint);
    if (st == FloatTau::Status::Singular) throw SingularPoint("point lies on an extended edge");
    if (st == FloatTau::Status::Inside) throw InsidePolygon("point lies inside the polygon");
    return p;
}

FloatPoint tau_step(FloatPoint p, int N) { return tau_any(p, N, false); }
FloatPoint tau_inverse_step(FloatPoint p, int N) { return tau_any(p, N, true); }

double df_wrap(double v) { return v - 2 * std::floor((v + 1) / 2); }

FloatPoint df_step(FloatPoint s, double theta) { return {s.y, df_wrap(2 * std::cos(theta) * s.y - s.x)}; }

FloatPoint dc_step(FloatPoint z, int N) {
    double h = 2 * std::tan(kPi / N);
    double w = 2 * kPi / N;
    double x = z.x + (z.y >= -kDcAxisTol ? h : -h);
    double c = std::cos(w), s = std::sin(w);
    return {c * x - s * z.y, s * x + c * z.y};
}

FloatPoint dc_fixed_point(int N, int sigma) {
    double t = std::tan(kPi / N);
    return sigma >= 0 ? FloatPoint{-t, 1} : FloatPoint{t, -1};
}

FloatPoint centered_to_dc(FloatPoint p, int N) { return {p.x - std::tan(kPi / N), p.y + 1}; }
FloatPoint dc_to_centered(FloatPoint p, int N) { return {p.x + std::tan(kPi / N), p.y - 1}; }

std::vector<FloatPoint> rotate_and_crop(const std::vector<FloatPoint>& pts, double angle, const Crop& crop) {
    double c = std::cos(angle), s = std::sin(angle);
    std::vector<FloatPoint> out;
    for (const auto& p : pts) {
        FloatPoint q{c * p.x - s * p.y, s * p.x + c * p.y};
        if (crop.contains(q)) out.push_back(q);
    }
    return out;
}

namespace {

// Shared sample parameters in (0, 1], quantized to 2^-20 so the exact and
// float seed sets agree.
std::vector<mpq_class> sample_params(int samples, uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<uint32_t> jitter(0, (1u << 20) - 1);
    std::vector<mpq_class> out;
    for (int i = 0; i < samples; ++i) {
        mpq_class u(jitter(rng), 1u << 20);
        mpq_class lam = (mpq_class(i) + u) / samples;
        lam.canonicalize();
        if (lam == 0) lam = mpq_class(1, 1u << 21);
        out.push_back(lam);
    }
    return out;
}

}  // namespace

std::vector<FloatPoint> web_seeds(int N, int samples_per_edge, uint64_t rng_seed, double offset) {
    if (samples_per_edge < 1) throw DomainError("samples_per_edge must be >= 1");
    FloatTau f(N);
    const auto& v = f.vertices();
    double L = std::tan(star_limit(N) * kPi / N) - std::tan(kPi / N);
    if (L <= 0) L = std::tan(kPi / N);
    auto params = sample_params(samples_per_edge, rng_seed);
    std::vector<FloatPoint> out;
    for (int j = 0; j < N; ++j) {
        const FloatPoint& a = v[j];
        const FloatPoint& b = v[(j + 1) % N];
        double a_mid = -kPi / 2 + 2.0 * (j + 1) * kPi / N;
        FloatPoint n{std::cos(a_mid), std::sin(a_mid)};
        FloatPoint d{-n.y, n.x};
        for (const auto& lam : params) {
            double s = lam.get_d() * L;
            out.push_back({b.x + s * d.x + offset * n.x, b.y + s * d.y + offset * n.y});
            out.push_back({a.x - s * d.x + offset * n.x, a.y - s * d.y + offset * n.y});
        }
    }
    return out;
}

std::vector<ExactPoint> web_seeds_exact(int N, int samples_per_edge, uint64_t rng_seed, const mpq_class& offset) {
    if (samples_per_edge < 1) throw DomainError("samples_per_edge must be >= 1");
    int K = context_conductor(N);
    Tile n_gon = build_ngon(N);
    auto v = n_gon.vertices();
    for (auto& p : v) p = p.lift(K);
    CycloNum L = (tan_pi(N, star_limit(N)) - tan_pi(N, 1)).lift(K);
    if (star_limit(N) <= 1) L = tan_pi(N, 1).lift(K);
    auto params = sample_params(samples_per_edge, rng_seed);
    std::vector<ExactPoint> out;
    for (int j = 0; j < N; ++j) {
        const ExactPoint& a = v[j];
        const ExactPoint& b = v[(j + 1) % N];
        // Outward normal at angle -pi/2 + 2(j+1) pi/N.
        ExactPoint n{trig(N, 2 * (j + 1), TrigFn::Sin).lift(K), (-trig(N, 2 * (j + 1), TrigFn::Cos)).lift(K)};
        ExactPoint d{-n.y, n.x};
        for (const auto& lam : params) {
            CycloNum s = L * lam;
            ExactPoint off = n * offset;
            out.push_back(b + d * s + off);
            out.push_back(a - d * s + off);
        }
    }
    return out;
}

PointCloud web_generate(int N, const MapSpec& map, const WebOptions& opt) {
    if (opt.iters < 0) throw DomainError("iters must be >= 0");
    PointCloud pc;
    pc.N = N;
    pc.map = map.kind;
    pc.mode = opt.mode;
    pc.crop = opt.crop;
    pc.rng_seed = opt.rng_seed;
    pc.source = "web";
    auto record = [&](const FloatPoint& p) {
        if (opt.crop.contains(p)) {
            pc.points.push_back(p);
            ++pc.recorded;
        } else if (opt.keep_all) {
            pc.points.push_back(p);
        }
    };

    if (map.kind == MapKind::Df) {
        std::mt19937_64 rng(opt.rng_seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        long long nseeds = static_cast<long long>(opt.samples_per_edge) * N;
        for (long long i = 0; i < nseeds; ++i) {
            FloatPoint p{u(rng), u(rng)};
            for (long long t = 0; t < opt.iters; ++t) {
                p = df_step(p, map.theta);
                ++pc.total;
                record(p);
            }
        }
        pc.budget = pc.total;
        return pc;
    }

    if (opt.mode == ArithMode::Exact && map.kind != MapKind::Dc) {
        mpq_class off;
        off = opt.offset;  // exact binary value of the double
        auto seeds = web_seeds_exact(N, opt.samples_per_edge, opt.rng_seed, off);
        for (int dir = 0; dir < (opt.with_inverse ? 2 : 1); ++dir) {
            bool inv = (map.kind == MapKind::TauInverse) != (dir == 1);
            for (const auto& s : seeds) {
                ExactTau et(N, s, inv);
                for (long long t = 0; t < opt.iters; ++t) {
                    if (!et.step()) break;
                    ++pc.total;
                    FloatPoint q = et.approx();
                    // Only pay for the correctly rounded value when it can matter.
                    double e = et.error_bound() + 1e-9;
                    bool maybe = q.x >= opt.crop.x0 - e && q.x <= opt.crop.x1 + e && q.y >= opt.crop.y0 - e &&
                                 q.y <= opt.crop.y1 + e;
                    if (maybe || opt.keep_all) record(et.rounded());
                }
            }
        }
        pc.budget = pc.total;
        return pc;
    }

    auto seeds = web_seeds(N, opt.samples_per_edge, opt.rng_seed, opt.offset);
    if (map.kind == MapKind::Dc) {
        for (auto& s : seeds) {
            FloatPoint z = centered_to_dc(s, N);
            for (long long t = 0; t < opt.iters; ++t) {
                z = dc_step(z, N);
                ++pc.total;
                record(z);
            }
        }
        pc.budget = pc.total;
        return pc;
    }
    FloatTau fwd(N, map.kind == MapKind::TauInverse);
    FloatTau bwd(N, map.kind != MapKind::TauInverse);
    for (int dir = 0; dir < (opt.with_inverse ? 2 : 1); ++dir) {
        const FloatTau& f = dir == 0 ? fwd : bwd;
        for (const auto& s : seeds) {
            FloatPoint p = s;
            int hint[2] = {0, N / 2};
            for (long long t = 0; t < opt.iters; ++t) {
                if (f.step(p, hint[t & 1]) != FloatTau::Status::Ok) break;
                ++pc.total;
                record(p);
            }
        }
    }
    pc.budget = pc.total;
    return pc;
}

OrbitResult find_period_float(FloatPoint seed, const MapSpec& map, long long limit,
                              const std::optional<FloatPoint>& doubling_center) {
    if (limit < 0) throw DomainError("limit must be >= 0");
    OrbitResult r;
    r.mode = ArithMode::Float;
    std::optional<FloatPoint> target2;
    if (doubling_center) target2 = FloatPoint{2 * doubling_center->x - seed.x, 2 * doubling_center->y - seed.y};
    FloatPoint p = seed;
    std::optional<FloatTau> ft;
    if (map.kind == MapKind::Tau || map.kind == MapKind::TauInverse) ft.emplace(map.N, map.kind == MapKind::TauInverse);
    int hint[2] = {0, map.N / 2};
    for (long long t = 1; t <= limit; ++t) {
        switch (map.kind) {
            case MapKind::Tau:
            case MapKind::TauInverse:
                if (ft->step(p, hint[t & 1]) != FloatTau::Status::Ok) {
                    r.iterations_used = t - 1;
                    r.terminated_by = Termination::Singular;
                    return r;
                }
                break;
            case MapKind::Df:
                p = df_step(p, map.theta);
                break;
            case MapKind::Dc:
                p = dc_step(p, map.N);
                break;
        }
        r.iterations_used = t;
        if (target2 && !r.half_period && inf_dist(p, *target2) < kReturnTol) r.half_period = t;
        if (inf_dist(p, seed) < kReturnTol) {
            r.period = t;
            r.terminated_by = Termination::Return;
            r.doubling = r.half_period && 2 * *r.half_period == t;
            return r;
        }
    }
    r.terminated_by = Termination::Limit;
    return r;
}

CandleResult candle_trace(const ExactPoint& seed, int N, long long iters, const Crop& crop) {
    CandleResult cr;
    cr.cloud.N = N;
    cr.cloud.crop = crop;
    cr.cloud.mode = ArithMode::Exact;
    cr.cloud.source = "candle";
    cr.orbit.mode = ArithMode::Exact;
    ExactTau et(N, seed);
    FloatPoint sf = seed.to_float();
    for (long long t = 1; t <= iters; ++t) {
        if (!et.step()) {
            cr.orbit.terminated_by = Termination::Singular;
            break;
        }
        cr.orbit.iterations_used = t;
        ++cr.cloud.total;
        FloatPoint q = et.rounded();
        if (crop.contains(q)) {
            cr.cloud.points.push_back(q);
            cr.visits.push_back(t);
            ++cr.cloud.recorded;
        }
        if (et.equals(seed, sf)) {
            cr.orbit.period = t;
            cr.orbit.terminated_by = Termination::Return;
            break;
        }
    }
    cr.cloud.budget = iters;
    return cr;
}

CandleResult candle_trace_float(FloatPoint seed, const MapSpec& map, long long iters, const Crop& crop) {
    CandleResult cr;
    cr.cloud.N = map.N;
    cr.cloud.map = map.kind;
    cr.cloud.crop = crop;
    cr.cloud.mode = ArithMode::Float;
    cr.cloud.source = "candle";
    cr.orbit.mode = ArithMode::Float;
    FloatPoint p = seed;
    std::optional<FloatTau> ft;
    if (map.kind == MapKind::Tau || map.kind == MapKind::TauInverse) ft.emplace(map.N, map.kind == MapKind::TauInverse);
    int hint[2] = {0, map.N / 2};
    for (long long t = 1; t <= iters; ++t) {
        if (ft) {
            if (ft->step(p, hint[t & 1]) != FloatTau::Status::Ok) {
                cr.orbit.terminated_by = Termination::Singular;
                break;
            }
        } else if (map.kind == MapKind::Df) {
            p = df_step(p, map.theta);
        } else {
            p = dc_step(p, map.N);
        }
        cr.orbit.iterations_used = t;
        ++cr.cloud.total;
        if (crop.contains(p)) {
            cr.cloud.points.push_back(p);
            cr.visits.push_back(t);
            ++cr.cloud.recorded;
        }
        if (inf_dist(p, seed) < kReturnTol) {
            cr.orbit.period = t;
            cr.orbit.terminated_by = Termination::Return;
            break;
        }
    }
    cr.cloud.budget = iters;
    return cr;
}

}  // namespace ow
