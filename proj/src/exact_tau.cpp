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

#include <algorithm>
#include <cmath>

#include "outerweb/dynamics.hpp"
#include "outerweb/errors.hpp"

namespace ow {

namespace {

constexpr double kUnit = 1.1102230246251565e-16;  // 2^-53
constexpr long kResyncBits = 320;
constexpr double kResyncAt = 1e-11;

double max_abs(const FloatPoint& p) { return std::max(std::fabs(p.x), std::fabs(p.y)); }

}  // namespace

ExactTau::ExactTau(int N, const ExactPoint& seed, bool inverse)
    : N_(N), inverse_(inverse), ftau_(N, inverse), seedbx_(kResyncBits), seedby_(kResyncBits), m_(N, 0) {
    int K = context_conductor(N);
    int L = static_cast<int>(lcm_int(lcm_int(K, seed.x.conductor()), seed.y.conductor()));
    seed_ = seed.lift(L);
    vx_ = build_ngon(N).vertices();
    for (auto& v : vx_) {
        v = v.lift(L);
        vbx_.push_back(to_float(v.x, 90));
        vby_.push_back(to_float(v.y, 90));
        FloatPoint f = v.to_float();
        vmax_ = std::max(vmax_, max_abs(f));
    }
    // Float vertices are within one ulp of the exact ones.
    vdelta_ = 2 * kUnit * vmax_ + 1e-300;
    seedbx_ = seed_.x.is_zero() ? BigFloat(kResyncBits) : to_float(seed_.x, 90);
    seedby_ = seed_.y.is_zero() ? BigFloat(kResyncBits) : to_float(seed_.y, 90);
    resync();
    FloatTau::Status st;
    int j = ftau_.support(pf_, 0, &st);
    hint_[0] = j < 0 ? 0 : j;
    hint_[1] = (hint_[0] + N / 2) % N;
}

void ExactTau::resync() {
    BigFloat ax(kResyncBits), ay(kResyncBits), t(kResyncBits);
    for (int j = 0; j < N_; ++j) {
        if (m_[j] == 0) continue;
        mpfr_mul_si(t.raw(), vbx_[j].raw(), static_cast<long>(m_[j]), MPFR_RNDN);
        mpfr_add(ax.raw(), ax.raw(), t.raw(), MPFR_RNDN);
        mpfr_mul_si(t.raw(), vby_[j].raw(), static_cast<long>(m_[j]), MPFR_RNDN);
        mpfr_add(ay.raw(), ay.raw(), t.raw(), MPFR_RNDN);
    }
    mpfr_mul_2ui(ax.raw(), ax.raw(), 1, MPFR_RNDN);
    mpfr_mul_2ui(ay.raw(), ay.raw(), 1, MPFR_RNDN);
    mpfr_add(ax.raw(), ax.raw(), seedbx_.raw(), MPFR_RNDN);
    mpfr_add(ay.raw(), ay.raw(), seedby_.raw(), MPFR_RNDN);
    if (s_ < 0) {
        mpfr_neg(ax.raw(), ax.raw(), MPFR_RNDN);
        mpfr_neg(ay.raw(), ay.raw(), MPFR_RNDN);
    }
    pf_ = {ax.to_double(), ay.to_double()};
    err_ = kUnit * max_abs(pf_) + 1e-200;
}

FloatPoint ExactTau::rounded() const {
    ExactTau& self = const_cast<ExactTau&>(*this);
    FloatPoint keep = pf_;
    double keep_err = err_;
    self.resync();
    FloatPoint r = pf_;
    self.pf_ = keep;
    self.err_ = keep_err;
    return r;
}

ExactPoint ExactTau::exact() const {
    int K = seed_.x.conductor();
    ExactPoint acc = ExactPoint::origin(K);
    for (int j = 0; j < N_; ++j)
        if (m_[j] != 0) acc = acc + vx_[j] * mpq_class(static_cast<long>(2 * m_[j]));
    acc = acc + seed_;
    return s_ > 0 ? acc : -acc;
}

bool ExactTau::equals(const ExactPoint& q, const FloatPoint& qf) const {
    double tol = err_ + 4 * kUnit * (max_abs(qf) + 1) + 1e-300;
    if (std::fabs(pf_.x - qf.x) > tol || std::fabs(pf_.y - qf.y) > tol) return false;
    return exact() == q;
}

int ExactTau::choose_vertex_exact() {
    ++fallbacks_;
    ExactPoint P = exact();
    int n = N_;
    int j = ftau_.support(pf_, hint_[t_ & 1]);
    if (j < 0) j = hint_[t_ & 1];
    int want = inverse_ ? -1 : 1;
    for (int it = 0; it < 2 * n + 2; ++it) {
        int o1 = ow::sign(orient(P, vx_[j], vx_[(j + 1) % n])) * want;
        int o2 = ow::sign(orient(P, vx_[j], vx_[(j + n - 1) % n])) * want;
        if (o1 < 0) {
            j = (j + 1) % n;
            continue;
        }
        if (o2 < 0) {
            j = (j + n - 1) % n;
            continue;
        }
        if (o1 == 0 || o2 == 0) return -1;
        return j;
    }
    throw InsidePolygon("point lies inside the polygon");
}

int ExactTau::choose_vertex() {
    int j = ftau_.support(pf_, hint_[t_ & 1]);
    if (j < 0) return choose_vertex_exact();
    const auto& v = ftau_.vertices();
    const FloatPoint& a = v[j];
    const FloatPoint& b = v[(j + 1) % N_];
    const FloatPoint& c = v[(j + N_ - 1) % N_];
    double ec = err_ + vdelta_ + 2 * kUnit * (vmax_ + max_abs(pf_));
    auto certified = [&](const FloatPoint& w) {
        double ax = a.x - pf_.x, ay = a.y - pf_.y, bx = w.x - pf_.x, by = w.y - pf_.y;
        double o = ax * by - ay * bx;
        if (inverse_) o = -o;
        double bound = ec * (std::fabs(ax) + std::fabs(ay) + std::fabs(bx) + std::fabs(by)) + 2 * ec * ec +
                       4 * kUnit * (std::fabs(ax * by) + std::fabs(ay * bx));
        return o > 1.01 * bound;
    };
    if (certified(b) && certified(c)) return j;
    return choose_vertex_exact();
}

bool ExactTau::step() {
    int j = choose_vertex();
    if (j < 0) return false;
    hint_[t_ & 1] = j;
    s_ = -s_;
    m_[j] += s_;
    const FloatPoint& v = ftau_.vertices()[j];
    pf_ = {2 * v.x - pf_.x, 2 * v.y - pf_.y};
    err_ += 2 * vdelta_ + 2 * kUnit * (max_abs(pf_) + 2 * vmax_);
    ++t_;
    if (err_ > kResyncAt) resync();
    return true;
}

OrbitResult find_period(const ExactPoint& seed, int N, long long limit,
                        const std::optional<ExactPoint>& doubling_center, bool inverse) {
    if (limit < 0) throw DomainError("limit must be >= 0");
    OrbitResult r;
    r.mode = ArithMode::Exact;
    ExactTau et(N, seed, inverse);
    ExactPoint target = seed;
    FloatPoint tf = seed.to_float();
    std::optional<ExactPoint> target2;
    FloatPoint t2f;
    if (doubling_center) {
        target2 = *doubling_center * mpq_class(2) - seed;
        t2f = target2->to_float();
    }
    for (long long t = 1; t <= limit; ++t) {
        if (!et.step()) {
            r.iterations_used = t - 1;
            r.terminated_by = Termination::Singular;
            return r;
        }
        r.iterations_used = t;
        if (target2 && !r.half_period && et.equals(*target2, t2f)) r.half_period = t;
        if (et.equals(target, tf)) {
            r.period = t;
            r.terminated_by = Termination::Return;
            r.doubling = r.half_period && 2 * *r.half_period == t;
            return r;
        }
    }
    r.terminated_by = Termination::Limit;
    return r;
}

}  // namespace ow
