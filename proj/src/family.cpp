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

#include "outerweb/family.hpp"

#include <cmath>
#include <numeric>

#include "outerweb/errors.hpp"

namespace ow {

NGonSpec ngon_spec(int N) {
    if (N < 3) throw DomainError("N must be at least 3, got " + std::to_string(N));
    NGonSpec s;
    s.N = N;
    s.mod8 = N % 8;
    s.parity = (N % 2) ? ParityClass::Odd : (N % 4 == 2 ? ParityClass::TwiceOdd : ParityClass::TwiceEven);
    s.complexity = euler_phi(N) / 2;
    s.ambient_M = (N % 2) ? 2 * N : N;
    return s;
}

std::string parity_name(ParityClass p) {
    switch (p) {
        case ParityClass::Odd:
            return "odd";
        case ParityClass::TwiceOdd:
            return "twice-odd";
        case ParityClass::TwiceEven:
            return "twice-even";
    }
    return "?";
}

int context_conductor(int N) { return (N % 2) ? 4 * N : trig_conductor(N); }

std::string kind_name(TileKind k) {
    switch (k) {
        case TileKind::N:
            return "N";
        case TileKind::S:
            return "S";
        case TileKind::DS:
            return "DS";
        case TileKind::D:
            return "D";
        case TileKind::M:
            return "M";
        case TileKind::Volunteer:
            return "volunteer";
    }
    return "?";
}

CycloNum Tile::vertex_radius() const { return height / trig(gon, 1, TrigFn::Cos); }

std::vector<ExactPoint> Tile::vertices() const {
    CycloNum R = vertex_radius();
    mpq_class rot = rotation;
    rot.canonicalize();
    int q = static_cast<int>(rot.get_den().get_si());
    int p = static_cast<int>(rot.get_num().get_si());
    std::vector<ExactPoint> v;
    v.reserve(gon);
    for (int j = 0; j < gon; ++j) {
        // angle -pi/2 + phi, phi = ((2j+1) q + p) pi / (q m)
        int n = (2 * j + 1) * q + p;
        CycloNum s = trig(q * gon, n, TrigFn::Sin), c = trig(q * gon, n, TrigFn::Cos);
        v.push_back({center.x + R * s, center.y - R * c});
    }
    return v;
}

std::vector<FloatPoint> Tile::vertices_float() const {
    double cx = to_double(center.x), cy = to_double(center.y), h = to_double(height);
    double R = h / std::cos(M_PI / gon);
    double rot = rotation.get_d();
    std::vector<FloatPoint> v(gon);
    for (int j = 0; j < gon; ++j) {
        double phi = (2 * j + 1 + rot) * M_PI / gon;
        v[j] = {cx + R * std::sin(phi), cy - R * std::cos(phi)};
    }
    return v;
}

Tile make_tile(int gon, ExactPoint center, CycloNum height, TileKind kind, int index, std::string label) {
    if (gon < 3) throw DomainError("tile needs at least 3 sides");
    if (sign(height) <= 0) throw DomainError("tile height must be positive (" + label + ")");
    Tile t;
    t.gon = gon;
    t.center = std::move(center);
    t.height = std::move(height);
    t.kind = kind;
    t.index = index;
    t.label = std::move(label);
    return t;
}

Tile build_ngon(int N) {
    ngon_spec(N);
    int K = context_conductor(N);
    return make_tile(N, ExactPoint::origin(K), CycloNum(K, 1), TileKind::N, 0, "N");
}

CycloNum genscale(int N) {
    int K = context_conductor(N);
    switch (ngon_spec(N).parity) {
        case ParityClass::TwiceEven: {
            CycloNum t = tan_pi(N, 1);
            return (t * t).lift(K);
        }
        case ParityClass::Odd:
            return (tan_pi(N, 1) * tan_pi(2 * N, 1)).lift(K);
        case ParityClass::TwiceOdd:
            return (tan_pi(N / 2, 1) * tan_pi(N, 1)).lift(K);
    }
    return CycloNum(K);
}

Scales heights_and_scales(int N) {
    NGonSpec spec = ngon_spec(N);
    if (N < 5) throw DomainError("heights_and_scales needs N >= 5");
    Scales s;
    s.M = spec.ambient_M;
    int K = context_conductor(N);
    CycloNum t1 = tan_pi(s.M, 1).lift(K);
    s.hS.assign(s.M / 2, CycloNum(K));
    s.scale.assign(s.M / 2, CycloNum(K));
    for (int k = 1; k < s.M / 2; ++k) {
        CycloNum tk = tan_pi(s.M, k).lift(K);
        s.hS[k] = t1 * tk;
        s.scale[k] = t1 / tk;
    }
    s.genscale = genscale(N);
    return s;
}

StarPointTable star_points(const Tile& t) {
    StarPointTable tab;
    tab.gon = t.gon;
    tab.midpoint = t.base_midpoint();
    for (int k = 1; 2 * k < t.gon; ++k) {
        CycloNum off = t.height * tan_pi(t.gon, k);
        tab.right.push_back({tab.midpoint.x + off, tab.midpoint.y});
        tab.left.push_back({tab.midpoint.x - off, tab.midpoint.y});
    }
    return tab;
}

int member_gon(int m, int k) {
    if (m % 4 == 0) return m;
    if (m % 2 == 1) return (k % 2) ? m : 2 * m;
    return (k % 2) ? m / 2 : m;
}

Tile FamilyContext::member(int k, TileKind kind) const {
    if (k < 1 || 2 * k >= order) throw DomainError("family index out of range: " + std::to_string(k));
    int K = conductor;
    CycloNum ta = tan_pi(order, anchor).lift(K), tk = tan_pi(order, k).lift(K);
    const CycloNum& h = parent.height;
    CycloNum dx = h * (ta + tk);
    if (sigma < 0) dx = -dx;
    CycloNum dy = h * (ta * tk - mpq_class(1));
    std::string label = (kind == TileKind::DS ? "DS[" : "S[") + std::to_string(k) + "]";
    return make_tile(member_gon(order, k), {parent.center.x + dx, parent.center.y + dy}, h * ta * tk, kind, k,
                     label);
}

FamilyContext FamilyContext::mirrored() const {
    FamilyContext f = *this;
    f.sigma = -sigma;
    return f;
}

FamilyContext family_of(const Tile& parent, int order, int sigma, int anchor, int conductor) {
    FamilyContext f;
    f.parent = parent;
    f.order = order;
    f.anchor = anchor;
    f.sigma = sigma < 0 ? -1 : 1;
    f.conductor = conductor ? conductor : parent.height.conductor();
    f.parent.center = f.parent.center.lift(f.conductor);
    f.parent.height = f.parent.height.lift(f.conductor);
    return f;
}

FamilyContext first_family(int N) { return family_of(build_ngon(N), N, -1, 1, context_conductor(N)); }

Tile S2Family::ds(int k, int sigma) const { return (sigma > 0 ? right : left).member(k, TileKind::DS); }

S2Family s2_family(int N) {
    if (N < 5) throw DomainError("s2_family needs N >= 5");
    S2Family f;
    f.N = N;
    f.s2 = first_family(N).member(2);
    bool odd = N % 2;
    int order = odd ? 2 * N : N;
    int anchor = odd ? 2 : 1;
    f.left = family_of(f.s2, order, -1, anchor, context_conductor(N));
    f.right = family_of(f.s2, order, +1, anchor, context_conductor(N));
    return f;
}

std::vector<int> predicted_ds(int N) {
    if (N < 10) throw DomainError("predicted_ds needs N >= 10");
    std::vector<int> out;
    int start = (N % 2) ? N - 4 : N / 2 - 2;
    int step = (N % 2) ? 8 : 4;
    for (int v = start; v >= 1; v -= step) out.push_back(v);
    return out;
}

namespace {

int k_prime_for(int N, int k, TileClass cls) {
    bool even_cls = cls == TileClass::SofEvenN || cls == TileClass::DSofEvenN;
    if (even_cls && N % 2) throw DomainError("even-N tile class used with odd N");
    if (!even_cls && N % 2 == 0) throw DomainError("odd-N tile class used with even N");
    if (k < 1) throw DomainError("tile index must be positive");
    switch (cls) {
        case TileClass::SofEvenN:
        case TileClass::DSofEvenN:
            return N / 2 - k;
        case TileClass::SofOddN:
            return N - 2 * k;
        case TileClass::DSofOddN:
            return N - k;
    }
    return 0;
}

}  // namespace

WebStep web_step(int N, int k, TileClass cls) {
    WebStep w;
    w.k_prime = k_prime_for(N, k, cls);
    if (w.k_prime > 0) w.reduced_step = ngon_spec(N).ambient_M % w.k_prime;
    return w;
}

std::optional<MutationSpec> mutation_spec(int N, int k, TileClass cls) {
    int kp = k_prime_for(N, k, cls);
    if (kp <= 0) return std::nullopt;
    int Mp = 0, threshold = 2;
    switch (cls) {
        case TileClass::SofEvenN:
        case TileClass::DSofEvenN:
            if (N % 4 == 2 && k % 2 == 1) {
                Mp = N / 2;  // N/2-gon tiles of twice-odd N
                threshold = 1;
            } else {
                Mp = N;
            }
            break;
        case TileClass::SofOddN:
            Mp = N;
            threshold = 1;
            break;
        case TileClass::DSofOddN:
            Mp = 2 * N;
            break;
    }
    int g = std::gcd(Mp, kp);
    if (g <= threshold) return std::nullopt;
    MutationSpec m;
    m.ambient = Mp;
    m.k_prime = kp;
    m.weave_gon = Mp / g;
    m.base_span = g;
    if (N % 2 == 0) {
        m.star_units = N;
        m.min_star_index = (N / 2 - 1) % kp;
        m.rule_variant = "even:N/2-1-jk'";
    } else {
        m.star_units = 2 * N;
        int best = N - 2;
        for (int v = N - 2;; v -= kp) {
            best = std::min(best, std::abs(v));
            if (v < 0) break;
        }
        m.min_star_index = best;
        m.rule_variant = "odd:|N-2-jk'|";
    }
    m.other_star_index = g * (m.star_units / Mp) - m.min_star_index;
    return m;
}

Weave weave(const MutationSpec& spec, const Tile& underlying) {
    if (spec.weave_gon < 3 || spec.base_span < 1 || spec.star_units < 1)
        throw DegenerateWeave("mutation spec does not describe a weave");
    int U = spec.star_units;
    int span_u = spec.base_span * (U / spec.ambient);
    int a = spec.min_star_index, b = spec.other_star_index;
    if (a + b != span_u) throw DegenerateWeave("star indices do not add up to the base span");
    Weave w;
    const ExactPoint& c = underlying.center;
    const CycloNum& h = underlying.height;
    CycloNum ra = h / trig(U, a, TrigFn::Cos);
    CycloNum rb = h / trig(U, b, TrigFn::Cos);
    int m = spec.weave_gon;
    for (int j = 0; j < m; ++j) {
        // Component A starts at right-side star[a], component B at left-side star[b].
        int na = a + 2 * j * span_u;
        int nb = -b + 2 * (j + 1) * span_u;
        w.component_a.push_back({c.x + ra * trig(U, na, TrigFn::Sin), c.y - ra * trig(U, na, TrigFn::Cos)});
        w.component_b.push_back({c.x + rb * trig(U, nb, TrigFn::Sin), c.y - rb * trig(U, nb, TrigFn::Cos)});
    }
    for (int j = 0; j < m; ++j) {
        w.boundary.push_back(w.component_a[j]);
        w.boundary.push_back(w.component_b[j]);
    }
    return w;
}

std::vector<LadderPoint> dk_ladder(int N, int k_max) {
    if (N % 4 != 2) throw NotTwiceOdd("dk_ladder needs N = 2 mod 4, got " + std::to_string(N));
    if (k_max < 1) throw DomainError("k_max must be positive");
    int K = context_conductor(N);
    FamilyContext ff = first_family(N);
    Tile s1 = ff.member(1), s2 = ff.member(2);
    CycloNum G = genscale(N);
    CycloNum hS2 = s2.height;
    ExactPoint x0{s2.center.x + hS2 * tan_pi(N, 1).lift(K), CycloNum(K, -1)};
    CycloNum cslope = (x0.y - s1.center.y) / (x0.x - s1.center.x);
    CycloNum inv_slope = CycloNum(K, 1) / cslope;

    std::vector<LadderPoint> out;
    CycloNum Gp(K, 1);  // G^(k-1)
    ExactPoint prev_cD = ExactPoint::origin(K);
    CycloNum prev_hD(K, 1);
    for (int k = 1; k <= k_max; ++k) {
        LadderPoint lp;
        lp.k = k;
        lp.genscale_power = k - 1;
        if (k == 1) {
            lp.cD = s2.center;
        } else {
            CycloNum off = hS2 * Gp;
            lp.cD = {x0.x + off * inv_slope, off - mpq_class(1)};
        }
        lp.hD = G * Gp;
        lp.cM = prev_cD + s1.center * prev_hD;
        out.push_back(lp);
        prev_cD = lp.cD;
        prev_hD = lp.hD;
        Gp *= G;
    }
    return out;
}

CycloNum two_star_solve(int M, int j_low, int j_high, const CycloNum& d) {
    if (j_low == j_high) throw EqualStarIndices("two_star_solve needs distinct star indices");
    if (j_low < 1 || j_low > j_high || 2 * j_high >= M)
        throw DomainError("two_star_solve needs 1 <= j_low < j_high < M/2");
    return d / (tan_pi(M, j_high) - tan_pi(M, j_low));
}

long sk_period(int N, int k) {
    if (k < 1 || 2 * k >= N) throw DomainError("sk_period needs 1 <= k < N/2");
    return N / std::gcd(N, k);
}

}  // namespace ow
