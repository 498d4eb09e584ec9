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

#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "catch_amalgamated.hpp"
#include "outerweb/errors.hpp"
#include "outerweb/family.hpp"

using namespace ow;

namespace {

const long double kPiL = 3.141592653589793238462643383279502884L;

long double tanl_pi(int M, int k) { return std::tan(static_cast<long double>(k) * kPiL / M); }

bool same_point(const ExactPoint& a, const ExactPoint& b) { return a == b; }

CycloNum sq_dist(const ExactPoint& a, const ExactPoint& b) {
    CycloNum dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace

TEST_CASE("ngon_spec fields") {
    auto s = ngon_spec(26);
    CHECK(s.parity == ParityClass::TwiceOdd);
    CHECK(s.complexity == 6);
    CHECK(s.ambient_M == 26);
    auto o = ngon_spec(33);
    CHECK(o.parity == ParityClass::Odd);
    CHECK(o.ambient_M == 66);
    CHECK(ngon_spec(32).parity == ParityClass::TwiceEven);
    for (int N = 5; N <= 60; ++N) {
        CHECK(ngon_spec(N).complexity * 2 == euler_phi(N));
        CHECK(ngon_spec(N).ambient_M % 2 == 0);
    }
    CHECK_THROWS_AS(ngon_spec(2), DomainError);
}

TEST_CASE("build_ngon(4) is the apothem-1 square") {
    Tile sq = build_ngon(4);
    auto v = sq.vertices();
    REQUIRE(v.size() == 4);
    std::set<std::pair<int, int>> seen;
    for (const auto& p : v) {
        REQUIRE(p.x.is_rational());
        REQUIRE(p.y.is_rational());
        mpq_class x = p.x.coeffs()[0], y = p.y.coeffs()[0];
        CHECK(abs(x) == 1);
        CHECK(abs(y) == 1);
        seen.insert({static_cast<int>(x.get_d()), static_cast<int>(y.get_d())});
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("build_ngon vertex radius") {
    Tile t = build_ngon(26);
    CHECK(to_double(t.vertex_radius()) == Catch::Approx(1.007344).margin(5e-7));
    long double r = 1.0L / std::cos(kPiL / 26);
    for (const auto& p : t.vertices_float())
        CHECK(std::hypot(p.x, p.y) == Catch::Approx(static_cast<double>(r)).margin(1e-14));
    for (const auto& p : t.vertices()) CHECK(p.x * p.x + p.y * p.y == t.vertex_radius() * t.vertex_radius());
}

TEST_CASE("build_ngon(34) has a vertex at 3:00") {
    Tile t = build_ngon(34);
    int hits = 0;
    for (const auto& p : t.vertices()) {
        if (p.y.is_zero() && p.x == t.vertex_radius()) ++hits;
    }
    CHECK(hits == 1);
    CHECK(to_double(t.vertex_radius()) == Catch::Approx(1.0 / std::cos(M_PI / 34)).epsilon(1e-15));
}

TEST_CASE("heights_and_scales spot values") {
    auto s36 = heights_and_scales(36);
    CHECK(to_double(s36.scale[4] / s36.scale[2]) == Catch::Approx(0.484).margin(5e-4));
    CHECK(to_double(s36.scale[4] / s36.scale[2]) ==
          Catch::Approx(static_cast<double>(tanl_pi(36, 2) / tanl_pi(36, 4))).epsilon(1e-14));
    auto s98 = heights_and_scales(98);
    // scale[2] = (1 - tan^2(pi/98)) / 2 = 0.4994858...
    CHECK(to_double(s98.scale[2]) == Catch::Approx(static_cast<double>(tanl_pi(98, 1) / tanl_pi(98, 2))).epsilon(1e-14));
    CHECK(to_double(s98.scale[2]) == Catch::Approx(0.4994858).margin(5e-8));
    // The N=98 context is the S[2]-relative family of N=49.
    auto s49 = heights_and_scales(49);
    CHECK(s49.M == 98);
    CHECK(s49.scale[2] == s98.scale[2]);
    CHECK(to_double(s49.hS[3]) == Catch::Approx(static_cast<double>(tanl_pi(98, 1) * tanl_pi(98, 3))).epsilon(1e-15));
}

TEST_CASE("hS[1] equals GenScale for twice-even N") {
    for (int N : {32, 36, 40, 44, 48}) {
        auto s = heights_and_scales(N);
        CHECK(s.hS[1] == s.genscale);
    }
}

TEST_CASE("GenScale per parity class") {
    CHECK(to_double(genscale(22)) == Catch::Approx(0.042217).margin(5e-7));
    CHECK(to_double(genscale(26)) == Catch::Approx(static_cast<double>(tanl_pi(13, 1) * tanl_pi(26, 1))).epsilon(1e-15));
    CHECK(to_double(genscale(33)) == Catch::Approx(static_cast<double>(tanl_pi(33, 1) * tanl_pi(66, 1))).epsilon(1e-15));
    CHECK(to_double(genscale(40)) == Catch::Approx(static_cast<double>(tanl_pi(40, 1) * tanl_pi(40, 1))).epsilon(1e-15));
    // Twice-odd: GenScale = hS[2].
    for (int N : {26, 30, 34, 38, 42, 46, 50}) CHECK(genscale(N) == heights_and_scales(N).hS[2]);
}

TEST_CASE("hS[k] = hS[1] / scale[k] exactly for N in 26..50") {
    for (int N = 26; N <= 50; ++N) {
        auto s = heights_and_scales(N);
        for (int k = 1; k < s.M / 2; ++k) {
            CHECK(s.hS[k] == s.hS[1] / s.scale[k]);
            CHECK(to_double(s.hS[k]) ==
                  Catch::Approx(static_cast<double>(tanl_pi(s.M, 1) * tanl_pi(s.M, k))).epsilon(1e-14));
        }
    }
}

TEST_CASE("star points") {
    for (int N = 26; N <= 50; ++N) {
        Tile n = build_ngon(N);
        auto tab = star_points(n);
        REQUIRE(static_cast<int>(tab.right.size()) == (N - 1) / 2);
        CHECK(tab.right[0].x - tab.midpoint.x == tan_pi(N, 1).lift(tab.right[0].x.conductor()));
        for (size_t k = 1; k < tab.right.size(); ++k) {
            CHECK(sign(tab.right[k].x - tab.right[k - 1].x) == 1);
            CHECK(sign(tab.left[k - 1].x - tab.left[k].x) == 1);
            CHECK(tab.right[k].y == tab.midpoint.y);
        }
    }
}

TEST_CASE("N=44 DS[4] star gap and the two-star height") {
    S2Family f = s2_family(44);
    Tile ds4 = f.ds(4);
    auto tab = star_points(ds4);
    // Gap between star[3] and star[21] of DS[4]; the two-star solve over
    // indices (1, 19) gives the Px height printed as 0.000656836.
    CycloNum gap = tab.right[20].x - tab.right[2].x;
    CycloNum hpx = two_star_solve(44, 1, 19, gap);
    CHECK(to_double(hpx) == Catch::Approx(0.000656836).margin(5e-10));
    CHECK(sign(gap) == 1);
}

TEST_CASE("member_gon rule") {
    CHECK(member_gon(32, 1) == 32);
    CHECK(member_gon(32, 2) == 32);
    CHECK(member_gon(26, 1) == 13);
    CHECK(member_gon(26, 2) == 26);
    CHECK(member_gon(33, 1) == 33);
    CHECK(member_gon(33, 2) == 66);
}

TEST_CASE("First Family members are tangent to the base line") {
    for (int N : {26, 33, 40}) {
        auto ff = first_family(N);
        for (int k = 1; k <= ff.max_index(); ++k) {
            Tile t = ff.member(k);
            CHECK(t.center.y - t.height == CycloNum(t.center.y.conductor(), -1));
            // The S[k] right vertex on the base line is the N-gon's left star[k].
            auto v = t.vertices();
            CHECK(sign(t.height) == 1);
            CHECK(t.gon == member_gon(N, k));
            (void)v;
        }
    }
}

TEST_CASE("s2_family: D[2] of N=26 has height hS[2]^2") {
    S2Family f = s2_family(26);
    CycloNum hS2 = first_family(26).member(2).height;
    CHECK(f.ds(2, -1).height == hS2 * hS2);
    CHECK(f.ds(2, +1).height == hS2 * hS2);
}

TEST_CASE("s2_family: N=34 right-side DS[15] coincides with S[1]") {
    S2Family f = s2_family(34);
    Tile ds15 = f.ds(15, +1);
    Tile s1 = first_family(34).member(1);
    CHECK(same_point(ds15.center, s1.center));
    CHECK(ds15.height == s1.height);
    CHECK(ds15.gon == s1.gon);
}

TEST_CASE("s2_family: odd N right-side DS[N-4] coincides with S[1]") {
    for (int N : {25, 31, 33, 41, 49}) {
        S2Family f = s2_family(N);
        Tile ds = f.ds(N - 4, +1);
        Tile s1 = first_family(N).member(1);
        CHECK(same_point(ds.center, s1.center));
        CHECK(ds.height == s1.height);
    }
}

TEST_CASE("predicted_ds") {
    CHECK(predicted_ds(48) == std::vector<int>{22, 18, 14, 10, 6, 2});
    CHECK(predicted_ds(31) == std::vector<int>{27, 19, 11, 3});
    CHECK(predicted_ds(30) == std::vector<int>{13, 9, 5, 1});
    for (int N = 10; N <= 60; ++N) {
        auto v = predicted_ds(N);
        REQUIRE(!v.empty());
        CHECK(v.front() == (N % 2 ? N - 4 : N / 2 - 2));
        for (size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] - v[i] == (N % 2 ? 8 : 4));
        CHECK(v.back() >= 1);
    }
    CHECK_THROWS_AS(predicted_ds(9), DomainError);
}

TEST_CASE("web_step") {
    auto a = web_step(33, 5, TileClass::DSofOddN);
    CHECK(a.k_prime == 28);
    CHECK(a.reduced_step == 10);
    auto b = web_step(47, 19, TileClass::DSofOddN);
    CHECK(b.k_prime == 28);
    CHECK(b.reduced_step == 10);
    CHECK(web_step(48, 22, TileClass::DSofEvenN).k_prime == 2);
    CHECK(web_step(39, 3, TileClass::SofOddN).k_prime == 33);
    CHECK(web_step(40, 4, TileClass::SofEvenN).k_prime == 16);
    CHECK_THROWS_AS(web_step(33, 5, TileClass::DSofEvenN), DomainError);
}

TEST_CASE("mutation_spec examples") {
    auto m28 = mutation_spec(28, 2, TileClass::SofEvenN);
    REQUIRE(m28);
    CHECK(m28->k_prime == 12);
    CHECK(m28->weave_gon == 7);
    CHECK(m28->base_span == 4);

    auto m33 = mutation_spec(33, 21, TileClass::DSofOddN);
    REQUIRE(m33);
    CHECK(m33->k_prime == 12);
    CHECK(m33->weave_gon == 11);
    CHECK(m33->base_span == 6);

    auto m42 = mutation_spec(42, 3, TileClass::SofEvenN);
    REQUIRE(m42);
    CHECK(m42->k_prime == 18);
    CHECK(m42->weave_gon == 7);
    CHECK(m42->min_star_index == 2);

    auto m49 = mutation_spec(49, 21, TileClass::DSofOddN);
    REQUIRE(m49);
    CHECK(m49->min_star_index == 9);

    auto m40 = mutation_spec(40, 4, TileClass::SofEvenN);
    REQUIRE(m40);
    CHECK(m40->weave_gon == 5);
    CHECK(m40->min_star_index == 3);
    CHECK(m40->other_star_index == 5);

    CHECK_FALSE(mutation_spec(28, 1, TileClass::SofEvenN));
    for (int N = 26; N <= 50; ++N) {
        for (int k = 1; k < N / 2; ++k) {
            TileClass cls = N % 2 ? TileClass::DSofOddN : TileClass::DSofEvenN;
            auto m = mutation_spec(N, k, cls);
            if (!m) continue;
            CHECK(m->weave_gon >= 3);
            CHECK(m->base_span * m->weave_gon == m->ambient);
            CHECK(m->min_star_index + m->other_star_index == m->base_span * m->star_units / m->ambient);
        }
    }
}

TEST_CASE("mutation_spec against the named instances") {
    struct Case {
        int N, k;
        TileClass cls;
        int gon;
    };
    const TileClass SE = TileClass::SofEvenN, DE = TileClass::DSofEvenN, DO = TileClass::DSofOddN;
    std::vector<Case> cases = {
        {28, 2, SE, 7},   {30, 5, DE, 3},   {30, 9, DE, 5},   {32, 4, SE, 8},  {32, 8, SE, 4},  {33, 21, DO, 11},
        {35, 7, DO, 5},   {35, 15, DO, 7},  {36, 12, DE, 6},  {36, 3, SE, 12}, {39, 3, DO, 13}, {39, 27, DO, 13},
        {40, 4, SE, 5},   {40, 12, SE, 5},  {40, 10, DE, 4},  {42, 3, SE, 7},  {42, 7, SE, 3},  {42, 3, DE, 7},
        {42, 7, DE, 3},   {42, 15, DE, 7},  {48, 3, SE, 16},  {48, 4, SE, 12}, {48, 18, DE, 8}, {49, 21, DO, 7},
        {50, 15, DE, 5},
    };
    for (const auto& c : cases) {
        INFO("N=" << c.N << " k=" << c.k);
        auto m = mutation_spec(c.N, c.k, c.cls);
        REQUIRE(m);
        CHECK(m->weave_gon == c.gon);
    }
    // k' = 13 is prime to 44, so the uniform rule leaves N=44 DS[9] unmutated;
    // at N=45 (k' = 36) it gives a pentagon weave spanning 18 star points.
    CHECK_FALSE(mutation_spec(44, 9, DE));
    auto m45 = mutation_spec(45, 9, DO);
    REQUIRE(m45);
    CHECK(m45->weave_gon == 5);
    CHECK(m45->base_span == 18);
    CHECK(m45->min_star_index == 7);
}

TEST_CASE("weave is equilateral") {
    for (int N = 26; N <= 50; ++N) {
        TileClass cls = N % 2 ? TileClass::DSofOddN : TileClass::DSofEvenN;
        S2Family f = s2_family(N);
        for (int k = 1; k < N / 2; ++k) {
            auto m = mutation_spec(N, k, cls);
            if (!m) continue;
            Tile t = f.ds(k, +1);
            Weave w = weave(*m, t);
            REQUIRE(static_cast<int>(w.boundary.size()) == 2 * m->weave_gon);
            CycloNum e0 = sq_dist(w.boundary[0], w.boundary[1]);
            for (size_t i = 1; i < w.boundary.size(); ++i)
                CHECK(sq_dist(w.boundary[i], w.boundary[(i + 1) % w.boundary.size()]) == e0);
            CHECK(sign(e0) == 1);
        }
    }
}

TEST_CASE("weave of N=33 DS[21] is a 22-vertex equilateral outline") {
    auto m = mutation_spec(33, 21, TileClass::DSofOddN);
    REQUIRE(m);
    Weave w = weave(*m, s2_family(33).ds(21));
    CHECK(w.boundary.size() == 22);
    CHECK(w.component_a.size() == 11);
    CHECK(w.component_b.size() == 11);
}

TEST_CASE("weave with identical components is a regular polygon") {
    MutationSpec m;
    m.ambient = 12;
    m.k_prime = 4;
    m.weave_gon = 3;
    m.base_span = 4;
    m.star_units = 12;
    m.min_star_index = 2;
    m.other_star_index = 2;
    Tile t = build_ngon(12);
    Weave w = weave(m, t);
    REQUIRE(w.boundary.size() == 6);
    CycloNum r0 = sq_dist(w.boundary[0], t.center);
    CycloNum e0 = sq_dist(w.boundary[0], w.boundary[1]);
    for (size_t i = 0; i < 6; ++i) {
        CHECK(sq_dist(w.boundary[i], t.center) == r0);
        CHECK(sq_dist(w.boundary[i], w.boundary[(i + 1) % 6]) == e0);
    }
    m.other_star_index = 3;
    CHECK_THROWS_AS(weave(m, t), DegenerateWeave);
}

TEST_CASE("dk_ladder structure") {
    for (int N : {26, 34, 50}) {
        auto L = dk_ladder(N, 5);
        auto ff = first_family(N);
        Tile s1 = ff.member(1), s2 = ff.member(2);
        CycloNum G = genscale(N);
        CHECK(L[0].cD == s2.center);
        CHECK(L[0].cM == s1.center);
        int K = s2.center.x.conductor();
        ExactPoint star1{s2.center.x + s2.height * tan_pi(N, 1).lift(K), CycloNum(K, -1)};
        for (size_t i = 0; i < L.size(); ++i) {
            CHECK(L[i].genscale_power == static_cast<int>(i));
            if (i > 0) {
                CHECK(L[i].hD == L[i - 1].hD * G);
                CHECK(L[i].cD.y + mpq_class(1) == (L[i - 1].cD.y + mpq_class(1)) * G);
            }
            if (i >= 1) CHECK(orient(s1.center, star1, L[i].cD).is_zero());
        }
    }
    CHECK_THROWS_AS(dk_ladder(28, 3), NotTwiceOdd);
    CHECK_THROWS_AS(dk_ladder(33, 3), NotTwiceOdd);
}

TEST_CASE("cD[2] from the S[2] family matches the ladder") {
    for (int N : {26, 34, 50}) {
        auto L = dk_ladder(N, 2);
        S2Family f = s2_family(N);
        Tile d2 = f.right.member(2, TileKind::D);
        CHECK(d2.center == L[1].cD);
        CHECK(d2.height == L[1].hD);
    }
}

TEST_CASE("two_star_solve") {
    CycloNum d = tan_pi(28, 11) - tan_pi(28, 1);
    CHECK(two_star_solve(28, 1, 11, d) == CycloNum(d.conductor(), 1));
    CHECK(two_star_solve(28, 1, 11, CycloNum(56)).is_zero());
    CHECK_THROWS_AS(two_star_solve(28, 3, 3, d), EqualStarIndices);
    CHECK_THROWS_AS(two_star_solve(28, 5, 3, d), DomainError);
    CHECK_THROWS_AS(make_tile(28, ExactPoint::origin(56), CycloNum(56), TileKind::Volunteer, 0, "Px"), DomainError);
}

TEST_CASE("sk_period") {
    CHECK(sk_period(26, 2) == 13);
    CHECK(sk_period(46, 2) == 23);
    for (int N = 5; N <= 60; ++N)
        for (int k = 1; 2 * k < N; ++k) {
            CHECK(sk_period(N, k) == N / std::gcd(N, k));
            if (N % k == 0) CHECK(sk_period(N, k) == N / k);
        }
    CHECK_THROWS_AS(sk_period(26, 13), DomainError);
}
