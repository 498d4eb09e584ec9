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

#include <random>

#include "catch_amalgamated.hpp"
#include "outerweb/errors.hpp"
#include "outerweb/family.hpp"
#include "outerweb/fieldid.hpp"
#include "outerweb/volunteers.hpp"

using namespace ow;

namespace {

// Independent oracle: solve sum c_i g^i = v for rational c_i by Gaussian
// elimination on the power-basis coordinates.
std::optional<RationalPoly> solve_in_powers(const CycloNum& v, const CycloNum& g, int d) {
    int K = static_cast<int>(lcm_int(v.conductor(), g.conductor()));
    std::vector<std::vector<mpq_class>> cols;
    CycloNum p(K, 1);
    CycloNum gl = g.lift(K);
    for (int i = 0; i <= d; ++i) {
        cols.push_back(p.coeffs());
        p *= gl;
    }
    std::vector<mpq_class> rhs = v.lift(K).coeffs();
    const int rows = static_cast<int>(rhs.size());
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(d + 2));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c <= d; ++c) a[r][c] = cols[c][r];
        a[r][d + 1] = rhs[r];
    }
    int row = 0;
    std::vector<int> pivcol;
    for (int c = 0; c <= d && row < rows; ++c) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[row][c];
            for (int k = c; k <= d + 1; ++k) a[r][k] -= f * a[row][k];
        }
        pivcol.push_back(c);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (a[r][d + 1] != 0) return std::nullopt;
    std::vector<mpq_class> c(d + 1, 0);
    for (int i = 0; i < row; ++i) c[pivcol[i]] = a[i][d + 1] / a[i][pivcol[i]];
    return RationalPoly(c);
}

IdentifiedPoly run(const CycloNum& v, const CycloNum& g, int d) {
    IdentifyRequest r;
    r.value = v;
    r.generator = g;
    r.degree = d;
    return identify(r);
}

RationalPoly poly(std::initializer_list<const char*> c) {
    std::vector<mpq_class> v;
    for (auto* s : c) v.emplace_back(s);
    for (auto& x : v) x.canonicalize();
    return RationalPoly(v);
}

bool denominators_are_powers_of_two(const RationalPoly& p) {
    for (const auto& c : p.coeffs()) {
        mpz_class d = c.get_den();
        if (mpz_popcount(d.get_mpz_t()) != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("eval_poly") {
    CycloNum g = genscale(26);
    CHECK(eval_poly(RationalPoly(), g).is_zero());
    CHECK(eval_poly(poly({"0", "1"}), g) == g);
    CHECK(eval_poly(poly({"1/2", "0", "3"}), g) == g * g * mpq_class(3) + mpq_class(1, 2));
}

TEST_CASE("identify the generator itself") {
    for (int N : {26, 28, 36}) {
        CycloNum g = genscale(N);
        auto r = run(g, g, euler_phi(N) / 2 - 1);
        CHECK(r.poly == poly({"0", "1"}));
        CHECK(r.verified_exact);
    }
}

TEST_CASE("identify round-trips random field elements") {
    std::mt19937_64 rng(2026);
    for (int N : {26, 28, 36}) {
        CycloNum g = genscale(N);
        int d = euler_phi(N) / 2 - 1;
        for (int i = 0; i < 50; ++i) {
            std::vector<mpq_class> c(d + 1);
            for (auto& x : c) {
                x = mpq_class(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 64) + 1);
                x.canonicalize();
            }
            RationalPoly p(c);
            CycloNum v = eval_poly(p, g);
            auto r = run(v, g, d);
            CHECK(r.poly == p);
            CHECK(eval_poly(r.poly, g) == v);
            CHECK(r.verified_exact);
        }
    }
}

TEST_CASE("identify is deterministic") {
    CycloNum v = q_height_n36();
    CycloNum g = genscale(36);
    auto a = run(v, g, 5), b = run(v, g, 5);
    CHECK(a.poly == b.poly);
    CHECK(a.digits_used == b.digits_used);
}

TEST_CASE("N=28 Px") {
    CycloNum g = genscale(28);
    CycloNum hpx = px_height(28);
    CycloNum hS2 = first_family(28).member(2).height;
    RationalPoly printed = poly({"-433/512", "41903/512", "-39573/256", "16255/256", "-3157/512", "35/512"});
    auto rel = run(hpx / hS2, g, 5);
    CHECK(rel.poly == printed);
    CHECK(rel.poly == *solve_in_powers(hpx / hS2, g, 5));
    CHECK(rel.poly.to_string() == "-433/512 + 41903x/512 - 39573x^2/256 + 16255x^3/256 - 3157x^4/512 + 35x^5/512");
    // Against the unit N-gon the same construction gives a different polynomial.
    auto abs_rel = run(hpx, g, 5);
    CHECK(abs_rel.poly == *solve_in_powers(hpx, g, 5));
    CHECK(abs_rel.poly != printed);
    CHECK(denominators_are_powers_of_two(rel.poly));
}

TEST_CASE("N=40 Sx") {
    auto ff = first_family(40);
    CycloNum sx = sx_height_n40();
    CHECK(sx == ff.member(3).height * ff.member(2).height);
    auto r = run(sx / ff.member(3).height, genscale(40), 7);
    CHECK(r.poly == poly({"-1/128", "439/128", "-3301/128", "12835/128", "-12579/128", "3557/128", "-183/128",
                          "1/128"}));
    CHECK(denominators_are_powers_of_two(r.poly));
}

TEST_CASE("N=36 Q") {
    CycloNum g = genscale(36);
    CycloNum q = q_height_n36();
    auto r = run(q, g, 5);
    CHECK(r.poly == poly({"-63/256", "8515/256", "-14541/128", "8781/128", "-2615/256", "19/256"}));
    auto r2 = run(q / first_family(36).member(2).height, g, 5);
    CHECK(r2.poly == poly({"-29/128", "5957/128", "-555/4", "1289/16", "-1515/128", "11/128"}));
    CHECK(r2.poly == *solve_in_powers(q / first_family(36).member(2).height, g, 5));
}

TEST_CASE("N=39 Dx sides") {
    CycloNum g = genscale(39);
    auto s = dx_sides_n39();
    auto r1 = run(s.s1 / s.s0, g, 11);
    CHECK(r1.poly == poly({"1871/26624", "-545859/26624", "7923081/26624", "-1868429/26624", "-6409373/13312",
                           "-2266215/13312", "1182769/13312", "660331/13312", "4411/26624", "-70847/26624",
                           "-6459/26624", "391/26624"}));
    RationalPoly printed21 = poly({"11/2048", "2567/2048", "20053/2048", "-168639/2048", "-3273/1024", "124931/1024",
                                   "86949/1024", "14353/1024", "-8041/2048", "-2941/2048", "-175/2048", "13/2048"});
    auto r2 = run(s.s2_tan78 / s.s1, g, 11);
    CHECK(r2.poly == printed21);
    CHECK(eval_poly(r2.poly, g) == s.s2_tan78 / s.s1);
    // With the side of the 39-gon DS[3] itself the relation is different.
    auto r3 = run(s.s2 / s.s1, g, 11);
    CHECK(r3.poly == *solve_in_powers(s.s2 / s.s1, g, 11));
    CHECK(r3.poly != printed21);
}

TEST_CASE("N=44 Px") {
    CycloNum g = genscale(44);
    CycloNum hpx = px_height(44);
    CHECK(to_double(hpx) == Catch::Approx(0.000656836).margin(5e-10));
    auto r = run(hpx, g, 9);
    CHECK(r.poly == poly({"57731/131072", "-12997321/131072", "87263363/32768", "-552905261/32768",
                          "2194226605/65536", "-1542371279/65536", "215163863/32768", "-22993969/32768",
                          "3007163/131072", "-13089/131072"}));
    auto ff = first_family(44);
    CHECK(run(hpx / s2_family(44).ds(4, +1).height, g, 9).poly.leading() == mpq_class(6561, 131072));
    // Relative to S[2] the leading coefficient has magnitude 22321/131072 and negative sign.
    CHECK(run(hpx / ff.member(2).height, g, 9).poly.leading() == mpq_class(-22321, 131072));
    CHECK(run(hpx / ff.member(4).height, g, 9).poly.leading() == mpq_class(72427, 1441792));
}

TEST_CASE("identify failures") {
    CycloNum g = genscale(26);
    IdentifyRequest r;
    r.generator = g;
    r.degree = 5;
    r.value = lambda(7);
    CHECK_THROWS_AS(identify(r), NoRelationFound);
    r.precision_digits = 50;
    CHECK_THROWS_AS(identify(r), PrecisionInsufficient);
    IdentifyRequest dec;
    dec.generator = g;
    dec.degree = 5;
    BigFloat pi(digits_to_bits(200));
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    dec.decimal = pi;
    CHECK_THROWS_AS(identify(dec), NoRelationFound);
    BigFloat short_pi(64);
    mpfr_const_pi(short_pi.raw(), MPFR_RNDN);
    dec.decimal = short_pi;
    CHECK_THROWS_AS(identify(dec), PrecisionInsufficient);
    IdentifyRequest none;
    none.generator = g;
    CHECK_THROWS_AS(identify(none), DomainError);
}

TEST_CASE("identify from a decimal value") {
    CycloNum g = genscale(28);
    RationalPoly p = poly({"3/4", "-5", "0", "7/2", "1", "-1/8"});
    CycloNum v = eval_poly(p, g);
    IdentifyRequest r;
    r.generator = g;
    r.degree = 5;
    r.decimal = to_float(v, 250);
    auto out = identify(r);
    CHECK(out.poly == p);
    CHECK_FALSE(out.verified_exact);
}

TEST_CASE("minimal_poly") {
    CHECK(minimal_poly(lambda(5), 10) == poly({"-1", "1", "1"}));
    CHECK(minimal_poly(lambda(4), 10) == poly({"0", "1"}));
    CHECK(minimal_poly(CycloNum(12, mpq_class(3, 7)), 4) == poly({"-3/7", "1"}));
    struct Case {
        int N, complexity;
    };
    for (Case c : {Case{26, 6}, Case{29, 14}, Case{31, 15}, Case{37, 18}, Case{41, 20}, Case{43, 21}, Case{47, 23},
                   Case{49, 21}}) {
        auto m = minimal_poly(lambda(c.N), 30);
        CHECK(m.degree() == c.complexity);
    }
    for (int N = 26; N <= 50; ++N) {
        auto m = minimal_poly(lambda(N), 30);
        CHECK(m.degree() == euler_phi(N) / 2);
        CHECK(eval_poly(m, lambda(N)).is_zero());
        // GenScale generates the same real subfield.
        CHECK(minimal_poly(genscale(N), 30).degree() == euler_phi(N % 4 == 2 ? N / 2 : N) / 2 * (N % 2 ? 1 : 1));
    }
    CHECK_THROWS_AS(minimal_poly(lambda(47), 10), DegreeExceeded);
    CHECK_THROWS_AS(minimal_poly(root_of_unity(8, 1), 4), DomainError);
}

TEST_CASE("integral LLL") {
    std::vector<std::vector<mpz_class>> b = {{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
    lll_reduce(b, mpq_class(3, 4));
    CHECK(b[0] == std::vector<mpz_class>{0, 1, 0});
    CHECK(b[1] == std::vector<mpz_class>{1, 0, 1});
    CHECK(b[2] == std::vector<mpz_class>{-1, 0, 2});
    // Size reduction and the Lovasz condition hold for a random basis.
    std::mt19937_64 rng(1);
    std::vector<std::vector<mpz_class>> r(6, std::vector<mpz_class>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i][j] = static_cast<long>(rng() % 2001) - 1000;
    lll_reduce(r);
    std::vector<std::vector<mpq_class>> bs;
    std::vector<mpq_class> norms;
    for (int i = 0; i < 6; ++i) {
        std::vector<mpq_class> v(r[i].begin(), r[i].end());
        for (int j = 0; j < i; ++j) {
            mpq_class dotp = 0;
            for (int k = 0; k < 6; ++k) dotp += mpq_class(r[i][k]) * bs[j][k];
            mpq_class mu = dotp / norms[j];
            CHECK(2 * abs(mu) <= 1);
            for (int k = 0; k < 6; ++k) v[k] -= mu * bs[j][k];
            if (j == i - 1) CHECK(norms[i - 1] * mpq_class(99, 100) <= [&]() -> mpq_class {
                mpq_class n = 0;
                for (int k = 0; k < 6; ++k) n += v[k] * v[k];
                return n + mu * mu * norms[i - 1];
            }());
        }
        mpq_class n = 0;
        for (auto& x : v) n += x * x;
        bs.push_back(v);
        norms.push_back(n);
    }
    std::vector<std::vector<mpz_class>> dep = {{1, 2}, {2, 4}};
    CHECK_THROWS_AS(lll_reduce(dep), DomainError);
}
