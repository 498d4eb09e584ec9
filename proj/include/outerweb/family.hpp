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

#ifndef OUTERWEB_FAMILY_HPP
#define OUTERWEB_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include "outerweb/cyclo.hpp"
#include "outerweb/geometry.hpp"

namespace ow {

enum class ParityClass { Odd, TwiceOdd, TwiceEven };

struct NGonSpec {
    int N = 0;
    int mod8 = 0;
    ParityClass parity = ParityClass::Odd;
    int complexity = 0;  // phi(N)/2
    int ambient_M = 0;   // N for even N, 2N for odd N
};

NGonSpec ngon_spec(int N);
std::string parity_name(ParityClass p);

// Conductor that holds every coordinate of the N-context: lcm(2N, 4) for
// even N, 4N for odd N (odd N also needs tan(k pi / 2N)).
int context_conductor(int N);

enum class TileKind { N, S, DS, D, M, Volunteer };
std::string kind_name(TileKind k);

struct MutationSpec {
    int ambient = 0;  // M'
    int k_prime = 0;
    int weave_gon = 0;
    int base_span = 0;
    int star_units = 0;  // U: star[j] sits at h tan(j pi / U); U = N (even N) or 2N (odd N)
    int min_star_index = 0;    // in units of U
    int other_star_index = 0;  // base_span * U / M' - min_star_index
    std::string rule_variant;  // "even:N/2-1-jk'" or "odd:|N-2-jk'|"
};

// Regular m-gon with a horizontal bottom edge, apothem `height`.
// Vertex angles are -pi/2 + (2j+1+rotation) pi/m.
struct Tile {
    int gon = 0;
    ExactPoint center;
    CycloNum height;
    mpq_class rotation = 0;  // in units of pi/m
    TileKind kind = TileKind::N;
    int index = 0;
    std::string label;
    std::optional<MutationSpec> mutation;

    std::vector<ExactPoint> vertices() const;
    std::vector<FloatPoint> vertices_float() const;
    CycloNum vertex_radius() const;  // height / cos(pi/m)
    ExactPoint base_midpoint() const { return {center.x, center.y - height}; }
};

// Validates height > 0 (certified).
Tile make_tile(int gon, ExactPoint center, CycloNum height, TileKind kind, int index, std::string label);

Tile build_ngon(int N);

struct Scales {
    int M = 0;                    // cyclic order the values refer to
    std::vector<CycloNum> hS;     // hS[k], k = 1..M/2-1 (index 0 unused)
    std::vector<CycloNum> scale;  // scale[k]
    CycloNum genscale;
};
Scales heights_and_scales(int N);
CycloNum genscale(int N);

struct StarPointTable {
    int gon = 0;
    ExactPoint midpoint;
    std::vector<ExactPoint> right;  // right[k-1] = star[k] at +h tan(k pi/m)
    std::vector<ExactPoint> left;   // left[k-1]  = star[k] at -h tan(k pi/m)
};
StarPointTable star_points(const Tile& t);

// Gon count of family member k of a parent with cyclic order m.
int member_gon(int m, int k);

// First Family of `parent` around order m. Member k sits on the parent's base
// line: center = c + h (sigma (t_a + t_k), -1 + t_a t_k), height h t_a t_k,
// with t_j = tan(j pi / m) and anchor a (1 for ordinary families).
struct FamilyContext {
    Tile parent;
    int order = 0;
    int anchor = 1;
    int sigma = -1;  // -1 left side (default), +1 right side
    int conductor = 0;

    int max_index() const { return (order - 1) / 2; }
    Tile member(int k, TileKind kind = TileKind::S) const;
    FamilyContext mirrored() const;
};

FamilyContext first_family(int N);
FamilyContext family_of(const Tile& parent, int order, int sigma, int anchor = 1, int conductor = 0);

struct S2Family {
    int N = 0;
    Tile s2;
    FamilyContext left, right;  // right faces N
    Tile ds(int k, int sigma = +1) const;
};
S2Family s2_family(int N);

std::vector<int> predicted_ds(int N);

enum class TileClass { SofEvenN, DSofEvenN, SofOddN, DSofOddN };
struct WebStep {
    int k_prime = 0;
    int reduced_step = 0;
};
WebStep web_step(int N, int k, TileClass cls);
std::optional<MutationSpec> mutation_spec(int N, int k, TileClass cls);

struct Weave {
    std::vector<ExactPoint> component_a, component_b;
    std::vector<ExactPoint> boundary;  // alternating, 2 * weave_gon vertices
};
Weave weave(const MutationSpec& spec, const Tile& underlying);

struct LadderPoint {
    int k = 0;
    ExactPoint cD, cM;
    CycloNum hD;
    int genscale_power = 0;
};
// Twice-odd N only. cD[1] = cS[2]; for k >= 2
// cD[k] = (x0 + hS[2] G^(k-1) / cslope, hS[2] G^(k-1) - 1). cM[k] is the S[1]
// of D[k-1]'s family (cM[1] = cS[1]).
std::vector<LadderPoint> dk_ladder(int N, int k_max);

CycloNum two_star_solve(int M, int j_low, int j_high, const CycloNum& d);

long sk_period(int N, int k);

}  // namespace ow

#endif
