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

#include "outerweb/volunteers.hpp"

#include "outerweb/errors.hpp"

namespace ow {

CycloNum ds4_star_gap(int N) {
    if (N % 16 != 12) throw DomainError("Px construction needs N = 12 mod 16");
    auto tab = star_points(s2_family(N).ds(4, +1));
    return tab.right[N / 2 - 2].x - tab.right[2].x;
}

CycloNum px_height(int N) { return two_star_solve(N, 1, N / 2 - 3, ds4_star_gap(N)); }

CycloNum sx_height_n40() {
    const int N = 40;
    CycloNum hS1 = first_family(N).member(1).height;
    return two_star_solve(N, 1, 19, hS1 * tan_pi(N, 3) * mpq_class(2));
}

CycloNum q_height_n36() {
    const int N = 36;
    auto ff = first_family(N);
    Tile s2 = ff.member(2), s4 = ff.member(4);
    int K = s2.center.x.conductor();
    CycloNum t3 = tan_pi(N, 3).lift(K), t9 = tan_pi(N, 9).lift(K);
    CycloNum m2 = s2.center.x;
    CycloNum m4 = m2 + s2.height * t3 + s4.height * t3;
    CycloNum gap = (m2 - s2.height * t9) - (m4 - s4.height * t9);
    if (sign(gap) < 0) gap = -gap;
    return gap * mpq_class(1, 2);
}

DxSides dx_sides_n39() {
    const int N = 39;
    S2Family f = s2_family(N);
    int K = f.s2.height.conductor();
    DxSides s;
    s.s0 = (tan_pi(N, 1) * mpq_class(2)).lift(K);
    s.s1 = f.s2.height * (tan_pi(2 * N, 5) - tan_pi(2 * N, 3)).lift(K);
    Tile ds3 = f.ds(3, +1);
    s.s2 = ds3.height * tan_pi(ds3.gon, 1).lift(K) * mpq_class(2);
    s.s2_tan78 = ds3.height * tan_pi(2 * N, 1).lift(K) * mpq_class(2);
    return s;
}

}  // namespace ow
