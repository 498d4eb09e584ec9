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

#ifndef OUTERWEB_VOLUNTEERS_HPP
#define OUTERWEB_VOLUNTEERS_HPP

#include "outerweb/family.hpp"

namespace ow {

// Px of the N = 12 mod 16 branch (N = 28, 44): Px shares star[1] and
// star[N/2-3] with star[N/2-1] and star[3] of the right-side DS[4], so
// hPx = gap / (tan((N/2-3) pi/N) - tan(pi/N)).
CycloNum px_height(int N);
// Gap along the base line between star[3] and star[N/2-1] of DS[4].
CycloNum ds4_star_gap(int N);

// N = 40 volunteer Sx: shares star[13] with S[1] and its star[19] with star[1]
// of S[1]. Equal to hS[3] * hS[2].
CycloNum sx_height_n40();

// N = 36 volunteer square Q: top vertices at star[9] of S[2] and star[9] of
// the S[4] that shares star[3] with S[2]; 2 hQ is their horizontal gap.
CycloNum q_height_n36();

// N = 39 Dx sides: s0 = side of N, s1 = offset of star[3] and star[5] of S[2],
// s2 = side of DS[3] (a 39-gon), s2_tan78 = 2 hDS[3] tan(pi/78), the side of
// a 78-gon with the apothem of DS[3].
struct DxSides {
    CycloNum s0, s1, s2, s2_tan78;
};
DxSides dx_sides_n39();

}  // namespace ow

#endif
