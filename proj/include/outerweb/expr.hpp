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

#ifndef OUTERWEB_EXPR_HPP
#define OUTERWEB_EXPR_HPP

#include <string>

#include "outerweb/cyclo.hpp"

namespace ow {

// Exact value of an arithmetic expression over named quantities of the N-gon
// context. Operators: + - * / ^ (integer exponent) and parentheses. Literals
// are integers. Names:
//   hN             apothem of N (1)
//   hS[k] scale[k] First Family heights and scales
//   genscale       GenScale of N
//   lambda         2 cos(2 pi / N)
//   tan[k]         tan(k pi / N)
//   hD[k]          ladder heights (twice-odd N)
//   hDS[k]         heights of the right-side DS[k] of S[2]
//   hPx            Px of N = 28, 44
//   hSx            Sx of N = 40
//   hQ             Q of N = 36
//   s0 s1 s2 s2_tan78   Dx sides of N = 39
CycloNum eval_expr(int N, const std::string& expr);

}  // namespace ow

#endif
