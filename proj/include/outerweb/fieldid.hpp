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

#ifndef OUTERWEB_FIELDID_HPP
#define OUTERWEB_FIELDID_HPP

#include <optional>
#include <vector>

#include "outerweb/bigfloat.hpp"
#include "outerweb/cyclo.hpp"
#include "outerweb/rational_poly.hpp"

namespace ow {

struct IdentifyRequest {
    std::optional<CycloNum> value;    // exact value (verified when present)
    std::optional<BigFloat> decimal;  // used when no exact value is given
    CycloNum generator;
    int degree = 1;
    int precision_digits = 0;   // 0 selects 30 * (degree + 1)
    int height_bound_bits = 0;  // 0 means no bound on coefficient size
};

struct IdentifiedPoly {
    RationalPoly poly;
    BigFloat residual;
    bool verified_exact = false;
    int digits_used = 0;
};

// Integer-relation search on (1, g, ..., g^d, value) by lattice reduction.
IdentifiedPoly identify(const IdentifyRequest& req);

// sum c_i g^i, exactly.
CycloNum eval_poly(const RationalPoly& p, const CycloNum& g);

// Monic minimal polynomial of a real element, by exact linear dependence of
// its powers. Throws DegreeExceeded above max_degree.
RationalPoly minimal_poly(const CycloNum& g, int max_degree);

// In-place integral LLL (exact integer arithmetic) with reduction parameter
// delta in (1/4, 1). Rows must be linearly independent.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis, const mpq_class& delta = mpq_class(99, 100));

// lambda_N = 2 cos(2 pi / N).
CycloNum lambda(int N);

}  // namespace ow

#endif
