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

#ifndef OUTERWEB_PERIODS_HPP
#define OUTERWEB_PERIODS_HPP

#include <gmpxx.h>

#include "outerweb/bigfloat.hpp"

namespace ow {

// p_k = n p_{k-1} + (n+1) p_{k-2}, with p_1, p_2 given.
struct RecurrenceSpec {
    long n = 0;
    mpz_class p1, p2;
};

enum class PeriodFamily { D, M };

// -n((-1)^k - (1+n)^k)/(2+n)
mpz_class d_period(long n, long k);
// n((-1)^(1+k) + (-1)^k n + 3(1+n)^k)/(2(2+n)); n must be odd.
mpz_class m_period(long n, long k);
mpz_class recurrence_solve(const RecurrenceSpec& spec, long k);
// n^3 + n(n+1)
mpz_class d3_count(long n);
// p_k / p_{k-1} to `digits` significant digits.
BigFloat ratio(long n, long k, PeriodFamily which, int digits = 40);

RecurrenceSpec d_spec(long n);
RecurrenceSpec m_spec(long n);
RecurrenceSpec ds7_spec(long n);        // 4n, n(5n+1)
RecurrenceSpec ds3_spec(long n);        // 6n, n(7n+1)
RecurrenceSpec m_at_ds11_spec(long n);  // 2n, n(2 + 3(n-1)/2)

}  // namespace ow

#endif
