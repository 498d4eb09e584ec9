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

#include "outerweb/periods.hpp"

#include <string>

#include "outerweb/errors.hpp"

namespace ow {

namespace {

void check_args(long n, long k) {
    if (n < 2) throw DomainError("period formulas need n >= 2, got " + std::to_string(n));
    if (k < 1) throw DomainError("period index must be >= 1, got " + std::to_string(k));
}

mpz_class pow_si(long base, long k) {
    mpz_class r;
    mpz_class b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den, const char* what) {
    if (num % den != 0) throw NonIntegral(std::string(what) + ": closed form is not integral");
    return num / den;
}

}  // namespace

mpz_class d_period(long n, long k) {
    check_args(n, k);
    mpz_class num = -mpz_class(n) * (pow_si(-1, k) - pow_si(1 + n, k));
    return exact_quotient(num, mpz_class(2 + n), "d_period");
}

mpz_class m_period(long n, long k) {
    check_args(n, k);
    if (n % 2 == 0) throw NonIntegral("m_period is defined for odd n only, got n = " + std::to_string(n));
    mpz_class num = mpz_class(n) * (pow_si(-1, 1 + k) + pow_si(-1, k) * n + 3 * pow_si(1 + n, k));
    return exact_quotient(num, mpz_class(2 * (2 + n)), "m_period");
}

mpz_class recurrence_solve(const RecurrenceSpec& spec, long k) {
    check_args(spec.n, k);
    if (spec.p1 <= 0 || spec.p2 <= 0) throw DomainError("initial periods must be positive");
    if (k == 1) return spec.p1;
    mpz_class a = spec.p1, b = spec.p2;
    for (long i = 3; i <= k; ++i) {
        mpz_class c = spec.n * b + (spec.n + 1) * a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

mpz_class d3_count(long n) {
    check_args(n, 1);
    mpz_class m = n;
    return m * m * m + m * (m + 1);
}

BigFloat ratio(long n, long k, PeriodFamily which, int digits) {
    if (k < 2) throw DomainError("ratio needs k >= 2");
    mpz_class hi = which == PeriodFamily::D ? d_period(n, k) : m_period(n, k);
    mpz_class lo = which == PeriodFamily::D ? d_period(n, k - 1) : m_period(n, k - 1);
    BigFloat r(digits_to_bits(digits));
    mpq_class q(hi, lo);
    q.canonicalize();
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

RecurrenceSpec d_spec(long n) { return {n, n, mpz_class(n) * n}; }

RecurrenceSpec m_spec(long n) {
    if (n % 2 == 0) throw NonIntegral("M recurrence needs odd n");
    return {n, n, mpz_class(n) * (3 * (n - 1) / 2 + 2)};
}

RecurrenceSpec ds7_spec(long n) { return {n, 4 * mpz_class(n), mpz_class(n) * (5 * n + 1)}; }

RecurrenceSpec ds3_spec(long n) { return {n, 6 * mpz_class(n), mpz_class(n) * (7 * n + 1)}; }

RecurrenceSpec m_at_ds11_spec(long n) {
    if (n % 2 == 0) throw NonIntegral("M recurrence needs odd n");
    return {n, 2 * mpz_class(n), mpz_class(n) * (2 + 3 * (n - 1) / 2)};
}

}  // namespace ow
