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

#include "outerweb/bigfloat.hpp"

#include <cstdlib>

namespace ow {

BigFloat::BigFloat(long bits) {
    mpfr_init2(v_, bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_mpq(const mpq_class& q, long bits) {
    BigFloat r(bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double d, long bits) {
    BigFloat r(bits);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BigFloat::to_fixed(int decimals) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", decimals, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace ow
