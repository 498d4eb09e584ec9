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

#ifndef OUTERWEB_BIGFLOAT_HPP
#define OUTERWEB_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace ow {

// Owning wrapper around an mpfr_t.
class BigFloat {
   public:
    explicit BigFloat(long bits = 128);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_mpq(const mpq_class& q, long bits);
    static BigFloat from_double(double d, long bits);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Significant-digit rendering ("%.*Rg").
    std::string to_string(int digits) const;
    // Fixed-point rendering with the given number of decimals.
    std::string to_fixed(int decimals) const;

   private:
    mpfr_t v_;
    bool live_ = true;
};

inline long digits_to_bits(int digits) { return static_cast<long>(digits * 3.3219280948873626) + 16; }

}  // namespace ow

#endif
