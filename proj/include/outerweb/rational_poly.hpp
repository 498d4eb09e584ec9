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

#ifndef OUTERWEB_RATIONAL_POLY_HPP
#define OUTERWEB_RATIONAL_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ow {

// Dense univariate polynomial over Q, ascending powers.
class RationalPoly {
   public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<mpq_class> c);
    RationalPoly(std::initializer_list<mpq_class> c);

    static RationalPoly monomial(int deg, const mpq_class& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const;
    const mpq_class& leading() const { return c_.back(); }

    RationalPoly operator-() const;
    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const mpq_class& s) const;
    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RationalPoly& o) const { return c_ != o.c_; }

    RationalPoly monic() const;
    mpq_class eval(const mpq_class& x) const;

    // Ascending-power layout, e.g. "-433/512 + 41903x/512 - 39573x^2/256".
    std::string to_string(const std::string& var = "x") const;

   private:
    void trim();
    std::vector<mpq_class> c_;
};

// Quotient and remainder; throws DivisionByZero for b == 0.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);

// Monic gcd g with s*a + t*b = g.
struct ExtGcd {
    RationalPoly g, s, t;
};
ExtGcd ext_gcd(const RationalPoly& a, const RationalPoly& b);

}  // namespace ow

#endif
