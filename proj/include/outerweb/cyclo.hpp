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

#ifndef OUTERWEB_CYCLO_HPP
#define OUTERWEB_CYCLO_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "outerweb/bigfloat.hpp"
#include "outerweb/rational_poly.hpp"

namespace ow {

int euler_phi(int n);
long lcm_int(long a, long b);

// Coefficients of the M-th cyclotomic polynomial, ascending, monic.
const std::vector<mpz_class>& cyclotomic_coeffs(int M);
RationalPoly cyclotomic_poly(int M);

// Element of Q(zeta_M) in the power basis modulo Phi_M. Stored as an integer
// numerator vector over one positive denominator, kept in lowest terms, so
// the representation is canonical.
class CycloNum {
   public:
    CycloNum() : CycloNum(1) {}
    explicit CycloNum(int conductor);
    CycloNum(int conductor, const mpq_class& q);
    static CycloNum from_coeffs(int conductor, const std::vector<mpq_class>& c);

    int conductor() const { return M_; }
    int dimension() const { return static_cast<int>(num_.size()); }
    std::vector<mpq_class> coeffs() const;
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_real() const { return conj() == *this; }

    CycloNum conj() const;
    CycloNum lift(int conductor) const;
    CycloNum inverse() const;
    RationalPoly as_poly() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o);
    CycloNum& operator*=(const mpq_class& s);
    CycloNum& operator+=(const mpq_class& s);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    friend CycloNum operator*(CycloNum a, const mpq_class& s) { return a *= s; }
    friend CycloNum operator*(const mpq_class& s, CycloNum a) { return a *= s; }
    friend CycloNum operator+(CycloNum a, const mpq_class& s) { return a += s; }
    friend CycloNum operator-(CycloNum a, const mpq_class& s) { return a += mpq_class(-s); }

    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    // "M:[c0,c1,...]" with rational-string coefficients.
    std::string to_string() const;
    static CycloNum parse(const std::string& s);

   private:
    void normalize();
    int M_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

CycloNum root_of_unity(int M, int k);

enum class TrigFn { Cos, Sin, Tan };
// Conductor housing cos, sin and tan of k*pi/M.
int trig_conductor(int M);
CycloNum trig(int M, int k, TrigFn fn);
inline CycloNum tan_pi(int M, int k) { return trig(M, k, TrigFn::Tan); }

struct SignCertificate {
    int sign = 0;
    int digits_used = 0;
    BigFloat lo, hi;
};

SignCertificate certified_sign(const CycloNum& a);
inline int sign(const CycloNum& a) { return certified_sign(a).sign; }

// Real element to `digits` significant digits.
BigFloat to_float(const CycloNum& a, int digits);
double to_double(const CycloNum& a);
// Real and imaginary parts at the given binary precision (no error bound).
std::pair<BigFloat, BigFloat> evaluate(const CycloNum& a, long bits);

}  // namespace ow

#endif
