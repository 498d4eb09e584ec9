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

#include "outerweb/rational_poly.hpp"

#include <sstream>

#include "outerweb/errors.hpp"

namespace ow {

RationalPoly::RationalPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

RationalPoly::RationalPoly(std::initializer_list<mpq_class> c) : RationalPoly(std::vector<mpq_class>(c)) {}

RationalPoly RationalPoly::monomial(int deg, const mpq_class& c) {
    std::vector<mpq_class> v(deg + 1);
    v[deg] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class RationalPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpq_class> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const mpq_class& s) const {
    if (sgn(s) == 0) return {};
    RationalPoly r = *this;
    for (auto& q : r.c_) q *= s;
    return r;
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return {};
    return *this * mpq_class(1 / leading());
}

mpq_class RationalPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const mpq_class& q = c_[i];
        if (sgn(q) == 0) continue;
        mpz_class num = abs(q.get_num());
        const mpz_class& den = q.get_den();
        if (first) {
            if (sgn(q) < 0) os << "-";
        } else {
            os << (sgn(q) < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        if (i == 1) mono = var;
        if (i > 1) mono = var + "^" + std::to_string(i);
        if (i == 0 || num != 1) os << num.get_str();
        os << mono;
        if (den != 1) os << "/" << den.get_str();
    }
    return os.str();
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<mpq_class> r = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {RationalPoly{}, a};
    std::vector<mpq_class> q(dq + 1);
    mpq_class inv = 1 / b.leading();
    for (int k = dq; k >= 0; --k) {
        mpq_class f = r[k + db] * inv;
        q[k] = f;
        if (sgn(f) == 0) continue;
        for (int j = 0; j <= db; ++j) r[k + j] -= f * b.coeffs()[j];
    }
    r.resize(db);
    return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

ExtGcd ext_gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r0 = a, r1 = b;
    RationalPoly s0{mpq_class(1)}, s1;
    RationalPoly t0, t1{mpq_class(1)};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RationalPoly s2 = s0 - q * s1;
        RationalPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    mpq_class inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace ow
