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

#include "outerweb/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "outerweb/errors.hpp"

namespace ow {

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

long lcm_int(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

struct CycloData {
    int M = 1;
    int phi = 1;
    std::vector<mpz_class> poly;                // Phi_M, monic, ascending
    std::vector<std::vector<mpz_class>> xpow;   // x^e mod Phi_M, e in [0, M)
};

std::vector<mpz_class> exact_div(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    // b monic
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    std::vector<mpz_class> q(da - db + 1);
    for (int k = da - db; k >= 0; --k) {
        mpz_class f = a[k + db];
        q[k] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) a[k + j] -= f * b[j];
    }
    return q;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::map<int, std::shared_ptr<CycloData>>& cache() {
    static std::map<int, std::shared_ptr<CycloData>> c;
    return c;
}

std::vector<mpz_class> compute_phi_poly(int M);

std::shared_ptr<const CycloData> data_locked(int M) {
    auto& c = cache();
    auto it = c.find(M);
    if (it != c.end()) return it->second;
    auto d = std::make_shared<CycloData>();
    d->M = M;
    d->poly = compute_phi_poly(M);
    d->phi = static_cast<int>(d->poly.size()) - 1;
    d->xpow.assign(M, std::vector<mpz_class>(d->phi));
    std::vector<mpz_class> cur(d->phi);
    cur[0] = 1;
    for (int e = 0; e < M; ++e) {
        d->xpow[e] = cur;
        // cur <- x * cur mod Phi
        mpz_class top = cur[d->phi - 1];
        for (int i = d->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < d->phi; ++i) cur[i] -= top * d->poly[i];
    }
    c[M] = d;
    return d;
}

std::vector<mpz_class> compute_phi_poly(int M) {
    // x^M - 1 divided by Phi_d for every proper divisor d of M.
    std::vector<mpz_class> p(M + 1);
    p[0] = -1;
    p[M] = 1;
    for (int d = 1; d < M; ++d)
        if (M % d == 0) p = exact_div(p, data_locked(d)->poly);
    return p;
}

std::shared_ptr<const CycloData> data(int M) {
    if (M < 1) throw std::invalid_argument("conductor must be positive");
    std::lock_guard<std::mutex> lock(cache_mutex());
    return data_locked(M);
}

mpz_class lcm_den(const std::vector<mpq_class>& c) {
    mpz_class l = 1;
    for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_coeffs(int M) { return data(M)->poly; }

RationalPoly cyclotomic_poly(int M) {
    const auto& p = cyclotomic_coeffs(M);
    std::vector<mpq_class> q(p.begin(), p.end());
    return RationalPoly(std::move(q));
}

CycloNum::CycloNum(int conductor) : M_(conductor), num_(data(conductor)->phi), den_(1) {}

CycloNum::CycloNum(int conductor, const mpq_class& q) : CycloNum(conductor) {
    num_[0] = q.get_num();
    den_ = q.get_den();
    normalize();
}

CycloNum CycloNum::from_coeffs(int conductor, const std::vector<mpq_class>& c) {
    auto d = data(conductor);
    CycloNum r(conductor);
    r.den_ = lcm_den(c);
    // Coefficients beyond phi are reduced through x^e mod Phi.
    for (size_t e = 0; e < c.size(); ++e) {
        if (sgn(c[e]) == 0) continue;
        mpz_class n = c[e].get_num() * (r.den_ / c[e].get_den());
        const auto& row = d->xpow[e % conductor];
        for (int i = 0; i < d->phi; ++i)
            if (row[i] != 0) r.num_[i] += n * row[i];
    }
    r.normalize();
    return r;
}

void CycloNum::normalize() {
    mpz_class g = den_;
    for (const auto& n : num_) {
        if (n == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        if (g == 1) break;
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& n : num_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<mpq_class> CycloNum::coeffs() const {
    std::vector<mpq_class> r(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) {
        r[i] = mpq_class(num_[i], den_);
        r[i].canonicalize();
    }
    return r;
}

bool CycloNum::is_zero() const {
    for (const auto& n : num_)
        if (n != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

CycloNum CycloNum::conj() const {
    auto d = data(M_);
    CycloNum r(M_);
    r.den_ = den_;
    for (int e = 0; e < d->phi; ++e) {
        if (num_[e] == 0) continue;
        const auto& row = d->xpow[(M_ - e) % M_];
        for (int i = 0; i < d->phi; ++i)
            if (row[i] != 0) r.num_[i] += num_[e] * row[i];
    }
    r.normalize();
    return r;
}

CycloNum CycloNum::lift(int conductor) const {
    if (conductor == M_) return *this;
    if (conductor % M_ != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
    auto d = data(conductor);
    int step = conductor / M_;
    CycloNum r(conductor);
    r.den_ = den_;
    for (size_t e = 0; e < num_.size(); ++e) {
        if (num_[e] == 0) continue;
        const auto& row = d->xpow[(e * step) % conductor];
        for (int i = 0; i < d->phi; ++i)
            if (row[i] != 0) r.num_[i] += num_[e] * row[i];
    }
    r.normalize();
    return r;
}

RationalPoly CycloNum::as_poly() const { return RationalPoly(coeffs()); }

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    ExtGcd eg = ext_gcd(as_poly(), cyclotomic_poly(M_));
    // gcd is 1 because Phi_M is irreducible and a != 0 mod Phi_M.
    return from_coeffs(M_, eg.s.coeffs());
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& n : r.num_) n = -n;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (o.M_ != M_) {
        int L = static_cast<int>(lcm_int(M_, o.M_));
        *this = lift(L);
        return *this += o.lift(L);
    }
    if (den_ == o.den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    if (o.M_ != M_) {
        int L = static_cast<int>(lcm_int(M_, o.M_));
        *this = lift(L);
        return *this *= o.lift(L);
    }
    auto d = data(M_);
    int phi = d->phi;
    std::vector<mpz_class> prod(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (num_[i] == 0) continue;
        for (int j = 0; j < phi; ++j)
            if (o.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    for (int e = phi; e < 2 * phi - 1; ++e) {
        if (prod[e] == 0) continue;
        const auto& row = d->xpow[e % M_];
        for (int i = 0; i < phi; ++i)
            if (row[i] != 0) mpz_addmul(prod[i].get_mpz_t(), prod[e].get_mpz_t(), row[i].get_mpz_t());
    }
    prod.resize(phi);
    num_ = std::move(prod);
    den_ *= o.den_;
    normalize();
    return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero field element");
    if (o.is_rational()) return *this *= mpq_class(mpq_class(o.den_, o.num_[0]));
    return *this *= o.inverse();
}

CycloNum& CycloNum::operator*=(const mpq_class& s) {
    mpq_class c = s;
    c.canonicalize();
    for (auto& n : num_) n *= c.get_num();
    den_ *= c.get_den();
    if (den_ < 0) {
        den_ = -den_;
        for (auto& n : num_) n = -n;
    }
    normalize();
    return *this;
}

CycloNum& CycloNum::operator+=(const mpq_class& s) { return *this += CycloNum(M_, s); }

bool CycloNum::operator==(const CycloNum& o) const {
    if (o.M_ != M_) {
        int L = static_cast<int>(lcm_int(M_, o.M_));
        return lift(L) == o.lift(L);
    }
    return den_ == o.den_ && num_ == o.num_;
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    os << M_ << ":[";
    auto c = coeffs();
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
    os << "]";
    return os.str();
}

CycloNum CycloNum::parse(const std::string& s) {
    auto colon = s.find(':');
    auto lb = s.find('[');
    auto rb = s.rfind(']');
    if (colon == std::string::npos || lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw std::invalid_argument("bad field element string: " + s);
    int M = std::stoi(s.substr(0, colon));
    std::vector<mpq_class> c;
    std::string body = s.substr(lb + 1, rb - lb - 1);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        mpq_class q(tok);
        q.canonicalize();
        c.push_back(q);
    }
    return from_coeffs(M, c);
}

CycloNum root_of_unity(int M, int k) {
    int e = ((k % M) + M) % M;
    std::vector<mpq_class> c(e + 1);
    c[e] = 1;
    return CycloNum::from_coeffs(M, c);
}

int trig_conductor(int M) { return static_cast<int>(lcm_int(2L * M, 4)); }

CycloNum trig(int M, int k, TrigFn fn) {
    int K = trig_conductor(M);
    int e = static_cast<int>((static_cast<long>(k) * (K / (2 * M))) % K);
    if (e < 0) e += K;
    CycloNum z = root_of_unity(K, e);
    CycloNum zi = root_of_unity(K, K - e);
    CycloNum i = root_of_unity(K, K / 4);
    CycloNum c = (z + zi) * mpq_class(1, 2);
    CycloNum s = (z - zi) * mpq_class(1, 2) * i.conj();  // (z - 1/z) / (2i)
    switch (fn) {
        case TrigFn::Cos:
            return c;
        case TrigFn::Sin:
            return s;
        case TrigFn::Tan: {
            if (c.is_zero()) throw TanPole("tan(" + std::to_string(k) + "pi/" + std::to_string(M) + ") is a pole");
            // Memoized: tan values feed every family construction and each
            // one costs a field inversion.
            static std::mutex memo_mutex;
            static std::map<std::pair<int, int>, CycloNum> memo;
            std::pair<int, int> key{M, ((k % M) + M) % M};
            {
                std::lock_guard<std::mutex> lock(memo_mutex);
                auto it = memo.find(key);
                if (it != memo.end()) return it->second;
            }
            CycloNum t = s / c;
            std::lock_guard<std::mutex> lock(memo_mutex);
            memo.emplace(key, t);
            return t;
        }
    }
    return c;
}

namespace {

// Sum of num_i * cos(2 pi i / M) at working precision bits + 32, and an
// upper bound on its absolute error.
void real_sum_with_bound(const CycloNum& a, long bits, BigFloat& sum, BigFloat& bound) {
    long wp = bits + 32;
    int M = a.conductor();
    const auto& num = a.numerators();
    BigFloat pi2(wp), ang(wp), c(wp), t(wp);
    mpfr_const_pi(pi2.raw(), MPFR_RNDN);
    mpfr_mul_ui(pi2.raw(), pi2.raw(), 2, MPFR_RNDN);
    sum = BigFloat(wp);
    mpz_class abs_total = 0;
    for (size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0) continue;
        abs_total += abs(num[i]);
        mpfr_mul_ui(ang.raw(), pi2.raw(), i, MPFR_RNDN);
        mpfr_div_ui(ang.raw(), ang.raw(), M, MPFR_RNDN);
        mpfr_cos(c.raw(), ang.raw(), MPFR_RNDN);
        mpfr_mul_z(t.raw(), c.raw(), num[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);
    }
    bound = BigFloat(64);
    mpfr_set_z(bound.raw(), abs_total.get_mpz_t(), MPFR_RNDU);
    mpfr_mul_ui(bound.raw(), bound.raw(), num.size() + 8, MPFR_RNDU);
    mpfr_div_2si(bound.raw(), bound.raw(), bits, MPFR_RNDU);
}

}  // namespace

SignCertificate certified_sign(const CycloNum& a) {
    SignCertificate cert;
    if (a.is_zero()) return cert;
    if (!a.is_real()) throw std::invalid_argument("certified_sign needs a real element");
    BigFloat sum, bound;
    for (int digits = 64;; digits *= 2) {
        long bits = digits_to_bits(digits);
        real_sum_with_bound(a, bits, sum, bound);
        BigFloat mag(sum.precision());
        mpfr_abs(mag.raw(), sum.raw(), MPFR_RNDN);
        if (mpfr_greater_p(mag.raw(), bound.raw())) {
            cert.sign = sum.sign();
            cert.digits_used = digits;
            cert.lo = BigFloat(sum.precision());
            cert.hi = BigFloat(sum.precision());
            mpfr_sub(cert.lo.raw(), sum.raw(), bound.raw(), MPFR_RNDD);
            mpfr_add(cert.hi.raw(), sum.raw(), bound.raw(), MPFR_RNDU);
            mpfr_div_z(cert.lo.raw(), cert.lo.raw(), a.denominator().get_mpz_t(), MPFR_RNDD);
            mpfr_div_z(cert.hi.raw(), cert.hi.raw(), a.denominator().get_mpz_t(), MPFR_RNDU);
            return cert;
        }
    }
}

BigFloat to_float(const CycloNum& a, int digits) {
    long bits = digits_to_bits(digits);
    if (a.is_zero()) return BigFloat(bits);
    BigFloat sum, bound;
    for (long wp = bits + 32;; wp *= 2) {
        real_sum_with_bound(a, wp, sum, bound);
        // Accept when the error bound is below |value| * 2^-bits.
        BigFloat rel(sum.precision());
        mpfr_abs(rel.raw(), sum.raw(), MPFR_RNDN);
        mpfr_div_2si(rel.raw(), rel.raw(), bits, MPFR_RNDN);
        if (mpfr_less_p(bound.raw(), rel.raw())) break;
    }
    BigFloat r(bits);
    mpfr_div_z(r.raw(), sum.raw(), a.denominator().get_mpz_t(), MPFR_RNDN);
    return r;
}

double to_double(const CycloNum& a) { return to_float(a, 20).to_double(); }

std::pair<BigFloat, BigFloat> evaluate(const CycloNum& a, long bits) {
    int M = a.conductor();
    const auto& num = a.numerators();
    BigFloat pi2(bits), ang(bits), c(bits), s(bits), t(bits), re(bits), im(bits);
    mpfr_const_pi(pi2.raw(), MPFR_RNDN);
    mpfr_mul_ui(pi2.raw(), pi2.raw(), 2, MPFR_RNDN);
    for (size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0) continue;
        mpfr_mul_ui(ang.raw(), pi2.raw(), i, MPFR_RNDN);
        mpfr_div_ui(ang.raw(), ang.raw(), M, MPFR_RNDN);
        mpfr_sin_cos(s.raw(), c.raw(), ang.raw(), MPFR_RNDN);
        mpfr_mul_z(t.raw(), c.raw(), num[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(re.raw(), re.raw(), t.raw(), MPFR_RNDN);
        mpfr_mul_z(t.raw(), s.raw(), num[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(im.raw(), im.raw(), t.raw(), MPFR_RNDN);
    }
    mpfr_div_z(re.raw(), re.raw(), a.denominator().get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(im.raw(), im.raw(), a.denominator().get_mpz_t(), MPFR_RNDN);
    return {re, im};
}

}  // namespace ow
