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

#include "outerweb/fieldid.hpp"

#include <algorithm>
#include <utility>

#include "outerweb/errors.hpp"

namespace ow {

namespace {

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    // Nearest integer to a / b, b > 0.
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r >= b) ++q;
    return q;
}

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    mpz_class s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

void lll_reduce(std::vector<std::vector<mpz_class>>& b, const mpq_class& delta) {
    const int n = static_cast<int>(b.size());
    if (n <= 1) return;
    if (delta <= mpq_class(1, 4) || delta >= 1) throw DomainError("LLL delta must lie in (1/4, 1)");
    const mpz_class p = delta.get_num(), q = delta.get_den();
    // 1-based bookkeeping: d[0] = 1, lam[k][j] for j < k.
    std::vector<mpz_class> d(n + 1);
    std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1));
    d[0] = 1;
    d[1] = dot(b[0], b[0]);
    if (d[1] == 0) throw DomainError("LLL basis is linearly dependent");
    int k = 2, kmax = 1;

    auto red = [&](int kk, int l) {
        if (2 * abs(lam[kk][l]) > d[l]) {
            mpz_class qq = round_div(lam[kk][l], d[l]);
            auto& bk = b[kk - 1];
            const auto& bl = b[l - 1];
            for (size_t i = 0; i < bk.size(); ++i) bk[i] -= qq * bl[i];
            lam[kk][l] -= qq * d[l];
            for (int i = 1; i < l; ++i) lam[kk][i] -= qq * lam[l][i];
        }
    };
    auto swap_k = [&](int kk) {
        std::swap(b[kk - 1], b[kk - 2]);
        for (int j = 1; j <= kk - 2; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
        mpz_class l = lam[kk][kk - 1];
        mpz_class B = (d[kk - 2] * d[kk] + l * l) / d[kk - 1];
        for (int i = kk + 1; i <= kmax; ++i) {
            mpz_class t = lam[i][kk];
            lam[i][kk] = (d[kk] * lam[i][kk - 1] - l * t) / d[kk - 1];
            lam[i][kk - 1] = (B * t + l * lam[i][kk]) / d[kk];
        }
        d[kk - 1] = B;
    };

    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (int j = 1; j <= k; ++j) {
                mpz_class u = dot(b[k - 1], b[j - 1]);
                for (int i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
                if (j < k)
                    lam[k][j] = u;
                else
                    d[k] = u;
            }
            if (d[k] == 0) throw DomainError("LLL basis is linearly dependent");
        }
        red(k, k - 1);
        const mpz_class& l = lam[k][k - 1];
        if (q * d[k] * d[k - 2] < p * d[k - 1] * d[k - 1] - q * l * l) {
            swap_k(k);
            k = std::max(2, k - 1);
        } else {
            for (int l2 = k - 2; l2 >= 1; --l2) red(k, l2);
            ++k;
        }
    }
}

CycloNum eval_poly(const RationalPoly& p, const CycloNum& g) {
    CycloNum acc(g.conductor());
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        acc *= g;
        acc += c[i];
    }
    return acc;
}

CycloNum lambda(int N) {
    if (N < 1) throw DomainError("lambda needs N >= 1");
    return trig(N, 2, TrigFn::Cos) * mpq_class(2);
}

RationalPoly minimal_poly(const CycloNum& g, int max_degree) {
    if (!g.is_real()) throw DomainError("minimal_poly needs a real element");
    if (max_degree < 1) throw DomainError("max_degree must be positive");
    const int K = g.conductor();
    // Echelon rows over Q, each with the power combination it represents.
    struct Row {
        std::vector<mpq_class> v;
        std::vector<mpq_class> combo;
        int pivot;
    };
    std::vector<Row> rows;
    CycloNum power(K, 1);
    for (int d = 0; d <= max_degree; ++d) {
        Row r;
        r.v = power.coeffs();
        r.combo.assign(d + 1, 0);
        r.combo[d] = 1;
        for (const auto& e : rows) {
            if (r.v[e.pivot] == 0) continue;
            mpq_class f = r.v[e.pivot] / e.v[e.pivot];
            for (size_t i = 0; i < r.v.size(); ++i) r.v[i] -= f * e.v[i];
            for (size_t i = 0; i < e.combo.size(); ++i) r.combo[i] -= f * e.combo[i];
        }
        auto it = std::find_if(r.v.begin(), r.v.end(), [](const mpq_class& x) { return x != 0; });
        if (it == r.v.end()) {
            RationalPoly m(r.combo);
            m = m.monic();
            if (!eval_poly(m, g).is_zero()) throw DomainError("minimal polynomial failed verification");
            return m;
        }
        r.pivot = static_cast<int>(it - r.v.begin());
        rows.push_back(std::move(r));
        power *= g;
    }
    throw DegreeExceeded("minimal polynomial degree exceeds " + std::to_string(max_degree));
}

IdentifiedPoly identify(const IdentifyRequest& req) {
    const int d = req.degree;
    if (d < 1) throw DomainError("degree must be at least 1");
    if (!req.value && !req.decimal) throw DomainError("identify needs a value");
    int digits = req.precision_digits ? req.precision_digits : 30 * (d + 1);
    if (digits < 16 * (d + 1))
        throw PrecisionInsufficient("precision_digits must be at least " + std::to_string(16 * (d + 1)));
    if (!req.value && req.decimal->precision() < digits_to_bits(digits) - 16)
        throw PrecisionInsufficient("decimal value carries fewer than " + std::to_string(digits) + " digits");

    const int max_digits = req.value ? 4 * digits : digits;
    std::vector<CycloNum> powers;
    powers.emplace_back(req.generator.conductor(), 1);
    for (int i = 1; i <= d; ++i) powers.push_back(powers.back() * req.generator);

    for (int D = digits; D <= max_digits; D *= 2) {
        const int work = D + 20;
        const long bits = digits_to_bits(work);
        std::vector<BigFloat> x;
        for (const auto& pw : powers) x.push_back(to_float(pw, work));
        if (req.value) {
            x.push_back(to_float(*req.value, work));
        } else {
            BigFloat v(bits);
            mpfr_set(v.raw(), req.decimal->raw(), MPFR_RNDN);
            x.push_back(v);
        }
        const int n = d + 2;
        BigFloat scale(bits), t(bits);
        mpfr_set_ui(scale.raw(), 10, MPFR_RNDN);
        mpfr_pow_ui(scale.raw(), scale.raw(), D, MPFR_RNDN);
        std::vector<std::vector<mpz_class>> basis(n, std::vector<mpz_class>(n + 1, 0));
        for (int i = 0; i < n; ++i) {
            basis[i][i] = 1;
            mpfr_mul(t.raw(), x[i].raw(), scale.raw(), MPFR_RNDN);
            mpfr_round(t.raw(), t.raw());
            mpfr_get_z(basis[i][n].get_mpz_t(), t.raw(), MPFR_RNDN);
        }
        lll_reduce(basis);

        BigFloat tol(bits);
        mpfr_set_ui(tol.raw(), 10, MPFR_RNDN);
        mpfr_pow_si(tol.raw(), tol.raw(), -D / 2, MPFR_RNDN);
        for (const auto& row : basis) {
            const mpz_class& c_last = row[n - 1];
            if (c_last == 0) continue;
            if (!req.value) {
                // Without exact verification, reject relations whose height is typical of a random vector.
                size_t h = 0;
                for (int i = 0; i < n; ++i) h = std::max(h, mpz_sizeinbase(row[i].get_mpz_t(), 10));
                if (static_cast<int>(h) > D / (2 * n) + 1) continue;
            }
            std::vector<mpq_class> coeffs(d + 1);
            for (int i = 0; i <= d; ++i) {
                coeffs[i] = mpq_class(-row[i], c_last);
                coeffs[i].canonicalize();
            }
            if (req.height_bound_bits > 0) {
                bool too_big = false;
                for (const auto& c : coeffs)
                    if (static_cast<int>(mpz_sizeinbase(c.get_num_mpz_t(), 2)) > req.height_bound_bits ||
                        static_cast<int>(mpz_sizeinbase(c.get_den_mpz_t(), 2)) > req.height_bound_bits)
                        too_big = true;
                if (too_big) continue;
            }
            // residual = |sum p_i g^i - value|
            BigFloat acc(bits), term(bits), cq(bits);
            for (int i = 0; i <= d; ++i) {
                mpfr_set_q(cq.raw(), coeffs[i].get_mpq_t(), MPFR_RNDN);
                mpfr_mul(term.raw(), cq.raw(), x[i].raw(), MPFR_RNDN);
                mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
            }
            mpfr_sub(acc.raw(), acc.raw(), x[n - 1].raw(), MPFR_RNDN);
            mpfr_abs(acc.raw(), acc.raw(), MPFR_RNDN);
            if (mpfr_greater_p(acc.raw(), tol.raw())) continue;
            IdentifiedPoly out;
            out.poly = RationalPoly(coeffs);
            out.residual = acc;
            out.digits_used = D;
            if (req.value) {
                if (eval_poly(out.poly, req.generator) != *req.value) continue;
                out.verified_exact = true;
            }
            return out;
        }
    }
    throw NoRelationFound("no relation of degree " + std::to_string(d) + " found at " + std::to_string(max_digits) +
                          " digits");
}

}  // namespace ow
