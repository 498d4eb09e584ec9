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

#include "outerweb/expr.hpp"

#include <cctype>

#include "outerweb/errors.hpp"
#include "outerweb/family.hpp"
#include "outerweb/fieldid.hpp"
#include "outerweb/volunteers.hpp"

namespace ow {

namespace {

class Parser {
   public:
    Parser(int N, const std::string& s) : N_(N), s_(s) {}

    CycloNum parse() {
        CycloNum v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw DomainError("expression \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 15) fail("integer literal too long");
        return std::stol(s_.substr(start, pos_ - start));
    }

    CycloNum expr() {
        CycloNum v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    CycloNum term() {
        CycloNum v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                CycloNum d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    CycloNum unary() {
        if (eat('-')) return -unary();
        CycloNum base = atom();
        if (!eat('^')) return base;
        bool neg = eat('-');
        long e = integer();
        CycloNum r(base.conductor(), 1);
        for (long i = 0; i < e; ++i) r *= base;
        if (neg) {
            if (r.is_zero()) fail("zero to a negative power");
            r = r.inverse();
        }
        return r;
    }

    int index() {
        if (!eat('[')) fail("expected '['");
        long k = integer();
        if (!eat(']')) fail("expected ']'");
        return static_cast<int>(k);
    }

    CycloNum atom() {
        if (eat('(')) {
            CycloNum v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return CycloNum(1, mpq_class(integer()));
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (name.empty()) fail("expected a number or a name");
        return named(name);
    }

    CycloNum named(const std::string& name) {
        if (name == "hN") return CycloNum(1, 1);
        if (name == "genscale") return genscale(N_);
        if (name == "lambda") return lambda(N_);
        if (name == "hPx") return px_height(N_);
        if (name == "hSx") return need(40), sx_height_n40();
        if (name == "hQ") return need(36), q_height_n36();
        if (name == "s0") return need(39), dx_sides_n39().s0;
        if (name == "s1") return need(39), dx_sides_n39().s1;
        if (name == "s2") return need(39), dx_sides_n39().s2;
        if (name == "s2_tan78") return need(39), dx_sides_n39().s2_tan78;
        if (name == "tan") {
            int k = index();
            return tan_pi(N_, k);
        }
        if (name == "hS" || name == "scale") {
            int k = index();
            Scales sc = heights_and_scales(N_);
            if (k < 1 || k >= static_cast<int>(sc.hS.size())) fail("index out of range");
            return name == "hS" ? sc.hS[k] : sc.scale[k];
        }
        if (name == "hD") {
            int k = index();
            if (k < 1) fail("index out of range");
            return dk_ladder(N_, k).back().hD;
        }
        if (name == "hDS") {
            int k = index();
            S2Family f = s2_family(N_);
            if (k < 1 || k > f.right.max_index()) fail("index out of range");
            return f.ds(k, +1).height;
        }
        fail("unknown name " + name);
    }

    void need(int n) const {
        if (N_ != n) throw DomainError("this quantity is defined for N = " + std::to_string(n) + " only");
    }

    int N_;
    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

CycloNum eval_expr(int N, const std::string& expr) { return Parser(N, expr).parse(); }

}  // namespace ow
