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

#ifndef OUTERWEB_GEOMETRY_HPP
#define OUTERWEB_GEOMETRY_HPP

#include "outerweb/cyclo.hpp"

namespace ow {

struct FloatPoint {
    double x = 0, y = 0;
};

// Point with exact real coordinates.
struct ExactPoint {
    CycloNum x, y;

    ExactPoint() = default;
    ExactPoint(CycloNum x_, CycloNum y_) : x(std::move(x_)), y(std::move(y_)) {}
    static ExactPoint origin(int conductor) { return {CycloNum(conductor), CycloNum(conductor)}; }

    ExactPoint operator+(const ExactPoint& o) const { return {x + o.x, y + o.y}; }
    ExactPoint operator-(const ExactPoint& o) const { return {x - o.x, y - o.y}; }
    ExactPoint operator-() const { return {-x, -y}; }
    ExactPoint operator*(const CycloNum& s) const { return {x * s, y * s}; }
    ExactPoint operator*(const mpq_class& s) const { return {x * s, y * s}; }
    bool operator==(const ExactPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const ExactPoint& o) const { return !(*this == o); }

    ExactPoint lift(int conductor) const { return {x.lift(conductor), y.lift(conductor)}; }
    FloatPoint to_float() const { return {to_double(x), to_double(y)}; }
};

// (b - a) x (c - a)
inline CycloNum orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline double orient(const FloatPoint& a, const FloatPoint& b, const FloatPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace ow

#endif
