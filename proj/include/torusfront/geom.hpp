#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torusfront {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sgn(const Rat& x) { return x.sign(); }
inline int sgn(const BigInt& x) { return x.sign(); }

// Point / vector in universal-cover coordinates of the torus.
// y runs horizontally, z vertically; the torus is the quotient by Z^2.
struct Vec2 {
    Rat y, z;

    Vec2() = default;
    Vec2(Rat y_, Rat z_) : y(std::move(y_)), z(std::move(z_)) {}

    Vec2 operator+(const Vec2& o) const { return {y + o.y, z + o.z}; }
    Vec2 operator-(const Vec2& o) const { return {y - o.y, z - o.z}; }
    Vec2 operator-() const { return {-y, -z}; }
    Vec2 operator*(const Rat& s) const { return {y * s, z * s}; }
    bool operator==(const Vec2& o) const { return y == o.y && z == o.z; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool is_zero() const { return y == 0 && z == 0; }
};

inline Rat dot(const Vec2& a, const Vec2& b) { return a.y * b.y + a.z * b.z; }
inline Rat cross(const Vec2& a, const Vec2& b) { return a.y * b.z - a.z * b.y; }
inline Vec2 rot90(const Vec2& v) { return {-v.z, v.y}; }
inline Rat norm2(const Vec2& v) { return v.y * v.y + v.z * v.z; }

// Squared distance from point p to segment [a,b].
Rat dist2_point_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// Squared distance between two segments.
Rat dist2_segment_segment(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1);

// Proper interior intersection of open segments (a0,a1) and (b0,b1).
// Returns the point and the parameters along each segment when the segments
// cross transversally in their interiors; nullopt for disjoint, touching or
// collinear configurations.
struct SegIntersection {
    Vec2 point;
    Rat ta, tb;  // parameters in (0,1)
};
std::optional<SegIntersection> intersect_open(const Vec2& a0, const Vec2& a1,
                                              const Vec2& b0, const Vec2& b1);

// True if the closed segments share at least one point.
bool segments_touch(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1);

// True if p lies strictly inside triangle (a,b,c); boundary does not count.
bool point_in_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c);

Rat rat_abs(const Rat& x);
Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);

// Fractional part in [0,1).
Rat rat_frac(const Rat& x);
// Largest integer <= x.
BigInt rat_floor(const Rat& x);

std::string rat_to_string(const Rat& x);
std::optional<Rat> rat_from_string(const std::string& s);

}  // namespace torusfront
