#include "torusfront/geom.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace torusfront {

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

BigInt rat_floor(const Rat& x) {
    BigInt q = numerator(x) / denominator(x);
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

Rat rat_frac(const Rat& x) { return x - Rat(rat_floor(x)); }

Rat dist2_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    Rat len2 = norm2(ab);
    if (len2 == 0) return norm2(p - a);
    Rat t = dot(p - a, ab) / len2;
    if (t <= 0) return norm2(p - a);
    if (t >= 1) return norm2(p - b);
    Vec2 proj = a + ab * t;
    return norm2(p - proj);
}

bool segments_touch(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
    Vec2 da = a1 - a0, db = b1 - b0;
    Rat d = cross(da, db);
    Vec2 w = b0 - a0;
    if (d != 0) {
        Rat t = cross(w, db) / d;
        Rat s = cross(w, da) / d;
        return t >= 0 && t <= 1 && s >= 0 && s <= 1;
    }
    // parallel
    if (cross(w, da) != 0) return false;  // distinct parallel lines
    // collinear: compare parameter intervals along da
    Rat len2 = norm2(da);
    if (len2 == 0) return dist2_point_segment(a0, b0, b1) == 0;
    Rat t0 = dot(b0 - a0, da) / len2;
    Rat t1 = dot(b1 - a0, da) / len2;
    if (t0 > t1) std::swap(t0, t1);
    return t1 >= 0 && t0 <= 1;
}

Rat dist2_segment_segment(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
    if (segments_touch(a0, a1, b0, b1)) return Rat(0);
    Rat m = dist2_point_segment(b0, a0, a1);
    m = rat_min(m, dist2_point_segment(b1, a0, a1));
    m = rat_min(m, dist2_point_segment(a0, b0, b1));
    m = rat_min(m, dist2_point_segment(a1, b0, b1));
    return m;
}

std::optional<SegIntersection> intersect_open(const Vec2& a0, const Vec2& a1,
                                              const Vec2& b0, const Vec2& b1) {
    Vec2 da = a1 - a0, db = b1 - b0;
    Rat d = cross(da, db);
    if (d == 0) return std::nullopt;
    Vec2 w = b0 - a0;
    Rat t = cross(w, db) / d;
    Rat s = cross(w, da) / d;
    if (t <= 0 || t >= 1 || s <= 0 || s >= 1) return std::nullopt;
    SegIntersection r;
    r.point = a0 + da * t;
    r.ta = t;
    r.tb = s;
    return r;
}

bool point_in_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    int s1 = sgn(cross(b - a, p - a));
    int s2 = sgn(cross(c - b, p - b));
    int s3 = sgn(cross(a - c, p - c));
    return (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
}

std::string rat_to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            if (s[0] == '-' || s[0] == '+') pos = 1;
            if (pos >= s.size()) return std::nullopt;
            for (size_t i = pos; i < s.size(); ++i)
                if (!isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
            return Rat(BigInt(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) return std::nullopt;
        size_t pos = (num[0] == '-' || num[0] == '+') ? 1 : 0;
        if (pos >= num.size()) return std::nullopt;
        for (size_t i = pos; i < num.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(num[i]))) return std::nullopt;
        for (char c : den)
            if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        BigInt d(den);
        if (d == 0) return std::nullopt;
        return Rat(BigInt(num), d);
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace torusfront
