#include "torusfront/lift.hpp"

namespace torusfront {

Vec2 principal_rep(const Vec2& d) {
    if (d.z > 0) return d;
    if (d.z < 0) return -d;
    return d.y > 0 ? d : -d;  // horizontal: theta0 = 0 needs y > 0
}

int cmp_theta(const Vec2& a, const Vec2& b) {
    // both principal: angles in [0,pi); a before b iff rotating a ccw reaches b
    return sgn(cross(a, b)) > 0 ? -1 : (cross(a, b) == 0 ? 0 : 1);
}

int cmp_lift(const LiftedDir& a, const LiftedDir& b) {
    if (a.half_turns != b.half_turns) return a.half_turns < b.half_turns ? -1 : 1;
    return cmp_theta(a.dir, b.dir);
}

int cmp_lift_halfpi(const LiftedDir& a, long long k) {
    long long j = k - 2 * a.half_turns;  // compare theta0 vs j*(pi/2)
    if (j < 0) return 1;
    if (j == 0) return a.dir.z == 0 ? 0 : 1;  // theta0 == 0 only for horizontal lines
    if (j == 1) {
        if (a.dir.y > 0) return -1;  // theta0 < pi/2
        if (a.dir.y == 0) return 0;
        return 1;
    }
    if (j == 2) return a.dir.z == 0 ? 0 : -1;  // theta0 < pi always, == pi never
    return -1;
}

LiftGap lift_gap(const LiftedDir& a, const LiftedDir& b) {
    LiftGap g;
    g.whole = a.half_turns - b.half_turns;
    g.t_sign = cmp_theta(a.dir, b.dir);  // sign of theta_a - theta_b
    return g;
}

long long gap_floor_pi(const LiftedDir& a, const LiftedDir& b) {
    LiftGap g = lift_gap(a, b);
    long long w = g.whole;
    int t = g.t_sign;
    if (w < 0 || (w == 0 && t < 0)) {  // negate
        w = -w;
        t = -t;
    }
    // |gap| = w*pi + t*|theta diff|, theta diff in (-pi,pi)
    if (t >= 0) return w;
    return w - 1;
}

std::optional<LiftedDir> propagate(const LiftedDir& in, const Vec2& next_dir) {
    Vec2 pr = principal_rep(next_dir);
    Rat d = dot(in.dir, pr);
    if (d == 0) return std::nullopt;  // exactly perpendicular corner
    LiftedDir out;
    out.dir = pr;
    if (d > 0) {
        out.half_turns = in.half_turns;
    } else {
        // |theta diff| in (pi/2, pi): shift against the sign of the diff
        int t = cmp_theta(in.dir, pr);  // -1: theta_next > theta_in
        out.half_turns = in.half_turns + (t < 0 ? -1 : 1);
    }
    return out;
}

LiftedDir lift_near(const Vec2& line_dir, const LiftedDir& near) {
    auto r = propagate(near, line_dir);
    if (r) return *r;
    // perpendicular: pick the lower of the two candidates deterministically
    LiftedDir out;
    out.dir = principal_rep(line_dir);
    int t = cmp_theta(near.dir, out.dir);
    out.half_turns = near.half_turns + (t < 0 ? -1 : 0);
    return out;
}

}  // namespace torusfront
