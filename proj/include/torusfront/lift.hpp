#pragma once

#include "torusfront/geom.hpp"

namespace torusfront {

// Exact representation of a lifted tangent-line angle  g = theta0 + k*pi,
// where theta0 in [0,pi) is the principal angle of the line spanned by a
// nonzero rational vector. All comparisons are sign tests; no trigonometry.
struct LiftedDir {
    Vec2 dir;             // principal representative: z > 0, or z == 0 && y > 0
    long long half_turns; // k

    bool operator==(const LiftedDir& o) const {
        return half_turns == o.half_turns && cross(dir, o.dir) == 0;
    }
};

// Principal representative of the line spanned by d (d nonzero).
Vec2 principal_rep(const Vec2& d);

// theta0 comparison of two principal representatives; -1/0/+1.
int cmp_theta(const Vec2& a, const Vec2& b);

// Compare two lifted angles; -1/0/+1.
int cmp_lift(const LiftedDir& a, const LiftedDir& b);

// Compare g against k*(pi/2); -1/0/+1.
int cmp_lift_halfpi(const LiftedDir& a, long long k);

// Decomposition of g_a - g_b as whole*pi + t with t in (-pi,pi):
// whole = half-turn difference, t_sign = sign of the theta0 difference.
struct LiftGap {
    long long whole;
    int t_sign;
};
LiftGap lift_gap(const LiftedDir& a, const LiftedDir& b);

// floor(|g_a - g_b| / pi); requires the two lines distinct or gap zero.
long long gap_floor_pi(const LiftedDir& a, const LiftedDir& b);

// Nearest-lift propagation across a vertex: given the incoming lift and the
// next segment direction, returns the unique lift of the next line within
// (-pi/2, pi/2) of the incoming one. Fails (nullopt) when the lines are
// exactly perpendicular.
std::optional<LiftedDir> propagate(const LiftedDir& in, const Vec2& next_dir);

// Lift with the given principal line and the half-turn count shifted so the
// result is as close as possible to `near`.
LiftedDir lift_near(const Vec2& line_dir, const LiftedDir& near);

}  // namespace torusfront
