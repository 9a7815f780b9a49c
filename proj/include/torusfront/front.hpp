#pragma once

#include "torusfront/lift.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusfront {

struct FrontError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class VertexKind : uint8_t { Smooth, Cusp };

struct Vertex {
    Vec2 p;  // universal-cover coordinates
    VertexKind kind = VertexKind::Smooth;
};

// Oriented piecewise-linear front on the torus. Vertices live in the
// universal cover; segment i joins vertices[i] to vertices[i+1], and the last
// segment closes onto vertices[0] displaced by the holonomy.
//
// Holonomy convention: alpha counts net vertical (z) winding, beta net
// horizontal (y) winding, so the closing displacement is (dy,dz)=(beta,alpha).
// The constant-slope curve of slope m/n then has holonomy (m,n).
struct TorusFront {
    std::vector<Vertex> vertices;
    long long alpha = 0;
    long long beta = 0;
    int structure_index = 1;  // n >= 1

    size_t size() const { return vertices.size(); }
    Vec2 closure() const { return Vec2(Rat(beta), Rat(alpha)); }

    Vec2 seg_start(size_t i) const { return vertices[i].p; }
    Vec2 seg_end(size_t i) const {
        return i + 1 < vertices.size() ? vertices[i + 1].p : vertices[0].p + closure();
    }
    Vec2 seg_dir(size_t i) const { return seg_end(i) - seg_start(i); }

    TorusFront translated(const Vec2& t) const;
    TorusFront rotated_basepoint(size_t new_first_vertex) const;
    TorusFront reversed() const;
};

struct ValidationIssue {
    std::string what;
    std::vector<size_t> indices;
};

struct ValidationReport {
    bool structural_ok = false;
    bool lift_closes = false;     // condition (i): the tangent-line lift returns to itself
    bool window_ok = false;       // condition (ii): all lifts inside (l*pi, (l+n+1/2)*pi)
    bool general_position = false;
    bool has_witness = false;
    long long witness = 0;        // the l of condition (ii) when window_ok
    std::vector<ValidationIssue> issues;

    bool valid() const { return structural_ok && lift_closes && window_ok && general_position; }
};

ValidationReport validate(const TorusFront& f);

// Per-segment lifted tangent lines; the first segment gets its principal
// lift, the rest follow by the nearest-lift rule. Throws FrontError on
// structural failures (degenerate segments, perpendicular corners).
std::vector<LiftedDir> gauss_lift(const TorusFront& f);

// Verified holonomy (alpha, beta).
std::pair<long long, long long> homotopy_class(const TorusFront& f);

enum class CuspSide : uint8_t { Left, Right };
enum class CuspSense : uint8_t { Ascending, Descending };

struct CuspInfo {
    size_t vertex_index;
    CuspSide side;
    CuspSense sense;
    int sign;  // +1 ascending, -1 descending
};

struct Crossing {
    size_t seg_a, seg_b;    // seg_a <= seg_b; for seg_a == seg_b a translate self-crossing
    long long ty, tz;       // lattice translate applied to seg_b's copy
    Vec2 point;             // fundamental-domain representative
    Rat param_a, param_b;   // positions along the two segments, in (0,1)
    bool a_over;            // true when seg_a has the smaller lift (nearer the viewer)
    int sign;
    long long gap_floor;    // floor(|lift gap| / pi)
};

// Full analysis of a valid front: lifts, classification branch, orientation
// classes, cusps and crossings. Throws FrontError when the front is invalid.
struct Features {
    std::vector<LiftedDir> lifts;
    long long anchor = 0;         // l*: largest witness; classification uses g - l*pi
    std::vector<int> sigma;       // per segment: +1 traversal along the lifted direction
    std::vector<CuspInfo> cusps;
    std::vector<Crossing> crossings;

    int cusp_pos() const;
    int cusp_neg() const;
    int cross_pos() const;
    int cross_neg() const;
};

Features analyze(const TorusFront& f);

std::vector<CuspInfo> cusps(const TorusFront& f);
std::vector<Crossing> crossings(const TorusFront& f);

// Transverse crossings with one strand from each front; both fronts must be
// valid and their union in general position.
std::vector<Crossing> mixed_crossings(const TorusFront& f1, const TorusFront& f2);

struct CanonicalKey {
    std::string code;
    bool operator==(const CanonicalKey& o) const { return code == o.code; }
    bool operator<(const CanonicalKey& o) const { return code < o.code; }
};

// Basepoint-, translation- and refinement-invariant combinatorial code of the
// cyclic feature sequence together with holonomy and structure index.
CanonicalKey canonical_form(const TorusFront& f);

uint64_t key_digest(const CanonicalKey& k);
std::string key_digest_hex(const CanonicalKey& k);

// Parallel copy displaced in the coorientation direction. The displacement is
// chosen automatically; the result satisfies the mixed-crossing structure
// (two like-signed crossings per original crossing, one negative per cusp).
TorusFront pushoff(const TorusFront& f);

// Helpers shared by the move engine.
Vec2 torus_reduce(const Vec2& p);
size_t prev_seg(const TorusFront& f, size_t i);
size_t next_seg(const TorusFront& f, size_t i);

}  // namespace torusfront
