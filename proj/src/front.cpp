#include "torusfront/front.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace torusfront {

namespace {

long long to_ll(const BigInt& b) { return b.convert_to<long long>(); }

int parity_sign(long long k) { return (k % 2 + 2) % 2 == 0 ? 1 : -1; }

struct PairHit {
    size_t i, j;
    long long ty, tz;
    SegIntersection inter;
};

struct Scan {
    ValidationReport report;
    std::vector<LiftedDir> lifts;
    std::vector<PairHit> hits;
    bool lift_ok = false;
};

void issue(ValidationReport& r, std::string what, std::vector<size_t> idx = {}) {
    r.issues.push_back({std::move(what), std::move(idx)});
}

// Lattice translate range so that bbox(B)+T can meet bbox(A).
std::pair<long long, long long> translate_range(const Rat& amin, const Rat& amax,
                                                const Rat& bmin, const Rat& bmax) {
    long long lo = to_ll(rat_floor(amin - bmax));
    long long hi = to_ll(-rat_floor(-(amax - bmin)));  // ceil
    return {lo, hi};
}

bool collinear_overlap_multi(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
    Vec2 da = a1 - a0;
    if (cross(da, b1 - b0) != 0 || cross(da, b0 - a0) != 0) return false;
    Rat len2 = norm2(da);
    Rat t0 = dot(b0 - a0, da) / len2;
    Rat t1 = dot(b1 - a0, da) / len2;
    if (t0 > t1) std::swap(t0, t1);
    return t1 > 0 && t0 < 1 && !(t0 == t1);  // more than endpoint contact
}

// The single touching point of two non-crossing, non-overlapping segments.
std::optional<Vec2> touch_point(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
    Vec2 da = a1 - a0, db = b1 - b0;
    Rat d = cross(da, db);
    if (d != 0) {
        Vec2 w = b0 - a0;
        Rat t = cross(w, db) / d;
        Rat s = cross(w, da) / d;
        if (t < 0 || t > 1 || s < 0 || s > 1) return std::nullopt;
        return a0 + da * t;
    }
    if (cross(b0 - a0, da) != 0) return std::nullopt;
    for (const Vec2* p : {&b0, &b1})
        if (dist2_point_segment(*p, a0, a1) == 0) return *p;
    for (const Vec2* p : {&a0, &a1})
        if (dist2_point_segment(*p, b0, b1) == 0) return *p;
    return std::nullopt;
}

Scan scan_front(const TorusFront& f) {
    Scan sc;
    ValidationReport& rep = sc.report;
    const size_t n = f.size();

    if (n < 2) {
        issue(rep, "front needs at least 2 vertices");
        return sc;
    }
    if (f.structure_index < 1) {
        issue(rep, "structure index must be >= 1");
        return sc;
    }
    bool structural = true;
    for (size_t i = 0; i < n; ++i) {
        if (f.seg_dir(i).is_zero()) {
            issue(rep, "degenerate segment", {i});
            structural = false;
        }
    }
    if (!structural) return sc;

    // vertex corner rules
    for (size_t i = 0; i < n; ++i) {
        Vec2 din = f.seg_dir(prev_seg(f, i));
        Vec2 dout = f.seg_dir(i);
        Rat d = dot(din, dout);
        bool cusp = f.vertices[i].kind == VertexKind::Cusp;
        if (d == 0) {
            issue(rep, "perpendicular corner (non-generic)", {i});
            structural = false;
        } else if (cusp && d > 0) {
            issue(rep, "cusp vertex without traversal reversal", {i});
            structural = false;
        } else if (!cusp && d < 0) {
            issue(rep, "traversal reversal at smooth vertex", {i});
            structural = false;
        } else if (cusp && cross(din, dout) == 0) {
            issue(rep, "cusp retraces its incoming segment", {i});
            structural = false;
        }
    }
    rep.structural_ok = structural;
    if (!structural) return sc;

    // Gauss lift: nearest-lift propagation, principal start.
    sc.lifts.resize(n);
    sc.lifts[0] = LiftedDir{principal_rep(f.seg_dir(0)), 0};
    bool lift_ok = true;
    for (size_t i = 1; i < n; ++i) {
        auto nx = propagate(sc.lifts[i - 1], f.seg_dir(i));
        if (!nx) {  // cannot happen after corner checks
            issue(rep, "lift propagation ambiguity", {i});
            lift_ok = false;
            break;
        }
        sc.lifts[i] = *nx;
    }
    if (!lift_ok) {
        rep.structural_ok = false;
        return sc;
    }
    sc.lift_ok = true;
    auto back = propagate(sc.lifts[n - 1], f.seg_dir(0));
    rep.lift_closes = back && *back == sc.lifts[0];
    if (!rep.lift_closes) issue(rep, "tangent-line lift does not close up");

    // window condition with the largest witness
    size_t imin = 0, imax = 0;
    for (size_t i = 1; i < n; ++i) {
        if (cmp_lift(sc.lifts[i], sc.lifts[imin]) < 0) imin = i;
        if (cmp_lift(sc.lifts[i], sc.lifts[imax]) > 0) imax = i;
    }
    long long ell = sc.lifts[imin].half_turns;
    if (sc.lifts[imin].dir.z == 0) --ell;  // horizontal minimum sits on the grid
    long long top = 2 * (ell + f.structure_index) + 1;  // in units of pi/2
    rep.has_witness = true;
    rep.witness = ell;
    rep.window_ok = cmp_lift_halfpi(sc.lifts[imax], top) < 0;
    if (!rep.window_ok)
        issue(rep, "lift range exceeds the admissible window", {imin, imax});

    // pairwise interactions with lattice translates
    bool gp = true;
    std::vector<Vec2> starts(n), ends(n);
    for (size_t i = 0; i < n; ++i) {
        starts[i] = f.seg_start(i);
        ends[i] = f.seg_end(i);
    }
    const Vec2 D = f.closure();
    for (size_t i = 0; i < n && gp; ++i) {
        for (size_t j = i; j < n && gp; ++j) {
            Rat ay0 = rat_min(starts[i].y, ends[i].y), ay1 = rat_max(starts[i].y, ends[i].y);
            Rat az0 = rat_min(starts[i].z, ends[i].z), az1 = rat_max(starts[i].z, ends[i].z);
            Rat by0 = rat_min(starts[j].y, ends[j].y), by1 = rat_max(starts[j].y, ends[j].y);
            Rat bz0 = rat_min(starts[j].z, ends[j].z), bz1 = rat_max(starts[j].z, ends[j].z);
            auto [tylo, tyhi] = translate_range(ay0, ay1, by0, by1);
            auto [tzlo, tzhi] = translate_range(az0, az1, bz0, bz1);
            for (long long ty = tylo; ty <= tyhi && gp; ++ty) {
                for (long long tz = tzlo; tz <= tzhi && gp; ++tz) {
                    if (i == j) {
                        if (tz < 0 || (tz == 0 && ty <= 0)) continue;  // canonical half
                    }
                    Vec2 T{Rat(ty), Rat(tz)};
                    Vec2 b0 = starts[j] + T, b1 = ends[j] + T;
                    auto inter = intersect_open(starts[i], ends[i], b0, b1);
                    if (inter) {
                        sc.hits.push_back({i, j, ty, tz, *inter});
                        continue;
                    }
                    if (!segments_touch(starts[i], ends[i], b0, b1)) continue;
                    if (collinear_overlap_multi(starts[i], ends[i], b0, b1)) {
                        issue(rep, "overlapping collinear segments", {i, j});
                        gp = false;
                        continue;
                    }
                    auto tp = touch_point(starts[i], ends[i], b0, b1);
                    if (!tp) continue;
                    bool ep_a = (*tp == starts[i]) || (*tp == ends[i]);
                    bool ep_b = (*tp == b0) || (*tp == b1);
                    // expected contacts from chain adjacency
                    bool allowed = false;
                    if (ep_a && ep_b) {
                        if (j == i + 1 && ty == 0 && tz == 0 && *tp == ends[i]) allowed = true;
                        if (i == 0 && j == n - 1 && *tp == starts[0] && *tp == b1) allowed = true;
                    }
                    if (!allowed) {
                        if (ep_a && ep_b)
                            issue(rep, "distinct vertices meet on the torus", {i, j});
                        else
                            issue(rep, "segment passes through a vertex", {i, j});
                        gp = false;
                    }
                }
            }
        }
    }

    if (gp) {
        // tangency-free: crossings pairwise distinct and away from vertices
        std::vector<Vec2> pts;
        pts.reserve(sc.hits.size());
        for (auto& h : sc.hits) pts.push_back(torus_reduce(h.inter.point));
        for (size_t a = 0; a < pts.size() && gp; ++a)
            for (size_t b = a + 1; b < pts.size() && gp; ++b)
                if (pts[a] == pts[b]) {
                    issue(rep, "three strands meet in a point",
                          {sc.hits[a].i, sc.hits[a].j, sc.hits[b].i, sc.hits[b].j});
                    gp = false;
                }
        for (size_t a = 0; a < pts.size() && gp; ++a)
            for (size_t v = 0; v < n && gp; ++v)
                if (pts[a] == torus_reduce(f.vertices[v].p)) {
                    issue(rep, "crossing coincides with a vertex", {sc.hits[a].i, sc.hits[a].j, v});
                    gp = false;
                }
    }
    rep.general_position = gp;
    return sc;
}

Features features_from_scan(const TorusFront& f, const Scan& sc) {
    Features ft;
    ft.lifts = sc.lifts;
    ft.anchor = sc.report.witness;
    const size_t n = f.size();
    ft.sigma.resize(n);
    for (size_t i = 0; i < n; ++i) {
        int s = sgn(dot(f.seg_dir(i), ft.lifts[i].dir));
        ft.sigma[i] = s * parity_sign(ft.lifts[i].half_turns - ft.anchor);
    }
    for (size_t v = 0; v < n; ++v) {
        if (f.vertices[v].kind != VertexKind::Cusp) continue;
        size_t sin = prev_seg(f, v), sout = v;
        int sg_in = ft.sigma[sin];
        int dlift = cmp_lift(ft.lifts[sin], ft.lifts[sout]);  // sign of g_in - g_out
        CuspInfo c;
        c.vertex_index = v;
        c.side = sg_in < 0 ? CuspSide::Left : CuspSide::Right;
        c.sense = (sg_in * dlift > 0) ? CuspSense::Ascending : CuspSense::Descending;
        c.sign = c.sense == CuspSense::Ascending ? 1 : -1;
        ft.cusps.push_back(c);
    }
    for (auto& h : sc.hits) {
        Crossing x;
        x.seg_a = h.i;
        x.seg_b = h.j;
        x.ty = h.ty;
        x.tz = h.tz;
        x.point = torus_reduce(h.inter.point);
        x.param_a = h.inter.ta;
        x.param_b = h.inter.tb;
        int c = cmp_lift(ft.lifts[h.i], ft.lifts[h.j]);
        x.a_over = c < 0;
        x.gap_floor = gap_floor_pi(ft.lifts[h.i], ft.lifts[h.j]);
        x.sign = ft.sigma[h.i] * ft.sigma[h.j] * parity_sign(x.gap_floor);
        ft.crossings.push_back(x);
    }
    std::sort(ft.crossings.begin(), ft.crossings.end(), [](const Crossing& a, const Crossing& b) {
        if (a.seg_a != b.seg_a) return a.seg_a < b.seg_a;
        if (a.param_a != b.param_a) return a.param_a < b.param_a;
        if (a.seg_b != b.seg_b) return a.seg_b < b.seg_b;
        return a.param_b < b.param_b;
    });
    return ft;
}

}  // namespace

Vec2 torus_reduce(const Vec2& p) { return {rat_frac(p.y), rat_frac(p.z)}; }

size_t prev_seg(const TorusFront& f, size_t i) { return (i + f.size() - 1) % f.size(); }
size_t next_seg(const TorusFront& f, size_t i) { return (i + 1) % f.size(); }

TorusFront TorusFront::translated(const Vec2& t) const {
    TorusFront g = *this;
    for (auto& v : g.vertices) v.p = v.p + t;
    return g;
}

TorusFront TorusFront::rotated_basepoint(size_t k) const {
    TorusFront g = *this;
    g.vertices.clear();
    const Vec2 D = closure();
    for (size_t i = 0; i < size(); ++i) {
        size_t src = (k + i) % size();
        Vertex v = vertices[src];
        if (k + i >= size()) v.p = v.p + D;
        g.vertices.push_back(v);
    }
    return g;
}

TorusFront TorusFront::reversed() const {
    TorusFront g = *this;
    g.alpha = -alpha;
    g.beta = -beta;
    g.vertices.clear();
    const Vec2 D = closure();
    g.vertices.push_back(vertices[0]);
    for (size_t i = size(); i-- > 1;) {
        Vertex v = vertices[i];
        v.p = v.p - D;
        g.vertices.push_back(v);
    }
    return g;
}

ValidationReport validate(const TorusFront& f) { return scan_front(f).report; }

std::vector<LiftedDir> gauss_lift(const TorusFront& f) {
    Scan sc = scan_front(f);
    if (!sc.lift_ok) throw FrontError("gauss_lift: structurally invalid front");
    return sc.lifts;
}

std::pair<long long, long long> homotopy_class(const TorusFront& f) {
    Vec2 d{Rat(0), Rat(0)};
    for (size_t i = 0; i < f.size(); ++i) d = d + f.seg_dir(i);
    if (d.y != Rat(f.beta) || d.z != Rat(f.alpha))
        throw FrontError("declared holonomy disagrees with the traversal displacement");
    return {f.alpha, f.beta};
}

int Features::cusp_pos() const {
    int k = 0;
    for (auto& c : cusps) k += c.sign > 0;
    return k;
}
int Features::cusp_neg() const { return static_cast<int>(cusps.size()) - cusp_pos(); }
int Features::cross_pos() const {
    int k = 0;
    for (auto& x : crossings) k += x.sign > 0;
    return k;
}
int Features::cross_neg() const { return static_cast<int>(crossings.size()) - cross_pos(); }

Features analyze(const TorusFront& f) {
    Scan sc = scan_front(f);
    if (!sc.report.valid()) {
        std::string msg = "invalid front";
        if (!sc.report.issues.empty()) msg += ": " + sc.report.issues.front().what;
        throw FrontError(msg);
    }
    return features_from_scan(f, sc);
}

std::vector<CuspInfo> cusps(const TorusFront& f) { return analyze(f).cusps; }
std::vector<Crossing> crossings(const TorusFront& f) { return analyze(f).crossings; }

std::vector<Crossing> mixed_crossings(const TorusFront& f1, const TorusFront& f2) {
    Features a = analyze(f1), b = analyze(f2);

    // Put both lifts into one admissible window. The second front's lift is
    // shifted by whole half-turns; the smallest workable shift is chosen.
    long long n = f1.structure_index;
    if (f2.structure_index != f1.structure_index)
        throw FrontError("mixed fronts in different contact structures");
    auto window_fits = [&](long long shift) {
        LiftedDir lo = a.lifts[0], hi = a.lifts[0];
        for (auto& l : a.lifts) {
            if (cmp_lift(l, lo) < 0) lo = l;
            if (cmp_lift(l, hi) > 0) hi = l;
        }
        for (auto l : b.lifts) {
            l.half_turns += shift;
            if (cmp_lift(l, lo) < 0) lo = l;
            if (cmp_lift(l, hi) > 0) hi = l;
        }
        long long ell = lo.half_turns;
        if (lo.dir.z == 0) --ell;
        return cmp_lift_halfpi(hi, 2 * (ell + n) + 1) < 0;
    };
    long long shift = 0;
    bool found = false;
    for (long long mag = 0; mag <= 2 * n + 2 && !found; ++mag) {
        for (long long s : {mag, -mag}) {
            if (window_fits(s)) {
                shift = s;
                found = true;
                break;
            }
        }
    }
    if (!found) throw FrontError("fronts admit no common lift window");

    std::vector<LiftedDir> lb = b.lifts;
    for (auto& l : lb) l.half_turns += shift;
    // union anchor
    LiftedDir lo = a.lifts[0];
    for (auto& l : a.lifts)
        if (cmp_lift(l, lo) < 0) lo = l;
    for (auto& l : lb)
        if (cmp_lift(l, lo) < 0) lo = l;
    long long anchor = lo.half_turns;
    if (lo.dir.z == 0) --anchor;
    auto sig = [&](const TorusFront& fr, const std::vector<LiftedDir>& ls, size_t i) {
        int s = sgn(dot(fr.seg_dir(i), ls[i].dir));
        return s * parity_sign(ls[i].half_turns - anchor);
    };

    std::vector<Crossing> out;
    for (size_t i = 0; i < f1.size(); ++i) {
        Vec2 a0 = f1.seg_start(i), a1 = f1.seg_end(i);
        for (size_t j = 0; j < f2.size(); ++j) {
            Vec2 b0 = f2.seg_start(j), b1 = f2.seg_end(j);
            Rat ay0 = rat_min(a0.y, a1.y), ay1 = rat_max(a0.y, a1.y);
            Rat az0 = rat_min(a0.z, a1.z), az1 = rat_max(a0.z, a1.z);
            Rat by0 = rat_min(b0.y, b1.y), by1 = rat_max(b0.y, b1.y);
            Rat bz0 = rat_min(b0.z, b1.z), bz1 = rat_max(b0.z, b1.z);
            long long tylo = to_ll(rat_floor(ay0 - by1)), tyhi = to_ll(-rat_floor(-(ay1 - by0)));
            long long tzlo = to_ll(rat_floor(az0 - bz1)), tzhi = to_ll(-rat_floor(-(az1 - bz0)));
            for (long long ty = tylo; ty <= tyhi; ++ty)
                for (long long tz = tzlo; tz <= tzhi; ++tz) {
                    Vec2 T{Rat(ty), Rat(tz)};
                    Vec2 c0 = b0 + T, c1 = b1 + T;
                    auto inter = intersect_open(a0, a1, c0, c1);
                    if (!inter) {
                        if (segments_touch(a0, a1, c0, c1))
                            throw FrontError("non-generic contact between the two fronts");
                        continue;
                    }
                    Crossing x;
                    x.seg_a = i;
                    x.seg_b = j;
                    x.ty = ty;
                    x.tz = tz;
                    x.point = torus_reduce(inter->point);
                    x.param_a = inter->ta;
                    x.param_b = inter->tb;
                    int c = cmp_lift(a.lifts[i], lb[j]);
                    if (c == 0 && cross(a.lifts[i].dir, lb[j].dir) == 0)
                        throw FrontError("parallel strands meet non-transversally");
                    x.a_over = c < 0;
                    x.gap_floor = gap_floor_pi(a.lifts[i], lb[j]);
                    x.sign = sig(f1, a.lifts, i) * sig(f2, lb, j) * parity_sign(x.gap_floor);
                    out.push_back(x);
                }
        }
    }
    return out;
}

CanonicalKey canonical_form(const TorusFront& f) {
    Features ft = analyze(f);
    const size_t n = f.size();

    struct Ev {
        bool is_cusp;
        char side, sense;          // cusp payload
        size_t cross_id;           // pass payload
        bool over;
        int sign;
        long long gapf;
    };
    // events in traversal order: passes along each segment, then end-vertex cusp
    std::vector<std::vector<std::pair<Rat, Ev>>> per_seg(n);
    for (size_t c = 0; c < ft.crossings.size(); ++c) {
        const Crossing& x = ft.crossings[c];
        Ev ea{false, 0, 0, c, x.a_over, x.sign, x.gap_floor};
        Ev eb{false, 0, 0, c, !x.a_over, x.sign, x.gap_floor};
        per_seg[x.seg_a].push_back({x.param_a, ea});
        per_seg[x.seg_b].push_back({x.param_b, eb});
    }
    std::vector<Ev> events;
    for (size_t i = 0; i < n; ++i) {
        auto& v = per_seg[i];
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [t, e] : v) events.push_back(e);
        size_t endv = (i + 1) % n;
        if (f.vertices[endv].kind == VertexKind::Cusp) {
            for (auto& c : ft.cusps)
                if (c.vertex_index == endv) {
                    Ev e{true, c.side == CuspSide::Left ? 'L' : 'R',
                         c.sense == CuspSense::Ascending ? 'A' : 'D', 0, false, 0, 0};
                    events.push_back(e);
                }
        }
    }

    std::ostringstream head;
    head << "v1;n=" << f.structure_index << ";h=" << f.alpha << "," << f.beta << "|";
    std::string best;
    const size_t m = events.size();
    if (m == 0) {
        best = head.str();
        return {best};
    }
    for (size_t r = 0; r < m; ++r) {
        std::map<size_t, size_t> renum;
        std::ostringstream os;
        os << head.str();
        for (size_t k = 0; k < m; ++k) {
            const Ev& e = events[(r + k) % m];
            if (e.is_cusp) {
                os << "C" << e.side << e.sense << ";";
            } else {
                auto it = renum.find(e.cross_id);
                size_t id;
                if (it == renum.end()) {
                    id = renum.size();
                    renum[e.cross_id] = id;
                } else {
                    id = it->second;
                }
                os << "X" << id << (e.over ? "o" : "u") << (e.sign > 0 ? "+" : "-") << "g"
                   << e.gapf << ";";
            }
        }
        std::string s = os.str();
        if (best.empty() || s < best) best = s;
    }
    return {best};
}

uint64_t key_digest(const CanonicalKey& k) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : k.code) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string key_digest_hex(const CanonicalKey& k) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(key_digest(k)));
    return buf;
}

TorusFront pushoff(const TorusFront& f) {
    Features ft = analyze(f);
    const size_t n = f.size();
    const Vec2 D = f.closure();

    for (int attempt = 0; attempt < 14; ++attempt) {
        Rat eps = Rat(1, 64);
        for (int k = 0; k < attempt; ++k) eps /= 8;

        // per-segment displacement along the coorientation normal
        std::vector<Vec2> w(n);
        for (size_t i = 0; i < n; ++i) {
            Vec2 u = ft.lifts[i].dir;
            if (parity_sign(ft.lifts[i].half_turns - ft.anchor) < 0) u = -u;
            Vec2 nu = rot90(u);
            Rat m = rat_max(rat_abs(nu.y), rat_abs(nu.z));
            w[i] = nu * (eps / m);
        }

        TorusFront g = f;
        for (size_t v = 0; v < n; ++v) {
            size_t sin = prev_seg(f, v), sout = v;
            Vec2 din = f.seg_dir(sin), dout = f.seg_dir(sout);
            Vec2 pin = f.seg_start(sin) + w[sin];
            if (v == 0) pin = pin - D;  // the closing segment approaches v0 from one period down
            Vec2 pout = f.seg_start(sout) + w[sout];
            Rat dn = cross(din, dout);
            if (dn == 0) {
                g.vertices[v].p = f.vertices[v].p + w[sout];
                continue;
            }
            Rat t = cross(pout - pin, dout) / dn;
            g.vertices[v].p = pin + din * t;
        }
        try {
            if (!validate(g).valid()) continue;
            auto mixed = mixed_crossings(f, g);
            size_t expect = 2 * ft.crossings.size() + ft.cusps.size();
            if (mixed.size() != expect) continue;
            int sum = 0;
            for (auto& x : mixed) sum += x.sign;
            int want = 2 * (ft.cross_pos() - ft.cross_neg()) - static_cast<int>(ft.cusps.size());
            if (sum != want) continue;
            return g;
        } catch (const FrontError&) {
            continue;
        }
    }
    throw FrontError("pushoff: cannot choose a displacement for this front");
}

}  // namespace torusfront
