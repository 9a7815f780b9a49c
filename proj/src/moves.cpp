#include "torusfront/moves.hpp"

#include "patches.hpp"

#include <algorithm>
#include <map>

namespace torusfront {

namespace {

long long parity(long long k) { return ((k % 2) + 2) % 2; }

constexpr int kRemove = 8;

void require(bool ok, const char* msg) {
    if (!ok) throw FrontError(msg);
}

Vec2 cross_point_a(const TorusFront& f, const Crossing& x) {
    return f.seg_start(x.seg_a) + f.seg_dir(x.seg_a) * x.param_a;
}
Vec2 cross_point_b(const TorusFront& f, const Crossing& x) {
    return f.seg_start(x.seg_b) + f.seg_dir(x.seg_b) * x.param_b;
}

TorusFront finish(const TorusFront& before, TorusFront g, MoveKind kind) {
    if (!validate(g).valid()) throw FrontError("move result fails validation");
    long long da = g.alpha - before.alpha, db = g.beta - before.beta;
    bool hol_ok;
    switch (kind) {
        case MoveKind::IVFront: hol_ok = (da == 0 && (db == 1 || db == -1)); break;
        case MoveKind::IVBack: hol_ok = (db == 0 && (da == 1 || da == -1)); break;
        default: hol_ok = (da == 0 && db == 0);
    }
    if (!hol_ok) throw FrontError("move result violates the holonomy law");
    return g;
}

// ------------------------------------------------------- walking the front

// next crossing pass strictly after (seg, t) in traversal order
struct WalkHit {
    size_t crossing;
    bool a_side;
    size_t seg;
    Rat param;
    int cusps_passed;
    bool wrapped;  // walked through the basepoint
};

std::optional<WalkHit> next_pass(const TorusFront& f, const Features& ft, size_t seg, Rat t) {
    int cusps = 0;
    bool wrapped = false;
    size_t s = seg;
    Rat lo = t;
    for (size_t hop = 0; hop <= f.size(); ++hop) {
        std::optional<WalkHit> best;
        for (size_t c = 0; c < ft.crossings.size(); ++c) {
            const Crossing& x = ft.crossings[c];
            if (x.seg_a == s && x.param_a > lo && (!best || x.param_a < best->param))
                best = WalkHit{c, true, s, x.param_a, cusps, wrapped};
            if (x.seg_b == s && x.param_b > lo && (!best || x.param_b < best->param))
                best = WalkHit{c, false, s, x.param_b, cusps, wrapped};
        }
        if (best) return best;
        size_t nv = next_seg(f, s);
        if (nv == 0) wrapped = true;
        if (f.vertices[nv].kind == VertexKind::Cusp) ++cusps;
        s = nv;
        lo = Rat(-1);
    }
    return std::nullopt;
}

// Replace the forward sub-path (seg_from, t_from) .. (seg_to, t_to), which
// must not pass the basepoint, by the polyline through `mids`.
TorusFront reroute(const TorusFront& f, size_t seg_from, const Rat& t_from, size_t seg_to,
                   const Rat& t_to, const std::vector<Vec2>& mids) {
    require(seg_from < seg_to || (seg_from == seg_to && t_from < t_to),
            "reroute: sub-path wraps the basepoint");
    TorusFront g;
    g.alpha = f.alpha;
    g.beta = f.beta;
    g.structure_index = f.structure_index;
    for (size_t i = 0; i <= seg_from; ++i) g.vertices.push_back(f.vertices[i]);
    g.vertices.push_back({f.seg_start(seg_from) + f.seg_dir(seg_from) * t_from,
                          VertexKind::Smooth});
    for (auto& p : mids) g.vertices.push_back({p, VertexKind::Smooth});
    g.vertices.push_back({f.seg_start(seg_to) + f.seg_dir(seg_to) * t_to, VertexKind::Smooth});
    for (size_t i = seg_to + 1; i < f.size(); ++i) g.vertices.push_back(f.vertices[i]);
    return g;
}

// --------------------------------------------------------------------- ISO

TorusFront apply_iso(const TorusFront& f, const MoveInstance& m) {
    require(m.ids.size() >= 1, "iso: missing id");
    TorusFront g = f;
    if (m.variant == 0) {  // split
        size_t seg = static_cast<size_t>(m.ids[0]);
        require(seg < f.size() && m.params.size() == 1, "iso split: bad site");
        Rat t = m.params[0];
        require(t > 0 && t < 1, "iso split: param out of range");
        Vec2 p = f.seg_start(seg) + f.seg_dir(seg) * t;
        g.vertices.insert(g.vertices.begin() + static_cast<long>(seg) + 1,
                          Vertex{p, VertexKind::Smooth});
    } else if (m.variant == 1) {  // erase a collinear vertex
        size_t v = static_cast<size_t>(m.ids[0]);
        require(v < f.size(), "iso erase: bad vertex");
        require(f.vertices[v].kind == VertexKind::Smooth, "iso erase: not smooth");
        require(cross(f.seg_dir(prev_seg(f, v)), f.seg_dir(v)) == 0, "iso erase: not collinear");
        require(f.size() > 2, "iso erase: front too small");
        g.vertices.erase(g.vertices.begin() + static_cast<long>(v));
    } else if (m.variant == 2) {  // reposition a vertex
        size_t v = static_cast<size_t>(m.ids[0]);
        require(v < f.size() && m.params.size() == 2, "iso move: bad site");
        g.vertices[v].p = {m.params[0], m.params[1]};
    } else {
        throw FrontError("iso: unknown variant");
    }
    g = finish(f, std::move(g), MoveKind::Iso);
    if (!(canonical_form(g) == canonical_form(f))) throw FrontError("iso: canonical key changed");
    return g;
}

// ---------------------------------------------------------------------- R1

TorusFront apply_r1_add(const TorusFront& f, const MoveInstance& m) {
    require(m.ids.size() == 1 && m.params.size() == 2, "r1 add: bad site");
    size_t seg = static_cast<size_t>(m.ids[0]);
    require(seg < f.size(), "r1 add: no such segment");
    TorusFront g = patches::insert(f, seg, m.params[0], m.params[1],
                                   patches::dovetail(m.variant & 1, m.variant & 2));
    return finish(f, std::move(g), MoveKind::R1);
}

TorusFront apply_r1_remove(const TorusFront& f, const MoveInstance& m) {
    require(m.ids.size() == 1, "r1 remove: bad site");
    Features ft = analyze(f);
    size_t xi = static_cast<size_t>(m.ids[0]);
    require(xi < ft.crossings.size(), "r1 remove: no such crossing");
    const Crossing& x = ft.crossings[xi];
    Vec2 Pa = cross_point_a(f, x);
    const Vec2 D = f.closure();
    Vec2 T{Rat(x.ty), Rat(x.tz)};

    auto passes_in_inner = [&]() {
        for (size_t c = 0; c < ft.crossings.size(); ++c) {
            if (c == xi) continue;
            const Crossing& y = ft.crossings[c];
            auto inside = [&](size_t s, const Rat& p) {
                if (x.seg_a == x.seg_b) return s == x.seg_a && x.param_a < p && p < x.param_b;
                if (s == x.seg_a) return p > x.param_a;
                if (s == x.seg_b) return p < x.param_b;
                return x.seg_a < s && s < x.seg_b;
            };
            if (inside(y.seg_a, y.param_a) || inside(y.seg_b, y.param_b)) return true;
        }
        return false;
    };
    int inner_cusps = 0;
    for (size_t v = x.seg_a + 1; v <= x.seg_b; ++v)
        if (f.vertices[v].kind == VertexKind::Cusp) ++inner_cusps;
    int total_cusps = 0;
    for (auto& v : f.vertices) total_cusps += v.kind == VertexKind::Cusp;

    TorusFront g;
    g.alpha = f.alpha;
    g.beta = f.beta;
    g.structure_index = f.structure_index;
    if (x.ty == 0 && x.tz == 0) {
        require(!passes_in_inner() && inner_cusps == 2, "r1 remove: not a bare two-cusp loop");
        for (size_t i = 0; i <= x.seg_a; ++i) g.vertices.push_back(f.vertices[i]);
        g.vertices.push_back({Pa, VertexKind::Smooth});
        for (size_t i = x.seg_b + 1; i < f.size(); ++i) g.vertices.push_back(f.vertices[i]);
    } else if (T == -D) {
        require(!passes_in_inner(), "r1 remove: passes between");
        require(total_cusps - inner_cusps == 2, "r1 remove: wrapping piece is not a bare loop");
        g.vertices.push_back({Pa, VertexKind::Smooth});
        for (size_t i = x.seg_a + 1; i <= x.seg_b; ++i) g.vertices.push_back(f.vertices[i]);
    } else {
        throw FrontError("r1 remove: loop is not null-homotopic");
    }
    return finish(f, std::move(g), MoveKind::R1);
}

// ------------------------------------------------------------- R2 additions

TorusFront apply_bump_add(const TorusFront& f, const MoveInstance& m, MoveKind kind) {
    bool cusp_kind = kind == MoveKind::R2a;
    require(m.ids.size() == 2 && m.params.size() == (cusp_kind ? 1u : 2u), "r2 add: bad site");
    size_t seg = static_cast<size_t>(cusp_kind ? m.ids[1] : m.ids[0]);
    require(seg < f.size(), "r2 add: no such segment");
    Rat t = cusp_kind ? m.params[0] : m.params[0];

    Features ft = analyze(f);
    Vec2 Q = f.seg_start(seg) + f.seg_dir(seg) * t;
    Vec2 target;
    if (cusp_kind) {
        size_t cv = static_cast<size_t>(m.ids[0]);
        require(cv < f.size() && f.vertices[cv].kind == VertexKind::Cusp, "r2a add: not a cusp");
        require(seg != cv && seg != prev_seg(f, cv), "r2a add: strand adjacent to the cusp");
        target = f.vertices[cv].p;
    } else {
        size_t sb = static_cast<size_t>(m.ids[1]);
        require(sb < f.size() && sb != seg, "r2b add: bad strands");
        require(gap_floor_pi(ft.lifts[seg], ft.lifts[sb]) >= 1,
                "r2b add: strands too close in lift");
        target = f.seg_start(sb) + f.seg_dir(sb) * m.params[1];
    }
    Vec2 K{Rat(rat_floor(Q.y - target.y + Rat(1, 2))), Rat(rat_floor(Q.z - target.z + Rat(1, 2)))};
    Vec2 Tip = target + K;
    Vec2 u = Tip - Q;
    require(!u.is_zero(), "r2 add: degenerate site");

    size_t before = ft.crossings.size();
    Vec2 d = f.seg_dir(seg);
    Rat md = rat_max(rat_abs(d.y), rat_abs(d.z));
    // forward-slanted trapezoid across the target; the slant keeps every
    // corner under a quarter turn
    for (int ws = 0; ws < 9; ++ws) {
        Rat w = Rat(1, 16);
        for (int i = 0; i < ws; ++i) w /= 2;
        for (int mu = 1; mu <= 3; ++mu) {
            for (int ks = 0; ks < 3; ++ks) {
                Vec2 e1 = d * (w / md);
                Vec2 v = u * (1 + Rat(mu, 8));
                Rat mv = rat_max(rat_abs(v.y), rat_abs(v.z));
                Vec2 slant = d * (mv / md) * Rat(1, 1 + ks);
                Vec2 A = Q - e1 * 2, B = Q + e1 * 2;
                TorusFront g = f;
                std::vector<Vertex> patch = {{A, VertexKind::Smooth},
                                             {A + v + slant, VertexKind::Smooth},
                                             {B + v - slant, VertexKind::Smooth},
                                             {B, VertexKind::Smooth}};
                g.vertices.insert(g.vertices.begin() + static_cast<long>(seg) + 1, patch.begin(),
                                  patch.end());
                try {
                    TorusFront out = finish(f, std::move(g), kind);
                    Features fo = analyze(out);
                    if (fo.crossings.size() != before + 2) continue;
                    if (fo.cusps.size() != ft.cusps.size()) continue;
                    return out;
                } catch (const FrontError&) {
                    continue;
                }
            }
        }
    }
    throw FrontError("r2 add: no valid patch at this site");
}

// -------------------------------------------------------------- R2 removals

TorusFront apply_bigon_remove(const TorusFront& f, const MoveInstance& m, MoveKind kind) {
    require(m.ids.size() == 2, "r2 remove: bad site");
    Features ft = analyze(f);
    size_t xi = static_cast<size_t>(m.ids[0]);
    size_t yi = static_cast<size_t>(m.ids[1]);
    require(xi < ft.crossings.size() && yi < ft.crossings.size() && xi != yi,
            "r2 remove: no such crossings");
    const Crossing& X = ft.crossings[xi];
    const Crossing& Y = ft.crossings[yi];
    require(X.sign + Y.sign == 0, "r2 remove: signs do not cancel");
    if (kind == MoveKind::R2b)
        require(X.gap_floor >= 1 && Y.gap_floor >= 1, "r2b remove: crossings are near-lift");

    struct PassRef {
        size_t seg;
        Rat param;
    };
    auto passes = [&](const Crossing& c) {
        return std::pair<PassRef, PassRef>{{c.seg_a, c.param_a}, {c.seg_b, c.param_b}};
    };
    auto [xa, xb] = passes(X);
    auto [ya, yb] = passes(Y);

    for (const PassRef* sp : {&xa, &xb}) {
        auto hit = next_pass(f, ft, sp->seg, sp->param);
        if (!hit || hit->crossing != yi || hit->cusps_passed != 0 || hit->wrapped) continue;
        // retracting strand runs sp -> hit; the far side must match the kind
        const PassRef* so = (sp == &xa) ? &xb : &xa;
        const PassRef* to = (hit->a_side) ? &yb : &ya;
        // far-side cusp count, walked in whichever direction avoids the basepoint
        std::optional<int> far_cusps;
        auto h2 = next_pass(f, ft, so->seg, so->param);
        if (h2 && h2->crossing == yi && !h2->wrapped) far_cusps = h2->cusps_passed;
        if (!far_cusps) {
            auto h3 = next_pass(f, ft, to->seg, to->param);
            if (h3 && h3->crossing == xi && !h3->wrapped) far_cusps = h3->cusps_passed;
        }
        if (!far_cusps) continue;
        if (kind == MoveKind::R2a && *far_cusps != 1) continue;
        if (kind == MoveKind::R2b && *far_cusps != 0) continue;

        Vec2 din = f.seg_dir(sp->seg), dout = f.seg_dir(hit->seg);
        Rat mi = rat_max(rat_abs(din.y), rat_abs(din.z));
        Rat mo = rat_max(rat_abs(dout.y), rat_abs(dout.z));
        for (int ws = 0; ws < 10; ++ws) {
            Rat w = Rat(1, 64);
            for (int i = 0; i < ws; ++i) w /= 2;
            Rat t_from = sp->param - w / mi;
            Rat t_to = hit->param + w / mo;
            if (!(t_from > 0)) continue;
            if (!(t_to < 1)) continue;
            try {
                TorusFront g = reroute(f, sp->seg, t_from, hit->seg, t_to, {});
                TorusFront out = finish(f, std::move(g), kind);
                Features fo = analyze(out);
                if (fo.crossings.size() != ft.crossings.size() - 2) continue;
                if (fo.cusps.size() != ft.cusps.size()) continue;
                return out;
            } catch (const FrontError&) {
                continue;
            }
        }
    }
    throw FrontError("r2 remove: no retractable bigon for these crossings");
}

// ---------------------------------------------------------------------- R3

TorusFront apply_r3(const TorusFront& f, const MoveInstance& m) {
    require(m.ids.size() == 2, "r3: bad site");
    Features ft = analyze(f);
    size_t xi = static_cast<size_t>(m.ids[0]);
    size_t yi = static_cast<size_t>(m.ids[1]);
    require(xi < ft.crossings.size() && yi < ft.crossings.size() && xi != yi,
            "r3: no such crossings");
    const Crossing& X = ft.crossings[xi];
    const Crossing& Y = ft.crossings[yi];

    struct PassRef {
        size_t seg;
        Rat param;
        size_t other;  // the strand not being moved
    };
    std::vector<PassRef> xp = {{X.seg_a, X.param_a, X.seg_b}, {X.seg_b, X.param_b, X.seg_a}};

    for (auto& sp : xp) {
        auto hit = next_pass(f, ft, sp.seg, sp.param);
        if (!hit || hit->crossing != yi || hit->cusps_passed != 0 || hit->wrapped) continue;
        size_t other_y = hit->a_side ? Y.seg_b : Y.seg_a;
        // the third crossing joins the two fixed strands
        std::optional<size_t> third;
        for (size_t c = 0; c < ft.crossings.size() && !third; ++c) {
            if (c == xi || c == yi) continue;
            const Crossing& Z = ft.crossings[c];
            if ((Z.seg_a == sp.other && Z.seg_b == other_y) ||
                (Z.seg_b == sp.other && Z.seg_a == other_y))
                third = c;
        }
        if (!third) continue;
        const Crossing& Z = ft.crossings[*third];

        // bring the far crossing into the moving strand's cover chart
        Vec2 P1 = f.seg_start(sp.seg) + f.seg_dir(sp.seg) * sp.param;
        Vec2 Zp = cross_point_a(f, Z);
        Vec2 mid = (P1 + f.seg_start(hit->seg) + f.seg_dir(hit->seg) * hit->param) * Rat(1, 2);
        Vec2 K{Rat(rat_floor(mid.y - Zp.y + Rat(1, 2))),
               Rat(rat_floor(mid.z - Zp.z + Rat(1, 2)))};
        Vec2 Tgt = Zp + K;
        Vec2 u = Tgt - mid;
        if (u.is_zero()) continue;

        Vec2 din = f.seg_dir(sp.seg), dout = f.seg_dir(hit->seg);
        Rat mi = rat_max(rat_abs(din.y), rat_abs(din.z));
        Rat mo = rat_max(rat_abs(dout.y), rat_abs(dout.z));
        for (int ws = 0; ws < 9; ++ws) {
            Rat w = Rat(1, 32);
            for (int i = 0; i < ws; ++i) w /= 2;
            for (int mu = 1; mu <= 3; ++mu) {
                Rat t_from = sp.param - w / mi;
                Rat t_to = hit->param + w / mo;
                if (!(t_from > 0) || !(t_to < 1)) continue;
                try {
                    TorusFront g =
                        reroute(f, sp.seg, t_from, hit->seg, t_to, {Tgt + u * Rat(mu, 8)});
                    TorusFront out = finish(f, std::move(g), MoveKind::R3);
                    Features fo = analyze(out);
                    if (fo.crossings.size() != ft.crossings.size()) continue;
                    if (fo.cusps.size() != ft.cusps.size()) continue;
                    return out;
                } catch (const FrontError&) {
                    continue;
                }
            }
        }
    }
    throw FrontError("r3: no valid slide for these crossings");
}

// ----------------------------------------------------------------- IV moves

const Vec2 kSlot[8] = {
    {Rat(1), Rat(0)},  {Rat(5), Rat(2)},  {Rat(1), Rat(1)},  {Rat(2), Rat(5)},
    {Rat(0), Rat(1)},  {Rat(-2), Rat(5)}, {Rat(-1), Rat(1)}, {Rat(-5), Rat(2)},
};

Vec2 slot_dir(long long rel) {
    long long m = ((rel % 8) + 8) % 8;
    Vec2 d = kSlot[m];
    if (parity((rel - m) / 8) != 0) d = -d;
    return d;
}

long long slot_of(const LiftedDir& l, long long anchor) {
    long long base = 8 * (l.half_turns - anchor);
    for (long long j = 7; j >= 1; --j) {
        Vec2 pr = principal_rep(kSlot[j]);
        if (cmp_theta(l.dir, pr) >= 0) return base + j;
    }
    return base;
}

// is the lift within a quarter-turn above the window bottom (below the top)?
bool boundary_class(const LiftedDir& l, long long anchor, long long n, bool bottom) {
    if (bottom)
        return cmp_lift_halfpi(l, 2 * anchor) > 0 && cmp_lift_halfpi(l, 2 * anchor + 1) < 0;
    long long top = 2 * (anchor + n) + 1;
    return cmp_lift_halfpi(l, top - 1) > 0 && cmp_lift_halfpi(l, top) < 0;
}

TorusFront apply_iv_add(const TorusFront& f, const MoveInstance& m, MoveKind kind) {
    require(m.ids.size() == 1 && m.params.size() == 1, "iv add: bad site");
    size_t seg = static_cast<size_t>(m.ids[0]);
    require(seg < f.size(), "iv add: no such segment");
    Rat t = m.params[0];
    require(t > 0 && t < 1, "iv add: param out of range");

    Features ft = analyze(f);
    const long long n = f.structure_index;
    const bool bottom = kind == MoveKind::IVFront;

    long long host_slot = slot_of(ft.lifts[seg], ft.anchor);
    int sigma = ft.sigma[seg];

    // The strand swings toward the face, parks even closer to it than the
    // winding run, reverses into the long face-hugging run, reverses again
    // and swings back. The parking on the far side of the hug lift makes the
    // cusp pair's sense match the winding direction.
    const long long comp_slot = bottom ? 4 : 8 * n;      // solved-length segment
    const long long adj_slot = bottom ? 1 : 8 * n + 3;   // last fixed swing slot
    Vec2 park_rel = bottom ? Vec2{Rat(32), Rat(1)} : Vec2{Rat(1), Rat(32)};
    Vec2 hug_rel = bottom ? Vec2{Rat(16), Rat(1)} : Vec2{Rat(1), Rat(16)};
    if (!bottom && parity(n) != 0) {
        park_rel = -park_rel;
        hug_rel = -hug_rel;
    }
    Vec2 d_park = park_rel * sigma;
    Vec2 d_hug = hug_rel * (-sigma);
    Vec2 e_comp = slot_dir(comp_slot) * sigma;
    require(cross(e_comp, d_hug) != 0, "iv add: degenerate frame");

    Vec2 W = bottom ? Vec2{Rat(sgn(d_hug.y)), Rat(0)} : Vec2{Rat(0), Rat(sgn(d_hug.z))};
    require(!W.is_zero(), "iv add: hug has no winding direction");
    long long Wy = sgn(W.y), Wz = sgn(W.z);

    auto swing_path = [&](long long from, long long to) {
        std::vector<long long> p;
        long long cur = from;
        while (cur != to) {
            long long nxt = cur + (to > cur ? 3 : -3);
            if ((to > cur && nxt > to) || (to < cur && nxt < to)) nxt = to;
            p.push_back(nxt);
            cur = nxt;
        }
        return p;
    };
    // entry: host -> comp_slot (solved) -> adj_slot -> park -> cusp
    std::vector<long long> pre = swing_path(host_slot, comp_slot);
    if (!pre.empty()) pre.pop_back();  // the comp_slot piece itself is solved
    std::vector<long long> mid = swing_path(comp_slot, adj_slot);
    std::vector<long long> exit_slots = swing_path(adj_slot, host_slot);
    exit_slots.insert(exit_slots.begin(), adj_slot);

    Vec2 d = f.seg_dir(seg);
    Rat md = rat_max(rat_abs(d.y), rat_abs(d.z));

    for (int ws = 0; ws < 12; ++ws) {
        Rat w = Rat(1, 16);
        for (int i = 0; i < ws; ++i) w /= 2;
        Rat delta = w / 4;
        Vec2 A = f.seg_start(seg) + d * t - d * (w / md);
        Vec2 B = f.seg_start(seg) + d * t + d * (w / md);

        auto step_of = [&](const Vec2& dd, const Rat& len) {
            Rat mm = rat_max(rat_abs(dd.y), rat_abs(dd.z));
            return dd * (len / mm);
        };

        std::vector<Vertex> patch;
        patch.push_back({A, VertexKind::Smooth});
        for (long long s : pre)
            patch.push_back(
                {patch.back().p + step_of(slot_dir(s) * sigma, delta), VertexKind::Smooth});

        // fixed pieces after the solved segment: mid swing, park, and on the
        // way back a mirrored park plus the exit swing
        Vec2 fixed_disp{Rat(0), Rat(0)};
        std::vector<std::pair<Vec2, VertexKind>> tail;  // after the comp piece
        for (long long s : mid) {
            Vec2 st = step_of(slot_dir(s) * sigma, delta);
            tail.push_back({st, VertexKind::Smooth});
            fixed_disp = fixed_disp + st;
        }
        {
            Vec2 st = step_of(d_park, delta);  // into the first cusp
            tail.push_back({st, VertexKind::Cusp});
            fixed_disp = fixed_disp + st;
        }
        std::vector<std::pair<Vec2, VertexKind>> after_hug;
        {
            Vec2 st = step_of(d_park, delta);  // out of the second cusp
            after_hug.push_back({st, VertexKind::Smooth});
        }
        for (long long s : exit_slots)
            after_hug.push_back({step_of(slot_dir(s) * sigma, delta), VertexKind::Smooth});
        Vec2 after_disp{Rat(0), Rat(0)};
        for (auto& [st, k] : after_hug) after_disp = after_disp + st;

        // closure: comp * l_c + hug * l_h = (B + W) - A - pre - fixed - after
        Vec2 C0 = patch.back().p;
        Vec2 target = (B + W) - C0 - fixed_disp - after_disp;
        Rat det = cross(e_comp, d_hug);
        Rat l_comp = cross(target, d_hug) / det;
        Rat l_hug = cross(e_comp, target) / det;
        if (!(l_comp > 0 && l_hug > 0)) continue;

        // assemble: comp, mid, park(cusp), hug(cusp), park-back, exit
        patch.push_back({C0 + e_comp * l_comp, VertexKind::Smooth});
        for (auto& [st, k] : tail) patch.push_back({patch.back().p + st, k});
        patch.push_back({patch.back().p + d_hug * l_hug, VertexKind::Cusp});
        for (size_t i = 0; i + 1 < after_hug.size(); ++i)
            patch.push_back({patch.back().p + after_hug[i].first, VertexKind::Smooth});

        TorusFront g;
        g.alpha = f.alpha + Wz;
        g.beta = f.beta + Wy;
        g.structure_index = f.structure_index;
        for (size_t i = 0; i <= seg; ++i) g.vertices.push_back(f.vertices[i]);
        for (auto& v : patch) g.vertices.push_back(v);
        for (size_t i = seg + 1; i < f.size(); ++i) {
            Vertex v = f.vertices[i];
            v.p = v.p + W;
            g.vertices.push_back(v);
        }
        try {
            TorusFront out = finish(f, std::move(g), kind);
            Features fo = analyze(out);
            if (fo.cusps.size() != ft.cusps.size() + 2) continue;
            return out;
        } catch (const FrontError&) {
            continue;
        }
    }
    throw FrontError("iv add: no valid patch at this site");
}

TorusFront apply_iv_remove(const TorusFront& f, const MoveInstance& m, MoveKind kind) {
    require(m.ids.size() == 2, "iv remove: bad site");
    size_t va = static_cast<size_t>(m.ids[0]);
    size_t vb = static_cast<size_t>(m.ids[1]);
    require(va >= 1 && vb < f.size() - 1 && va < vb, "iv remove: bad span");

    Features ft = analyze(f);
    const bool bottom = kind == MoveKind::IVFront;

    int cusps_in_span = 0;
    std::vector<size_t> cusp_at;
    for (size_t i = va; i <= vb; ++i)
        if (f.vertices[i].kind == VertexKind::Cusp) {
            ++cusps_in_span;
            cusp_at.push_back(i);
        }
    require(cusps_in_span == 2, "iv remove: span must contain one cusp pair");
    // the hug between the cusps has to hold the window boundary
    for (size_t s = cusp_at[0]; s < cusp_at[1]; ++s)
        require(boundary_class(ft.lifts[s], ft.anchor, f.structure_index, bottom),
                "iv remove: strands between cusps are not at the face");

    Vec2 disp = f.vertices[vb].p - f.vertices[va].p;
    Vec2 W{Rat(rat_floor(disp.y + Rat(1, 2))), Rat(rat_floor(disp.z + Rat(1, 2)))};
    if (bottom)
        require(rat_abs(W.y) == 1 && W.z == 0, "iv remove: span does not wind sideways");
    else
        require(W.y == 0 && rat_abs(W.z) == 1, "iv remove: span does not wind vertically");
    long long Wy = W.y == 1 ? 1 : (W.y == -1 ? -1 : 0);
    long long Wz = W.z == 1 ? 1 : (W.z == -1 ? -1 : 0);

    TorusFront g;
    g.alpha = f.alpha - Wz;
    g.beta = f.beta - Wy;
    g.structure_index = f.structure_index;
    for (size_t i = 0; i < va; ++i) g.vertices.push_back(f.vertices[i]);
    for (size_t i = vb + 1; i < f.size(); ++i) {
        Vertex v = f.vertices[i];
        v.p = v.p - W;
        g.vertices.push_back(v);
    }
    require(g.vertices.size() >= 2, "iv remove: nothing left");
    return finish(f, std::move(g), kind);
}

// --------------------------------------------------- arcs for site proposals

struct ArcSiteInfo {
    size_t seg;
    Rat param;
    Rat len2;
};

// one representative site per feature-free arc: the middle of its longest
// pass-free straight interval
std::vector<ArcSiteInfo> arc_sites(const TorusFront& f, const Features& ft) {
    // events per segment
    std::vector<std::vector<Rat>> cuts(f.size());
    for (auto& x : ft.crossings) {
        cuts[x.seg_a].push_back(x.param_a);
        cuts[x.seg_b].push_back(x.param_b);
    }
    struct Interval {
        size_t seg;
        Rat lo, hi;
    };
    std::vector<Interval> ivs;
    for (size_t i = 0; i < f.size(); ++i) {
        auto v = cuts[i];
        v.push_back(Rat(0));
        v.push_back(Rat(1));
        std::sort(v.begin(), v.end());
        for (size_t k = 0; k + 1 < v.size(); ++k)
            if (v[k] < v[k + 1]) ivs.push_back({i, v[k], v[k + 1]});
    }
    // group intervals into arcs: walk and break at cusps and passes
    std::vector<ArcSiteInfo> out;
    std::vector<bool> used(ivs.size(), false);
    // order intervals along the traversal
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
        if (a.seg != b.seg) return a.seg < b.seg;
        return a.lo < b.lo;
    });
    size_t m = ivs.size();
    auto joins_prev = [&](size_t k) {
        // interval k continues the previous one without a feature between
        const Interval& cur = ivs[k];
        const Interval& prev = ivs[(k + m - 1) % m];
        if (prev.seg == cur.seg) return prev.hi == cur.lo ? false : false;  // split by a pass
        if (next_seg(const_cast<TorusFront&>(f), prev.seg) != cur.seg) return false;
        if (prev.hi != 1 || cur.lo != 0) return false;
        return f.vertices[cur.seg].kind == VertexKind::Smooth;
    };
    std::vector<int> arc_id(m, -1);
    int arcs = 0;
    for (size_t k = 0; k < m; ++k) {
        if (arc_id[k] >= 0) continue;
        // find the start of this arc
        size_t s = k;
        for (size_t guard = 0; guard <= m; ++guard) {
            if (!joins_prev(s)) break;
            size_t p = (s + m - 1) % m;
            if (arc_id[p] >= 0 || p == k) break;
            s = p;
        }
        int id = arcs++;
        size_t cur = s;
        for (size_t guard = 0; guard <= m; ++guard) {
            if (arc_id[cur] >= 0) break;
            arc_id[cur] = id;
            size_t nx = (cur + 1) % m;
            if (!joins_prev(nx)) break;
            cur = nx;
        }
    }
    std::map<int, ArcSiteInfo> best;
    for (size_t k = 0; k < m; ++k) {
        const Interval& iv = ivs[k];
        Rat len2 = (iv.hi - iv.lo) * (iv.hi - iv.lo) * norm2(f.seg_dir(iv.seg));
        auto it = best.find(arc_id[k]);
        if (it == best.end() || len2 > it->second.len2)
            best[arc_id[k]] = {iv.seg, (iv.lo + iv.hi) / 2, len2};
    }
    for (auto& [id, s] : best) out.push_back(s);
    (void)used;
    return out;
}

}  // namespace

// ------------------------------------------------------------------- public

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Iso: return "ISO";
        case MoveKind::R1: return "R1";
        case MoveKind::R2a: return "R2a";
        case MoveKind::R2b: return "R2b";
        case MoveKind::R3: return "R3";
        case MoveKind::IVFront: return "IVa";
        case MoveKind::IVBack: return "IVb";
    }
    return "?";
}

std::optional<MoveKind> move_kind_from(const std::string& s) {
    if (s == "ISO") return MoveKind::Iso;
    if (s == "R1") return MoveKind::R1;
    if (s == "R2a") return MoveKind::R2a;
    if (s == "R2b") return MoveKind::R2b;
    if (s == "R3") return MoveKind::R3;
    if (s == "IVa") return MoveKind::IVFront;
    if (s == "IVb") return MoveKind::IVBack;
    return std::nullopt;
}

const std::set<MoveKind>& all_move_kinds() {
    static const std::set<MoveKind> k = {MoveKind::Iso, MoveKind::R1,      MoveKind::R2a,
                                         MoveKind::R2b, MoveKind::R3,      MoveKind::IVFront,
                                         MoveKind::IVBack};
    return k;
}

const std::set<MoveKind>& standard_move_kinds() {
    static const std::set<MoveKind> k = {MoveKind::Iso, MoveKind::R1, MoveKind::R2a,
                                         MoveKind::R2b, MoveKind::R3};
    return k;
}

TorusFront apply_move(const TorusFront& f, const MoveInstance& m) {
    switch (m.kind) {
        case MoveKind::Iso: return apply_iso(f, m);
        case MoveKind::R1: return m.removing() ? apply_r1_remove(f, m) : apply_r1_add(f, m);
        case MoveKind::R2a:
            return m.removing() ? apply_bigon_remove(f, m, MoveKind::R2a)
                                : apply_bump_add(f, m, MoveKind::R2a);
        case MoveKind::R2b:
            return m.removing() ? apply_bigon_remove(f, m, MoveKind::R2b)
                                : apply_bump_add(f, m, MoveKind::R2b);
        case MoveKind::R3: return apply_r3(f, m);
        case MoveKind::IVFront:
            return m.removing() ? apply_iv_remove(f, m, MoveKind::IVFront)
                                : apply_iv_add(f, m, MoveKind::IVFront);
        case MoveKind::IVBack:
            return m.removing() ? apply_iv_remove(f, m, MoveKind::IVBack)
                                : apply_iv_add(f, m, MoveKind::IVBack);
    }
    throw FrontError("unknown move kind");
}

namespace {

std::optional<MoveInstance> find_inverse(const TorusFront& before, const MoveInstance& m,
                                         const TorusFront& after) {
    CanonicalKey want = canonical_form(before);
    auto probe = [&](const MoveInstance& cand) -> bool {
        try {
            TorusFront r = apply_move(after, cand);
            return canonical_form(r) == want;
        } catch (const FrontError&) {
            return false;
        }
    };

    if (m.kind == MoveKind::Iso) {
        if (m.variant == 0) {
            MoveInstance inv{MoveKind::Iso, 1, {m.ids[0] + 1}, {}};
            if (probe(inv)) return inv;
        } else if (m.variant == 1) {
            MoveInstance inv{MoveKind::Iso, 0, {m.ids[0] == 0 ? 0 : m.ids[0] - 1}, {Rat(1, 2)}};
            if (probe(inv)) return inv;
        }
        return std::nullopt;
    }

    Features fa = analyze(after);
    if (!m.removing()) {
        if (m.kind == MoveKind::R1) {
            size_t seg = static_cast<size_t>(m.ids[0]);
            for (size_t c = 0; c < fa.crossings.size(); ++c) {
                const Crossing& x = fa.crossings[c];
                if (x.seg_a > seg && x.seg_a <= seg + 5 && x.seg_b > seg && x.seg_b <= seg + 5) {
                    MoveInstance inv{MoveKind::R1, kRemove, {static_cast<long long>(c)}, {}};
                    if (probe(inv)) return inv;
                }
            }
            return std::nullopt;
        }
        if (m.kind == MoveKind::R2a || m.kind == MoveKind::R2b) {
            size_t seg = static_cast<size_t>(m.kind == MoveKind::R2a ? m.ids[1] : m.ids[0]);
            std::vector<long long> fresh;
            for (size_t c = 0; c < fa.crossings.size(); ++c) {
                const Crossing& x = fa.crossings[c];
                bool an = x.seg_a > seg && x.seg_a <= seg + 4;
                bool bn = x.seg_b > seg && x.seg_b <= seg + 4;
                if (an || bn) fresh.push_back(static_cast<long long>(c));
            }
            if (fresh.size() == 2) {
                MoveInstance inv{m.kind, kRemove, fresh, {}};
                if (probe(inv)) return inv;
                std::swap(inv.ids[0], inv.ids[1]);
                if (probe(inv)) return inv;
            }
            return std::nullopt;
        }
        if (m.kind == MoveKind::IVFront || m.kind == MoveKind::IVBack) {
            size_t seg = static_cast<size_t>(m.ids[0]);
            size_t added = after.size() - before.size();
            MoveInstance inv{m.kind, kRemove,
                             {static_cast<long long>(seg + 2),
                              static_cast<long long>(seg + added)},
                             {}};
            if (probe(inv)) return inv;
            // span bounds can shift by one depending on the swing lengths
            for (long long a = -1; a <= 1; ++a)
                for (long long b = -1; b <= 1; ++b) {
                    MoveInstance i2{m.kind, kRemove,
                                    {static_cast<long long>(seg) + 2 + a,
                                     static_cast<long long>(seg + added) + b},
                                    {}};
                    if (probe(i2)) return i2;
                }
            return std::nullopt;
        }
    }
    if (m.kind == MoveKind::R1 && m.removing()) {
        Features fb = analyze(before);
        size_t xi = static_cast<size_t>(m.ids[0]);
        size_t merge_seg = fb.crossings[xi].seg_a;
        for (long long s :
             {static_cast<long long>(merge_seg), static_cast<long long>(merge_seg) + 1,
              static_cast<long long>(merge_seg) - 1, 0ll}) {
            if (s < 0 || s >= static_cast<long long>(after.size())) continue;
            for (int chi = 0; chi < 4; ++chi)
                for (Rat span : {Rat(1, 24), Rat(1, 96)}) {
                    MoveInstance inv{MoveKind::R1, chi, {s}, {Rat(1, 2), span}};
                    if (probe(inv)) return inv;
                }
        }
        return std::nullopt;
    }
    // generic: probe same-kind enumeration on the result
    for (auto& am : enumerate_applied(after, {m.kind})) {
        if (canonical_form(am.result) == want) return am.instance;
    }
    return std::nullopt;
}

}  // namespace

AppliedMove apply_move_full(const TorusFront& f, const MoveInstance& m) {
    TorusFront g = apply_move(f, m);
    auto inv = find_inverse(f, m, g);
    AppliedMove am;
    am.instance = m;
    am.result = std::move(g);
    am.inverse = inv ? *inv : MoveInstance{};
    return am;
}

std::vector<AppliedMove> enumerate_applied(const TorusFront& f, const std::set<MoveKind>& kinds) {
    std::vector<AppliedMove> out;
    Features ft = analyze(f);
    auto sites = arc_sites(f, ft);

    auto try_add = [&](MoveInstance m) {
        try {
            TorusFront g = apply_move(f, m);
            out.push_back({std::move(m), std::move(g), MoveInstance{}});
        } catch (const FrontError&) {
        }
    };

    if (kinds.count(MoveKind::Iso)) {
        for (size_t i = 0; i < f.size(); ++i)
            try_add({MoveKind::Iso, 0, {static_cast<long long>(i)}, {Rat(1, 2)}});
        for (size_t v = 0; v < f.size(); ++v)
            if (f.vertices[v].kind == VertexKind::Smooth &&
                cross(f.seg_dir(prev_seg(f, v)), f.seg_dir(v)) == 0)
                try_add({MoveKind::Iso, 1, {static_cast<long long>(v)}, {}});
    }

    if (kinds.count(MoveKind::R1)) {
        for (auto& s : sites)
            for (int chi = 0; chi < 4; ++chi)
                try_add({MoveKind::R1, chi, {static_cast<long long>(s.seg)},
                         {s.param, Rat(1, 24)}});
        for (size_t c = 0; c < ft.crossings.size(); ++c)
            try_add({MoveKind::R1, kRemove, {static_cast<long long>(c)}, {}});
    }

    if (kinds.count(MoveKind::R2a)) {
        for (auto& cu : ft.cusps)
            for (auto& s : sites) {
                if (s.seg == cu.vertex_index || s.seg == prev_seg(f, cu.vertex_index)) continue;
                try_add({MoveKind::R2a, 0,
                         {static_cast<long long>(cu.vertex_index), static_cast<long long>(s.seg)},
                         {s.param}});
            }
    }
    if (kinds.count(MoveKind::R2b)) {
        for (auto& sa : sites)
            for (auto& sb : sites) {
                if (sa.seg == sb.seg) continue;
                if (gap_floor_pi(ft.lifts[sa.seg], ft.lifts[sb.seg]) < 1) continue;
                try_add({MoveKind::R2b, 0,
                         {static_cast<long long>(sa.seg), static_cast<long long>(sb.seg)},
                         {sa.param, sb.param}});
            }
    }
    if (kinds.count(MoveKind::R2a) || kinds.count(MoveKind::R2b)) {
        for (size_t i = 0; i < ft.crossings.size(); ++i)
            for (size_t j = 0; j < ft.crossings.size(); ++j) {
                if (i == j) continue;
                if (ft.crossings[i].sign + ft.crossings[j].sign != 0) continue;
                if (kinds.count(MoveKind::R2a))
                    try_add({MoveKind::R2a, kRemove,
                             {static_cast<long long>(i), static_cast<long long>(j)}, {}});
                if (kinds.count(MoveKind::R2b))
                    try_add({MoveKind::R2b, kRemove,
                             {static_cast<long long>(i), static_cast<long long>(j)}, {}});
            }
    }
    if (kinds.count(MoveKind::R3)) {
        for (size_t i = 0; i < ft.crossings.size(); ++i)
            for (size_t j = 0; j < ft.crossings.size(); ++j)
                if (i != j)
                    try_add({MoveKind::R3, 0,
                             {static_cast<long long>(i), static_cast<long long>(j)}, {}});
    }
    if (kinds.count(MoveKind::IVFront) || kinds.count(MoveKind::IVBack)) {
        for (auto& s : sites) {
            if (kinds.count(MoveKind::IVFront))
                try_add({MoveKind::IVFront, 0, {static_cast<long long>(s.seg)}, {s.param}});
            if (kinds.count(MoveKind::IVBack))
                try_add({MoveKind::IVBack, 0, {static_cast<long long>(s.seg)}, {s.param}});
        }
        for (size_t va = 1; va + 1 < f.size(); ++va) {
            if (f.vertices[va].kind != VertexKind::Cusp) continue;
            size_t vb = va + 1;
            while (vb + 1 < f.size() && f.vertices[vb].kind != VertexKind::Cusp) ++vb;
            if (vb + 1 >= f.size() || f.vertices[vb].kind != VertexKind::Cusp) continue;
            for (long long a = 0; a <= 3 && static_cast<long long>(va) - a >= 1; ++a)
                for (long long b = 0; b <= 3 && vb + b + 1 < f.size(); ++b) {
                    long long lo = static_cast<long long>(va) - a;
                    long long hi = static_cast<long long>(vb) + b;
                    if (kinds.count(MoveKind::IVFront))
                        try_add({MoveKind::IVFront, kRemove, {lo, hi}, {}});
                    if (kinds.count(MoveKind::IVBack))
                        try_add({MoveKind::IVBack, kRemove, {lo, hi}, {}});
                }
        }
    }

    std::map<std::string, size_t> seen;
    std::vector<AppliedMove> dedup;
    for (auto& am : out) {
        std::string k = canonical_form(am.result).code;
        if (seen.count(k)) continue;
        seen[k] = dedup.size();
        dedup.push_back(std::move(am));
    }
    for (auto& am : dedup) {
        auto inv = find_inverse(f, am.instance, am.result);
        if (inv) am.inverse = *inv;
    }
    return dedup;
}

std::vector<MoveInstance> enumerate_moves(const TorusFront& f) {
    std::vector<MoveInstance> ms;
    for (auto& am : enumerate_applied(f, all_move_kinds())) ms.push_back(am.instance);
    return ms;
}

}  // namespace torusfront
