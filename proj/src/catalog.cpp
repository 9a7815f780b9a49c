#include "torusfront/catalog.hpp"

#include "patches.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace torusfront {

namespace {

Vertex sv(Rat y, Rat z) { return {{std::move(y), std::move(z)}, VertexKind::Smooth}; }
Vertex cv(Rat y, Rat z) { return {{std::move(y), std::move(z)}, VertexKind::Cusp}; }

long long llgcd(long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); }

// ---------------------------------------------------------------- plat fronts

// Closure of a 4-lane braid word by cusp caps on both sides. Lane 1 is the
// top. cap pattern: false = (1,2),(3,4); true = nested (1,4),(2,3).
struct PlatLayout {
    std::vector<int> word;  // entries 1..3
    bool nested_left = false;
    bool nested_right = false;
};

std::optional<TorusFront> plat_front(const PlatLayout& lay) {
    const int L = static_cast<int>(lay.word.size());
    const Rat lane_z[5] = {Rat(0), Rat(5, 8), Rat(9, 16), Rat(1, 2), Rat(7, 16)};
    const Rat x0 = Rat(1, 4), x1 = Rat(3, 4);
    const Rat step = (x1 - x0) / (L + 1);
    const Rat h = step / 4;
    auto xc = [&](int k) { return x0 + step * (k + 1); };

    // connectivity first
    auto cap_partner = [&](bool nested, int lane) {
        if (!nested) return lane == 1 ? 2 : lane == 2 ? 1 : lane == 3 ? 4 : 3;
        return lane == 1 ? 4 : lane == 4 ? 1 : lane == 2 ? 3 : 2;
    };

    // walk pieces: (x-slot, lane, moving right?) -> collect vertices
    TorusFront f;
    int lane = 1;
    bool right = true;
    int visited = 0;
    const int total_turns = 4;  // four cap visits for a knot
    int turns = 0;
    // start just after the left cap on lane 1
    auto push_sv = [&](Rat x, Rat z) { f.vertices.push_back(sv(std::move(x), std::move(z))); };

    int guard = 0;
    do {
        if (++guard > 200) return std::nullopt;
        if (right) {
            for (int k = 0; k < L; ++k) {
                int w = lay.word[k];
                if (lane == w || lane == w + 1) {
                    push_sv(xc(k) - h, lane_z[lane]);
                    lane = (lane == w) ? w + 1 : w;
                    push_sv(xc(k) + h, lane_z[lane]);
                }
            }
            // right cap; the tip must be wide enough that traversal reverses
            int to = cap_partner(lay.nested_right, lane);
            bool outer = lay.nested_right && (lane == 1 || lane == 4);
            Rat tip_x = x1 + (outer ? Rat(1, 6) : Rat(1, 12));
            push_sv(x1 + Rat(1, 48), lane_z[lane]);
            f.vertices.push_back(cv(tip_x, (lane_z[lane] + lane_z[to]) / 2));
            push_sv(x1 + Rat(1, 48), lane_z[to]);
            lane = to;
            right = false;
            ++turns;
        } else {
            for (int k = L - 1; k >= 0; --k) {
                int w = lay.word[k];
                if (lane == w || lane == w + 1) {
                    push_sv(xc(k) + h, lane_z[lane]);
                    lane = (lane == w) ? w + 1 : w;
                    push_sv(xc(k) - h, lane_z[lane]);
                }
            }
            int to = cap_partner(lay.nested_left, lane);
            bool outer = lay.nested_left && (lane == 1 || lane == 4);
            Rat tip_x = x0 - (outer ? Rat(1, 6) : Rat(1, 12));
            push_sv(x0 - Rat(1, 48), lane_z[lane]);
            f.vertices.push_back(cv(tip_x, (lane_z[lane] + lane_z[to]) / 2));
            push_sv(x0 - Rat(1, 48), lane_z[to]);
            lane = to;
            right = true;
            ++turns;
        }
        ++visited;
    } while (!(right && lane == 1) && turns < 16);
    if (turns != total_turns) return std::nullopt;  // link, not a knot

    // remove consecutive duplicate points (lane runs of length zero)
    std::vector<Vertex> vs;
    for (auto& v : f.vertices) {
        if (!vs.empty() && vs.back().p == v.p) return std::nullopt;
        vs.push_back(v);
    }
    f.vertices = vs;
    if (!validate(f).valid()) return std::nullopt;
    return f;
}

TorusFront reflected(const TorusFront& f) {
    TorusFront g = f;
    for (auto& v : g.vertices) v.p = {Rat(1) - v.p.y, Rat(1) - v.p.z};
    g.alpha = -f.alpha;
    g.beta = -f.beta;
    return g;
}

}  // namespace

TorusFront gamma(long long m, long long n, GammaVariant variant) {
    if (m == 0 && n == 0) throw FrontError("gamma(0,0) is not a curve");
    if (llgcd(m, n) != 1) throw FrontError("gamma: (m,n) must be coprime (knot, not link)");
    bool ambiguous = m * n > 0;
    if (ambiguous && variant == GammaVariant::Unique)
        throw FrontError("gamma: mn > 0 has two lifts; pick FrontLift or BackLift");
    if (!ambiguous && variant != GammaVariant::Unique)
        throw FrontError("gamma: mn <= 0 is uniquely determined; use Unique");

    // direction (dy,dz) = (n,m); start away from lattice-symmetric spots
    Vec2 start{Rat(3, 7), Rat(5, 11)};
    Vec2 dir{Rat(n), Rat(m)};
    TorusFront f;
    f.alpha = m;
    f.beta = n;
    f.vertices.push_back({start, VertexKind::Smooth});
    f.vertices.push_back({start + dir * Rat(1, 2), VertexKind::Smooth});
    if (!validate(f).valid()) throw FrontError("gamma: base curve failed validation");
    if (!ambiguous) return f;

    // pin the lift with a small balanced kink; the across side picks the branch
    Rat span = Rat(1, 8 * (std::llabs(m) + std::llabs(n)));
    bool flip = variant == GammaVariant::BackLift;
    return patches::insert_valid(f, 0, Rat(1, 4), span, patches::dovetail(flip, false), "gamma");
}

TorusFront flying_saucer() {
    TorusFront f;
    f.vertices = {cv(Rat(1, 4), Rat(1, 2)),  sv(Rat(3, 8), Rat(9, 16)),
                  sv(Rat(5, 8), Rat(9, 16)), cv(Rat(3, 4), Rat(1, 2)),
                  sv(Rat(5, 8), Rat(7, 16)), sv(Rat(3, 8), Rat(7, 16))};
    return f;
}

TorusFront wrapped_saucer() {
    TorusFront f;
    f.vertices = {cv(Rat(9, 20), Rat(1, 2)),    sv(Rat(7, 10), Rat(17, 32)),
                  sv(Rat(11, 10), Rat(17, 32)), cv(Rat(7, 5), Rat(1, 2)),
                  sv(Rat(11, 10), Rat(15, 32)), sv(Rat(7, 10), Rat(15, 32))};
    return f;
}

TorusFront cuspless_unknot() {
    // a figure-eight whose lift sweeps a bit more than a half-turn and back;
    // its one crossing pairs strands a full lift-branch apart
    static const long long pts[8][2] = {{0, 0},     {654, 109},  {680, 148},  {667, 187},
                                        {628, 200}, {-52, -208}, {-91, -195}, {-104, -156}};
    TorusFront f;
    const Rat s(1, 1600);
    for (auto& p : pts)
        f.vertices.push_back(sv(Rat(p[0]) * s + Rat(1, 4), Rat(p[1]) * s + Rat(1, 2)));
    return f;
}

TorusFront zigzag_unknot(int p, int q) {
    if (p < 0 || q < 0) throw FrontError("zigzag_unknot: p,q must be >= 0");
    TorusFront f = flying_saucer();
    if (p + q == 0) return f;

    auto build = [&](bool up_is_ascending) {
        TorusFront g = f;
        int total = p + q;
        for (int k = 0; k < total; ++k) {
            // each patch adds 4 vertices; keep inserting into the tail of the
            // original top-middle segment, left to right
            size_t seg = 1 + static_cast<size_t>(4 * k);
            bool ascending_pair = k < p;
            bool flip = ascending_pair ? !up_is_ascending : up_is_ascending;
            Rat param = Rat(1, 3);
            g = patches::insert_valid(g, seg, param, Rat(1, 12 * total),
                                      patches::zigzag(flip), "zigzag_unknot");
        }
        return g;
    };
    TorusFront cand = build(true);
    InvariantReport r = report(cand);
    if (r.rot == p - q && r.tb == -p - q - 1) return cand;
    cand = build(false);
    r = report(cand);
    if (r.rot == p - q && r.tb == -p - q - 1) return cand;
    throw FrontError("zigzag_unknot: template orientation probe failed");
}

TorusFront stabilize(const TorusFront& f, int p, int q, const ArcSite& site) {
    if (p < 0 || q < 0) throw FrontError("stabilize: p,q must be >= 0");
    if (p + q == 0) return f;
    if (site.segment >= f.size()) throw FrontError("stabilize: no such segment");
    if (!(site.param > 0 && site.param < 1)) throw FrontError("stabilize: param out of range");
    long long rot0, tb0;
    {
        InvariantReport r = report(f);
        rot0 = r.rot;
        tb0 = r.tb;
    }
    auto build = [&](bool up_is_ascending) -> std::optional<TorusFront> {
        TorusFront g = f;
        int total = p + q;
        for (int k = 0; k < total; ++k) {
            size_t seg = site.segment + static_cast<size_t>(4 * k);
            bool ascending_pair = k < p;
            bool flip = ascending_pair ? !up_is_ascending : up_is_ascending;
            // pack pairs between the site point and the segment start
            Rat param = site.param * Rat(2 * k + 1, 2 * total);
            try {
                g = patches::insert_valid(g, seg, param, site.param / (8 * total),
                                          patches::zigzag(flip), "stabilize");
            } catch (const FrontError&) {
                return std::nullopt;
            }
        }
        InvariantReport r = report(g);
        if (r.rot == rot0 + p - q && r.tb == tb0 - p - q) return g;
        return std::nullopt;
    };
    if (auto g = build(true)) return *g;
    if (auto g = build(false)) return *g;
    throw FrontError("stabilize: invalid site");
}

TorusFront join_with_unknot(const TorusFront& f, const ArcSite& site, const TorusFront& u) {
    InvariantReport rf = report(f), ru = report(u);
    if (site.segment >= f.size()) throw FrontError("join: no such segment");
    if (u.structure_index != f.structure_index) throw FrontError("join: structure mismatch");

    Vec2 d = f.seg_dir(site.segment);
    Rat md = rat_max(rat_abs(d.y), rat_abs(d.z));
    Vec2 p = f.seg_start(site.segment) + d * site.param;

    for (int side = 0; side < 2; ++side) {
        for (int shrink = 0; shrink < 12; ++shrink) {
            Rat h = Rat(1, 24);
            for (int i = 0; i < shrink; ++i) h /= 3;
            Vec2 e1 = d * (h / md);
            Vec2 e2 = rot90(d) * (h / md);
            if (side) e2 = -e2;

            // a strand of u running with the site direction
            std::optional<size_t> pick;
            for (size_t j = 0; j < u.size(); ++j) {
                if (dot(u.seg_dir(j), d) > 0 && cross(u.seg_dir(j), d) == 0) {
                    pick = j;
                    break;
                }
            }
            if (!pick) {
                for (size_t j = 0; j < u.size(); ++j)
                    if (dot(u.seg_dir(j), d) > 0) {
                        pick = j;
                        break;
                    }
            }
            if (!pick) break;
            size_t uj = *pick;

            Vec2 qmid = u.seg_start(uj) + u.seg_dir(uj) * Rat(1, 2);
            TorusFront uu = u.translated((p - e2 * 4) - qmid);

            Vec2 P1 = p - e1 * 3, P2 = p + e1 * 3;
            Vec2 du = uu.seg_dir(uj);
            Rat mu = rat_max(rat_abs(du.y), rat_abs(du.z));
            Vec2 q0 = uu.seg_start(uj) + du * Rat(1, 2);
            Vec2 eu = du * (h / mu);
            Vec2 Q1 = q0 - eu * 2, Q2 = q0 + eu * 2;

            TorusFront g;
            g.alpha = f.alpha + u.alpha;
            g.beta = f.beta + u.beta;
            g.structure_index = f.structure_index;
            for (size_t i = 0; i <= site.segment; ++i) g.vertices.push_back(f.vertices[i]);
            g.vertices.push_back({P1, VertexKind::Smooth});
            g.vertices.push_back({Q2, VertexKind::Smooth});
            for (size_t i = 1; i < uu.size(); ++i) {
                size_t idx = (uj + i) % uu.size();
                Vertex v = uu.vertices[idx];
                if (uj + i >= uu.size()) v.p = v.p + uu.closure();
                g.vertices.push_back(v);
            }
            // after winding around u the cover position advances by u's closure
            g.vertices.push_back({Q1 + uu.closure(), VertexKind::Smooth});
            g.vertices.push_back({P2 + uu.closure(), VertexKind::Smooth});
            for (size_t i = site.segment + 1; i < f.size(); ++i) {
                Vertex v = f.vertices[i];
                v.p = v.p + uu.closure();
                g.vertices.push_back(v);
            }

            if (!validate(g).valid()) continue;
            InvariantReport rg = report(g);
            if (rg.rot != rf.rot + ru.rot || rg.tb != rf.tb + ru.tb + 1) continue;
            return g;
        }
    }
    throw FrontError("join_with_unknot: no valid splice at this site");
}

TorusFront unknot_with_invariants(long long r, long long t) {
    if (((r + t) % 2 + 2) % 2 != 1) throw FrontError("unknot_with_invariants: r + t must be odd");
    long long ar = r < 0 ? -r : r;
    if (t <= -ar - 1) {
        return zigzag_unknot(static_cast<int>((r - t - 1) / 2), static_cast<int>((-r - t - 1) / 2));
    }

    // Horizontal-circle blocks each add one to tb and -+1 to rot depending on
    // the side; leftover rotation is supplied by stabilizations.
    long long xb, xt, p2, q2;  // bottom blocks, top blocks, asc/desc pairs
    if (ar <= t + 1) {
        xb = (t + 1 + r) / 2;
        xt = (t + 1 - r) / 2;
        p2 = q2 = 0;
    } else if (r > 0) {
        p2 = (r - t - 1) / 2;
        q2 = 0;
        xb = (r + t + 1) / 2;
        xt = 0;
    } else {
        q2 = (-r - t - 1) / 2;
        p2 = 0;
        xt = (-r + t + 1) / 2;
        xb = 0;
    }

    TorusFront f = flying_saucer();
    TorusFront right_circle = gamma(0, 1, GammaVariant::Unique);   // rot -1 per join
    TorusFront left_circle = gamma(0, -1, GammaVariant::Unique);   // rot +1 per join

    auto host_segment = [&](bool topmost) -> size_t {
        // horizontal segment with extreme z, oriented right on top, left below
        std::optional<size_t> best;
        for (size_t i = 0; i < f.size(); ++i) {
            Vec2 d = f.seg_dir(i);
            if (d.z != 0) continue;
            if (topmost ? d.y <= 0 : d.y >= 0) continue;
            if (!best) {
                best = i;
                continue;
            }
            Rat za = f.seg_start(i).z, zb = f.seg_start(*best).z;
            if (topmost ? za > zb : za < zb) best = i;
        }
        if (!best) throw FrontError("unknot_with_invariants: no host strand");
        return *best;
    };

    for (long long i = 0; i < xt; ++i)
        f = join_with_unknot(f, ArcSite{host_segment(true), Rat(1, 2)}, right_circle);
    for (long long i = 0; i < xb; ++i)
        f = join_with_unknot(f, ArcSite{host_segment(false), Rat(1, 2)}, left_circle);

    if (p2 + q2 > 0) {
        // the upper-left saucer diagonal stays untouched by the joins
        std::optional<size_t> diag;
        for (size_t i = 0; i < f.size(); ++i)
            if (f.seg_start(i) == Vec2{Rat(1, 4), Rat(1, 2)}) diag = i;
        if (!diag) throw FrontError("unknot_with_invariants: lost the saucer corner");
        f = stabilize(f, static_cast<int>(p2), static_cast<int>(q2), ArcSite{*diag, Rat(1, 2)});
    }

    InvariantReport rep = report(f);
    if (rep.rot != r || rep.tb != t)
        throw FrontError("unknot_with_invariants: construction missed the target");
    return f;
}

std::pair<TorusFront, TorusFront> chekanov_pair() {
    static std::optional<std::pair<TorusFront, TorusFront>> cached;
    if (cached) return *cached;

    std::vector<PlatLayout> layouts;
    for (int caps = 0; caps < 4; ++caps) {
        for (int w0 = 1; w0 <= 3; ++w0)
            for (int w1 = 1; w1 <= 3; ++w1)
                for (int w2 = 1; w2 <= 3; ++w2)
                    for (int w3 = 1; w3 <= 3; ++w3)
                        for (int w4 = 1; w4 <= 3; ++w4) {
                            PlatLayout l;
                            l.word = {w0, w1, w2, w3, w4};
                            l.nested_left = caps & 1;
                            l.nested_right = caps & 2;
                            layouts.push_back(l);
                        }
    }
    std::vector<TorusFront> hits;
    std::vector<CanonicalKey> keys;
    for (auto& l : layouts) {
        auto f = plat_front(l);
        if (!f) continue;
        InvariantReport r = report(*f);
        if (r.rot != 0 || r.tb != 1) continue;
        if (r.cusp_pos + r.cusp_neg != 4 || r.cross_pos + r.cross_neg != 5) continue;
        hits.push_back(*f);
        keys.push_back(canonical_form(*f));
        // the half-turn image presents the same knot with the twist region on
        // the other side; it is the partner when its key differs
        TorusFront g = reflected(*f);
        if (validate(g).valid()) {
            InvariantReport rg = report(g);
            CanonicalKey kg = canonical_form(g);
            if (rg == r && !(kg == keys.back())) {
                cached = {*f, g};
                return *cached;
            }
        }
    }
    // fall back to any two same-report distinct-key plat fronts
    for (size_t i = 0; i < hits.size(); ++i)
        for (size_t j = i + 1; j < hits.size(); ++j)
            if (report(hits[i]) == report(hits[j]) && !(keys[i] == keys[j])) {
                cached = {hits[i], hits[j]};
                return *cached;
            }
    throw FrontError("chekanov_pair: no presentation found");
}

std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> out;
    auto expect = [](long long a, long long b, long long rot, long long tb) {
        InvariantReport r;
        r.alpha = a;
        r.beta = b;
        r.rot = rot;
        r.tb = tb;
        r.liftable = true;
        return r;
    };
    auto add = [&](std::string name, TorusFront f, InvariantReport want, LooseStatus st,
                   std::string notes) {
        InvariantReport r = report(f);
        want.cusp_pos = r.cusp_pos;
        want.cusp_neg = r.cusp_neg;
        want.cross_pos = r.cross_pos;
        want.cross_neg = r.cross_neg;
        want.parity_applicable = r.parity_applicable;
        want.parity_ok = r.parity_ok;
        out.push_back({std::move(name), std::move(f), want, st, std::move(notes)});
    };

    add("gamma_1_0", gamma(1, 0, GammaVariant::Unique), expect(1, 0, -1, 0), LooseStatus::Loose,
        "vertical constant-slope curve; bounds a face disk region");
    add("gamma_0_1", gamma(0, 1, GammaVariant::Unique), expect(0, 1, -1, 0), LooseStatus::Loose,
        "horizontal constant-slope curve");
    add("gamma_m1_1", gamma(-1, 1, GammaVariant::Unique), expect(-1, 1, 0, 1),
        LooseStatus::NonLoose, "slope -1 unknot; tight complement");
    add("gamma_1_m1", gamma(1, -1, GammaVariant::Unique), expect(1, -1, 0, 1),
        LooseStatus::NonLoose, "slope -1 unknot, opposite orientation class");
    add("gamma_m1_2", gamma(-1, 2, GammaVariant::Unique), expect(-1, 2, -1, 2),
        LooseStatus::NonLoose, "boundary family member");
    add("gamma_m2_3", gamma(-2, 3, GammaVariant::Unique), expect(-2, 3, -1, 6),
        LooseStatus::NonLoose, "negative-slope torus knot");
    add("gamma_2_3_front", gamma(2, 3, GammaVariant::FrontLift), expect(2, 3, -5, -6),
        LooseStatus::Unknown, "ambiguous-slope torus knot, near lift");
    add("gamma_2_3_back", gamma(2, 3, GammaVariant::BackLift), expect(2, 3, -5, -6),
        LooseStatus::Unknown, "ambiguous-slope torus knot, far lift");
    add("flying_saucer", flying_saucer(), expect(0, 0, 0, -1), LooseStatus::Loose,
        "standard two-cusp unknot");
    add("wrapped_saucer", wrapped_saucer(), expect(0, 0, 0, -1), LooseStatus::Loose,
        "two-cusp unknot drawn once around the horizontal direction");
    add("cuspless_unknot", cuspless_unknot(), expect(0, 0, 0, -1), LooseStatus::Loose,
        "figure-eight shaped unknot with no cusps");
    add("zigzag_1_0", zigzag_unknot(1, 0), expect(0, 0, 1, -2), LooseStatus::Loose,
        "single ascending stabilization of the saucer");
    add("zigzag_0_1", zigzag_unknot(0, 1), expect(0, 0, -1, -2), LooseStatus::Loose,
        "single descending stabilization of the saucer");
    add("zigzag_2_1", zigzag_unknot(2, 1), expect(0, 0, 1, -4), LooseStatus::Loose,
        "mixed stabilization");
    auto ch = chekanov_pair();
    add("twist_pair_a", ch.first, expect(0, 0, 0, 1), LooseStatus::Loose,
        "twist-knot front; same classical data as its partner");
    add("twist_pair_b", ch.second, expect(0, 0, 0, 1), LooseStatus::Loose,
        "twist-knot front; partner presentation");
    add("unknot_r0_t3", unknot_with_invariants(0, 3), expect(0, 0, 0, 3), LooseStatus::Loose,
        "circle-chain unknot with positive tb");
    add("unknot_r4_t1", unknot_with_invariants(4, 1), expect(0, -3, 4, 1), LooseStatus::Loose,
        "circle-chain unknot with large rotation");
    return out;
}

TorusFront random_front(uint64_t seed) {
    // bounded lift walk closed up exactly; deterministic in the seed
    auto rnd = [state = seed ? seed : 0x9e3779b97f4a7c15ull]() mutable {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    // directions at multiples of 22.5 degrees (rational stand-ins);
    // slot s stands for the lift s * pi/8
    static const Vec2 table[8] = {
        {Rat(1), Rat(0)},  {Rat(5), Rat(2)},  {Rat(1), Rat(1)},  {Rat(2), Rat(5)},
        {Rat(0), Rat(1)},  {Rat(-2), Rat(5)}, {Rat(-1), Rat(1)}, {Rat(-5), Rat(2)},
    };
    auto dir_for = [&](long long slot) {
        long long m = ((slot % 8) + 8) % 8;
        Vec2 d = table[m];
        long long k = (slot - m) / 8;
        if (((k % 2) + 2) % 2 != 0) d = -d;
        return d;
    };
    // the walk stays strictly inside the lift window (0, 3/2 pi) = slots 1..11
    const long long BLO = 1, BHI = 11, START = 2;

    for (int attempt = 0; attempt < 1200; ++attempt) {
        int nseg = 3 + static_cast<int>(rnd() % 6);
        long long slot = START;
        int sigma = 1;
        std::vector<Vec2> dirs;
        std::vector<long long> slots;
        std::vector<int> sigmas;
        std::vector<VertexKind> kind_before;
        kind_before.push_back(VertexKind::Smooth);  // fixed up for the closure below
        bool bad = false;
        for (int i = 0; i < nseg; ++i) {
            if (i > 0) {
                bool cusp = (rnd() % 4) == 0;
                long long dslot = 1 + static_cast<long long>(rnd() % 3);  // 1..3 slots
                if (rnd() % 2) dslot = -dslot;
                long long next = slot + dslot;
                if (next < BLO || next > BHI) next = slot - dslot;
                if (next < BLO || next > BHI) {
                    bad = true;
                    break;
                }
                slot = next;
                if (cusp) sigma = -sigma;
                kind_before.push_back(cusp ? VertexKind::Cusp : VertexKind::Smooth);
            }
            slots.push_back(slot);
            sigmas.push_back(sigma);
            Vec2 u = dir_for(slot);
            Vec2 d = sigma > 0 ? u : -u;
            Rat len(1 + static_cast<long long>(rnd() % 4), 2);
            dirs.push_back(d * len);
        }
        if (bad) continue;

        // two closing segments: search slots and orientation classes that give
        // a positive-length exact solution and legal junctions all around
        Vec2 S{Rat(0), Rat(0)};
        for (auto& d : dirs) S = S + d;
        auto junction_ok = [](long long sa, int ga, long long sb, int gb) {
            long long dd = sb - sa;
            if (dd < 0) dd = -dd;
            if (dd == 0) return ga == gb;  // collinear only without a cusp
            return dd <= 3;                // line turn under a quarter turn
        };
        bool placed = false;
        for (long long s1 = BLO; s1 <= BHI && !placed; ++s1)
            for (int g1 = 1; g1 >= -1 && !placed; g1 -= 2)
                for (long long s2 = BLO; s2 <= BHI && !placed; ++s2)
                    for (int g2 = 1; g2 >= -1 && !placed; g2 -= 2) {
                        if (!junction_ok(slots.back(), sigmas.back(), s1, g1)) continue;
                        if (!junction_ok(s1, g1, s2, g2)) continue;
                        if (!junction_ok(s2, g2, slots.front(), sigmas.front())) continue;
                        Vec2 d1 = dir_for(s1) * g1, d2 = dir_for(s2) * g2;
                        Rat det = cross(d1, d2);
                        if (det == 0) continue;
                        Rat l1 = cross(-S, d2) / det;
                        Rat l2 = cross(d1, -S) / det;
                        if (!(l1 > 0 && l2 > 0)) continue;
                        dirs.push_back(d1 * l1);
                        kind_before.push_back(sigmas.back() == g1 ? VertexKind::Smooth
                                                                  : VertexKind::Cusp);
                        dirs.push_back(d2 * l2);
                        kind_before.push_back(g1 == g2 ? VertexKind::Smooth : VertexKind::Cusp);
                        kind_before.front() =
                            (g2 == sigmas.front()) ? VertexKind::Smooth : VertexKind::Cusp;
                        placed = true;
                    }
        if (!placed) continue;

        // realize, scale into the square, validate
        Vec2 acc{Rat(0), Rat(0)};
        Rat max_y(0), max_z(0);
        for (auto& d : dirs) {
            acc = acc + d;
            max_y = rat_max(max_y, rat_abs(acc.y));
            max_z = rat_max(max_z, rat_abs(acc.z));
        }
        Rat span = rat_max(max_y, max_z) * 3;
        if (span == 0) continue;
        TorusFront f;
        Vec2 pos{Rat(1, 3), Rat(4, 9)};
        for (size_t i = 0; i < dirs.size(); ++i) {
            f.vertices.push_back({pos, kind_before[i]});
            pos = pos + dirs[i] * (Rat(1) / span);
        }
        if (validate(f).valid()) return f;
    }
    throw FrontError("random_front: no valid sample for this seed");
}

}  // namespace torusfront
