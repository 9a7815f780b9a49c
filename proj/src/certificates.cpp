#include "torusfront/moves.hpp"
#include "torusfront/search.hpp"

#include <sstream>

namespace torusfront {

CertCheck check_certificate(const Certificate& c, const TorusFront& f_start,
                            const TorusFront& f_end) {
    CertCheck out;
    TorusFront cur = f_start;
    uint64_t d0 = key_digest(canonical_form(cur));
    if (d0 != c.start_digest) {
        out.reason = "start key does not match";
        return out;
    }
    for (size_t i = 0; i < c.steps.size(); ++i) {
        try {
            cur = apply_move(cur, c.steps[i].move);
        } catch (const FrontError& e) {
            out.failed_step = i + 1;
            out.reason = std::string("step does not apply: ") + e.what();
            return out;
        }
        uint64_t d = key_digest(canonical_form(cur));
        if (d != c.steps[i].key_digest) {
            out.failed_step = i + 1;
            out.reason = "key after step does not match";
            return out;
        }
    }
    if (!(canonical_form(cur) == canonical_form(f_end))) {
        out.reason = "replay does not end at the target front";
        return out;
    }
    out.valid = true;
    return out;
}

static std::string hex16(uint64_t v) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string serialize_move(const MoveInstance& m) {
    std::ostringstream os;
    os << move_kind_name(m.kind) << " " << m.variant << " " << m.ids.size();
    for (auto i : m.ids) os << " " << i;
    os << " " << m.params.size();
    for (auto& p : m.params) os << " " << rat_to_string(p);
    return os.str();
}

std::string serialize_certificate(const Certificate& c) {
    std::ostringstream os;
    os << "cert v1\n";
    os << "start " << hex16(c.start_digest) << "\n";
    for (auto& s : c.steps)
        os << "step " << serialize_move(s.move) << " " << hex16(s.key_digest) << "\n";
    return os.str();
}

Certificate parse_certificate(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Certificate c;
    bool header = false, have_start = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (!header) {
            std::string v;
            ls >> v;
            if (tok != "cert" || v != "v1")
                throw FrontError("certificate: expected header 'cert v1'");
            header = true;
            continue;
        }
        if (tok == "start") {
            std::string h;
            if (!(ls >> h)) throw FrontError("certificate: bad start line");
            c.start_digest = strtoull(h.c_str(), nullptr, 16);
            have_start = true;
        } else if (tok == "step") {
            std::string kind;
            int variant;
            size_t nids, nparams;
            if (!(ls >> kind >> variant >> nids))
                throw FrontError("certificate: bad step line");
            auto k = move_kind_from(kind);
            if (!k) throw FrontError("certificate: unknown move kind " + kind);
            MoveInstance m;
            m.kind = *k;
            m.variant = variant;
            for (size_t i = 0; i < nids; ++i) {
                long long v;
                if (!(ls >> v)) throw FrontError("certificate: bad ids");
                m.ids.push_back(v);
            }
            if (!(ls >> nparams)) throw FrontError("certificate: bad step line");
            for (size_t i = 0; i < nparams; ++i) {
                std::string r;
                if (!(ls >> r)) throw FrontError("certificate: bad params");
                auto q = rat_from_string(r);
                if (!q) throw FrontError("certificate: malformed rational " + r);
                m.params.push_back(*q);
            }
            std::string h;
            if (!(ls >> h)) throw FrontError("certificate: missing step digest");
            c.steps.push_back({std::move(m), strtoull(h.c_str(), nullptr, 16)});
        } else {
            throw FrontError("certificate: unknown directive " + tok);
        }
    }
    if (!header || !have_start) throw FrontError("certificate: incomplete file");
    return c;
}

// -------------------------------------------------------------------- slide

namespace {

// remove the elementary cusp pair starting at vertex v (the pair occupies v
// and the following cusp vertex); returns the smoothed front and the pair's
// sense split (p,q)
std::pair<TorusFront, std::pair<int, int>> unstabilize(const TorusFront& f, size_t v) {
    if (v >= f.size() || f.vertices[v].kind != VertexKind::Cusp)
        throw FrontError("slide: site is not a cusp");
    size_t v2 = v + 1;
    if (v2 >= f.size() || f.vertices[v2].kind != VertexKind::Cusp)
        throw FrontError("slide: not an adjacent elementary pair");

    Features ft = analyze(f);
    int asc = 0;
    for (auto& c : ft.cusps)
        if (c.vertex_index == v || c.vertex_index == v2) asc += c.sense == CuspSense::Ascending;
    if (asc == 1) throw FrontError("slide: cusp pair is balanced, not a stabilization pair");

    TorusFront g = f;
    g.vertices.erase(g.vertices.begin() + static_cast<long>(v),
                     g.vertices.begin() + static_cast<long>(v2) + 1);
    if (!validate(g).valid()) throw FrontError("slide: pair does not lift off this arc");
    InvariantReport before = report(f), after = report(g);
    if (after.tb != before.tb + 1) throw FrontError("slide: removal is not an unstabilization");
    return {g, asc == 2 ? std::make_pair(1, 0) : std::make_pair(0, 1)};
}

}  // namespace

Certificate slide_cusp_pair(const TorusFront& f, const SlideSites& sites) {
    auto [base, pq] = unstabilize(f, sites.cusp_vertex);
    TorusFront target =
        stabilize(base, pq.first, pq.second, ArcSite{sites.target_segment, sites.target_param});
    SearchBudget budget;
    budget.max_depth = 16;
    budget.max_states = 60000;
    InvariantReport r = report(f);
    budget.max_features =
        static_cast<size_t>(r.cusp_pos + r.cusp_neg + r.cross_pos + r.cross_neg) + 4;
    SearchResult res = find_isotopy(f, target, budget);
    if (res.status != SearchStatus::Found)
        throw FrontError("slide: no certificate within the slide budget (" + res.note + ")");
    return *res.certificate;
}

Certificate create_zigzag_near_disk(const TorusFront& f, int p, int q, const DiskSite& site) {
    if (p < 0 || q < 0) throw FrontError("zigzag macro: p,q must be >= 0");
    Features ft = analyze(f);

    // the patch wants a straight constant-slope arc through the z0 band whose
    // lift keeps the knot behind the disk (a full half-turn above the anchor)
    std::optional<size_t> arc;
    for (size_t i = 0; i < f.size(); ++i) {
        Vec2 a = f.seg_start(i), b = f.seg_end(i);
        Rat zlo = rat_min(a.z, b.z), zhi = rat_max(a.z, b.z);
        bool crosses = false;
        for (long long kz = rat_floor(zlo - site.z0).convert_to<long long>() - 1;
             kz <= rat_floor(zhi - site.z0).convert_to<long long>() + 1; ++kz)
            if (zlo < site.z0 + kz && site.z0 + kz < zhi) crosses = true;
        if (!crosses) continue;
        if (ft.lifts[i].half_turns - ft.anchor < 1) continue;  // in front of the disk
        bool has_pass = false;
        for (auto& x : ft.crossings)
            if (x.seg_a == i || x.seg_b == i) has_pass = true;
        if (has_pass) continue;
        arc = i;
        break;
    }
    if (!arc) throw FrontError("zigzag macro: no straight far-lift arc through the disk patch");

    if (p + q == 0) {
        Certificate c;
        c.start_digest = key_digest(canonical_form(f));
        return c;
    }

    TorusFront target = stabilize(f, p, q, ArcSite{*arc, Rat(1, 2)});
    SearchBudget budget;
    budget.max_depth = 24;
    budget.max_states = 150000;
    budget.enabled_moves = all_move_kinds();
    budget.enabled_moves.erase(MoveKind::Iso);
    InvariantReport r = report(f);
    budget.max_features =
        static_cast<size_t>(r.cusp_pos + r.cusp_neg + r.cross_pos + r.cross_neg) + 8 +
        2 * static_cast<size_t>(p + q);
    SearchResult res = find_isotopy(f, target, budget);
    if (res.status != SearchStatus::Found)
        throw FrontError("zigzag macro: no certificate within budget (" + res.note + ")");
    return *res.certificate;
}

}  // namespace torusfront
