#include "patches.hpp"

#include <algorithm>

namespace torusfront::patches {

std::vector<PatchPoint> dovetail(bool flip_across, bool flip_along) {
    std::vector<PatchPoint> t = {
        {Rat(-6), Rat(0), VertexKind::Smooth}, {Rat(2), Rat(1), VertexKind::Cusp},
        {Rat(-2), Rat(-3), VertexKind::Cusp},  {Rat(2), Rat(2), VertexKind::Smooth},
        {Rat(6), Rat(0), VertexKind::Smooth},
    };
    if (flip_across)
        for (auto& p : t) p.b = -p.b;
    if (flip_along) {
        std::reverse(t.begin(), t.end());
        for (auto& p : t) p.a = -p.a;
    }
    return t;
}

std::vector<PatchPoint> zigzag(bool flip_across) {
    std::vector<PatchPoint> t = {
        {Rat(-6), Rat(0), VertexKind::Smooth}, {Rat(2), Rat(2), VertexKind::Cusp},
        {Rat(-2), Rat(-2), VertexKind::Cusp},  {Rat(6), Rat(0), VertexKind::Smooth},
    };
    if (flip_across)
        for (auto& p : t) p.b = -p.b;
    return t;
}

TorusFront insert(const TorusFront& f, size_t seg, const Rat& param, const Rat& span,
                  const std::vector<PatchPoint>& tmpl) {
    Vec2 d = f.seg_dir(seg);
    Rat m = rat_max(rat_abs(d.y), rat_abs(d.z));
    Rat unit = span / (6 * m);
    Vec2 e1 = d * unit;
    Vec2 e2 = rot90(d) * unit;
    Vec2 p = f.seg_start(seg) + d * param;

    TorusFront g = f;
    std::vector<Vertex> patch;
    for (const auto& q : tmpl) patch.push_back({p + e1 * q.a + e2 * q.b, q.kind});
    g.vertices.insert(g.vertices.begin() + static_cast<long>(seg) + 1, patch.begin(), patch.end());
    return g;
}

TorusFront insert_valid(const TorusFront& f, size_t seg, const Rat& param, Rat span,
                        const std::vector<PatchPoint>& tmpl, const char* what) {
    for (int i = 0; i < 16; ++i) {
        TorusFront g = insert(f, seg, param, span, tmpl);
        if (validate(g).valid()) return g;
        span /= 4;
    }
    throw FrontError(std::string(what) + ": no valid patch size at this site");
}

}  // namespace torusfront::patches
