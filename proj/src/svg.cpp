#include "torusfront/invariants.hpp"
#include "torusfront/io.hpp"

#include <cmath>
#include <sstream>

namespace torusfront {

namespace {

double rd(const Rat& x) { return x.convert_to<double>(); }

std::string fmt(double v) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const TorusFront& f, const SvgOptions& opt) {
    Features ft = analyze(f);
    const int S = opt.size_px;
    const double margin = 0.05 * S;
    const double scale = S - 2 * margin;
    auto X = [&](const Rat& y) { return margin + rd(y) * scale; };
    auto Y = [&](const Rat& z) { return margin + (1.0 - rd(z)) * scale; };

    // crossing gaps: split the under-strand around each crossing
    std::vector<std::vector<Rat>> gaps(f.size());
    const Rat gap_r(1, 80);
    for (const auto& x : ft.crossings) {
        size_t under = x.a_over ? x.seg_b : x.seg_a;
        Rat param = x.a_over ? x.param_b : x.param_a;
        Rat len2 = norm2(f.seg_dir(under));
        Rat dp = gap_r;  // param-space radius, scaled by segment length
        if (len2 > Rat(1, 100)) dp = gap_r * 2 / 3;
        gaps[under].push_back(param - dp);
        gaps[under].push_back(param + dp);
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << S << "\" height=\"" << S
       << "\" viewBox=\"0 0 " << S << " " << S << "\">\n";
    os << "<defs><clipPath id=\"dom\"><rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin)
       << "\" width=\"" << fmt(scale) << "\" height=\"" << fmt(scale)
       << "\"/></clipPath></defs>\n";
    os << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(scale)
       << "\" height=\"" << fmt(scale) << "\" fill=\"white\" stroke=\"#888\"/>\n";
    os << "<g clip-path=\"url(#dom)\" stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";

    // draw each (sub)segment for every lattice translate that meets the square
    for (size_t i = 0; i < f.size(); ++i) {
        std::vector<Rat> cuts = gaps[i];
        cuts.push_back(Rat(0));
        cuts.push_back(Rat(1));
        std::sort(cuts.begin(), cuts.end());
        Vec2 a = f.seg_start(i), d = f.seg_dir(i);
        for (size_t k = 0; k + 1 < cuts.size(); k += 1) {
            Rat t0 = rat_max(cuts[k], Rat(0));
            Rat t1 = rat_min(cuts[k + 1], Rat(1));
            if (!(t0 < t1)) continue;
            bool is_gap = false;
            for (size_t g = 0; g + 1 < gaps[i].size(); g += 2)
                if (gaps[i][g] <= t0 && t1 <= gaps[i][g + 1]) is_gap = true;
            if (is_gap) continue;
            Vec2 p0 = a + d * t0, p1 = a + d * t1;
            long long ylo = rat_floor(rat_min(p0.y, p1.y)).convert_to<long long>();
            long long yhi = rat_floor(rat_max(p0.y, p1.y)).convert_to<long long>();
            long long zlo = rat_floor(rat_min(p0.z, p1.z)).convert_to<long long>();
            long long zhi = rat_floor(rat_max(p0.z, p1.z)).convert_to<long long>();
            for (long long ty = -yhi; ty <= -ylo; ++ty)
                for (long long tz = -zhi; tz <= -zlo; ++tz) {
                    Vec2 q0{p0.y + ty, p0.z + tz}, q1{p1.y + ty, p1.z + tz};
                    os << "<line x1=\"" << fmt(X(q0.y)) << "\" y1=\"" << fmt(Y(q0.z))
                       << "\" x2=\"" << fmt(X(q1.y)) << "\" y2=\"" << fmt(Y(q1.z)) << "\"/>\n";
                }
        }
    }
    os << "</g>\n";

    // cusp glyphs
    for (const auto& c : ft.cusps) {
        Vec2 p = torus_reduce(f.vertices[c.vertex_index].p);
        os << "<circle class=\"cusp\" cx=\"" << fmt(X(p.y)) << "\" cy=\"" << fmt(Y(p.z))
           << "\" r=\"3\" fill=\"black\"/>\n";
    }

    if (opt.arrows && f.size() > 0) {
        size_t longest = 0;
        for (size_t i = 1; i < f.size(); ++i)
            if (norm2(f.seg_dir(i)) > norm2(f.seg_dir(longest))) longest = i;
        Vec2 m = torus_reduce(f.seg_start(longest) + f.seg_dir(longest) * Rat(1, 2));
        Vec2 d = f.seg_dir(longest);
        double dn = std::sqrt(rd(norm2(d)));
        double uy = rd(d.y) / dn, uz = rd(d.z) / dn;
        double px = X(m.y), py = Y(m.z);
        double ax = uy * 7, ay = -uz * 7;
        double bx = -uz * 4, by = -uy * 4;
        os << "<path d=\"M " << fmt(px + ax) << " " << fmt(py + ay) << " L " << fmt(px + bx)
           << " " << fmt(py + by) << " L " << fmt(px - bx) << " " << fmt(py - by)
           << " Z\" fill=\"black\"/>\n";
    }

    if (opt.caption) {
        InvariantReport r = report(f);
        os << "<text x=\"" << fmt(margin) << "\" y=\"" << fmt(margin * 0.8)
           << "\" font-size=\"12\" font-family=\"monospace\">rot=" << r.rot << " tb=" << r.tb
           << " holonomy=(" << r.alpha << "," << r.beta << ") cusps=" << r.cusp_pos + r.cusp_neg
           << " crossings=" << r.cross_pos + r.cross_neg << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace torusfront
