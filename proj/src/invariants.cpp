#include "torusfront/invariants.hpp"

namespace torusfront {

namespace {

long long rot_from(const Features& ft, const TorusFront& f) {
    long long d = ft.cusp_pos() - ft.cusp_neg();
    if (d % 2 != 0) throw FrontError("cusp sign imbalance is odd");
    return d / 2 - f.alpha - f.beta;
}

long long tb_from(const Features& ft, const TorusFront& f) {
    if (ft.cusps.size() % 2 != 0) throw FrontError("odd cusp count");
    long long x = ft.cross_pos() - ft.cross_neg();
    return x - static_cast<long long>(ft.cusps.size()) / 2 - f.alpha * f.beta;
}

}  // namespace

long long rotation(const TorusFront& f) { return rot_from(analyze(f), f); }

long long thurston_bennequin(const TorusFront& f) { return tb_from(analyze(f), f); }

long long linking_number(const TorusFront& f1, const TorusFront& f2) {
    auto mixed = mixed_crossings(f1, f2);
    long long s = 0;
    for (auto& x : mixed) s += x.sign;
    long long t = s - f1.alpha * f2.beta - f2.alpha * f1.beta;
    if (t % 2 != 0) throw FrontError("linking half-sum is not integral");
    return t / 2;
}

InvariantReport report(const TorusFront& f) {
    Features ft = analyze(f);
    InvariantReport r;
    r.alpha = f.alpha;
    r.beta = f.beta;
    r.cusp_pos = ft.cusp_pos();
    r.cusp_neg = ft.cusp_neg();
    r.cross_pos = ft.cross_pos();
    r.cross_neg = ft.cross_neg();
    r.rot = rot_from(ft, f);
    r.tb = tb_from(ft, f);
    r.liftable = true;
    r.parity_applicable = (f.alpha == 0 && f.beta == 0);
    r.parity_ok = r.parity_applicable && ((r.rot + r.tb) % 2 != 0);
    return r;
}

Admissibility nonloose_admissible(long long rot, long long tb, long long euler_chi) {
    long long a = tb < 0 ? -tb : tb;
    long long b = rot < 0 ? -rot : rot;
    return (-a + b <= -euler_chi) ? Admissibility::Admissible : Admissibility::Excluded;
}

Admissibility nonloose_unknot_admissible(long long rot, long long tb) {
    long long b = rot < 0 ? -rot : rot;
    return (tb > 0 && b < tb) ? Admissibility::Admissible : Admissibility::Excluded;
}

}  // namespace torusfront
