#pragma once

#include "torusfront/front.hpp"

namespace torusfront {

struct InvariantReport {
    long long alpha = 0, beta = 0;
    int cusp_pos = 0, cusp_neg = 0;
    int cross_pos = 0, cross_neg = 0;
    long long rot = 0, tb = 0;
    bool parity_applicable = false;  // only for (alpha,beta) == (0,0)
    bool parity_ok = false;
    bool liftable = false;

    bool operator==(const InvariantReport& o) const {
        return alpha == o.alpha && beta == o.beta && cusp_pos == o.cusp_pos &&
               cusp_neg == o.cusp_neg && cross_pos == o.cross_pos && cross_neg == o.cross_neg &&
               rot == o.rot && tb == o.tb;
    }
};

long long rotation(const TorusFront& f);
long long thurston_bennequin(const TorusFront& f);

// Linking number of the two knots presented by the fronts; symmetric.
long long linking_number(const TorusFront& f1, const TorusFront& f2);

InvariantReport report(const TorusFront& f);

enum class Admissibility { Admissible, Excluded };

// Non-loose bound for arbitrary knots: -|tb| + |rot| <= -chi.
Admissibility nonloose_admissible(long long rot, long long tb, long long euler_chi);

// Non-loose unknots: tb > 0 and |rot| < tb.
Admissibility nonloose_unknot_admissible(long long rot, long long tb);

}  // namespace torusfront
