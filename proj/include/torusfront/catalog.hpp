#pragma once

#include "torusfront/front.hpp"
#include "torusfront/invariants.hpp"

#include <optional>

namespace torusfront {

enum class GammaVariant { FrontLift, BackLift, Unique };

// Constant-slope curve of slope m/n with holonomy (m,n). For mn > 0 the
// diagram alone leaves two lifts; the front/back variants carry a small
// lift-pinning kink and must be requested explicitly. For mn <= 0 the lift is
// unique and variant must be Unique.
TorusFront gamma(long long m, long long n, GammaVariant variant);

// The standard two-cusp unknot.
TorusFront flying_saucer();

// The same unknot class drawn once around the horizontal direction, staying
// close to one face of the cube.
TorusFront wrapped_saucer();

// Unknot with a cuspless front: one negative far-gap crossing.
TorusFront cuspless_unknot();

// Z_{p,q}: unknot with 2p+1 ascending and 2q+1 descending cusps.
TorusFront zigzag_unknot(int p, int q);

struct ArcSite {
    size_t segment;
    Rat param;  // position along the segment, in (0,1)
};

// Insert p ascending and q descending cusp pairs on a cuspless,
// crossing-free arc.
TorusFront stabilize(const TorusFront& f, int p, int q, const ArcSite& site);

// Unknot with rotation r and Thurston-Bennequin invariant t (r + t odd).
TorusFront unknot_with_invariants(long long r, long long t);

// Plumb a small unknot onto a front near the given arc. Topological type is
// kept, rotations add, tb adds plus one.
TorusFront join_with_unknot(const TorusFront& f, const ArcSite& site, const TorusFront& u);

// Two fronts of one twist knot with equal classical invariants and distinct
// canonical keys.
std::pair<TorusFront, TorusFront> chekanov_pair();

enum class LooseStatus { Loose, NonLoose, Unknown };

struct CatalogEntry {
    std::string name;
    TorusFront front;
    InvariantReport expected;
    LooseStatus loose_status;
    std::string notes;
};

// The named-front table used by the test corpus and the CLI.
std::vector<CatalogEntry> catalog();

// Deterministic pseudo-random valid fronts for property suites.
TorusFront random_front(uint64_t seed);

}  // namespace torusfront
