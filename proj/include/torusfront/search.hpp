#pragma once

#include "torusfront/catalog.hpp"
#include "torusfront/moves.hpp"

namespace torusfront {

struct SearchBudget {
    size_t max_features = 24;   // cusps + crossings ceiling
    size_t max_depth = 40;
    size_t max_states = 1000000;
    std::set<MoveKind> enabled_moves = standard_move_kinds();
};

enum class SearchStatus {
    Found,          // certificate returned
    Obstructed,     // rot or tb differ at equal holonomy: certified negative
    Inconclusive,   // budget exhausted
    ExhaustedNoPath // both reachable sets closed without meeting (at this budget)
};

struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<Certificate> certificate;
    std::string note;
    size_t states = 0;
};

// Bidirectional breadth-first search over canonical keys.
SearchResult find_isotopy(const TorusFront& f1, const TorusFront& f2, const SearchBudget& budget);

struct CensusBucket {
    long long alpha = 0, beta = 0, rot = 0, tb = 0;
    std::vector<CanonicalKey> members;
    std::vector<std::vector<CanonicalKey>> merged_classes;  // partition by found connections
};

// Move-closure census from seed fronts (the catalog by default), bucketed by
// (alpha, beta, rot, tb).
std::vector<CensusBucket> build_census(const SearchBudget& budget,
                                       const std::vector<TorusFront>& seeds);
std::vector<CensusBucket> build_census(const SearchBudget& budget);

// Certificate for creating a p,q-stabilization on a straight far-lift arc
// through the overtwisted-disk patch at height z0, ending at the same
// canonical key as stabilize() at the adjacent arc.
struct DiskSite {
    Rat z0;
};
Certificate create_zigzag_near_disk(const TorusFront& f, int p, int q, const DiskSite& site);

}  // namespace torusfront
