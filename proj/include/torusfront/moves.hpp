#pragma once

#include "torusfront/front.hpp"

#include <optional>
#include <set>

namespace torusfront {

enum class MoveKind : uint8_t { Iso, R1, R2a, R2b, R3, IVFront, IVBack };

std::string move_kind_name(MoveKind k);
std::optional<MoveKind> move_kind_from(const std::string& s);

// One applicable rewrite, bound to the front it was enumerated from.
// variant: kind-specific chirality code; bit 3 (value 8) marks the removing
// direction of the move.
struct MoveInstance {
    MoveKind kind = MoveKind::Iso;
    int variant = 0;
    std::vector<long long> ids;
    std::vector<Rat> params;

    bool removing() const { return variant & 8; }
};

struct AppliedMove {
    MoveInstance instance;
    TorusFront result;
    MoveInstance inverse;  // applicable to `result`, undoes the move
};

// Complete instance list at the current feature resolution, each bundled with
// its (validated) result. Iso instances are listed by enumerate_moves but are
// never expanded by the search (they fix the canonical key).
std::vector<AppliedMove> enumerate_applied(const TorusFront& f, const std::set<MoveKind>& kinds);
std::vector<MoveInstance> enumerate_moves(const TorusFront& f);

TorusFront apply_move(const TorusFront& f, const MoveInstance& m);
AppliedMove apply_move_full(const TorusFront& f, const MoveInstance& m);

const std::set<MoveKind>& all_move_kinds();
const std::set<MoveKind>& standard_move_kinds();  // without the face moves

// ------------------------------------------------------------- certificates

struct CertStep {
    MoveInstance move;
    uint64_t key_digest = 0;  // digest of the canonical key after the step
};

struct Certificate {
    uint64_t start_digest = 0;
    std::vector<CertStep> steps;
};

struct CertCheck {
    bool valid = false;
    size_t failed_step = 0;  // 1-based; 0 when the start or end mismatches
    std::string reason;
};

CertCheck check_certificate(const Certificate& c, const TorusFront& f_start,
                            const TorusFront& f_end);

std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

std::string serialize_move(const MoveInstance& m);

// Certificate moving an adjacent elementary cusp pair along the front.
struct SlideSites {
    size_t cusp_vertex;   // first cusp of the pair to move
    size_t target_segment;
    Rat target_param;
};
Certificate slide_cusp_pair(const TorusFront& f, const SlideSites& sites);

}  // namespace torusfront
