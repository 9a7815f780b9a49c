#pragma once

// Internal patch machinery shared by the catalog constructors and the move
// engine. Templates live in a conformal frame (d, rot90(d)) attached to a
// point of the host segment, so angle relations survive the transfer.

#include "torusfront/front.hpp"

#include <vector>

namespace torusfront::patches {

struct PatchPoint {
    Rat a, b;
    VertexKind kind;
};

// Dovetail: balanced cusp pair plus one crossing; tails on the host line.
std::vector<PatchPoint> dovetail(bool flip_across, bool flip_along);

// Elementary zigzag: one like-sense cusp pair, no crossing.
std::vector<PatchPoint> zigzag(bool flip_across);

TorusFront insert(const TorusFront& f, size_t seg, const Rat& param, const Rat& span,
                  const std::vector<PatchPoint>& tmpl);

// Shrink-until-valid insertion; throws FrontError after too many retries.
TorusFront insert_valid(const TorusFront& f, size_t seg, const Rat& param, Rat span,
                        const std::vector<PatchPoint>& tmpl, const char* what);

}  // namespace torusfront::patches
