#pragma once

#include <vector>

#include "sgr/frames.hpp"
#include "sgr/lpa.hpp"

namespace sgr {

using LpaFrame = FrameColumn<LpaRing>;
using LpaFrames = FrameSystem<LpaRing>;

// Ghost paths of length n against real paths of length n (degree -n).
LpaFrame frame_negative(const LpaRing& L, int n);

// x = e^n, y = (e^*)^n for the first edge of a single-vertex graph.
LpaFrame frame_edge_power(const LpaRing& L, int n);

// Column z of degree n with z^dagger z = 1, returned as the frame (z, z^*).
LpaFrame parseval_frame(const LpaRing& L, int n);

// Column x of degree n with x^dagger x = e e^*.
std::vector<LpaElement> parseval_edge_column(const LpaRing& L, int e, int n);

enum class PositiveFrames { EdgePower, Parseval };

// Frames for every degree of the window; negative degrees always use ghost paths.
LpaFrames lpa_frames(const LpaRing& L, int window, PositiveFrames kind);

struct LevelUnit {
    std::vector<int> alpha;
    std::vector<int> beta;
    LpaElement value;
};

// alpha beta^* with |alpha| = |beta| = n and r(alpha) = r(beta).
std::vector<LevelUnit> level_span(const LpaRing& L, int n);

// Inverse of u in S_{-g}, given that u is a free basis of S_g. Throws
// MathError("NotABasis") when the witness is wrong. Coefficients are
// searched in the level-`level` window of L_0.
LpaElement invertible_from_free_basis(const LpaRing& L, int g, const LpaElement& u, int level);

void require_sink_free(const LpaRing& L);

}  // namespace sgr
