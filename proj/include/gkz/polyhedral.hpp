#pragma once

#include <optional>

#include "gkz/numeric.hpp"

namespace gkz {

/// a . x >= b, or a . x > b when strict.
struct Inequality {
    RatVec a;
    Rat b;
    bool strict = false;
};

/// Exact Fourier-Motzkin elimination. Returns a point satisfying every
/// inequality, or nothing if the system is infeasible.
std::optional<RatVec> feasible_point(std::size_t nvars, std::vector<Inequality> system);

/// Point in the interior of the open cone { x : g . x > 0 for every row g },
/// scaled to be integral and primitive.
std::optional<IntVec> open_cone_point(const RatMatrix& normals);

}  // namespace gkz
