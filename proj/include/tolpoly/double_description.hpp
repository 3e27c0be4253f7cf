#pragma once

#include "tolpoly/linalg.hpp"

namespace tolpoly {

/// Extreme rays of the pointed cone {y in R^d : G y <= 0}, each scaled to a
/// primitive integer vector. Incremental double description with the
/// combinatorial adjacency test; exact throughout.
///
/// Throws Error(InvariantViolation) when rank(G) < d (the cone has a
/// lineality space and no extreme-ray representation).
std::vector<Vec> extreme_rays(const Matrix& G, std::size_t d);

}  // namespace tolpoly
