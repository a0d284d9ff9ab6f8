#pragma once

#include "inca/graph.hpp"

namespace inca {

// Lovasz theta of g, computed by a primal-dual interior point method on the
// standard SDP  max <J,X>  s.t.  X_uv = 0 for edges uv, tr X = 1, X psd.
// Deterministic given tol; result is within tol of the true value. Throws
// resource_limit for graphs above 32 vertices and numerical_failure when the
// duality gap does not close within the iteration cap.
double lovasz_theta(const SimpleGraph& g, double tol = 1e-7);

}  // namespace inca
