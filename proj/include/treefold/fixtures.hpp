#pragma once

#include "treefold/extension.hpp"

#include <string>
#include <vector>

namespace treefold {

/// The 8-vertex, 17-triangle dunce hat: contractible, no free faces.
FacePoset dunce_hat();

/// Cycle on the vertices prefix0 .. prefix(n-1), in that order.
FacePoset polygon(int n, const std::string& prefix);

/// The two-edge configuration: T_1 = Q_0 = B_0 the path a-b-c, T_2 the point p, and
/// ∂B_0 = {(a,p), (c,p)}.
ExtensionState remark_e2_state();

}  // namespace treefold
