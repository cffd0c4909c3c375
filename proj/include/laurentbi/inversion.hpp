#pragma once

#include <array>

#include "laurentbi/series.hpp"

namespace laurentbi {

// Compositional inverse h of a normalized map g, with g(h(w)) = w
// coefficientwise down to the stated depth. Same normal form as the map itself:
// h(w) = w + B0 + B1/w + ...
struct InverseMap {
    MeromorphicMap h;
    const Coefficient& B(int n) const { return h.b(n); }
};

// Order-by-order solve of [w^-k] g(h(w)) = [w^-k] w for k = 0..depth. Each B_n
// enters linearly with unit pivot (from g's leading z term). Throws
// DepthExhausted when depth exceeds g's validity.
InverseMap invert(const MeromorphicMap& g, int depth);

// Closed-form B0..B3 from b0..b3:
//   B0 = -b0, B1 = -b1, B2 = -b2 - b0 b1, B3 = -(b3 + 2 b0 b2 + b0^2 b1 + b1^2).
// Independent check against invert().
std::array<Coefficient, 4> inverse_closed_form(const Coefficient& b0, const Coefficient& b1,
                                               const Coefficient& b2, const Coefficient& b3);

// Numeric oracle: solves g(z) = w by Newton iteration from z0 = w (g(z) ~ z at
// infinity makes the basin trivial for |w| >= 4 (1 + max stored |coeff|)).
// Returns z with |g(z) - w| <= 1e-12 |w|; throws OracleDiverged after 64 steps.
Cplx newton_inverse_oracle(const MeromorphicMap& g, Cplx w);

}  // namespace laurentbi
