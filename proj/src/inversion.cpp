#include "laurentbi/inversion.hpp"

#include <cmath>

namespace laurentbi {

namespace {

// g(h(w)) over the window [-depth, 1], where h is a provisional inverse given
// as b-style coefficients (B[0..depth], unknowns zero). Uses
// g(h) = h + sum_n b_n r^n w^-n with r = w/h, so only series_core machinery.
LaurentSeries compose_g_h(const MeromorphicMap& g, const std::vector<Coefficient>& B, int work_depth,
                          int g_depth) {
    const Domain dom = g.domain();
    std::vector<std::pair<int, Coefficient>> terms;
    terms.emplace_back(1, Coefficient::one(dom));
    for (int n = 0; n < static_cast<int>(B.size()); ++n) terms.emplace_back(-n, B[static_cast<size_t>(n)]);
    const LaurentSeries h = LaurentSeries::from_terms(dom, work_depth, terms);

    // r = w / h(w): top 0, constant 1.
    const LaurentSeries r = shift(reciprocal(h), 1);
    LaurentSeries acc = h;
    LaurentSeries rn = LaurentSeries::from_terms(dom, work_depth, {{0, Coefficient::one(dom)}});
    for (int n = 0; n <= g_depth; ++n) {
        const Coefficient& bn = g.b(n);
        if (!bn.is_zero()) acc = add(acc, scalar_mul(bn, shift(rn, -n)));
        if (n < g_depth) rn = mul(rn, r);
    }
    return acc;
}

}  // namespace

InverseMap invert(const MeromorphicMap& g, int depth) {
    if (depth < 0) throw std::invalid_argument("invert: negative depth");
    if (depth > g.valid_to())
        throw DepthExhausted("invert needs g valid to the requested depth");
    const Domain dom = g.domain();
    // Work a few coefficients deeper than requested so the conservative validity
    // bookkeeping of the composition never truncates an order we still need.
    const int work_depth = depth + 6;

    std::vector<Coefficient> B(static_cast<size_t>(depth) + 1, Coefficient::zero(dom));
    for (int n = 0; n <= depth; ++n) {
        // [w^-n] g(h) = B_n + (terms in B_0..B_{n-1}); target coefficient is 0.
        const LaurentSeries c = compose_g_h(g, B, work_depth, std::min(g.depth(), work_depth));
        B[static_cast<size_t>(n)] = -c.coeff(-n);
    }

    std::vector<std::pair<int, Coefficient>> terms;
    for (int n = 0; n <= depth; ++n) terms.emplace_back(n, B[static_cast<size_t>(n)]);
    return InverseMap{MeromorphicMap::from_b(dom, depth, terms)};
}

std::array<Coefficient, 4> inverse_closed_form(const Coefficient& b0, const Coefficient& b1,
                                               const Coefficient& b2, const Coefficient& b3) {
    return {
        -b0,
        -b1,
        -b2 - b0 * b1,
        -(b3 + Coefficient::from_double(2.0, b0.domain()) * b0 * b2 + b0 * b0 * b1 + b1 * b1),
    };
}

Cplx newton_inverse_oracle(const MeromorphicMap& g, Cplx w) {
    const LaurentSeries gs = g.series().promoted();
    const LaurentSeries gp = derivative(gs);
    Cplx z = w;
    const double tol = 1e-12 * std::abs(w);
    for (int it = 0; it < 64; ++it) {
        const Cplx f = eval_at(gs, z) - w;
        if (std::abs(f) <= tol) return z;
        const Cplx df = eval_at(gp, z);
        if (df == Cplx{}) throw OracleDiverged("flat derivative");
        z -= f / df;
    }
    throw OracleDiverged("no convergence in 64 iterations");
}

}  // namespace laurentbi
