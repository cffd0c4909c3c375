#include "laurentbi/subclass.hpp"

#include <cmath>

namespace laurentbi {

const char* subclass_name(SubclassKind k) {
    switch (k) {
        case SubclassKind::Starlike: return "starlike";
        case SubclassKind::StronglyStarlike: return "strongly-starlike";
        case SubclassKind::Bazilevic: return "bazilevic";
    }
    return "?";
}

std::optional<SubclassKind> subclass_from_name(const std::string& name) {
    if (name == "starlike") return SubclassKind::Starlike;
    if (name == "strongly-starlike" || name == "strongly_starlike") return SubclassKind::StronglyStarlike;
    if (name == "bazilevic") return SubclassKind::Bazilevic;
    return std::nullopt;
}

void ClassSpec::validate(int depth) const {
    switch (kind) {
        case SubclassKind::Starlike:
            if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("starlike requires 0 <= alpha < 1");
            break;
        case SubclassKind::StronglyStarlike:
            if (!(alpha > 0.0 && alpha <= 1.0))
                throw std::invalid_argument("strongly-starlike requires 0 < alpha <= 1");
            break;
        case SubclassKind::Bazilevic:
            if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("bazilevic requires 0 < alpha <= 1");
            if (!(beta > 0.0)) throw std::invalid_argument("bazilevic requires beta > 0");
            for (int n = 0; n <= depth; ++n)
                if (std::abs(n + 1 - beta) < 1e-8)
                    throw DegeneratePivot("bazilevic order " + std::to_string(n) + " with beta = " +
                                          std::to_string(beta));
            break;
    }
}

LaurentSeries defining_lhs(const MeromorphicMap& g, double structural_beta) {
    const LaurentSeries gp = derivative(g.series());
    if (structural_beta == 0.0) return mul(shift(gp, 1), reciprocal(g.series()));  // z g'/g
    const LaurentSeries z_over_g = shift(reciprocal(g.series()), 1);
    return mul(pow_real(z_over_g, 1.0 - structural_beta), gp);
}

namespace {

LaurentSeries build_target(const ClassSpec& spec, const CaratheodoryAtoms& p, int target_depth) {
    const LaurentSeries ps = series_of(p, target_depth);
    const Domain dom = p.domain();
    if (spec.kind == SubclassKind::Starlike) {
        const Coefficient a = Coefficient::from_double(spec.alpha, dom);
        const LaurentSeries c = LaurentSeries::from_terms(dom, target_depth, {{0, a}});
        return add(c, scalar_mul(Coefficient::from_double(1.0 - spec.alpha, dom), ps));
    }
    return pow_real(ps, spec.alpha);
}

MeromorphicMap map_from_bvec(Domain dom, const std::vector<Coefficient>& b, int depth) {
    std::vector<std::pair<int, Coefficient>> terms;
    terms.reserve(b.size());
    for (int n = 0; n < static_cast<int>(b.size()); ++n) terms.emplace_back(n, b[static_cast<size_t>(n)]);
    return MeromorphicMap::from_b(dom, depth, terms);
}

}  // namespace

ConstructedMap build(const ClassSpec& spec, const CaratheodoryAtoms& p, int depth) {
    spec.validate(depth);
    const Domain dom = p.domain();
    const double sbeta = spec.structural_beta();
    const int work_depth = depth + 6;
    const LaurentSeries target = build_target(spec, p, depth + 1);

    // Order-by-order: b_n first appears in [z^-(n+1)] of the LHS, linearly with
    // pivot -(n+1-beta); everything else there involves b_0..b_{n-1} only.
    std::vector<Coefficient> b(static_cast<size_t>(depth) + 1, Coefficient::zero(dom));
    for (int n = 0; n <= depth; ++n) {
        const MeromorphicMap prov = map_from_bvec(dom, b, work_depth);
        const LaurentSeries lhs = defining_lhs(prov, sbeta);
        const Coefficient resid = target.coeff(-(n + 1)) - lhs.coeff(-(n + 1));
        const Coefficient pivot = -(Coefficient::from_double(n + 1, dom) - Coefficient::from_double(sbeta, dom));
        b[static_cast<size_t>(n)] = resid / pivot;
    }

    MeromorphicMap g = map_from_bvec(dom, b, depth);

    // Residual of the defining equation, checked at working depth.
    const LaurentSeries check = defining_lhs(map_from_bvec(dom, b, work_depth), sbeta);
    const double residual = max_abs_diff(check, target, -(depth + 1));
    return ConstructedMap{std::move(g), spec, p, target.truncated(depth + 1), residual};
}

ConstructedMap build_starlike(const CaratheodoryAtoms& p, double alpha, int depth) {
    return build(ClassSpec::starlike(alpha), p, depth);
}

ConstructedMap build_strongly_starlike(const CaratheodoryAtoms& p, double alpha, int depth) {
    return build(ClassSpec::strongly_starlike(alpha), p, depth);
}

ConstructedMap build_bazilevic(const CaratheodoryAtoms& p, double beta, double alpha, int depth) {
    return build(ClassSpec::bazilevic(beta, alpha), p, depth);
}

InverseSide inverse_side(const ConstructedMap& c, int depth) {
    if (c.g.valid_to() < depth + 2)
        throw DepthExhausted("inverse side needs construction validity >= depth + 2");
    const int h_depth = std::min(c.g.valid_to(), depth + 3);
    const InverseMap inv = invert(c.g, h_depth);
    const MeromorphicMap& h = inv.h;

    const double sbeta = c.spec.structural_beta();
    LaurentSeries S = defining_lhs(h, sbeta);
    if (S.top_degree() != 0) throw MalformedTarget("inverse-side series must start at w^0");
    const Coefficient s0 = S.coeff(0);
    if (S.domain() == Domain::Exact) {
        if (!(s0 == Coefficient::one(Domain::Exact))) throw MalformedTarget("inverse-side constant term != 1");
    } else if (std::abs(s0.fl() - 1.0) > 1e-6) {
        throw MalformedTarget("inverse-side constant term off by more than 1e-6");
    }

    LaurentSeries q = [&] {
        if (c.spec.kind == SubclassKind::Starlike) {
            const Domain dom = S.domain();
            const Coefficient a = Coefficient::from_double(c.spec.alpha, dom);
            const LaurentSeries ca = LaurentSeries::from_terms(dom, S.depth(), {{0, a}});
            return scalar_mul(Coefficient::one(dom) / (Coefficient::one(dom) - a), sub(S, ca));
        }
        return pow_real(S, 1.0 / c.spec.alpha);
    }();
    return InverseSide{std::move(S), std::move(q)};
}

LaurentSeries induced_q(const ConstructedMap& c, int depth) { return inverse_side(c, depth).q; }

}  // namespace laurentbi
