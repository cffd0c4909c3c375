#pragma once

#include <optional>
#include <string>

#include "laurentbi/caratheodory.hpp"
#include "laurentbi/inversion.hpp"
#include "laurentbi/series.hpp"

namespace laurentbi {

enum class SubclassKind { Starlike, StronglyStarlike, Bazilevic };

const char* subclass_name(SubclassKind k);
std::optional<SubclassKind> subclass_from_name(const std::string& name);

// Which subclass a construction or check targets.
//   Starlike:          Re(z g'/g) > alpha,            0 <= alpha < 1
//   StronglyStarlike:  |arg(z g'/g)| < alpha pi/2,    0 < alpha <= 1
//   Bazilevic:         |arg((z/g)^(1-beta) g')| < alpha pi/2, beta > 0, 0 < alpha <= 1
struct ClassSpec {
    SubclassKind kind;
    double alpha = 0.0;
    double beta = 0.0;  // Bazilevic only

    static ClassSpec starlike(double alpha) { return {SubclassKind::Starlike, alpha, 0.0}; }
    static ClassSpec strongly_starlike(double alpha) { return {SubclassKind::StronglyStarlike, alpha, 0.0}; }
    static ClassSpec bazilevic(double beta, double alpha) { return {SubclassKind::Bazilevic, alpha, beta}; }

    // Structural exponent: the defining equation is (z/g)^(1-b) g' = target with
    // b = beta for Bazilevic and b = 0 for both starlike variants.
    double structural_beta() const { return kind == SubclassKind::Bazilevic ? beta : 0.0; }

    // Parameter ranges plus, for Bazilevic, pivot non-degeneracy
    // min_{n in 0..depth} |n + 1 - beta| >= 1e-8. Throws on violation.
    void validate(int depth) const;
};

// A map built from a Caratheodory datum so that its defining equation holds
// coefficientwise: LHS(g) = target_series down to the construction depth.
struct ConstructedMap {
    MeromorphicMap g;
    ClassSpec spec;
    CaratheodoryAtoms source;
    LaurentSeries target_series;
    double residual_max;  // max |LHS(g) - target| over checked degrees (0 for EXACT)
};

// Left-hand side (z/g)^(1-structural_beta) g' of the defining equation.
LaurentSeries defining_lhs(const MeromorphicMap& g, double structural_beta);

// Solve z g' = (alpha + (1-alpha) p) g order by order; the unknown b_n carries
// pivot -(n+1), so b0 = -(1-alpha) c1 and 2 b1 = b0^2 - (1-alpha) c2.
ConstructedMap build_starlike(const CaratheodoryAtoms& p, double alpha, int depth);

// Solve z g'/g = p^alpha; b0 = -alpha c1.
ConstructedMap build_strongly_starlike(const CaratheodoryAtoms& p, double alpha, int depth);

// Solve (z/g)^(1-beta) g' = p^alpha; b_n carries pivot -(n+1-beta), so
// b0 = -alpha c1 / (1-beta). Throws DegeneratePivot when some |n+1-beta| < 1e-8.
ConstructedMap build_bazilevic(const CaratheodoryAtoms& p, double beta, double alpha, int depth);

ConstructedMap build(const ClassSpec& spec, const CaratheodoryAtoms& p, int depth);

// Both inverse-side series: S = w h'/h (starlike variants) or (w/h)^(1-beta) h'
// (Bazilevic), and q with S = (alpha + (1-alpha) q) resp. S = q^alpha.
struct InverseSide {
    LaurentSeries S;
    LaurentSeries q;
};

// Computes h = invert(g) and the inverse-side pair. The construction must carry
// validity depth + 2 beyond the requested q depth (DepthExhausted otherwise);
// with depth + 3 available the returned q is valid to the full requested depth.
// Throws MalformedTarget if S is not 1 + O(1/w).
InverseSide inverse_side(const ConstructedMap& c, int depth);

// q alone (the series fed to the membership check).
LaurentSeries induced_q(const ConstructedMap& c, int depth);

}  // namespace laurentbi
