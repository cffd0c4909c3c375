#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "laurentbi/series.hpp"

namespace laurentbi {

// Deterministic uniform source. mt19937_64 output is pinned by the standard,
// and doubles are derived by bit manipulation only, so streams are
// reproducible across platforms and runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }  // [0, 1)
    std::uint64_t bits() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

// Per-trial seed derived from (sweep seed, trial index); splitmix64 finalizer.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct Atom {
    Coefficient weight;  // real, > 0
    Coefficient u;       // |u| <= 1
};

// Finite convex combination of Mobius kernels (z + u)/(z - u): a positive-real-part
// function on |z| > 1 by construction, with coefficients c_n = 2 sum_k w_k u_k^n.
class CaratheodoryAtoms {
public:
    CaratheodoryAtoms(Domain dom, std::vector<Atom> atoms);

    Domain domain() const { return dom_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    CaratheodoryAtoms promoted() const;

    // c_n = 2 sum_k w_k u_k^n for n >= 1 (the n = 0 analog is the constant 1).
    Coefficient c(int n) const;

    // Negate every kernel point; flips odd-index coefficients, fixes even ones.
    CaratheodoryAtoms negated() const;

private:
    Domain dom_;
    std::vector<Atom> atoms_;
};

// 1 + sum_{n=1..depth} c_n / z^n. Exact when all weights and points are rational.
LaurentSeries series_of(const CaratheodoryAtoms& p, int depth);

// Closed-form value sum_k w_k (z + u_k)/(z - u_k).
Cplx eval_closed_form(const CaratheodoryAtoms& p, Cplx z);

// Minimum of Re p over sampled circles |z| = r (r > 1 required, else OutsideDomain),
// evaluated in closed form.
double min_real_on_circles(const CaratheodoryAtoms& p, const std::vector<double>& radii, int samples);

// K uniform in 1..max_atoms; points from the closed unit disk or the unit circle
// with probability 1/2 each (boundary-biased toward extremals); weights from a
// symmetric Dirichlet draw. Deterministic given seed.
CaratheodoryAtoms sample_random(std::uint64_t seed, int max_atoms);

// As sample_random but emits +-u pairs with equal weights, so sum_k w_k u_k = 0
// exactly and every odd coefficient vanishes (forces c1 = 0, hence b0 = 0).
CaratheodoryAtoms sample_random_centered(std::uint64_t seed, int max_pairs);

// Inline shorthand "w@u,w@u,..." with w and the real/imag parts of u given as
// decimal or "num/den" literals, e.g. "0.5@1,0.5@-1" or "1@0.3+0.4i".
CaratheodoryAtoms parse_atoms_shorthand(const std::string& text);

}  // namespace laurentbi
