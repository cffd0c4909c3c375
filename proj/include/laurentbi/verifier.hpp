#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laurentbi/subclass.hpp"

namespace laurentbi {

// Theorem bound pair for the initial coefficients.
//   Starlike alpha:          |b0| <= 2(1-alpha),        |b1| <= (1-alpha) sqrt(4a^2 - 8a + 5)
//   Strongly starlike alpha: |b0| <= 2 alpha,           |b1| <= sqrt(5) alpha^2
//   Bazilevic (beta, alpha): |b0| <= 2 alpha/(1-beta),
//       |b1| <= 2 alpha^2 / ((1-beta)(2-beta)) * sqrt(2 (1-beta)(2-beta) + 1)
// Bazilevic requires beta < 1 (the b0 bound is not positive otherwise); beta >= 1
// throws std::domain_error.
struct Bounds {
    double b0;
    double b1;
};
Bounds theorem_bounds(const ClassSpec& spec);

// Outcome of the empirical inverse-side positivity check. Admission is
//   admitted = (q_min_real >= -re_tol) AND (tail_estimate <= tail_tol)
// with documented defaults re_tol = tail_tol = 1e-6. The check samples the
// valid-truncated q series, so it certifies positivity only at radii where the
// truncation tail is negligible; q_min_real < 0 is data, never an error.
struct MembershipReport {
    double q_min_real = 0.0;
    double tail_estimate = 0.0;
    bool admitted = false;
    std::vector<double> radii;
    int samples = 0;
    // Sector margin: min over samples of alpha*pi/2 - |arg S| for the sector
    // classes, min(Re S - alpha) for starlike. Recorded alongside q_min_real;
    // the two express the same condition through S and through q.
    double arg_margin_min = 0.0;
    int q_valid_to = 0;
};

// Samples Re q (and the S-side margin) over the radius/angle grid. All radii
// must be >= 1.25, the certification floor: closer to |w| = 1 the truncated
// tail dominates and no sampling depth is honest.
MembershipReport check_membership(const ConstructedMap& c, const std::vector<double>& radii, int samples,
                                  double re_tol = 1e-6, double tail_tol = 1e-6);

struct SweepConfig {
    ClassSpec spec;
    int trials = 200;
    std::uint64_t seed = 0;
    int depth = 16;
    std::vector<double> radii = {16.0, 32.0};
    int samples = 256;
    int max_atoms = 4;
    double re_tol = 1e-6;
    double tail_tol = 1e-6;
    int threads = 0;  // 0 = all available; 1 = serial
    bool include_boundary_family = true;
    int boundary_points = 64;
    bool b0_zero = false;  // draw atoms with sum w_k u_k = 0 (forces c1 = 0, b0 = 0)
};

// Provenance for one evaluated construction (kept for extrema and candidates).
struct TrialRecord {
    long index = 0;
    bool boundary = false;
    std::uint64_t seed_used = 0;
    CaratheodoryAtoms atoms;
    MeromorphicMap g;
    MembershipReport membership;
    double abs_b0 = 0.0, abs_b1 = 0.0;
    double ratio_b0 = 0.0, ratio_b1 = 0.0;
};

struct BoundReport {
    ClassSpec spec;
    double bound_b0 = 0.0, bound_b1 = 0.0;
    double observed_max_b0 = 0.0, observed_max_b1 = 0.0;
    double ratio_b0 = 0.0, ratio_b1 = 0.0;
    int trials = 0;
    long total_evaluated = 0, admitted = 0, rejected = 0, errors = 0;
    std::uint64_t seed = 0;
    int depth = 0;
    std::vector<double> radii;
    int samples = 0;
    int max_atoms = 0;
    bool b0_zero = false;
    // b0 = 0 sweeps carry two |b1| bounds side by side: the stated one and the
    // one re-derived from the second-order coefficient identity with c1 = 0.
    // Neither is asserted; both ratios are reported.
    std::optional<double> b1_bound_stated, b1_bound_derived;
    std::optional<double> ratio_b1_stated, ratio_b1_derived;
    // Admitted maps exceeding a bound by more than 1e-6 relative. Emitted with
    // full provenance, never clipped; deciding whether a candidate is a
    // truncation artifact or a genuine counterexample is the reader's job.
    std::vector<TrialRecord> candidates;
    std::optional<TrialRecord> max_b0_witness, max_b1_witness;
};

// Random-plus-boundary-family sweep; trials are pure functions of (seed, index)
// and the reduction is order-independent, so the parallel and serial paths
// produce identical reports.
BoundReport sweep(const SweepConfig& cfg);         // OpenMP over trials
BoundReport sweep_serial(const SweepConfig& cfg);  // reference implementation

// Convenience wrapper: cfg with b0_zero = true, restricted to the classes whose
// b0 = 0 statements the report tabulates.
BoundReport sweep_b0_zero(const SweepConfig& cfg);

// Inverse-coefficient table for a map with b0 = 0: |B_{2n-1}| against the
// conjectured bound (2n-2)!/(n!(n-1)!), tabulated only, not asserted.
struct SpringerRow {
    int n = 0;
    double abs_B = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    std::string abs_B_exact;  // canonical rational when the coefficient is real EXACT
    std::string bound_exact;
};
std::vector<SpringerRow> springer_report(const MeromorphicMap& g, int n_max);

}  // namespace laurentbi
