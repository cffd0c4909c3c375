#pragma once

#include <utility>
#include <vector>

#include "laurentbi/coefficient.hpp"
#include "laurentbi/errors.hpp"

namespace laurentbi {

// Truncated Laurent series at infinity. Coefficients are stored densely for the
// degree window [-depth, top_degree], highest degree first. valid_to tracks how
// deep the stored coefficients are exact images of the underlying infinite
// object; every operation propagates it conservatively:
//
//   add/sub:     min(v1, v2)
//   mul:         min(v1 - t2, v2 - t1)
//   reciprocal:  v - 2|t|
//   derivative:  v (the -depth term's image at -depth-1 is dropped)
//   shift by k:  v - k
//   log/exp/pow: v (coefficient n of the result depends only on inputs 0..n)
//
// Rationale for mul: a dropped input term z^(-v-1) times a top term z^t lands at
// degree t-v-1, so nothing below that can be trusted.
//
// Series are immutable after construction; all operations are pure functions.
class LaurentSeries {
public:
    // Zero series: canonical form, top 0, everything zero.
    static LaurentSeries zero(Domain dom, int depth);

    // Series from (degree, coefficient) terms, treated as a finite Laurent
    // polynomial known exactly: valid_to = depth. Degrees above `depth` ago are
    // accepted anywhere in [-depth, +inf); duplicate degrees accumulate.
    static LaurentSeries from_terms(Domain dom, int depth, const std::vector<std::pair<int, Coefficient>>& terms);

    // Raw constructor: coefficients for degrees top, top-1, ..., top-(n-1).
    LaurentSeries(Domain dom, int top, std::vector<Coefficient> coeffs_desc, int valid_to);

    Domain domain() const { return dom_; }
    int top_degree() const { return top_; }
    int depth() const { return static_cast<int>(coeffs_.size()) - 1 - top_; }
    int valid_to() const { return valid_to_; }
    bool is_zero() const;

    // Stored coefficient, or a zero of the right domain outside the window.
    // Degrees below -valid_to are not guaranteed; the caller gates on valid_to().
    const Coefficient& coeff(int degree) const;

    // Same series viewed as exactly known to `depth` more coefficients (all
    // zero). Only meaningful when the series really is a finite polynomial.
    LaurentSeries extended_as_polynomial(int new_depth) const;

    // Drop stored degrees below -valid_to.
    LaurentSeries truncated_to_valid() const;

    // Keep window [-new_depth, top]; valid_to capped accordingly.
    LaurentSeries truncated(int new_depth) const;

    LaurentSeries promoted() const;  // EXACT -> FLOAT (identity on FLOAT)

    std::string to_string() const;  // human-readable, e.g. "z - 2 + z^-1"

private:
    Domain dom_;
    int top_;
    std::vector<Coefficient> coeffs_;  // descending degree from top_
    int valid_to_;

    void normalize();
    friend class SeriesOps;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries negated(const LaurentSeries& a);
LaurentSeries scalar_mul(const Coefficient& s, const LaurentSeries& a);

// Multiply by z^k (window shifts with the series).
LaurentSeries shift(const LaurentSeries& a, int k);

// Termwise d/dz.
LaurentSeries derivative(const LaurentSeries& a);

// b with a*b = 1 to the propagated validity depth; top(b) = -top(a).
LaurentSeries reciprocal(const LaurentSeries& a);

// Formal log: argument must be 1 + O(1/z) (EXACT: constant term exactly 1;
// FLOAT: within 1e-6, the true constant is used).
LaurentSeries log_series(const LaurentSeries& a);

// Formal exp: argument must be O(1/z) with top_degree <= 0 (EXACT: constant
// exactly 0; FLOAT: within 1e-6).
LaurentSeries exp_series(const LaurentSeries& a);

// a^t for real t on 1 + O(1/z) series. EXACT requires integer t. Equals
// exp_series(t * log_series(a)) and, for integer t, repeated multiplication.
LaurentSeries pow_real(const LaurentSeries& a, double t);

// Evaluation at a point of the same domain (Horner in 1/z over the stored window).
Coefficient eval_at(const LaurentSeries& a, const Coefficient& z);
Cplx eval_at(const LaurentSeries& a, Cplx z);

// Largest |a_k - b_k| over stored degrees >= floor_degree (promoting to FLOAT).
double max_abs_diff(const LaurentSeries& a, const LaurentSeries& b, int floor_degree);

// A normalized map z + b0 + b1/z + ...: top degree 1, leading coefficient exactly 1.
class MeromorphicMap {
public:
    explicit MeromorphicMap(LaurentSeries s);

    // z + sum of b_n / z^n from (n, b_n) pairs; unlisted b_n are zero.
    static MeromorphicMap from_b(Domain dom, int depth, const std::vector<std::pair<int, Coefficient>>& b_terms);
    static MeromorphicMap identity(Domain dom, int depth);

    const LaurentSeries& series() const { return s_; }
    // Coefficient of z^(-n), n >= 0; b(0) is the constant term.
    const Coefficient& b(int n) const { return s_.coeff(-n); }
    int depth() const { return s_.depth(); }
    int valid_to() const { return s_.valid_to(); }
    Domain domain() const { return s_.domain(); }
    MeromorphicMap promoted() const { return MeromorphicMap(s_.promoted()); }

private:
    LaurentSeries s_;
};

// z g'(z)/g(z) as a series with top degree 0 and constant term 1.
LaurentSeries z_log_derivative(const MeromorphicMap& g);

}  // namespace laurentbi
