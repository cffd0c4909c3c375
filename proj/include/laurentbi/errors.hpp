#pragma once

#include <stdexcept>
#include <string>

namespace laurentbi {

// Mixed EXACT/FLOAT operands in one operation.
struct DomainMismatch : std::runtime_error {
    explicit DomainMismatch(const std::string& what) : std::runtime_error("domain mismatch: " + what) {}
};

// Reciprocal of a series whose leading coefficient is zero, or division by zero scalar.
struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error("not invertible: " + what) {}
};

// log/exp/pow argument outside the normalized form they require.
struct BadNormalization : std::runtime_error {
    explicit BadNormalization(const std::string& what) : std::runtime_error("bad normalization: " + what) {}
};

// An operation asked for more coefficients than its input validity guarantees.
struct DepthExhausted : std::runtime_error {
    explicit DepthExhausted(const std::string& what) : std::runtime_error("depth exhausted: " + what) {}
};

// Newton iteration failed to converge within the iteration budget.
struct OracleDiverged : std::runtime_error {
    explicit OracleDiverged(const std::string& what) : std::runtime_error("oracle diverged: " + what) {}
};

// Triangular solve hit a vanishing pivot (Bazilevic exponent makes an order underdetermined).
struct DegeneratePivot : std::runtime_error {
    explicit DegeneratePivot(const std::string& what) : std::runtime_error("degenerate pivot: " + what) {}
};

// Sampling radius not inside the series' domain.
struct OutsideDomain : std::runtime_error {
    explicit OutsideDomain(const std::string& what) : std::runtime_error("outside domain: " + what) {}
};

// Inverse-side target series is not of the normalized 1 + O(1/w) form.
struct MalformedTarget : std::runtime_error {
    explicit MalformedTarget(const std::string& what) : std::runtime_error("malformed target: " + what) {}
};

}  // namespace laurentbi
