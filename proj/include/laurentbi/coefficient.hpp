#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "laurentbi/errors.hpp"

namespace laurentbi {

enum class Domain { Exact, Float };

inline const char* domain_name(Domain d) { return d == Domain::Exact ? "exact" : "float"; }

using Cplx = std::complex<double>;

// Gaussian rational: exact complex number with arbitrary-precision rational parts.
struct ExactComplex {
    mpq_class re{0};
    mpq_class im{0};

    ExactComplex() = default;
    ExactComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    explicit ExactComplex(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    Cplx to_cplx() const { return {re.get_d(), im.get_d()}; }

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ExactComplex inverse() const {
        mpq_class n = re * re + im * im;
        if (sgn(n) == 0) throw NotInvertible("exact complex zero");
        return {re / n, -im / n};
    }
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) { return a * b.inverse(); }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) { return a.re == b.re && a.im == b.im; }
};

// Parse "num/den" (or plain integer) into a canonical rational. Throws std::invalid_argument on bad input.
mpq_class parse_rational(const std::string& s);

// Canonical text form, "num/den" with den omitted when 1.
std::string rational_to_string(const mpq_class& q);

// Exact rational equal to the given double (binary expansion, not a decimal approximation).
mpq_class rational_from_double(double x);

// A complex scalar tagged EXACT or FLOAT. Arithmetic between mixed domains throws
// DomainMismatch; promotion to FLOAT is explicit via promote().
class Coefficient {
public:
    Coefficient() : v_(ExactComplex{}) {}
    explicit Coefficient(ExactComplex e) : v_(std::move(e)) {}
    explicit Coefficient(Cplx f) : v_(f) {}

    static Coefficient exact(mpq_class re, mpq_class im = 0) { return Coefficient(ExactComplex{std::move(re), std::move(im)}); }
    static Coefficient exact_int(long re, long im = 0) { return Coefficient(ExactComplex{mpq_class(re), mpq_class(im)}); }
    static Coefficient floating(double re, double im = 0.0) { return Coefficient(Cplx{re, im}); }
    static Coefficient zero(Domain d) { return d == Domain::Exact ? Coefficient(ExactComplex{}) : Coefficient(Cplx{}); }
    static Coefficient one(Domain d) { return d == Domain::Exact ? exact_int(1) : floating(1.0); }

    // Scalar of the same domain equal to the double x. For EXACT this is the exact
    // binary value of x, so dyadic parameters (1/2, 1/4, ...) convert losslessly.
    static Coefficient from_double(double x, Domain d) {
        return d == Domain::Exact ? exact(rational_from_double(x)) : floating(x);
    }

    Domain domain() const { return std::holds_alternative<ExactComplex>(v_) ? Domain::Exact : Domain::Float; }
    bool is_exact() const { return domain() == Domain::Exact; }

    const ExactComplex& ex() const { return std::get<ExactComplex>(v_); }
    Cplx fl() const { return std::get<Cplx>(v_); }

    bool is_zero() const { return is_exact() ? ex().is_zero() : fl() == Cplx{}; }

    Coefficient promote() const { return is_exact() ? Coefficient(ex().to_cplx()) : *this; }
    Cplx to_cplx() const { return is_exact() ? ex().to_cplx() : fl(); }
    double abs() const { return std::abs(to_cplx()); }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
        check_same(a, b, "+");
        if (a.is_exact()) return Coefficient(a.ex() + b.ex());
        return Coefficient(a.fl() + b.fl());
    }
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b) {
        check_same(a, b, "-");
        if (a.is_exact()) return Coefficient(a.ex() - b.ex());
        return Coefficient(a.fl() - b.fl());
    }
    friend Coefficient operator-(const Coefficient& a) {
        if (a.is_exact()) return Coefficient(-a.ex());
        return Coefficient(-a.fl());
    }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        check_same(a, b, "*");
        if (a.is_exact()) return Coefficient(a.ex() * b.ex());
        return Coefficient(a.fl() * b.fl());
    }
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b) {
        check_same(a, b, "/");
        if (a.is_exact()) return Coefficient(a.ex() / b.ex());
        if (b.fl() == Cplx{}) throw NotInvertible("float zero divisor");
        return Coefficient(a.fl() / b.fl());
    }
    Coefficient& operator+=(const Coefficient& b) { return *this = *this + b; }
    Coefficient& operator-=(const Coefficient& b) { return *this = *this - b; }
    Coefficient& operator*=(const Coefficient& b) { return *this = *this * b; }

    // Same-domain equality; EXACT compares with no tolerance.
    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        check_same(a, b, "==");
        if (a.is_exact()) return a.ex() == b.ex();
        return a.fl() == b.fl();
    }

    std::string to_string() const;

private:
    static void check_same(const Coefficient& a, const Coefficient& b, const char* op) {
        if (a.domain() != b.domain()) throw DomainMismatch(op);
    }
    std::variant<ExactComplex, Cplx> v_;
};

}  // namespace laurentbi
