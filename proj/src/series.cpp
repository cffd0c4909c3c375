#include "laurentbi/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace laurentbi {

namespace {

constexpr double kFloatNormTol = 1e-6;

Coefficient int_scalar(long n, Domain d) {
    return d == Domain::Exact ? Coefficient::exact_int(n) : Coefficient::floating(static_cast<double>(n));
}

int clamp_valid(int v, int depth) { return std::min(v, depth); }

}  // namespace

LaurentSeries::LaurentSeries(Domain dom, int top, std::vector<Coefficient> coeffs_desc, int valid_to)
    : dom_(dom), top_(top), coeffs_(std::move(coeffs_desc)), valid_to_(valid_to) {
    if (coeffs_.empty()) coeffs_.push_back(Coefficient::zero(dom_));
    for (const auto& c : coeffs_)
        if (c.domain() != dom_) throw DomainMismatch("series coefficient domain");
    normalize();
}

void LaurentSeries::normalize() {
    const int depth_before = depth();
    size_t lead = 0;
    while (lead + 1 < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        top_ -= static_cast<int>(lead);
    }
    if (coeffs_.size() == 1 && coeffs_[0].is_zero()) {
        // Degenerate zero series: canonical form has top 0 and full validity.
        coeffs_.assign(static_cast<size_t>(depth_before) + 1, Coefficient::zero(dom_));
        top_ = 0;
        valid_to_ = depth_before;
        return;
    }
    valid_to_ = clamp_valid(valid_to_, depth());
}

LaurentSeries LaurentSeries::zero(Domain dom, int depth) {
    return LaurentSeries(dom, 0, std::vector<Coefficient>(static_cast<size_t>(depth) + 1, Coefficient::zero(dom)), depth);
}

LaurentSeries LaurentSeries::from_terms(Domain dom, int depth,
                                        const std::vector<std::pair<int, Coefficient>>& terms) {
    int top = 0;
    for (const auto& [deg, c] : terms) {
        (void)c;
        top = std::max(top, deg);
        if (deg < -depth) throw std::invalid_argument("term degree below -depth");
    }
    std::vector<Coefficient> cs(static_cast<size_t>(top + depth) + 1, Coefficient::zero(dom));
    for (const auto& [deg, c] : terms) cs[static_cast<size_t>(top - deg)] += c;
    return LaurentSeries(dom, top, std::move(cs), depth);
}

bool LaurentSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

const Coefficient& LaurentSeries::coeff(int degree) const {
    static const Coefficient exact_zero = Coefficient::zero(Domain::Exact);
    static const Coefficient float_zero = Coefficient::zero(Domain::Float);
    if (degree > top_ || degree < top_ - static_cast<int>(coeffs_.size()) + 1)
        return dom_ == Domain::Exact ? exact_zero : float_zero;
    return coeffs_[static_cast<size_t>(top_ - degree)];
}

LaurentSeries LaurentSeries::extended_as_polynomial(int new_depth) const {
    if (new_depth <= depth()) return truncated(new_depth);
    std::vector<Coefficient> cs = coeffs_;
    cs.resize(static_cast<size_t>(top_ + new_depth) + 1, Coefficient::zero(dom_));
    return LaurentSeries(dom_, top_, std::move(cs), new_depth);
}

LaurentSeries LaurentSeries::truncated_to_valid() const {
    if (valid_to_ >= depth()) return *this;
    if (-valid_to_ > top_) throw DepthExhausted("no stored coefficient is valid");
    return truncated(valid_to_);
}

LaurentSeries LaurentSeries::truncated(int new_depth) const {
    if (new_depth >= depth()) return *this;
    if (-new_depth > top_) return LaurentSeries::zero(dom_, std::max(new_depth, 0));
    std::vector<Coefficient> cs(coeffs_.begin(), coeffs_.begin() + (top_ + new_depth + 1));
    return LaurentSeries(dom_, top_, std::move(cs), std::min(valid_to_, new_depth));
}

LaurentSeries LaurentSeries::promoted() const {
    if (dom_ == Domain::Float) return *this;
    std::vector<Coefficient> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c.promote());
    return LaurentSeries(Domain::Float, top_, std::move(cs), valid_to_);
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int deg = top_; deg >= -depth(); --deg) {
        const Coefficient& c = coeff(deg);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        if (deg == 1) os << "*z";
        else if (deg != 0) os << "*z^" << deg;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

void check_series_domains(const LaurentSeries& a, const LaurentSeries& b, const char* op) {
    if (a.domain() != b.domain()) throw DomainMismatch(op);
}

}  // namespace

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    check_series_domains(a, b, "add");
    const int top = std::max(a.top_degree(), b.top_degree());
    const int depth = std::min(a.depth(), b.depth());
    std::vector<Coefficient> cs;
    cs.reserve(static_cast<size_t>(top + depth) + 1);
    for (int deg = top; deg >= -depth; --deg) cs.push_back(a.coeff(deg) + b.coeff(deg));
    return LaurentSeries(a.domain(), top, std::move(cs), std::min(a.valid_to(), b.valid_to()));
}

LaurentSeries negated(const LaurentSeries& a) {
    return scalar_mul(int_scalar(-1, a.domain()), a);
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) { return add(a, negated(b)); }

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    check_series_domains(a, b, "mul");
    if (a.is_zero() || b.is_zero())
        return LaurentSeries::zero(a.domain(), std::min(a.depth(), b.depth()));
    const int top = a.top_degree() + b.top_degree();
    const int depth = std::min(a.depth(), b.depth());
    const int lowest = -depth;
    std::vector<Coefficient> cs(static_cast<size_t>(top - lowest) + 1, Coefficient::zero(a.domain()));
    for (int i = a.top_degree(); i >= -a.depth(); --i) {
        const Coefficient& ai = a.coeff(i);
        if (ai.is_zero()) continue;
        const int jhi = std::min(b.top_degree(), top - i);
        const int jlo = std::max(-b.depth(), lowest - i);
        for (int j = jhi; j >= jlo; --j) {
            const Coefficient& bj = b.coeff(j);
            if (bj.is_zero()) continue;
            cs[static_cast<size_t>(top - (i + j))] += ai * bj;
        }
    }
    const int valid = std::min(a.valid_to() - b.top_degree(), b.valid_to() - a.top_degree());
    return LaurentSeries(a.domain(), top, std::move(cs), valid);
}

LaurentSeries scalar_mul(const Coefficient& s, const LaurentSeries& a) {
    if (s.domain() != a.domain()) throw DomainMismatch("scalar_mul");
    std::vector<Coefficient> cs;
    cs.reserve(static_cast<size_t>(a.top_degree() + a.depth()) + 1);
    for (int deg = a.top_degree(); deg >= -a.depth(); --deg) cs.push_back(s * a.coeff(deg));
    return LaurentSeries(a.domain(), a.top_degree(), std::move(cs), a.valid_to());
}

LaurentSeries shift(const LaurentSeries& a, int k) {
    std::vector<Coefficient> cs;
    const int top = a.top_degree() + k;
    cs.reserve(static_cast<size_t>(a.top_degree() + a.depth()) + 1);
    for (int deg = a.top_degree(); deg >= -a.depth(); --deg) cs.push_back(a.coeff(deg));
    return LaurentSeries(a.domain(), top, std::move(cs), a.valid_to() - k);
}

LaurentSeries derivative(const LaurentSeries& a) {
    const int depth = a.depth();
    const int top_out = a.top_degree() - 1;
    std::vector<Coefficient> cs;
    cs.reserve(static_cast<size_t>(top_out + depth) + 1);
    for (int m = top_out; m >= -depth; --m)
        cs.push_back(int_scalar(m + 1, a.domain()) * a.coeff(m + 1));
    return LaurentSeries(a.domain(), top_out, std::move(cs), std::min(a.valid_to(), depth));
}

LaurentSeries reciprocal(const LaurentSeries& a) {
    const int t = a.top_degree();
    const Coefficient& lead = a.coeff(t);
    if (lead.is_zero()) throw NotInvertible("zero leading coefficient");
    const int d = a.depth();
    const int n_out = d - t;  // result degrees -t down to -d
    if (n_out < 0) throw NotInvertible("window too shallow for reciprocal");

    // a = lead * z^t * (1 + sum a~_j u^j), u = 1/z.
    std::vector<Coefficient> tail;  // a~_1 .. a~_{t+d}
    for (int j = 1; j <= t + d; ++j) tail.push_back(a.coeff(t - j) / lead);

    std::vector<Coefficient> r(static_cast<size_t>(n_out) + 1, Coefficient::zero(a.domain()));
    r[0] = Coefficient::one(a.domain());
    for (int k = 1; k <= n_out; ++k) {
        Coefficient s = Coefficient::zero(a.domain());
        const int jmax = std::min<int>(k, static_cast<int>(tail.size()));
        for (int j = 1; j <= jmax; ++j) s += tail[static_cast<size_t>(j - 1)] * r[static_cast<size_t>(k - j)];
        r[static_cast<size_t>(k)] = -s;
    }
    const Coefficient inv_lead = Coefficient::one(a.domain()) / lead;
    for (auto& c : r) c *= inv_lead;
    return LaurentSeries(a.domain(), -t, std::move(r), a.valid_to() - 2 * std::abs(t));
}

namespace {

// Shared precondition handling for log/exp/pow. Returns the constant term.
Coefficient require_top0(const LaurentSeries& a, const Coefficient& expected_const, const char* op) {
    if (a.top_degree() > 0) throw BadNormalization(std::string(op) + ": top degree must be <= 0");
    const Coefficient c0 = a.coeff(0);
    if (a.domain() == Domain::Exact) {
        if (!(c0 == expected_const)) throw BadNormalization(std::string(op) + ": exact constant term");
    } else {
        if (std::abs(c0.fl() - expected_const.fl()) > kFloatNormTol)
            throw BadNormalization(std::string(op) + ": constant term off by more than 1e-6");
    }
    return c0;
}

}  // namespace

LaurentSeries log_series(const LaurentSeries& a) {
    const Coefficient a0 = require_top0(a, Coefficient::one(a.domain()), "log");
    const int depth = a.depth();
    const Domain dom = a.domain();
    std::vector<Coefficient> L(static_cast<size_t>(depth) + 1, Coefficient::zero(dom));
    L[0] = dom == Domain::Exact ? Coefficient::zero(dom) : Coefficient(std::log(a0.fl()));
    for (int n = 1; n <= depth; ++n) {
        Coefficient s = Coefficient::zero(dom);
        for (int j = 1; j < n; ++j) s += int_scalar(n - j, dom) * a.coeff(-j) * L[static_cast<size_t>(n - j)];
        L[static_cast<size_t>(n)] = (a.coeff(-n) - s / int_scalar(n, dom)) / a0;
    }
    return LaurentSeries(dom, 0, std::move(L), std::min(a.valid_to(), depth));
}

LaurentSeries exp_series(const LaurentSeries& a) {
    const Coefficient a0 = require_top0(a, Coefficient::zero(a.domain()), "exp");
    const int depth = a.depth();
    const Domain dom = a.domain();
    std::vector<Coefficient> E(static_cast<size_t>(depth) + 1, Coefficient::zero(dom));
    E[0] = dom == Domain::Exact ? Coefficient::one(dom) : Coefficient(std::exp(a0.fl()));
    for (int n = 1; n <= depth; ++n) {
        Coefficient s = Coefficient::zero(dom);
        for (int j = 1; j <= n; ++j) s += int_scalar(j, dom) * a.coeff(-j) * E[static_cast<size_t>(n - j)];
        E[static_cast<size_t>(n)] = s / int_scalar(n, dom);
    }
    return LaurentSeries(dom, 0, std::move(E), std::min(a.valid_to(), depth));
}

LaurentSeries pow_real(const LaurentSeries& a, double t) {
    const Coefficient a0 = require_top0(a, Coefficient::one(a.domain()), "pow");
    const int depth = a.depth();
    const Domain dom = a.domain();
    const bool integral = (t == std::rint(t)) && std::abs(t) < 1e15;
    if (dom == Domain::Exact && !integral)
        throw BadNormalization("pow: EXACT domain requires an integer exponent");
    if (t == 1.0) return a;

    const Coefficient tc = dom == Domain::Exact ? Coefficient::exact(mpq_class(static_cast<long>(std::rint(t))))
                                                : Coefficient::floating(t);
    std::vector<Coefficient> P(static_cast<size_t>(depth) + 1, Coefficient::zero(dom));
    P[0] = dom == Domain::Exact ? Coefficient::one(dom) : Coefficient(std::pow(a0.fl(), Cplx(t)));
    for (int n = 1; n <= depth; ++n) {
        Coefficient s = Coefficient::zero(dom);
        for (int j = 1; j <= n; ++j) {
            const Coefficient w = tc * int_scalar(j, dom) - int_scalar(n - j, dom);
            s += w * a.coeff(-j) * P[static_cast<size_t>(n - j)];
        }
        P[static_cast<size_t>(n)] = s / (int_scalar(n, dom) * a0);
    }
    return LaurentSeries(dom, 0, std::move(P), std::min(a.valid_to(), depth));
}

Coefficient eval_at(const LaurentSeries& a, const Coefficient& z) {
    if (z.domain() != a.domain()) throw DomainMismatch("eval_at");
    if (z.is_zero()) throw NotInvertible("evaluation point must be nonzero");
    const Coefficient u = Coefficient::one(a.domain()) / z;
    Coefficient acc = a.coeff(-a.depth());
    for (int deg = -a.depth() + 1; deg <= a.top_degree(); ++deg) acc = acc * u + a.coeff(deg);
    // acc = sum a_k u^(top-k); multiply by z^top.
    Coefficient zp = Coefficient::one(a.domain());
    const int t = a.top_degree();
    for (int i = 0; i < std::abs(t); ++i) zp *= (t > 0 ? z : u);
    return acc * zp;
}

Cplx eval_at(const LaurentSeries& a, Cplx z) {
    const LaurentSeries f = a.domain() == Domain::Float ? a : a.promoted();
    return eval_at(f, Coefficient(z)).fl();
}

double max_abs_diff(const LaurentSeries& a, const LaurentSeries& b, int floor_degree) {
    double m = 0.0;
    const int top = std::max(a.top_degree(), b.top_degree());
    for (int deg = top; deg >= floor_degree; --deg)
        m = std::max(m, std::abs(a.coeff(deg).to_cplx() - b.coeff(deg).to_cplx()));
    return m;
}

MeromorphicMap::MeromorphicMap(LaurentSeries s) : s_(std::move(s)) {
    if (s_.top_degree() != 1) throw BadNormalization("map must have top degree 1");
    if (!(s_.coeff(1) == Coefficient::one(s_.domain())))
        throw BadNormalization("map leading coefficient must be 1");
}

MeromorphicMap MeromorphicMap::from_b(Domain dom, int depth,
                                      const std::vector<std::pair<int, Coefficient>>& b_terms) {
    std::vector<std::pair<int, Coefficient>> terms;
    terms.reserve(b_terms.size() + 1);
    terms.emplace_back(1, Coefficient::one(dom));
    for (const auto& [n, c] : b_terms) {
        if (n < 0) throw std::invalid_argument("b index must be >= 0");
        terms.emplace_back(-n, c);
    }
    return MeromorphicMap(LaurentSeries::from_terms(dom, depth, terms));
}

MeromorphicMap MeromorphicMap::identity(Domain dom, int depth) { return from_b(dom, depth, {}); }

LaurentSeries z_log_derivative(const MeromorphicMap& g) {
    return mul(shift(derivative(g.series()), 1), reciprocal(g.series()));
}

}  // namespace laurentbi
