#include "laurentbi/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace laurentbi {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

CaratheodoryAtoms::CaratheodoryAtoms(Domain dom, std::vector<Atom> atoms) : dom_(dom), atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("at least one atom required");
    Coefficient sum = Coefficient::zero(dom_);
    for (const auto& a : atoms_) {
        if (a.weight.domain() != dom_ || a.u.domain() != dom_) throw DomainMismatch("atom domain");
        if (dom_ == Domain::Exact) {
            if (sgn(a.weight.ex().im) != 0 || sgn(a.weight.ex().re) <= 0)
                throw std::invalid_argument("atom weight must be real and positive");
            const mpq_class n2 = a.u.ex().re * a.u.ex().re + a.u.ex().im * a.u.ex().im;
            if (n2 > 1) throw std::invalid_argument("atom point must satisfy |u| <= 1");
        } else {
            if (a.weight.fl().imag() != 0.0 || a.weight.fl().real() <= 0.0)
                throw std::invalid_argument("atom weight must be real and positive");
            if (std::abs(a.u.fl()) > 1.0 + 1e-12) throw std::invalid_argument("atom point must satisfy |u| <= 1");
        }
        sum += a.weight;
    }
    if (dom_ == Domain::Exact) {
        if (!(sum == Coefficient::one(dom_))) throw std::invalid_argument("atom weights must sum to 1");
    } else if (std::abs(sum.fl() - 1.0) > 1e-12) {
        throw std::invalid_argument("atom weights must sum to 1 within 1e-12");
    }
}

CaratheodoryAtoms CaratheodoryAtoms::promoted() const {
    if (dom_ == Domain::Float) return *this;
    std::vector<Atom> as;
    as.reserve(atoms_.size());
    for (const auto& a : atoms_) as.push_back({a.weight.promote(), a.u.promote()});
    return CaratheodoryAtoms(Domain::Float, std::move(as));
}

Coefficient CaratheodoryAtoms::c(int n) const {
    if (n < 1) throw std::invalid_argument("c(n) defined for n >= 1");
    Coefficient s = Coefficient::zero(dom_);
    for (const auto& a : atoms_) {
        Coefficient un = Coefficient::one(dom_);
        for (int i = 0; i < n; ++i) un *= a.u;
        s += a.weight * un;
    }
    return Coefficient::from_double(2.0, dom_) * s;
}

CaratheodoryAtoms CaratheodoryAtoms::negated() const {
    std::vector<Atom> as;
    as.reserve(atoms_.size());
    for (const auto& a : atoms_) as.push_back({a.weight, -a.u});
    return CaratheodoryAtoms(dom_, std::move(as));
}

LaurentSeries series_of(const CaratheodoryAtoms& p, int depth) {
    const Domain dom = p.domain();
    std::vector<Coefficient> cs(static_cast<size_t>(depth) + 1, Coefficient::zero(dom));
    cs[0] = Coefficient::one(dom);
    const Coefficient two = Coefficient::from_double(2.0, dom);
    for (const auto& a : p.atoms()) {
        Coefficient un = Coefficient::one(dom);
        for (int n = 1; n <= depth; ++n) {
            un *= a.u;
            cs[static_cast<size_t>(n)] += two * a.weight * un;
        }
    }
    return LaurentSeries(dom, 0, std::move(cs), depth);
}

Cplx eval_closed_form(const CaratheodoryAtoms& p, Cplx z) {
    Cplx s{};
    for (const auto& a : p.atoms()) {
        const Cplx u = a.u.to_cplx();
        s += a.weight.to_cplx() * (z + u) / (z - u);
    }
    return s;
}

double min_real_on_circles(const CaratheodoryAtoms& p, const std::vector<double>& radii, int samples) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    double m = std::numeric_limits<double>::infinity();
    for (double r : radii) {
        if (r <= 1.0) throw OutsideDomain("radius must be > 1");
        for (int j = 0; j < samples; ++j) {
            const double th = 2.0 * std::numbers::pi * j / samples;
            m = std::min(m, eval_closed_form(p, std::polar(r, th)).real());
        }
    }
    return m;
}

namespace {

Cplx draw_point(Rng& rng) {
    const bool boundary = rng.uniform() < 0.5;
    const double th = 2.0 * std::numbers::pi * rng.uniform();
    const double r = boundary ? 1.0 : std::sqrt(rng.uniform());
    return std::polar(r, th);
}

std::vector<double> draw_dirichlet(Rng& rng, int k) {
    std::vector<double> w(static_cast<size_t>(k));
    double total = 0.0;
    for (auto& x : w) {
        x = -std::log1p(-rng.uniform());
        total += x;
    }
    for (auto& x : w) x /= total;
    return w;
}

}  // namespace

CaratheodoryAtoms sample_random(std::uint64_t seed, int max_atoms) {
    if (max_atoms < 1 || max_atoms > 4) throw std::invalid_argument("max_atoms must be in 1..4");
    Rng rng(seed);
    const int k = 1 + static_cast<int>(rng.uniform() * max_atoms);
    std::vector<Cplx> us(static_cast<size_t>(k));
    for (auto& u : us) u = draw_point(rng);
    const std::vector<double> w = draw_dirichlet(rng, k);
    std::vector<Atom> atoms;
    atoms.reserve(us.size());
    for (int i = 0; i < k; ++i)
        atoms.push_back({Coefficient::floating(w[static_cast<size_t>(i)]), Coefficient(us[static_cast<size_t>(i)])});
    return CaratheodoryAtoms(Domain::Float, std::move(atoms));
}

CaratheodoryAtoms sample_random_centered(std::uint64_t seed, int max_pairs) {
    if (max_pairs < 1 || max_pairs > 4) throw std::invalid_argument("max_pairs must be in 1..4");
    Rng rng(seed);
    const int k = 1 + static_cast<int>(rng.uniform() * max_pairs);
    std::vector<Cplx> us(static_cast<size_t>(k));
    for (auto& u : us) u = draw_point(rng);
    const std::vector<double> w = draw_dirichlet(rng, k);
    std::vector<Atom> atoms;
    atoms.reserve(2 * us.size());
    for (int i = 0; i < k; ++i) {
        const Coefficient half = Coefficient::floating(w[static_cast<size_t>(i)] / 2.0);
        atoms.push_back({half, Coefficient(us[static_cast<size_t>(i)])});
        atoms.push_back({half, Coefficient(-us[static_cast<size_t>(i)])});
    }
    return CaratheodoryAtoms(Domain::Float, std::move(atoms));
}

namespace {

double parse_real_literal(const std::string& s) {
    if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad numeric literal: " + s);
    return v;
}

// "re", "rei"-less forms: re [+|- im i]. Examples: "1", "-0.5", "0.3+0.4i", "-1i".
Cplx parse_complex_literal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() == 'i') {
        // Split at the sign that separates real and imaginary parts, if any.
        const std::string body = s.substr(0, s.size() - 1);
        for (size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E' &&
                body[i - 1] != '/' && body[i - 1] != '+' && body[i - 1] != '-') {
                const std::string re = body.substr(0, i);
                std::string im = body.substr(i);
                if (im == "+") im = "1";
                else if (im == "-") im = "-1";
                return {parse_real_literal(re), parse_real_literal(im)};
            }
        }
        std::string im = body;
        if (im.empty() || im == "+") im = "1";
        else if (im == "-") im = "-1";
        return {0.0, parse_real_literal(im)};
    }
    return {parse_real_literal(s), 0.0};
}

}  // namespace

CaratheodoryAtoms parse_atoms_shorthand(const std::string& text) {
    std::vector<Atom> atoms;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const size_t at = item.find('@');
        if (at == std::string::npos) throw std::invalid_argument("atom shorthand needs weight@point: " + item);
        const double w = parse_real_literal(item.substr(0, at));
        const Cplx u = parse_complex_literal(item.substr(at + 1));
        atoms.push_back({Coefficient::floating(w), Coefficient(u)});
    }
    return CaratheodoryAtoms(Domain::Float, std::move(atoms));
}

}  // namespace laurentbi
