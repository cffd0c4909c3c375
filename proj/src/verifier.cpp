#include "laurentbi/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace laurentbi {

Bounds theorem_bounds(const ClassSpec& spec) {
    const double a = spec.alpha;
    switch (spec.kind) {
        case SubclassKind::Starlike:
            return {2.0 * (1.0 - a), (1.0 - a) * std::sqrt(4.0 * a * a - 8.0 * a + 5.0)};
        case SubclassKind::StronglyStarlike:
            return {2.0 * a, std::sqrt(5.0) * a * a};
        case SubclassKind::Bazilevic: {
            const double b = spec.beta;
            if (b >= 1.0) throw std::domain_error("bazilevic bounds need beta < 1 (b0 bound not positive otherwise)");
            const double k = 2.0 * (1.0 - b) * (2.0 - b) + 1.0;
            return {2.0 * a / (1.0 - b), 2.0 * a * a / ((1.0 - b) * (2.0 - b)) * std::sqrt(k)};
        }
    }
    throw std::logic_error("unreachable");
}

MembershipReport check_membership(const ConstructedMap& c, const std::vector<double>& radii, int samples,
                                  double re_tol, double tail_tol) {
    if (radii.empty()) throw std::invalid_argument("at least one radius required");
    for (double r : radii)
        if (r < 1.25) throw OutsideDomain("membership radii must be >= 1.25 (certification floor)");
    if (samples < 8) throw std::invalid_argument("samples must be >= 8");

    const int q_depth = c.g.valid_to() - 3;
    if (q_depth < 2) throw DepthExhausted("construction too shallow for a membership check");
    const InverseSide side = inverse_side(c, q_depth);
    const LaurentSeries q = side.q.truncated_to_valid().promoted();
    const LaurentSeries S = side.S.truncated_to_valid().promoted();

    MembershipReport rep;
    rep.radii = radii;
    rep.samples = samples;
    rep.q_valid_to = q.depth();

    const double r_min = *std::min_element(radii.begin(), radii.end());
    const int v = q.depth();
    rep.tail_estimate = q.coeff(-(v - 1)).abs() * std::pow(r_min, -(v - 1)) +
                        q.coeff(-v).abs() * std::pow(r_min, -v);

    double qmin = std::numeric_limits<double>::infinity();
    double margin = std::numeric_limits<double>::infinity();
    const bool sector = c.spec.kind != SubclassKind::Starlike;
    const double half_sector = c.spec.alpha * std::numbers::pi / 2.0;
    for (double r : radii) {
        for (int j = 0; j < samples; ++j) {
            const Cplx w = std::polar(r, 2.0 * std::numbers::pi * j / samples);
            qmin = std::min(qmin, eval_at(q, w).real());
            const Cplx sw = eval_at(S, w);
            margin = std::min(margin, sector ? half_sector - std::abs(std::arg(sw))
                                             : sw.real() - c.spec.alpha);
        }
    }
    rep.q_min_real = qmin;
    rep.arg_margin_min = margin;
    rep.admitted = (qmin >= -re_tol) && (rep.tail_estimate <= tail_tol);
    return rep;
}

namespace {

CaratheodoryAtoms boundary_atoms(double theta, bool centered) {
    const Cplx u = std::polar(1.0, theta);
    if (!centered) return CaratheodoryAtoms(Domain::Float, {{Coefficient::floating(1.0), Coefficient(u)}});
    return CaratheodoryAtoms(Domain::Float, {{Coefficient::floating(0.5), Coefficient(u)},
                                             {Coefficient::floating(0.5), Coefficient(-u)}});
}

struct TrialSlot {
    std::optional<TrialRecord> rec;
    bool error = false;
};

TrialSlot run_trial(const SweepConfig& cfg, long index) {
    TrialSlot slot;
    try {
        TrialRecord rec = [&] {
            if (index < cfg.trials) {
                const std::uint64_t s = trial_seed(cfg.seed, static_cast<std::uint64_t>(index));
                CaratheodoryAtoms atoms = cfg.b0_zero ? sample_random_centered(s, cfg.max_atoms)
                                                      : sample_random(s, cfg.max_atoms);
                ConstructedMap c = build(cfg.spec, atoms, cfg.depth);
                MembershipReport m = check_membership(c, cfg.radii, cfg.samples, cfg.re_tol, cfg.tail_tol);
                return TrialRecord{index, false, s, std::move(atoms), std::move(c.g), std::move(m)};
            }
            const long j = index - cfg.trials;
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / cfg.boundary_points;
            CaratheodoryAtoms atoms = boundary_atoms(theta, cfg.b0_zero);
            ConstructedMap c = build(cfg.spec, atoms, cfg.depth);
            MembershipReport m = check_membership(c, cfg.radii, cfg.samples, cfg.re_tol, cfg.tail_tol);
            return TrialRecord{index, true, 0, std::move(atoms), std::move(c.g), std::move(m)};
        }();
        rec.abs_b0 = rec.g.b(0).abs();
        rec.abs_b1 = rec.g.b(1).abs();
        slot.rec = std::move(rec);
    } catch (const std::exception&) {
        slot.error = true;
    }
    return slot;
}

BoundReport reduce(const SweepConfig& cfg, std::vector<TrialSlot>& slots) {
    BoundReport rep;
    rep.spec = cfg.spec;
    const Bounds bounds = theorem_bounds(cfg.spec);
    rep.bound_b0 = bounds.b0;
    rep.bound_b1 = bounds.b1;
    rep.trials = cfg.trials;
    rep.seed = cfg.seed;
    rep.depth = cfg.depth;
    rep.radii = cfg.radii;
    rep.samples = cfg.samples;
    rep.max_atoms = cfg.max_atoms;
    rep.b0_zero = cfg.b0_zero;
    rep.total_evaluated = static_cast<long>(slots.size());

    if (cfg.b0_zero) {
        const double a = cfg.spec.alpha, b = cfg.spec.beta;
        if (cfg.spec.kind == SubclassKind::StronglyStarlike) {
            rep.b1_bound_stated = a;   // printed statement
            rep.b1_bound_derived = a;  // re-derivation from the order-2 identity with c1 = 0
        } else if (cfg.spec.kind == SubclassKind::Bazilevic) {
            rep.b1_bound_stated = 2.0 * b * b / (2.0 - a);
            rep.b1_bound_derived = 2.0 * a / (2.0 - b);
        }
    }

    for (auto& slot : slots) {
        if (slot.error) {
            ++rep.errors;
            continue;
        }
        TrialRecord& rec = *slot.rec;
        if (!rec.membership.admitted) {
            ++rep.rejected;
            continue;
        }
        ++rep.admitted;
        rec.ratio_b0 = rep.bound_b0 > 0 ? rec.abs_b0 / rep.bound_b0 : 0.0;
        rec.ratio_b1 = rep.bound_b1 > 0 ? rec.abs_b1 / rep.bound_b1 : 0.0;
        if (rec.abs_b0 > rep.observed_max_b0) {
            rep.observed_max_b0 = rec.abs_b0;
            rep.max_b0_witness = rec;
        }
        if (rec.abs_b1 > rep.observed_max_b1) {
            rep.observed_max_b1 = rec.abs_b1;
            rep.max_b1_witness = rec;
        }
        if (!cfg.b0_zero && (rec.ratio_b0 > 1.0 + 1e-6 || rec.ratio_b1 > 1.0 + 1e-6))
            rep.candidates.push_back(rec);
    }
    rep.ratio_b0 = rep.bound_b0 > 0 ? rep.observed_max_b0 / rep.bound_b0 : 0.0;
    rep.ratio_b1 = rep.bound_b1 > 0 ? rep.observed_max_b1 / rep.bound_b1 : 0.0;
    if (rep.b1_bound_stated) rep.ratio_b1_stated = rep.observed_max_b1 / *rep.b1_bound_stated;
    if (rep.b1_bound_derived) rep.ratio_b1_derived = rep.observed_max_b1 / *rep.b1_bound_derived;
    return rep;
}

std::vector<TrialSlot> run_all(const SweepConfig& cfg, bool parallel) {
    if (cfg.trials < 0) throw std::invalid_argument("trials must be >= 0");
    cfg.spec.validate(cfg.depth);
    (void)theorem_bounds(cfg.spec);  // reject parameter ranges the bounds do not cover
    const long total = cfg.trials + (cfg.include_boundary_family ? cfg.boundary_points : 0);
    std::vector<TrialSlot> slots(static_cast<size_t>(total));
#ifdef _OPENMP
    if (parallel) {
        const int nthreads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (long i = 0; i < total; ++i) slots[static_cast<size_t>(i)] = run_trial(cfg, i);
        return slots;
    }
#endif
    (void)parallel;
    for (long i = 0; i < total; ++i) slots[static_cast<size_t>(i)] = run_trial(cfg, i);
    return slots;
}

}  // namespace

BoundReport sweep(const SweepConfig& cfg) {
    auto slots = run_all(cfg, cfg.threads != 1);
    return reduce(cfg, slots);
}

BoundReport sweep_serial(const SweepConfig& cfg) {
    auto slots = run_all(cfg, false);
    return reduce(cfg, slots);
}

BoundReport sweep_b0_zero(const SweepConfig& cfg_in) {
    if (cfg_in.spec.kind == SubclassKind::Starlike)
        throw std::invalid_argument("b0 = 0 sweeps cover the strongly-starlike and bazilevic classes");
    SweepConfig cfg = cfg_in;
    cfg.b0_zero = true;
    return sweep(cfg);
}

std::vector<SpringerRow> springer_report(const MeromorphicMap& g, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (g.domain() == Domain::Exact) {
        if (!g.b(0).is_zero()) throw std::invalid_argument("springer table requires b0 = 0");
    } else if (g.b(0).abs() > 1e-12) {
        throw std::invalid_argument("springer table requires b0 = 0");
    }
    const InverseMap inv = invert(g, 2 * n_max - 1);
    std::vector<SpringerRow> rows;
    rows.reserve(static_cast<size_t>(n_max));
    mpz_class num_fact = 1;  // (2n-2)!
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1)
            for (int k = 2 * n - 3; k <= 2 * n - 2; ++k) num_fact *= k;
        mpz_class den = 1;
        for (int k = 2; k <= n; ++k) den *= k;
        for (int k = 2; k <= n - 1; ++k) den *= k;
        mpq_class bound(num_fact, den);
        bound.canonicalize();

        SpringerRow row;
        row.n = n;
        const Coefficient& B = inv.B(2 * n - 1);
        row.abs_B = B.abs();
        row.bound = bound.get_d();
        row.ratio = row.abs_B / row.bound;
        row.bound_exact = bound.get_str();
        if (B.domain() == Domain::Exact && sgn(B.ex().im) == 0) {
            const mpq_class a = abs(B.ex().re);
            row.abs_B_exact = a.get_str();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace laurentbi
