#include "laurentbi/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace laurentbi {

namespace {

std::string format_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value in canonical JSON");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void dump_rec(const nlohmann::json& j, std::string& out, int indent, int level) {
    const std::string pad = indent > 0 ? "\n" + std::string(static_cast<size_t>(indent * (level + 1)), ' ') : "";
    const std::string pad_close = indent > 0 ? "\n" + std::string(static_cast<size_t>(indent * level), ' ') : "";
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {  // nlohmann objects iterate key-sorted
                if (!first) out += ",";
                out += pad;
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, indent, level + 1);
                first = false;
            }
            out += pad_close + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",";
                out += pad;
                dump_rec(v, out, indent, level + 1);
                first = false;
            }
            out += pad_close + "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

nlohmann::json part_to_json(const Coefficient& c, bool imag) {
    if (c.domain() == Domain::Exact) return rational_to_string(imag ? c.ex().im : c.ex().re);
    return imag ? c.fl().imag() : c.fl().real();
}

Coefficient coeff_from_json(Domain dom, const nlohmann::json& re, const nlohmann::json& im) {
    if (dom == Domain::Exact) {
        if (!re.is_string() || !im.is_string())
            throw std::invalid_argument("exact coefficients must be \"num/den\" strings");
        return Coefficient::exact(parse_rational(re.get<std::string>()), parse_rational(im.get<std::string>()));
    }
    return Coefficient::floating(re.get<double>(), im.get<double>());
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

nlohmann::json series_to_json(const LaurentSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int deg = s.top_degree(); deg >= -s.depth(); --deg) {
        const Coefficient& c = s.coeff(deg);
        coeffs.push_back(nlohmann::json::array({deg, part_to_json(c, false), part_to_json(c, true)}));
    }
    return {{"top", s.top_degree()}, {"depth", s.depth()}, {"domain", domain_name(s.domain())},
            {"coeffs", std::move(coeffs)}};
}

LaurentSeries series_from_json(const nlohmann::json& j) {
    const std::string dname = j.at("domain").get<std::string>();
    if (dname != "exact" && dname != "float") throw std::invalid_argument("domain must be exact|float");
    const Domain dom = dname == "exact" ? Domain::Exact : Domain::Float;
    const int top = j.at("top").get<int>();
    const int depth = j.at("depth").get<int>();
    std::vector<Coefficient> cs(static_cast<size_t>(top + depth) + 1, Coefficient::zero(dom));
    for (const auto& row : j.at("coeffs")) {
        if (!row.is_array() || row.size() != 3) throw std::invalid_argument("coeff rows are [degree, re, im]");
        const int deg = row[0].get<int>();
        if (deg > top || deg < -depth) throw std::invalid_argument("coeff degree outside [-depth, top]");
        cs[static_cast<size_t>(top - deg)] = coeff_from_json(dom, row[1], row[2]);
    }
    return LaurentSeries(dom, top, std::move(cs), depth);
}

nlohmann::json atoms_to_json(const CaratheodoryAtoms& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : p.atoms()) {
        const Cplx u = a.u.to_cplx();
        arr.push_back({{"weight", a.weight.to_cplx().real()}, {"u", nlohmann::json::array({u.real(), u.imag()})}});
    }
    return {{"atoms", std::move(arr)}};
}

CaratheodoryAtoms atoms_from_json(const nlohmann::json& j) {
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) {
        const auto& u = a.at("u");
        atoms.push_back({Coefficient::floating(a.at("weight").get<double>()),
                         Coefficient::floating(u.at(0).get<double>(), u.at(1).get<double>())});
    }
    return CaratheodoryAtoms(Domain::Float, std::move(atoms));
}

nlohmann::json class_spec_to_json(const ClassSpec& spec) {
    nlohmann::json j{{"class", subclass_name(spec.kind)}, {"alpha", spec.alpha}};
    if (spec.kind == SubclassKind::Bazilevic) j["beta"] = spec.beta;
    return j;
}

nlohmann::json membership_to_json(const MembershipReport& m) {
    return {{"q_min_real", m.q_min_real}, {"tail_estimate", m.tail_estimate},   {"admitted", m.admitted},
            {"radii", m.radii},           {"samples", m.samples},               {"arg_margin_min", m.arg_margin_min},
            {"q_valid_to", m.q_valid_to}};
}

namespace {

nlohmann::json trial_to_json(const TrialRecord& t) {
    return {{"index", t.index},
            {"kind", t.boundary ? "boundary" : "random"},
            {"seed_used", t.seed_used},
            {"atoms", atoms_to_json(t.atoms)},
            {"series", series_to_json(t.g.series())},
            {"abs_b0", t.abs_b0},
            {"abs_b1", t.abs_b1},
            {"ratio_b0", t.ratio_b0},
            {"ratio_b1", t.ratio_b1},
            {"membership", membership_to_json(t.membership)}};
}

}  // namespace

nlohmann::json bound_report_to_json(const BoundReport& r) {
    nlohmann::json j{{"spec", class_spec_to_json(r.spec)},
                     {"bound_b0", r.bound_b0},
                     {"bound_b1", r.bound_b1},
                     {"observed_max_b0", r.observed_max_b0},
                     {"observed_max_b1", r.observed_max_b1},
                     {"ratio_b0", r.ratio_b0},
                     {"ratio_b1", r.ratio_b1},
                     {"trials", r.trials},
                     {"total_evaluated", r.total_evaluated},
                     {"admitted", r.admitted},
                     {"rejected", r.rejected},
                     {"errors", r.errors},
                     {"seed", r.seed},
                     {"depth", r.depth},
                     {"radii", r.radii},
                     {"samples", r.samples},
                     {"max_atoms", r.max_atoms},
                     {"b0_zero", r.b0_zero}};
    if (r.b1_bound_stated) j["b1_bound_stated"] = *r.b1_bound_stated;
    if (r.b1_bound_derived) j["b1_bound_derived"] = *r.b1_bound_derived;
    if (r.ratio_b1_stated) j["ratio_b1_stated"] = *r.ratio_b1_stated;
    if (r.ratio_b1_derived) j["ratio_b1_derived"] = *r.ratio_b1_derived;
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& c : r.candidates) cands.push_back(trial_to_json(c));
    j["counterexample_candidates"] = std::move(cands);
    if (r.max_b0_witness) j["max_b0_witness"] = trial_to_json(*r.max_b0_witness);
    if (r.max_b1_witness) j["max_b1_witness"] = trial_to_json(*r.max_b1_witness);
    return j;
}

nlohmann::json springer_rows_to_json(const std::vector<SpringerRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row{{"n", r.n}, {"abs_B", r.abs_B}, {"bound", r.bound}, {"ratio", r.ratio},
                           {"bound_exact", r.bound_exact}};
        if (!r.abs_B_exact.empty()) row["abs_B_exact"] = r.abs_B_exact;
        arr.push_back(std::move(row));
    }
    return arr;
}

std::string bound_report_csv_header() {
    return "class,alpha,beta,trials,admitted,rejected,bound_b0,observed_max_b0,ratio_b0,"
           "bound_b1,observed_max_b1,ratio_b1,candidates";
}

std::string bound_report_csv_row(const BoundReport& r) {
    std::ostringstream os;
    os << subclass_name(r.spec.kind) << ',' << format_double(r.spec.alpha) << ','
       << (r.spec.kind == SubclassKind::Bazilevic ? format_double(r.spec.beta) : "") << ',' << r.trials << ','
       << r.admitted << ',' << r.rejected << ',' << format_double(r.bound_b0) << ','
       << format_double(r.observed_max_b0) << ',' << format_double(r.ratio_b0) << ','
       << format_double(r.bound_b1) << ',' << format_double(r.observed_max_b1) << ','
       << format_double(r.ratio_b1) << ',' << r.candidates.size();
    return os.str();
}

}  // namespace laurentbi
