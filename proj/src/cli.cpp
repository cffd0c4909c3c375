#include "laurentbi/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "laurentbi/inversion.hpp"
#include "laurentbi/json_io.hpp"

namespace laurentbi::cli {

namespace {

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit(const nlohmann::json& j, const std::string& out_path, const std::string& summary) {
    if (out_path.empty()) {
        std::cout << canonical_dump(j, 2);
    } else {
        write_text_file(out_path, canonical_dump(j, 2));
        std::cout << summary << " -> " << out_path << "\n";
    }
}

int env_threads() {
    const char* v = std::getenv("LAURENTBI_THREADS");
    if (!v || !*v) return 0;
    return std::max(0, std::atoi(v));
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        vals.push_back(std::stod(item, &pos));
        if (pos != item.size()) throw std::invalid_argument(std::string("bad ") + what + " entry: " + item);
    }
    if (vals.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
    return vals;
}

struct SpecFlags {
    std::string klass;
    double alpha = 0.0;
    double beta = 0.0;

    void attach(CLI::App* cmd, bool required_alpha = true) {
        cmd->add_option("--class", klass, "starlike | strongly-starlike | bazilevic")->required();
        auto* a = cmd->add_option("--alpha", alpha, "order parameter");
        if (required_alpha) a->required();
        cmd->add_option("--beta", beta, "bazilevic type parameter");
    }
    ClassSpec resolve() const {
        const auto kind = subclass_from_name(klass);
        if (!kind) throw CLI::ValidationError("--class", "unknown class: " + klass);
        if (*kind == SubclassKind::Bazilevic) return ClassSpec::bazilevic(beta, alpha);
        return *kind == SubclassKind::Starlike ? ClassSpec::starlike(alpha) : ClassSpec::strongly_starlike(alpha);
    }
};

nlohmann::json config_echo(const std::string& command, const nlohmann::json& extra) {
    nlohmann::json j = extra;
    j["command"] = command;
    return j;
}

int cmd_invert(const std::string& series_path, int depth, const std::string& out, bool check) {
    const LaurentSeries gs = series_from_json(read_json_file(series_path));
    const MeromorphicMap g(gs);
    const InverseMap inv = invert(g, depth);
    emit(series_to_json(inv.h.series()), out, "inverse series");
    if (check) {
        // Round-trip residual plus the Newton oracle comparison at |w| = 10, and
        // the empirical radius down to which the oracle still converges.
        const MeromorphicMap gf = g.promoted();
        const LaurentSeries hs = inv.h.series().promoted();
        double rt = 0.0, vs_newton = 0.0;
        for (int j = 0; j < 16; ++j) {
            const Cplx w = std::polar(10.0, 2.0 * std::numbers::pi * j / 16);
            const Cplx z = eval_at(hs, w);
            rt = std::max(rt, std::abs(eval_at(gf.series(), z) - w));
            try {
                vs_newton = std::max(vs_newton, std::abs(newton_inverse_oracle(gf, w) - z));
            } catch (const OracleDiverged&) {
                vs_newton = std::numeric_limits<double>::infinity();
            }
        }
        double newton_radius = std::numeric_limits<double>::quiet_NaN();
        for (double r : {1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0}) {
            bool ok = true;
            for (int j = 0; j < 16 && ok; ++j) {
                try {
                    (void)newton_inverse_oracle(gf, std::polar(r, 2.0 * std::numbers::pi * j / 16));
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            if (ok) {
                newton_radius = r;
                break;
            }
        }
        nlohmann::json chk{{"roundtrip_max_residual_at_10", rt},
                           {"newton_vs_series_max_at_10", vs_newton},
                           {"newton_empirical_radius", newton_radius}};
        std::cout << canonical_dump(chk, 2);
    }
    return 0;
}

int cmd_demo_catalan() {
    const MeromorphicMap g = MeromorphicMap::from_b(Domain::Exact, 9, {{1, Coefficient::exact_int(1)}});
    const InverseMap inv = invert(g, 9);
    std::printf("inverse of z + 1/z, coefficients B_n of w^-n:\n");
    std::printf("%4s %8s\n", "n", "B_n");
    for (int n = 1; n <= 9; ++n) {
        const Coefficient& B = inv.B(n);
        std::printf("%4d %8s\n", n, B.ex().re.get_str().c_str());
    }
    std::printf("\nodd-coefficient table vs (2n-2)!/(n!(n-1)!):\n");
    std::printf("%4s %10s %10s %8s\n", "n", "|B_{2n-1}|", "bound", "ratio");
    for (const auto& row : springer_report(g, 5))
        std::printf("%4d %10s %10s %8.5f\n", row.n, row.abs_B_exact.c_str(), row.bound_exact.c_str(), row.ratio);
    return 0;
}

SweepConfig make_sweep_config(const ClassSpec& spec, int trials, std::uint64_t seed, int depth,
                              const std::string& radii_text, int samples, int max_atoms) {
    SweepConfig cfg;
    cfg.spec = spec;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.depth = depth;
    if (!radii_text.empty()) cfg.radii = parse_double_list(radii_text, "radii");
    cfg.samples = samples;
    cfg.max_atoms = max_atoms;
    cfg.threads = env_threads();
    return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"truncated Laurent-series-at-infinity toolkit"};
    app.require_subcommand(1);

    // invert
    auto* invert_cmd = app.add_subcommand("invert", "compositional inverse of a normalized map");
    std::string invert_series, invert_out;
    int invert_depth = 16;
    bool invert_check = false;
    invert_cmd->add_option("--series", invert_series, "input series JSON")->required();
    invert_cmd->add_option("--depth", invert_depth, "inverse depth");
    invert_cmd->add_option("--out", invert_out, "output path");
    invert_cmd->add_flag("--check", invert_check, "report round-trip and Newton-oracle residuals");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "build a map from Caratheodory atoms");
    SpecFlags construct_spec;
    construct_spec.attach(construct_cmd);
    std::string construct_atoms, construct_out;
    int construct_depth = 16;
    construct_cmd->add_option("--atoms", construct_atoms, "weight@point list, e.g. \"0.5@1,0.5@-1\"")->required();
    construct_cmd->add_option("--depth", construct_depth, "construction depth");
    construct_cmd->add_option("--out", construct_out, "output path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "membership check or bound sweep");
    SpecFlags verify_spec;
    verify_spec.attach(verify_cmd, false);
    std::string verify_atoms, verify_out, verify_radii, verify_format = "json", verify_alpha_grid;
    int verify_trials = 200, verify_depth = 16, verify_samples = 256, verify_max_atoms = 4;
    std::uint64_t verify_seed = 0;
    bool verify_strict = false;
    verify_cmd->add_option("--atoms", verify_atoms, "check this single construction instead of sweeping");
    verify_cmd->add_option("--trials", verify_trials, "random trials per sweep");
    verify_cmd->add_option("--seed", verify_seed, "sweep seed");
    verify_cmd->add_option("--depth", verify_depth, "series depth");
    verify_cmd->add_option("--radii", verify_radii, "comma-separated sampling radii (default 16,32)");
    verify_cmd->add_option("--samples", verify_samples, "angular samples per circle");
    verify_cmd->add_option("--max-atoms", verify_max_atoms, "atom count cap for the generator");
    verify_cmd->add_option("--alpha-grid", verify_alpha_grid, "sweep each alpha in this comma list");
    verify_cmd->add_option("--format", verify_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--out", verify_out, "output path");
    verify_cmd->add_flag("--strict", verify_strict, "exit 1 when counterexample candidates are present");

    // sweep-b0zero
    auto* b0_cmd = app.add_subcommand("sweep-b0zero", "b0 = 0 special-case sweep with side-by-side b1 bounds");
    SpecFlags b0_spec;
    b0_spec.attach(b0_cmd);
    std::string b0_out, b0_radii;
    int b0_trials = 200, b0_depth = 16, b0_samples = 256, b0_max_atoms = 4;
    std::uint64_t b0_seed = 0;
    b0_cmd->add_option("--trials", b0_trials, "random trials");
    b0_cmd->add_option("--seed", b0_seed, "sweep seed");
    b0_cmd->add_option("--depth", b0_depth, "series depth");
    b0_cmd->add_option("--radii", b0_radii, "comma-separated sampling radii");
    b0_cmd->add_option("--samples", b0_samples, "angular samples per circle");
    b0_cmd->add_option("--max-atoms", b0_max_atoms, "pair count cap for the generator");
    b0_cmd->add_option("--out", b0_out, "output path");

    // springer
    auto* springer_cmd = app.add_subcommand("springer", "inverse-coefficient table for a b0 = 0 map");
    std::string springer_series, springer_out;
    int springer_nmax = 5;
    springer_cmd->add_option("--series", springer_series, "input series JSON")->required();
    springer_cmd->add_option("--nmax", springer_nmax, "table rows");
    springer_cmd->add_option("--out", springer_out, "output path");

    // demo
    auto* demo_cmd = app.add_subcommand("demo", "golden-example demos");
    std::string demo_name;
    demo_cmd->add_option("name", demo_name, "catalan")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*invert_cmd) return cmd_invert(invert_series, invert_depth, invert_out, invert_check);

        if (*construct_cmd) {
            const ClassSpec spec = construct_spec.resolve();
            const CaratheodoryAtoms atoms = parse_atoms_shorthand(construct_atoms);
            const ConstructedMap c = build(spec, atoms, construct_depth);
            emit(series_to_json(c.g.series()), construct_out, "constructed series");
            return 0;
        }

        if (*verify_cmd) {
            const nlohmann::json cfg_echo = config_echo(
                "verify", {{"class", verify_spec.klass},
                           {"alpha", verify_spec.alpha},
                           {"beta", verify_spec.beta},
                           {"atoms", verify_atoms},
                           {"trials", verify_trials},
                           {"seed", verify_seed},
                           {"depth", verify_depth},
                           {"radii", verify_radii.empty() ? "16,32" : verify_radii},
                           {"samples", verify_samples},
                           {"max_atoms", verify_max_atoms},
                           {"alpha_grid", verify_alpha_grid},
                           {"format", verify_format},
                           {"strict", verify_strict}});

            if (!verify_atoms.empty()) {
                const ClassSpec spec = verify_spec.resolve();
                const CaratheodoryAtoms atoms = parse_atoms_shorthand(verify_atoms);
                const ConstructedMap c = build(spec, atoms, verify_depth);
                const std::vector<double> radii =
                    verify_radii.empty() ? std::vector<double>{16.0, 32.0} : parse_double_list(verify_radii, "radii");
                const MembershipReport m = check_membership(c, radii, verify_samples);
                nlohmann::json j = membership_to_json(m);
                j["spec"] = class_spec_to_json(spec);
                j["series"] = series_to_json(c.g.series());
                j["residual_max"] = c.residual_max;
                j["config"] = cfg_echo;
                emit(j, verify_out, "membership report");
                return 0;
            }

            std::vector<double> alphas;
            if (!verify_alpha_grid.empty()) alphas = parse_double_list(verify_alpha_grid, "alpha-grid");
            else alphas = {verify_spec.alpha};

            std::vector<BoundReport> reports;
            for (double a : alphas) {
                SpecFlags flags = verify_spec;
                flags.alpha = a;
                reports.push_back(sweep(make_sweep_config(flags.resolve(), verify_trials, verify_seed, verify_depth,
                                                          verify_radii, verify_samples, verify_max_atoms)));
            }

            bool any_candidates = false;
            for (const auto& r : reports) any_candidates = any_candidates || !r.candidates.empty();

            if (verify_format == "csv") {
                std::ostringstream csv;
                csv << bound_report_csv_header() << "\n";
                for (const auto& r : reports) csv << bound_report_csv_row(r) << "\n";
                if (verify_out.empty()) std::cout << csv.str();
                else {
                    write_text_file(verify_out, csv.str());
                    std::cout << "bound sweep csv -> " << verify_out << "\n";
                }
            } else {
                nlohmann::json j;
                if (reports.size() == 1) {
                    j = bound_report_to_json(reports[0]);
                } else {
                    j = nlohmann::json::array();
                    for (const auto& r : reports) j.push_back(bound_report_to_json(r));
                    j = nlohmann::json{{"reports", std::move(j)}};
                }
                j["config"] = cfg_echo;
                emit(j, verify_out, "bound report");
            }
            if (verify_strict && any_candidates) {
                std::cerr << "counterexample candidates present\n";
                return 1;
            }
            return 0;
        }

        if (*b0_cmd) {
            SweepConfig cfg = make_sweep_config(b0_spec.resolve(), b0_trials, b0_seed, b0_depth, b0_radii,
                                                b0_samples, b0_max_atoms);
            const BoundReport r = sweep_b0_zero(cfg);
            nlohmann::json j = bound_report_to_json(r);
            j["config"] = config_echo("sweep-b0zero", {{"class", b0_spec.klass},
                                                       {"alpha", b0_spec.alpha},
                                                       {"beta", b0_spec.beta},
                                                       {"trials", b0_trials},
                                                       {"seed", b0_seed},
                                                       {"depth", b0_depth},
                                                       {"radii", b0_radii.empty() ? "16,32" : b0_radii},
                                                       {"samples", b0_samples},
                                                       {"max_atoms", b0_max_atoms}});
            emit(j, b0_out, "b0=0 sweep report");
            if (r.b1_bound_stated && r.b1_bound_derived) {
                std::printf("b1 bounds side by side: stated %.6f (ratio %.6f) vs derived %.6f (ratio %.6f)\n",
                            *r.b1_bound_stated, r.ratio_b1_stated.value_or(0.0), *r.b1_bound_derived,
                            r.ratio_b1_derived.value_or(0.0));
            }
            return 0;
        }

        if (*springer_cmd) {
            const MeromorphicMap g(series_from_json(read_json_file(springer_series)));
            const auto rows = springer_report(g, springer_nmax);
            nlohmann::json j{{"rows", springer_rows_to_json(rows)},
                             {"config", config_echo("springer", {{"series", springer_series}, {"nmax", springer_nmax}})}};
            emit(j, springer_out, "springer table");
            return 0;
        }

        if (*demo_cmd) {
            if (demo_name == "catalan") return cmd_demo_catalan();
            std::cerr << "unknown demo: " << demo_name << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace laurentbi::cli
