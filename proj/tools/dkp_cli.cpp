// dkp: command-line surface of the DKP bound-state solver.
//
// Subcommands: algebra-check, solve, table, sweep, wavefunction, verify.
// Exit codes: 0 success, 2 invalid parameters, 3 no physical solution under
// the requested policy, 4 verification failure.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dkp/algebra.hpp"
#include "dkp/ansatz.hpp"
#include "dkp/emit.hpp"
#include "dkp/params.hpp"
#include "dkp/radial.hpp"
#include "dkp/spectrum.hpp"

namespace {

constexpr const char* kSchemaVersion = "1";

constexpr int kExitOk = 0;
constexpr int kExitInvalidParams = 2;
constexpr int kExitNoPhysical = 3;
constexpr int kExitVerifyFailed = 4;

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Output {
    std::string out_path;  // empty: stdout

    int emit(const std::string& content) const {
        if (out_path.empty()) {
            std::fputs(content.c_str(), stdout);
            return kExitOk;
        }
        if (!dkp::write_file(out_path, content)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInvalidParams;
        }
        return kExitOk;
    }
};

void add_param_flags(CLI::App* cmd, dkp::PhysicalParams& p) {
    cmd->add_option("--M", p.M, "boson mass");
    cmd->add_option("--q", p.q, "linear potential slope (signed)");
    cmd->add_option("--varpi", p.varpi, "oscillator frequency");
    cmd->add_option("--omega", p.omega, "frame angular velocity");
    cmd->add_option("--alpha", p.alpha, "deficit parameter, in (0, 1]");
    cmd->add_option("--m", p.m, "magnetic quantum number");
    cmd->add_option("--k", p.k, "wave number");
}

int validate_or_report(const dkp::PhysicalParams& p) {
    const auto errs = dkp::validate(p);
    if (errs.empty()) return kExitOk;
    for (auto e : errs) std::cerr << "error: " << dkp::error_code_name(e) << "\n";
    return kExitInvalidParams;
}

dkp::Regime parse_regime(const std::string& s) {
    if (s == "osc") return dkp::Regime::Oscillator;
    if (s == "arbitrary") return dkp::Regime::Arbitrary;
    return dkp::Regime::Small;
}

dkp::Json params_json(const dkp::PhysicalParams& p) {
    dkp::Json j = dkp::Json::object();
    j.add("M", dkp::Json::number(p.M));
    j.add("q", dkp::Json::number(p.q));
    j.add("varpi", dkp::Json::number(p.varpi));
    j.add("omega", dkp::Json::number(p.omega));
    j.add("alpha", dkp::Json::number(p.alpha));
    j.add("m", dkp::Json::integer(p.m));
    j.add("k", dkp::Json::number(p.k));
    return j;
}

dkp::Json solution_json(const dkp::AnsatzSolution& s) {
    dkp::Json j = dkp::Json::object();
    j.add("branch_id", dkp::Json::string(s.selection.id()));
    j.add("n", dkp::Json::integer(s.n));
    j.add("regime", dkp::Json::string(dkp::regime_name(s.regime)));
    j.add("system", dkp::Json::string(dkp::system_variant_name(s.variant)));
    j.add("b1", dkp::Json::number(s.b1));
    j.add("b2", dkp::Json::number(s.b2));
    j.add("b3", dkp::Json::number(s.b3));
    j.add("b4", dkp::Json::number(s.b4));
    j.add("alpha11", s.alpha11 ? dkp::Json::number(*s.alpha11) : dkp::Json::null());
    j.add("kappa2", dkp::Json::number(s.kappa2));
    if (s.energies) {
        j.add("e_plus", dkp::Json::number(s.energies->e_plus));
        j.add("e_minus", dkp::Json::number(s.energies->e_minus));
    } else {
        j.add("e_plus", dkp::Json::null());
        j.add("e_minus", dkp::Json::null());
    }
    dkp::Json res = dkp::Json::object();
    for (const auto& [name, value] : s.residuals) res.add(name, dkp::Json::number(value));
    j.add("residuals", std::move(res));
    j.add("physical", dkp::Json::boolean(s.physical));
    dkp::Json reasons = dkp::Json::array();
    for (const auto& r : s.reasons) reasons.push(dkp::Json::string(r));
    j.add("reasons", std::move(reasons));
    return j;
}

std::string join(const std::vector<std::string>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

std::string solutions_csv(const std::vector<dkp::AnsatzSolution>& sols,
                          const dkp::PhysicalParams& p) {
    dkp::CsvTable t;
    t.header = {"omega_alpha", "alpha", "branch_id", "b1", "b2", "b3", "b4",
                "alpha11",     "kappa2", "e_plus",   "e_minus"};
    if (!sols.empty())
        for (const auto& [name, value] : sols.front().residuals)
            t.header.push_back("res_" + name);
    t.header.push_back("physical");
    t.header.push_back("reasons");
    for (const auto& s : sols) {
        std::vector<std::string> row = {
            dkp::format_display(p.omega_alpha()),
            dkp::format_display(p.alpha),
            s.selection.id(),
            dkp::format_display(s.b1),
            dkp::format_display(s.b2),
            dkp::format_display(s.b3),
            dkp::format_display(s.b4),
            s.alpha11 ? dkp::format_display(*s.alpha11) : "",
            dkp::format_display(s.kappa2),
            s.energies ? dkp::format_display(s.energies->e_plus) : "",
            s.energies ? dkp::format_display(s.energies->e_minus) : "",
        };
        for (const auto& [name, value] : s.residuals) row.push_back(dkp::format_display(value));
        row.push_back(s.physical ? "true" : "false");
        row.push_back(join(s.reasons, ';'));
        t.add_row(std::move(row));
    }
    return t.to_string();
}

int run_algebra_check(std::uint64_t seed, const Output& out) {
    std::mt19937_64 rng(seed);

    double flat_defect = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                flat_defect = std::max(flat_defect, dkp::max_abs(dkp::trilinear_defect(a, b, c)));

    double curved_dev = 0.0, tetrad_dev = 0.0, ratio_dev = 0.0, geom_dev = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        dkp::PhysicalParams p;
        p.omega = 0.005 + 0.045 * uniform01(rng);
        p.alpha = 0.3 + 0.7 * uniform01(rng);
        const double r = 0.9 * uniform01(rng) * p.r0();
        if (!(r > 0.0)) continue;

        const auto beta = dkp::curved_betas(p, r);
        const dkp::Mat4 G = dkp::algebra_metric(p, r);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                for (int la = 0; la < 4; ++la) {
                    const dkp::Mat5 lhs =
                        beta[mu] * beta[nu] * beta[la] + beta[la] * beta[nu] * beta[mu];
                    const dkp::Mat5 rhs = G(mu, nu) * beta[la] + G(la, nu) * beta[mu];
                    curved_dev = std::max(curved_dev, dkp::max_abs_diff(lhs, rhs));
                }

        const dkp::Mat4 gi = dkp::inverse_metric(p, r);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                tetrad_dev = std::max(tetrad_dev, std::abs(G(mu, nu) + gi(mu, nu)));

        const auto sc = dkp::spin_connections(p, r);
        ratio_dev = std::max(ratio_dev,
                             dkp::max_abs_diff((1.0 / p.omega) * sc.gamma_t, sc.gamma_phi));

        const auto rep = dkp::geometry_cross_check(p, r);
        for (double d : rep.max_abs_dev) geom_dev = std::max(geom_dev, d);
    }

    const bool pass = flat_defect == 0 && curved_dev < 1e-12 && tetrad_dev < 1e-12 &&
                      ratio_dev < 1e-14 && geom_dev < 1e-10;

    dkp::Json j = dkp::Json::object();
    j.add("schema_version", dkp::Json::string(kSchemaVersion));
    j.add("seed", dkp::Json::integer(static_cast<long long>(seed)));
    j.add("flat_trilinear_max_defect", dkp::Json::number(flat_defect));
    j.add("curved_trilinear_max_dev", dkp::Json::number(curved_dev));
    j.add("tetrad_metric_max_dev", dkp::Json::number(tetrad_dev));
    j.add("gamma_phi_ratio_max_dev", dkp::Json::number(ratio_dev));
    j.add("geometry_cross_check_max_dev", dkp::Json::number(geom_dev));
    j.add("pass", dkp::Json::boolean(pass));
    const int rc = out.emit(j.dump());
    if (rc != kExitOk) return rc;
    return pass ? kExitOk : kExitVerifyFailed;
}

int run_solve(const dkp::PhysicalParams& p, const std::string& state,
              const std::string& regime_s, const std::string& policy_s,
              const std::string& format, const Output& out) {
    if (int rc = validate_or_report(p); rc != kExitOk) return rc;
    const dkp::Regime regime = parse_regime(regime_s);
    const auto policy = policy_s == "first-principles"
                            ? dkp::PhysicalityPolicy::FirstPrinciples
                            : dkp::PhysicalityPolicy::PaperPreset;
    const int n = state == "n1" ? 1 : 0;

    std::vector<dkp::AnsatzSolution> sols;
    try {
        sols = dkp::solve_all(p, regime, n, policy);
    } catch (const dkp::Error& e) {
        std::cerr << "error: " << dkp::error_code_name(e.code()) << ": " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }

    std::string doc;
    if (format == "csv") {
        doc = solutions_csv(sols, p);
    } else {
        dkp::Json j = dkp::Json::object();
        j.add("schema_version", dkp::Json::string(kSchemaVersion));
        j.add("params", params_json(p));
        j.add("state", dkp::Json::string(state));
        j.add("regime", dkp::Json::string(dkp::regime_name(regime)));
        j.add("policy", dkp::Json::string(policy_s));
        dkp::Json arr = dkp::Json::array();
        for (const auto& s : sols) arr.push(solution_json(s));
        j.add("solutions", std::move(arr));
        doc = j.dump();
    }
    const int rc = out.emit(doc);
    if (rc != kExitOk) return rc;

    for (const auto& s : sols)
        if (s.physical) return kExitOk;
    std::cerr << "error: " << dkp::error_code_name(dkp::ErrorCode::NoPhysicalBranch)
              << ": no branch passes the " << policy_s << " policy\n";
    return kExitNoPhysical;
}

int run_table(int which, const Output& out) {
    const auto rows = dkp::reproduce_table(which);
    dkp::CsvTable t;
    t.header = {"omega_alpha", "alpha"};
    if (which == 3) {
        t.header.push_back("alpha11");
        t.header.push_back("printed_alpha11");
    }
    for (const char* c : {"e_plus", "e_minus", "printed_e_plus", "printed_e_minus",
                          "typo_flag"})
        t.header.push_back(c);
    if (which == 3) t.header.push_back("alpha11_full");
    t.header.push_back("e_plus_full");
    t.header.push_back("e_minus_full");

    for (const auto& r : rows) {
        std::vector<std::string> row = {dkp::format_display(r.omega_alpha),
                                        dkp::format_display(r.alpha)};
        if (which == 3) {
            row.push_back(r.alpha11 ? dkp::format_display(*r.alpha11) : "");
            row.push_back(r.printed_alpha11 ? dkp::format_display(*r.printed_alpha11) : "");
        }
        row.push_back(dkp::format_display(r.e_plus));
        row.push_back(dkp::format_display(r.e_minus));
        row.push_back(r.printed_e_plus ? dkp::format_display(*r.printed_e_plus) : "");
        row.push_back(r.printed_e_minus ? dkp::format_display(*r.printed_e_minus) : "");
        row.push_back(r.typo_flag ? "true" : "false");
        if (which == 3)
            row.push_back(r.alpha11 ? dkp::format_full(*r.alpha11) : "");
        row.push_back(dkp::format_full(r.e_plus));
        row.push_back(dkp::format_full(r.e_minus));
        t.add_row(std::move(row));
    }
    return out.emit(t.to_string());
}

int run_sweep(const dkp::PhysicalParams& p, const std::string& var_s,
              const std::string& state_s, double from, double to, int points,
              std::vector<double> omegas, const Output& out) {
    if (points < 2 || to <= from) {
        std::cerr << "error: need --points >= 2 and --to > --from\n";
        return kExitInvalidParams;
    }
    if (omegas.empty()) omegas.push_back(p.omega);
    const auto var = var_s == "omega-alpha" ? dkp::SweepVariable::OmegaAlpha
                                            : dkp::SweepVariable::Alpha;
    const auto state = state_s == "n1" ? dkp::SweepState::N1 : dkp::SweepState::N0;
    const auto rows =
        dkp::sweep_energy(p, var, dkp::uniform_grid(from, to, points), omegas, state);

    dkp::CsvTable t;
    t.header = {var == dkp::SweepVariable::Alpha ? "alpha" : "omega_alpha",
                "omega", "e_plus", "e_minus", "error", "e_plus_full", "e_minus_full"};
    for (const auto& r : rows) {
        const bool ok = r.error.empty();
        t.add_row({dkp::format_display(r.sweep_value), dkp::format_display(r.omega),
                   ok ? dkp::format_display(r.e_plus) : "",
                   ok ? dkp::format_display(r.e_minus) : "", r.error,
                   ok ? dkp::format_full(r.e_plus) : "",
                   ok ? dkp::format_full(r.e_minus) : ""});
    }
    return out.emit(t.to_string());
}

int run_wavefunction(const dkp::PhysicalParams& p, const std::string& state,
                     const std::string& regime_s, const std::string& branch, double rmin,
                     double rmax, int points, const std::string& svg_path,
                     const Output& out) {
    if (int rc = validate_or_report(p); rc != kExitOk) return rc;
    const auto sel = dkp::BranchSelection::from_id(branch);
    if (!sel) {
        std::cerr << "error: unknown branch id " << branch << "\n";
        return kExitInvalidParams;
    }
    const dkp::Regime regime = parse_regime(regime_s);
    dkp::AnsatzSolution sol;
    try {
        sol = state == "n1" ? dkp::solve_onenode(p, regime, *sel)
                            : dkp::solve_nodeless(p, regime, *sel);
    } catch (const dkp::Error& e) {
        std::cerr << "error: " << dkp::error_code_name(e.code()) << ": " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }

    std::vector<double> grid;
    if (rmax > rmin && points >= 2)
        grid = dkp::uniform_grid(rmin, rmax, points);
    else
        grid = dkp::default_grid(sol, p);

    dkp::SampledFunction wf;
    try {
        wf = dkp::eval_wavefunction(sol, p, grid, dkp::Normalization::Raw);
    } catch (const dkp::Error& e) {
        std::cerr << "error: " << dkp::error_code_name(e.code()) << ": " << e.what() << "\n";
        return kExitInvalidParams;
    }

    dkp::CsvTable t;
    t.header = {"r", "R", "r_full", "R_full"};
    for (std::size_t i = 0; i < wf.grid.size(); ++i)
        t.add_row({dkp::format_display(wf.grid[i]), dkp::format_display(wf.values[i]),
                   dkp::format_full(wf.grid[i]), dkp::format_full(wf.values[i])});
    const int rc = out.emit(t.to_string());
    if (rc != kExitOk) return rc;

    if (!svg_path.empty()) {
        const dkp::SampledFunction norm = dkp::normalize_max1(wf);
        if (!dkp::write_file(svg_path, dkp::svg_polyline(norm.grid, norm.values))) {
            std::cerr << "error: cannot write " << svg_path << "\n";
            return kExitInvalidParams;
        }
    }
    return kExitOk;
}

int run_verify(std::uint64_t seed, int trials, const Output& out) {
    const auto rep = dkp::operator_equivalence_report_random(trials, seed);

    // Exact-solution oracle: M = 0, m = 0, F = exp(-q r^2 / 2) solves the
    // F-form operator with kappa^2 = q, i.e. E^2 = q + k^2.
    double oracle_max = 0.0;
    for (double q : {0.5, 1.0, 2.0})
        for (double k : {0.0, 1.0}) {
            dkp::PhysicalParams p;
            p.M = 0.0;
            p.q = q;
            p.m = 0;
            p.k = k;
            p.omega = 0.01;
            p.alpha = 0.5;
            const double E = std::sqrt(q + k * k);
            const auto op = dkp::radial_operator(p, E, dkp::OperatorVariant::Eq14OnF);
            for (double r : dkp::uniform_grid(0.05, 5.0, 200)) {
                const double F = std::exp(-0.5 * q * r * r);
                const double Fp = -q * r * F;
                const double Fpp = (q * q * r * r - q) * F;
                oracle_max = std::max(oracle_max, std::abs(op.apply(r, F, Fp, Fpp)));
            }
        }

    const bool pass = rep.pass && oracle_max < 1e-10;
    dkp::Json j = dkp::Json::object();
    j.add("schema_version", dkp::Json::string(kSchemaVersion));
    j.add("seed", dkp::Json::integer(static_cast<long long>(seed)));
    j.add("trials", dkp::Json::integer(rep.trials));
    j.add("max_dev_elimination", dkp::Json::number(rep.max_dev_elimination));
    j.add("max_dev_substitution", dkp::Json::number(rep.max_dev_substitution));
    j.add("equivalence_tolerance", dkp::Json::number(rep.tolerance));
    j.add("exact_oracle_max_residual", dkp::Json::number(oracle_max));
    j.add("pass", dkp::Json::boolean(pass));
    const int rc = out.emit(j.dump());
    if (rc != kExitOk) return rc;
    return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of the scalar DKP equation in a rotating cosmic-string "
                 "background with a linear potential"};
    app.require_subcommand(1);

    dkp::PhysicalParams params;  // defaults: the canonical table parameters
    Output out;

    std::uint64_t seed = 1;
    int trials = 50;
    std::string state = "n0", regime = "small", policy = "preset", format = "json";
    std::string var = "alpha", branch = "m.p.32", svg_path;
    int which = 1, points = 0;
    double from = 0.05, to = 1.0, rmin = 0.0, rmax = 0.0;
    std::vector<double> omegas;

    CLI::App* c_alg = app.add_subcommand("algebra-check", "matrix algebra diagnostics");
    c_alg->add_option("--seed", seed, "RNG seed for the sample points");

    CLI::App* c_solve = app.add_subcommand("solve", "solve all 8 ansatz branches");
    add_param_flags(c_solve, params);
    c_solve->add_option("--state", state, "n0 | n1")
        ->check(CLI::IsMember({"n0", "n1"}));
    c_solve->add_option("--regime", regime, "osc | arbitrary | small")
        ->check(CLI::IsMember({"osc", "arbitrary", "small"}));
    c_solve->add_option("--policy", policy, "preset | first-principles")
        ->check(CLI::IsMember({"preset", "first-principles"}));
    c_solve->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* c_table = app.add_subcommand("table", "recompute a published energy table");
    c_table->add_option("--which", which, "1 | 2 | 3")->check(CLI::Range(1, 3));

    CLI::App* c_sweep = app.add_subcommand("sweep", "energy sweeps for the figure families");
    add_param_flags(c_sweep, params);
    c_sweep->add_option("--var", var, "alpha | omega-alpha")
        ->check(CLI::IsMember({"alpha", "omega-alpha"}));
    c_sweep->add_option("--state", state, "n0 | n1")->check(CLI::IsMember({"n0", "n1"}));
    c_sweep->add_option("--from", from, "sweep start");
    c_sweep->add_option("--to", to, "sweep end");
    c_sweep->add_option("--points", points, "grid size")->default_val(20);
    c_sweep->add_option("--omegas", omegas, "omega values (one sweep each)");

    CLI::App* c_wf = app.add_subcommand("wavefunction", "radial eigenfunction samples");
    add_param_flags(c_wf, params);
    c_wf->add_option("--state", state, "n0 | n1")->check(CLI::IsMember({"n0", "n1"}));
    c_wf->add_option("--regime", regime, "osc | arbitrary | small")
        ->check(CLI::IsMember({"osc", "arbitrary", "small"}));
    c_wf->add_option("--branch", branch, "branch id, e.g. m.p.32");
    c_wf->add_option("--rmin", rmin, "grid start (default: automatic)");
    c_wf->add_option("--rmax", rmax, "grid end (default: automatic)");
    c_wf->add_option("--points", points, "grid size")->default_val(0);
    c_wf->add_option("--svg", svg_path, "also write a MAX1-normalized SVG plot here");

    CLI::App* c_verify = app.add_subcommand("verify", "derivation-equivalence verification");
    c_verify->add_option("--seed", seed, "RNG seed");
    c_verify->add_option("--trials", trials, "number of random test functions");

    for (CLI::App* c : {c_alg, c_solve, c_table, c_sweep, c_wf, c_verify})
        c->add_option("--out", out.out_path,
                      "write the primary document here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalidParams;
    }

    try {
        if (c_alg->parsed()) return run_algebra_check(seed, out);
        if (c_solve->parsed()) return run_solve(params, state, regime, policy, format, out);
        if (c_table->parsed()) return run_table(which, out);
        if (c_sweep->parsed())
            return run_sweep(params, var, state, from, to, points, omegas, out);
        if (c_wf->parsed())
            return run_wavefunction(params, state, regime, branch, rmin, rmax, points,
                                    svg_path, out);
        if (c_verify->parsed()) return run_verify(seed, trials, out);
    } catch (const dkp::Error& e) {
        std::cerr << "error: " << dkp::error_code_name(e.code()) << ": " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }
    return kExitInvalidParams;
}
