#include "dkp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dkp {

namespace {

struct PrintedRow {
    double omega_alpha;
    double alpha11;  // NaN for the node-less tables
    double e_minus;
    double e_plus;
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Published energies of the node-less b4 = 3/2 branch.
constexpr PrintedRow kTable1[] = {
    {0.001, kNaN, -5.1090, 5.0890}, {0.002, kNaN, -4.010, 3.99},
    {0.003, kNaN, -3.5690, 3.5490}, {0.004, kNaN, -3.3266, 3.3066},
    {0.005, kNaN, -3.1722, 3.1522}, {0.006, kNaN, -3.0650, 3.0450},
    {0.007, kNaN, -2.9861, 2.9861}, {0.008, kNaN, -2.9254, 2.9054},
    {0.009, kNaN, -2.8774, 2.8574}, {0.010, kNaN, -2.8384, 2.8384},
};

// Published energies of the node-less b4 = -1/2 branch.
constexpr PrintedRow kTable2[] = {
    {0.001, kNaN, -4.7004, 4.6804}, {0.002, kNaN, -3.4741, 3.4541},
    {0.003, kNaN, -2.9539, 2.9339}, {0.004, kNaN, -2.6557, 2.6357},
    {0.005, kNaN, -2.4594, 2.4394}, {0.006, kNaN, -2.3194, 2.2994},
    {0.007, kNaN, -2.2138, 2.1938}, {0.008, kNaN, -2.1313, 2.1113},
    {0.009, kNaN, -2.0448, 2.0448}, {0.010, kNaN, -2.010, 1.990},
};

// Published node locations and energies of the one-node state.
constexpr PrintedRow kTable3[] = {
    {0.001, 10.9091, -5.3015, 5.2815}, {0.002, 5.8333, -4.2526, 4.2326},
    {0.003, 4.1025, -3.8397, 3.8197},  {0.004, 3.2142, -3.6155, 3.5955},
    {0.005, 2.6666, -3.4742, 3.4541},  {0.006, 2.2916, -3.3765, 3.3565},
    {0.007, 2.0168, -3.3050, 3.2850},  {0.008, 1.8055, -3.25039, 3.23039},
    {0.009, 1.6374, -3.2072, 3.1872},  {0.010, 1.5, -3.1722, 3.1522},
};

PhysicalParams canonical_params(double omega_alpha) {
    PhysicalParams p;
    p.M = 1.0;
    p.q = 1.0;
    p.varpi = 0.0;
    p.omega = 0.01;
    p.alpha = omega_alpha / p.omega;
    p.m = 1;
    p.k = 1.0;
    return p;
}

}  // namespace

EnergyPair energy_pair(double kappa2, const PhysicalParams& p) {
    require_valid(p);
    const double mw = static_cast<double>(p.m) * p.omega;
    const double disc = mw * mw + kappa2 + p.k * p.k + p.M * p.M;
    if (disc < 0.0) {
        std::ostringstream os;
        os << "discriminant " << disc << " < 0 for kappa2 = " << kappa2;
        throw Error(ErrorCode::ComplexEnergy, os.str());
    }
    const double root = std::sqrt(disc);
    return EnergyPair{-mw + root, -mw - root, kappa2};
}

std::vector<TableRow> reproduce_table(int which) {
    if (which < 1 || which > 3) throw std::invalid_argument("table index must be 1, 2 or 3");
    const PrintedRow* printed = which == 1 ? kTable1 : which == 2 ? kTable2 : kTable3;

    const BranchSelection sel{-1, +1, which == 2 ? -0.5 : 1.5};
    std::vector<TableRow> rows;
    rows.reserve(10);
    for (int i = 0; i < 10; ++i) {
        const PrintedRow& pr = printed[i];
        const PhysicalParams p = canonical_params(pr.omega_alpha);
        const AnsatzSolution sol = which == 3 ? solve_onenode(p, Regime::Small, sel)
                                              : solve_nodeless(p, Regime::Small, sel);
        TableRow row;
        row.omega_alpha = pr.omega_alpha;
        row.alpha = p.alpha;
        if (which == 3) {
            row.alpha11 = sol.alpha11;
            row.printed_alpha11 = pr.alpha11;
        }
        const EnergyPair e = energy_pair(sol.kappa2, p);
        row.e_plus = e.e_plus;
        row.e_minus = e.e_minus;
        row.printed_e_plus = pr.e_plus;
        row.printed_e_minus = pr.e_minus;
        const double mw = static_cast<double>(p.m) * p.omega;
        row.typo_flag = mw != 0.0 && pr.e_plus == -pr.e_minus;
        rows.push_back(row);
    }
    return rows;
}

std::vector<SweepRow> sweep_energy(const PhysicalParams& params_template,
                                   SweepVariable sweep_var, const std::vector<double>& grid,
                                   const std::vector<double>& omegas, SweepState state) {
    const BranchSelection sel{-1, +1, 1.5};
    std::vector<SweepRow> rows;
    rows.reserve(grid.size() * omegas.size());
    for (double omega : omegas)
        for (double v : grid) {
            PhysicalParams p = params_template;
            p.omega = omega;
            if (sweep_var == SweepVariable::Alpha)
                p.alpha = v;
            else
                p.alpha = omega > 0.0 ? v / omega : 0.0;  // v is omega*alpha

            SweepRow row;
            row.sweep_value = v;
            row.omega = omega;
            try {
                const AnsatzSolution sol = state == SweepState::N0
                                               ? solve_nodeless(p, Regime::Small, sel)
                                               : solve_onenode(p, Regime::Small, sel);
                const EnergyPair e = energy_pair(sol.kappa2, p);
                row.e_plus = e.e_plus;
                row.e_minus = e.e_minus;
            } catch (const Error& err) {
                row.error = error_code_name(err.code());
            } catch (const std::invalid_argument& err) {
                row.error = err.what();
            }
            rows.push_back(row);
        }
    return rows;
}

SampledFunction eval_wavefunction(const AnsatzSolution& sol, const PhysicalParams& p,
                                  const std::vector<double>& grid, Normalization norm) {
    SampledFunction out;
    out.kind = SampleKind::R;
    out.normalization = Normalization::Raw;
    out.grid = grid;
    out.values.reserve(grid.size());
    for (double r : grid) {
        const double u = p.M + p.q * r;
        if (u < 0.0 || (u == 0.0 && sol.b4 < 0.0)) {
            std::ostringstream os;
            os << "M + q r = " << u << " at r = " << r
               << ": (M+qr)^b4 undefined for b4 = " << sol.b4;
            throw Error(ErrorCode::PotentialNonpositive, os.str());
        }
        const double f = sol.n == 1 ? r - sol.alpha11.value_or(0.0) : 1.0;
        const double val = f * std::exp(sol.b1 * r + sol.b2 * r * r) *
                           std::pow(r, sol.b3) * std::pow(u, sol.b4);
        out.values.push_back(val);
    }
    return norm == Normalization::Max1 ? normalize_max1(std::move(out)) : out;
}

SampledFunction ode_residual(const AnsatzSolution& sol, const PhysicalParams& p,
                             OperatorVariant variant, const std::vector<double>& grid,
                             ResidualSummary* summary) {
    double E = 0.0;
    if (sol.energies) E = sol.energies->e_plus;
    const RadialOperator op = radial_operator(p, E, variant);

    SampledFunction out;
    out.kind = SampleKind::Residual;
    out.grid = grid;
    out.values.reserve(grid.size());
    double max_abs = 0.0, sumsq = 0.0;
    for (double r : grid) {
        const double u = p.M + p.q * r;
        const double a = sol.alpha11.value_or(0.0);
        const double g = std::exp(sol.b1 * r + sol.b2 * r * r) * std::pow(r, sol.b3) *
                         std::pow(u, sol.b4);
        // log-derivative of the f = 1 part and its derivative
        const double mu = sol.b1 + 2.0 * sol.b2 * r + sol.b3 / r + sol.b4 * p.q / u;
        const double dmu = 2.0 * sol.b2 - sol.b3 / (r * r) - sol.b4 * p.q * p.q / (u * u);
        double R, Rp, Rpp;
        if (sol.n == 1) {
            R = (r - a) * g;
            Rp = g + (r - a) * mu * g;
            Rpp = 2.0 * mu * g + (r - a) * (dmu + mu * mu) * g;
        } else {
            R = g;
            Rp = mu * g;
            Rpp = (dmu + mu * mu) * g;
        }
        const double res = op.apply(r, R, Rp, Rpp);
        out.values.push_back(res);
        max_abs = std::max(max_abs, std::abs(res));
        sumsq += res * res;
    }
    if (summary) {
        summary->max_abs = max_abs;
        summary->rms = grid.empty() ? 0.0 : std::sqrt(sumsq / static_cast<double>(grid.size()));
    }
    return out;
}

int count_nodes(const SampledFunction& sample) {
    int nodes = 0;
    const auto& v = sample.values;
    double prev = 0.0;
    bool have_prev = false;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {  // endpoints excluded
        const double cur = v[i];
        if (cur == 0.0) continue;  // exact zeros count via the sign change around them
        if (have_prev && prev * cur < 0.0) ++nodes;
        prev = cur;
        have_prev = true;
    }
    return nodes;
}

std::vector<double> default_grid(const AnsatzSolution& sol, const PhysicalParams& p) {
    constexpr int kN = 2000;
    const double r0 = p.r0();
    const bool hard_wall = sol.regime != Regime::Small && std::isfinite(r0);
    if (hard_wall) return uniform_grid(r0 * 1e-3, r0 * (1.0 - 1e-3), kN);
    const double b2 = std::abs(sol.b2);
    const double hi = b2 > 0.0 ? 8.0 / std::sqrt(b2) : 8.0;
    return uniform_grid(1e-3, hi, kN);
}

}  // namespace dkp
