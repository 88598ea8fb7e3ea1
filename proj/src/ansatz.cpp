#include "dkp/ansatz.hpp"

#include <cmath>
#include <sstream>

#include "dkp/spectrum.hpp"

namespace dkp {

namespace {

constexpr double kNodeWallRelTol = 1e-12;

struct Ctx {
    double M, q, varpi, mw2, ma2;
    int m;
};

Ctx make_ctx(const PhysicalParams& p) {
    const double mw = static_cast<double>(p.m) * p.omega;
    return Ctx{p.M, p.q, p.varpi, mw * mw, p.m_alpha() * p.m_alpha(), p.m};
}

void add_nodeless_equations(ConstraintSystem& sys, const Ctx& c, SystemVariant v) {
    const double osc_const = v == SystemVariant::OscN0 ? c.M * c.varpi : 0.0;
    const double rot_const = v == SystemVariant::SmallN0 ? 0.0 : c.mw2;
    const double r2_rhs =
        v == SystemVariant::OscN0 ? c.q * c.q + c.M * c.M * c.varpi * c.varpi : c.q * c.q;
    const double osc_inv_u = v == SystemVariant::OscN0 ? 2.0 * c.M * c.M * c.M * c.varpi : 0.0;

    sys.equations.push_back({"const-match", true, [=](const AnsatzUnknowns& x) {
        return rot_const + osc_const + x.kappa2 + x.b1 * x.b1 + 2.0 * x.b2 +
               4.0 * x.b2 * x.b3 + 4.0 * x.b2 * x.b4;
    }});
    sys.equations.push_back({"1/r2-match", true, [=](const AnsatzUnknowns& x) {
        return x.b3 * (x.b3 - 1.0) + 0.25 - c.ma2;
    }});
    sys.equations.push_back({"1/r-match", false, [=](const AnsatzUnknowns& x) {
        return 4.0 * (c.M * x.b1 * x.b3 + x.b3 * x.b4 * c.q) + c.q;
    }});
    sys.equations.push_back({"r-match", true, [=](const AnsatzUnknowns& x) {
        return 4.0 * x.b1 * x.b2 - 2.0 * c.M * c.q;
    }});
    sys.equations.push_back({"r2-match", true, [=](const AnsatzUnknowns& x) {
        return 4.0 * x.b2 * x.b2 - r2_rhs;
    }});
    // b4 quadratic: b4(b4-1) - 3/4 (the -3 in the printed varpi = 0 system is
    // inconsistent with its own branch roots -1/2 and 3/2).
    sys.equations.push_back({"1/(M+qr)2-match", true, [=](const AnsatzUnknowns& x) {
        return x.b4 * (x.b4 - 1.0) - 0.75;
    }});
    sys.equations.push_back({"1/(M+qr)-match", false, [=](const AnsatzUnknowns& x) {
        return 4.0 * (2.0 * x.b2 * x.b4 * c.M * c.M - x.b1 * x.b4 * c.M * c.q +
                      x.b3 * x.b4 * c.q * c.q) +
               c.q * c.q - osc_inv_u;
    }});
}

void add_onenode_equations(ConstraintSystem& sys, const Ctx& c) {
    const double M = c.M, q = c.q, mw2 = c.mw2, ma2 = c.ma2;
    const double m2 = static_cast<double>(c.m) * static_cast<double>(c.m);

    sys.equations.push_back({"31.1", true, [=](const AnsatzUnknowns& x) {
        return 4.0 * x.b2 * x.b2 - q * q;
    }});
    // 31.2 carries m_alpha^2, not the bare m^2: the published one-node
    // energies need the b3 of the node-less system.
    sys.equations.push_back({"31.2", true, [=](const AnsatzUnknowns& x) {
        return x.b3 * (1.0 - x.b3) + (ma2 - 0.25);
    }});
    sys.equations.push_back({"31.3", false, [=](const AnsatzUnknowns& x) {
        const double a = x.alpha11, b4 = x.b4;
        return 3.0 * M * q + 4.0 * b4 * M * q - 4.0 * b4 * b4 * M * q + 3.0 * a * q * q +
               4.0 * a * b4 * q * q - 4.0 * a * b4 * b4 * q * q;
    }});
    sys.equations.push_back({"31.4", true, [=](const AnsatzUnknowns& x) {
        const double a = x.alpha11;
        return 4.0 * x.b1 * x.b2 - 4.0 * a * x.b2 * x.b2 - 2.0 * M * q + a * q * q;
    }});
    sys.equations.push_back({"31.5", false, [=](const AnsatzUnknowns& x) {
        const double a = x.alpha11;
        return 4.0 * x.b2 * x.b4 * M - 2.0 * x.b4 * q + a * x.b1 * x.b1 * q +
               2.0 * a * x.b2 * q - 2.0 * x.b1 * x.b4 * q + 4.0 * a * x.b2 * x.b3 * q -
               2.0 * x.b1 * x.b4 * q + 4.0 * a * x.b2 * x.b4 * q + a * x.kappa2 * q +
               a * mw2 * q;
    }});
    // 31.6 as printed, bare m^2. The m_alpha^2 variant is inconsistent with
    // the published node locations (already at omega*alpha = 0.005 it gives
    // 5/3 instead of 8/3).
    sys.equations.push_back({"31.6", true, [=](const AnsatzUnknowns& x) {
        const double a = x.alpha11;
        return -4.0 * m2 * M + M + 4.0 * x.b3 * M - 8.0 * a * x.b1 * x.b3 * M +
               4.0 * x.b3 * x.b3 * M - 2.0 * a * q - 8.0 * a * x.b3 * x.b4 * q;
    }});
    sys.equations.push_back({"31.7", true, [=](const AnsatzUnknowns& x) {
        const double a = x.alpha11;
        return x.b1 * x.b1 + 6.0 * x.b2 - 4.0 * a * x.b1 * x.b2 + 4.0 * x.b2 * x.b3 +
               4.0 * x.b2 * x.b4 + x.kappa2 + 2.0 * a * M * q + mw2;
    }});
    sys.equations.push_back({"31.8", false, [=](const AnsatzUnknowns& x) {
        const double a = x.alpha11, b4 = x.b4;
        return 16.0 * x.b2 * b4 * M * M * M - 8.0 * x.b1 * b4 * M * M * q +
               16.0 * a * x.b2 * b4 * M * M * q - M * q * q + 4.0 * b4 * M * q * q -
               8.0 * a * x.b1 * b4 * M * q * q + 8.0 * x.b3 * b4 * M * q * q +
               4.0 * b4 * b4 * M * q * q + 2.0 * a * q * q * q +
               8.0 * a * x.b3 * b4 * q * q * q;
    }});
}

std::vector<std::pair<std::string, double>> evaluate_residuals(const ConstraintSystem& sys,
                                                               const AnsatzUnknowns& x) {
    std::vector<std::pair<std::string, double>> out;
    out.reserve(sys.equations.size());
    for (const auto& eq : sys.equations) out.emplace_back(eq.name, eq.residual(x));
    return out;
}

bool preset_accepts(Regime regime, int n, const BranchSelection& sel) {
    const bool plus12 = sel.sign12 > 0;
    const bool plus3 = sel.sign3 > 0;
    const bool b4_32 = sel.b4 > 0;
    if (regime == Regime::Small) {
        if (n == 0) return !plus12 && plus3;         // both b4 roots listed
        return !plus12 && plus3 && b4_32;
    }
    // Oscillator follows the finite-r0 lists (no separate list is published
    // for varpi > 0).
    if (n == 0) return plus3 && b4_32;               // both (b1, b2) signs listed
    return plus12 && plus3 && b4_32;
}

void attach_energies(AnsatzSolution& sol, const PhysicalParams& p) {
    try {
        sol.energies = energy_pair(sol.kappa2, p);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ComplexEnergy) throw;
        sol.energies.reset();
    }
}

}  // namespace

const char* system_variant_name(SystemVariant v) {
    switch (v) {
        case SystemVariant::OscN0: return "OSC_N0";
        case SystemVariant::ArbN0: return "ARB_N0";
        case SystemVariant::SmallN0: return "SMALL_N0";
        case SystemVariant::OneNode: return "ONE_NODE";
    }
    return "?";
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Oscillator: return "OSCILLATOR";
        case Regime::Arbitrary: return "ARBITRARY";
        case Regime::Small: return "SMALL";
    }
    return "?";
}

SystemVariant nodeless_variant(Regime r) {
    switch (r) {
        case Regime::Oscillator: return SystemVariant::OscN0;
        case Regime::Arbitrary: return SystemVariant::ArbN0;
        case Regime::Small: return SystemVariant::SmallN0;
    }
    return SystemVariant::SmallN0;
}

ConstraintSystem build_system(const PhysicalParams& p, SystemVariant variant) {
    require_valid(p);
    if (p.q == 0.0)
        throw Error(ErrorCode::QZeroUnsupported,
                    "q = 0 degenerates the b4 log term of the ansatz");
    ConstraintSystem sys;
    sys.variant = variant;
    sys.params = p;
    const Ctx c = make_ctx(p);
    if (variant == SystemVariant::OneNode)
        add_onenode_equations(sys, c);
    else
        add_nodeless_equations(sys, c, variant);
    return sys;
}

std::array<double, 4> branch_values(const BranchSelection& sel, const PhysicalParams& p,
                                    SystemVariant variant) {
    require_valid(p);
    const double s12 = static_cast<double>(sel.sign12);
    double b1, b2;
    if (variant == SystemVariant::OscN0) {
        const double w = std::hypot(p.q, p.M * p.varpi);
        if (w == 0.0)
            throw Error(ErrorCode::DegenerateBranch, "q = 0 and varpi = 0: no branch values");
        b2 = 0.5 * s12 * w;
        b1 = p.M * p.q / (2.0 * b2);
    } else {
        if (p.q == 0.0)
            throw Error(ErrorCode::DegenerateBranch, "q = 0: no branch values");
        b2 = 0.5 * s12 * p.q;
        b1 = s12 * p.M;
    }
    const double b3 =
        (p.alpha + 2.0 * sel.sign3 * static_cast<double>(p.m)) / (2.0 * p.alpha);
    return {b1, b2, b3, sel.b4};
}

AnsatzSolution solve_nodeless(const PhysicalParams& p, Regime regime,
                              const BranchSelection& sel) {
    if (regime != Regime::Oscillator && p.varpi != 0.0)
        throw std::invalid_argument("varpi > 0 needs the oscillator regime");
    const SystemVariant variant = nodeless_variant(regime);
    const ConstraintSystem sys = build_system(p, variant);
    const auto [b1, b2, b3, b4] = branch_values(sel, p, variant);

    AnsatzSolution sol;
    sol.n = 0;
    sol.selection = sel;
    sol.regime = regime;
    sol.variant = variant;
    sol.b1 = b1;
    sol.b2 = b2;
    sol.b3 = b3;
    sol.b4 = b4;

    const double base = b1 * b1 + 2.0 * b2 + 4.0 * b2 * b3 + 4.0 * b2 * b4;
    const double mw = static_cast<double>(p.m) * p.omega;
    double kap2 = -base;
    if (regime != Regime::Small) kap2 -= mw * mw;
    if (regime == Regime::Oscillator) kap2 -= p.M * p.varpi;
    sol.kappa2 = kap2;

    attach_energies(sol, p);
    AnsatzUnknowns x{b1, b2, b3, b4, 0.0, kap2};
    sol.residuals = evaluate_residuals(sys, x);
    apply_physicality(sol, p, PhysicalityPolicy::PaperPreset);
    return sol;
}

AnsatzSolution solve_onenode(const PhysicalParams& p, Regime regime,
                             const BranchSelection& sel) {
    if (regime == Regime::Oscillator)
        throw std::invalid_argument("one-node solutions are varpi = 0 only");
    if (p.varpi != 0.0) throw std::invalid_argument("one-node solutions need varpi = 0");
    const ConstraintSystem sys = build_system(p, SystemVariant::OneNode);
    const auto [b1, b2, b3, b4] = branch_values(sel, p, SystemVariant::OneNode);

    AnsatzSolution sol;
    sol.n = 1;
    sol.selection = sel;
    sol.regime = regime;
    sol.variant = SystemVariant::OneNode;
    sol.b1 = b1;
    sol.b2 = b2;
    sol.b3 = b3;
    sol.b4 = b4;

    // 31.6 is linear in alpha11 once the b's are fixed.
    const double m2 = static_cast<double>(p.m) * static_cast<double>(p.m);
    const double lin0 = p.M * (-4.0 * m2 + 1.0 + 4.0 * b3 + 4.0 * b3 * b3);
    const double lin1 = -8.0 * b1 * b3 * p.M - 2.0 * p.q - 8.0 * b3 * b4 * p.q;
    if (lin1 == 0.0) {
        std::ostringstream os;
        os << "alpha11 coefficient vanishes on branch " << sel.id();
        throw Error(ErrorCode::Alpha11Singular, os.str());
    }
    const double a = -lin0 / lin1;
    sol.alpha11 = a;

    const double mw = static_cast<double>(p.m) * p.omega;
    sol.kappa2 = -(b1 * b1 + 6.0 * b2 - 4.0 * a * b1 * b2 + 4.0 * b2 * b3 + 4.0 * b2 * b4 +
                   2.0 * a * p.M * p.q + mw * mw);

    attach_energies(sol, p);
    AnsatzUnknowns x{b1, b2, b3, b4, a, sol.kappa2};
    sol.residuals = evaluate_residuals(sys, x);
    apply_physicality(sol, p, PhysicalityPolicy::PaperPreset);
    return sol;
}

std::vector<AnsatzSolution> solve_all(const PhysicalParams& p, Regime regime, int n,
                                      PhysicalityPolicy policy) {
    std::vector<AnsatzSolution> out;
    out.reserve(8);
    for (const auto& sel : BranchSelection::all()) {
        AnsatzSolution sol =
            n == 0 ? solve_nodeless(p, regime, sel) : solve_onenode(p, regime, sel);
        apply_physicality(sol, p, policy);
        out.push_back(std::move(sol));
    }
    return out;
}

double hard_wall_q(double M, double r0) {
    if (!(r0 > 0.0) || !(M > 0.0))
        throw std::invalid_argument("hard_wall_q needs r0 > 0 and M > 0");
    return -M / r0;
}

void apply_physicality(AnsatzSolution& sol, const PhysicalParams& p,
                       PhysicalityPolicy policy) {
    sol.reasons.clear();
    auto reject = [&](const char* reason) { sol.reasons.emplace_back(reason); };

    if (!sol.energies) reject("COMPLEX_ENERGY");

    if (sol.n == 1) {
        const double a = sol.alpha11.value_or(0.0);
        const double r0 = p.r0();
        if (!(a > 0.0)) reject("NODE_NOT_POSITIVE");
        if (std::isfinite(r0) && std::abs(a - r0) <= kNodeWallRelTol * r0)
            reject("NODE_AT_WALL");
    }

    if (policy == PhysicalityPolicy::PaperPreset) {
        if (!preset_accepts(sol.regime, sol.n, sol.selection)) reject("NOT_IN_PAPER_PRESET");
    } else {
        if (sol.b3 < 0.0)
            reject("DIVERGES_AT_ORIGIN");
        else if (sol.b3 == 0.0)
            reject("NOT_VANISHING_AT_ORIGIN");

        const double r0 = p.r0();
        const bool hard_wall = sol.regime != Regime::Small && std::isfinite(r0);
        if (hard_wall) {
            // vanishing at the wall needs the potential zero pinned there
            if (std::abs(p.M + p.q * r0) > 1e-9 * std::max(1.0, p.M))
                reject("HARD_WALL_MISMATCH");
            else if (!(sol.b4 > 0.0))
                reject("HARD_WALL_NOT_VANISHING");
            if (sol.n == 1 && sol.alpha11 && *sol.alpha11 >= r0)
                reject("NODE_OUTSIDE_DOMAIN");
        } else {
            if (!(sol.b2 < 0.0)) reject("NOT_NORMALIZABLE_AT_INFINITY");
        }
    }
    sol.physical = sol.reasons.empty();
}

}  // namespace dkp
