#include "dkp/radial.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace dkp {

namespace {

double inv_or_zero(double coeff, double denom) { return coeff == 0.0 ? 0.0 : coeff / denom; }

void require_positive_potential(const PhysicalParams& p, double r) {
    if (p.M + p.q * r <= 0.0) {
        std::ostringstream os;
        os << "M + q r = " << p.M + p.q * r << " <= 0 at r = " << r;
        throw Error(ErrorCode::PotentialNonpositive, os.str());
    }
}

// log-derivative data of A = (M+qr)^{1/2} r^{-1/2}
struct LogDeriv {
    double lam;  // A'/A
    double mu;   // A''/A
};

LogDeriv a_log_derivs(const PhysicalParams& p, double r) {
    const double u = p.M + p.q * r;
    const double lam = p.q / (2.0 * u) - 1.0 / (2.0 * r);
    const double mu =
        -p.q * p.q / (4.0 * u * u) + 3.0 / (4.0 * r * r) - p.q / (2.0 * r * u);
    return {lam, mu};
}

double uniform(std::mt19937_64& rng) {
    // keep the stream implementation-independent
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform(rng);
}

SmoothFn random_smooth(std::mt19937_64& rng) {
    const double a = uniform(rng, 0.3, 2.0);
    const double center = uniform(rng, 0.5, 2.5);
    std::vector<double> coeffs(4);
    for (double& c : coeffs) c = uniform(rng, -1.0, 1.0);
    if (std::abs(coeffs[0]) < 0.1) coeffs[0] += 0.5;  // keep the function away from zero
    return gaussian_poly(a, center, coeffs);
}

double rel_deviation(const std::vector<double>& a, const std::vector<double>& b) {
    double scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
    if (scale == 0.0) return 0.0;
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
    return dev / scale;
}

// One trial of both derivation checks on a shared grid.
void equivalence_trial(const PhysicalParams& p, double E, const SmoothFn& fn,
                       const std::vector<double>& grid, double& dev_elim, double& dev_subst) {
    const RadialOperator op14 = radial_operator(p, E, OperatorVariant::Eq14OnF);

    const SpinorSample sp = eliminate_components(fn, p, E, grid);
    std::vector<double> direct(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        direct[i] = op14.apply(r, fn.f(r), fn.df(r), fn.d2f(r));
    }
    dev_elim = std::max(dev_elim, rel_deviation(sp.residual.values, direct));

    // fn plays the role of R; push it through Eq. 15 and compare operators.
    const OperatorVariant rvar =
        p.varpi > 0.0 ? OperatorVariant::Eq16Osc : OperatorVariant::Eq24Arbitrary;
    const RadialOperator opR = radial_operator(p, E, rvar);
    const SmoothFn F = transform_15_to_F(fn, p);
    std::vector<double> via14(grid.size()), viaR(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        const double A = std::sqrt((p.M + p.q * r) / r);
        via14[i] = op14.apply(r, F.f(r), F.df(r), F.d2f(r));
        viaR[i] = A * opR.apply(r, fn.f(r), fn.df(r), fn.d2f(r));
    }
    dev_subst = std::max(dev_subst, rel_deviation(via14, viaR));
}

std::vector<double> equivalence_grid(const PhysicalParams& p) {
    double hi = 3.0;
    if (std::isfinite(p.r0())) hi = std::min(hi, 0.9 * p.r0());
    return uniform_grid(0.2, hi, 161);
}

}  // namespace

const char* operator_variant_name(OperatorVariant v) {
    switch (v) {
        case OperatorVariant::Eq14OnF: return "EQ14_ON_F";
        case OperatorVariant::Eq16Osc: return "EQ16_OSC";
        case OperatorVariant::Eq24Arbitrary: return "EQ24_ARBITRARY";
        case OperatorVariant::Eq34Small: return "EQ34_SMALL";
    }
    return "?";
}

double kappa2_of_energy(const PhysicalParams& p, double E) {
    return E * E - p.k * p.k - p.M * p.M + 2.0 * E * p.m * p.omega;
}

double RadialOperator::first_deriv_coeff(double r) const {
    return inv_or_zero(d1_inv_r, r) + inv_or_zero(d1_inv_u, params.M + params.q * r);
}

double RadialOperator::potential(double r) const {
    const double u = params.M + params.q * r;
    return c_r2 * r * r + c_r * r + c_const + inv_or_zero(c_inv_r, r) +
           inv_or_zero(c_inv_r2, r * r) + inv_or_zero(c_inv_u, u) +
           inv_or_zero(c_inv_u2, u * u);
}

double RadialOperator::apply(double r, double f, double fp, double fpp) const {
    return fpp + first_deriv_coeff(r) * fp + potential(r) * f;
}

RadialOperator radial_operator(const PhysicalParams& p, double E, OperatorVariant variant) {
    require_valid(p);
    const bool r_form = variant != OperatorVariant::Eq14OnF;
    if (r_form && p.M <= 0.0)
        throw Error(ErrorCode::MassZeroUnsupported,
                    "R-form operators need M > 0 (the 1/(2Mr) term)");
    if ((variant == OperatorVariant::Eq24Arbitrary || variant == OperatorVariant::Eq34Small) &&
        p.varpi != 0.0)
        throw std::invalid_argument("EQ24/EQ34 are varpi = 0 operators");

    const double mw = static_cast<double>(p.m) * p.omega;
    const double mw2 = mw * mw;  // m_alpha^2 (omega alpha)^2 == m^2 omega^2
    const double ma = p.m_alpha();

    RadialOperator op;
    op.variant = variant;
    op.params = p;
    op.E = E;
    op.c_r2 = -(p.q * p.q + p.M * p.M * p.varpi * p.varpi);
    op.c_r = -2.0 * p.M * p.q;

    const double kap2 = kappa2_of_energy(p, E);
    switch (variant) {
        case OperatorVariant::Eq14OnF:
            // -U'/(M+U) + 1/r survives in front of d/dr; the potential picks
            // up the expansions of -(M+U)^2, -(1-rho^2) m^2/(alpha r)^2 and
            // -q M varpi r/(M+qr).
            op.d1_inv_r = 1.0;
            op.d1_inv_u = -p.q;
            op.c_const = kap2 + mw2 + p.M * p.varpi;
            op.c_inv_r2 = -ma * ma;
            op.c_inv_u = p.M * p.M * p.varpi;
            break;
        case OperatorVariant::Eq16Osc:
            op.c_const = kap2 + mw2 + p.M * p.varpi;
            op.c_inv_r = p.q / (2.0 * p.M);
            op.c_inv_r2 = 0.25 - ma * ma;
            op.c_inv_u = (-p.q * p.q + 2.0 * p.M * p.M * p.M * p.varpi) / (2.0 * p.M);
            op.c_inv_u2 = -0.75 * p.q * p.q;
            break;
        case OperatorVariant::Eq24Arbitrary:
        case OperatorVariant::Eq34Small:
            op.c_const = kap2 + (variant == OperatorVariant::Eq24Arbitrary ? mw2 : 0.0);
            op.c_inv_r = p.q / (2.0 * p.M);
            op.c_inv_r2 = 0.25 - ma * ma;
            op.c_inv_u = -p.q * p.q / (2.0 * p.M);
            op.c_inv_u2 = -0.75 * p.q * p.q;
            break;
    }
    return op;
}

SpinorSample eliminate_components(const SmoothFn& phi1, const PhysicalParams& p, double E,
                                  const std::vector<double>& grid) {
    require_valid(p);
    const std::size_t n = grid.size();
    SpinorSample out;
    out.m = p.m;
    out.k = p.k;
    out.E = E;
    auto init = [&](SampledFunction& s, SampleKind kind) {
        s.grid = grid;
        s.values.assign(n, 0.0);
        s.kind = kind;
    };
    init(out.phi1, SampleKind::Phi1);
    init(out.phi2, SampleKind::Phi2);
    init(out.phi3_im, SampleKind::Phi3);
    init(out.phi4, SampleKind::Phi4);
    init(out.phi5, SampleKind::Phi5);
    init(out.residual, SampleKind::Residual);

    double u_sign = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid[i];
        if (p.rho(r) >= 1.0)
            throw Error(ErrorCode::RhoGeOne, "grid extends beyond the hard wall");
        const double u = p.M + p.q * r;
        if (u == 0.0 || (u_sign != 0.0 && u * u_sign < 0.0)) {
            std::ostringstream os;
            os << "M + q r crosses zero on the grid near r = " << r;
            throw Error(ErrorCode::PotentialZeroCrossing, os.str());
        }
        u_sign = u > 0.0 ? 1.0 : -1.0;

        const double s2 = 1.0 - p.rho(r) * p.rho(r);
        const double s = std::sqrt(s2);
        const double F = phi1.f(r), Fp = phi1.df(r), Fpp = phi1.d2f(r);
        const double osc = p.M * p.varpi;  // oscillator slope M*varpi
        const double dF = Fp + osc * r * F;

        out.phi1.values[i] = F;
        out.phi2.values[i] = E * F / (s * u);
        out.phi3_im.values[i] = dF / u;
        const double bracket =
            E * p.omega_alpha() * r / s - static_cast<double>(p.m) * s / (p.alpha * r);
        out.phi4.values[i] = bracket * F / u;
        out.phi5.values[i] = -p.k * F / u;

        // First-row equation with Phi2..Phi5 substituted, multiplied by
        // (M+U); the derivative of Phi3's radial factor is carried in closed
        // form.
        const double d_dF = Fpp + osc * F + osc * r * Fp;
        double res = -u * u * F;
        res += E * E * F / s2;
        res += d_dF - p.q * dF / u + (-osc * r + 1.0 / r) * dF;
        res += -bracket * bracket * F;
        res += -p.k * p.k * F;
        out.residual.values[i] = res;
    }
    return out;
}

SmoothFn transform_15_to_F(const SmoothFn& R, const PhysicalParams& p) {
    SmoothFn out;
    out.f = [R, p](double r) {
        require_positive_potential(p, r);
        return std::sqrt((p.M + p.q * r) / r) * R.f(r);
    };
    out.df = [R, p](double r) {
        require_positive_potential(p, r);
        const auto [lam, mu] = a_log_derivs(p, r);
        (void)mu;
        const double A = std::sqrt((p.M + p.q * r) / r);
        return A * (R.df(r) + lam * R.f(r));
    };
    out.d2f = [R, p](double r) {
        require_positive_potential(p, r);
        const auto [lam, mu] = a_log_derivs(p, r);
        const double A = std::sqrt((p.M + p.q * r) / r);
        return A * (R.d2f(r) + 2.0 * lam * R.df(r) + mu * R.f(r));
    };
    return out;
}

SmoothFn transform_15_to_R(const SmoothFn& F, const PhysicalParams& p) {
    SmoothFn out;
    out.f = [F, p](double r) {
        require_positive_potential(p, r);
        return std::sqrt(r / (p.M + p.q * r)) * F.f(r);
    };
    out.df = [F, p](double r) {
        require_positive_potential(p, r);
        const auto [lam, mu] = a_log_derivs(p, r);
        (void)mu;
        const double B = std::sqrt(r / (p.M + p.q * r));
        return B * (F.df(r) - lam * F.f(r));
    };
    out.d2f = [F, p](double r) {
        require_positive_potential(p, r);
        const auto [lam, mu] = a_log_derivs(p, r);
        const double B = std::sqrt(r / (p.M + p.q * r));
        return B * (F.d2f(r) - 2.0 * lam * F.df(r) + (2.0 * lam * lam - mu) * F.f(r));
    };
    return out;
}

SampledFunction transform_15_to_F(const SampledFunction& R, const PhysicalParams& p) {
    SampledFunction out = R;
    out.kind = SampleKind::F;
    for (std::size_t i = 0; i < out.grid.size(); ++i) {
        const double r = out.grid[i];
        require_positive_potential(p, r);
        out.values[i] = std::sqrt((p.M + p.q * r) / r) * R.values[i];
    }
    return out;
}

SampledFunction transform_15_to_R(const SampledFunction& F, const PhysicalParams& p) {
    SampledFunction out = F;
    out.kind = SampleKind::R;
    for (std::size_t i = 0; i < out.grid.size(); ++i) {
        const double r = out.grid[i];
        require_positive_potential(p, r);
        out.values[i] = std::sqrt(r / (p.M + p.q * r)) * F.values[i];
    }
    return out;
}

EquivalenceReport operator_equivalence_report(const PhysicalParams& p, double E, int trials,
                                              std::uint64_t seed) {
    require_valid(p);
    EquivalenceReport rep;
    rep.trials = trials;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    const auto grid = equivalence_grid(p);
    for (int t = 0; t < trials; ++t) {
        const SmoothFn fn = random_smooth(rng);
        equivalence_trial(p, E, fn, grid, rep.max_dev_elimination, rep.max_dev_substitution);
    }
    rep.pass = rep.max_dev_elimination < rep.tolerance &&
               rep.max_dev_substitution < rep.tolerance;
    return rep;
}

EquivalenceReport operator_equivalence_report_random(int trials, std::uint64_t seed) {
    EquivalenceReport rep;
    rep.trials = trials;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        PhysicalParams p;
        p.M = uniform(rng, 0.5, 2.0);
        p.q = uniform(rng, 0.3, 2.0);
        p.varpi = (t % 2 == 0) ? 0.0 : uniform(rng, 0.05, 0.5);
        p.omega = uniform(rng, 0.0, 0.05);
        p.alpha = uniform(rng, 0.3, 1.0);
        p.m = static_cast<int>(rng() % 5) - 2;
        p.k = uniform(rng, 0.0, 2.0);
        const double E = uniform(rng, -3.0, 3.0);
        const SmoothFn fn = random_smooth(rng);
        equivalence_trial(p, E, fn, equivalence_grid(p), rep.max_dev_elimination,
                          rep.max_dev_substitution);
    }
    rep.pass = rep.max_dev_elimination < rep.tolerance &&
               rep.max_dev_substitution < rep.tolerance;
    return rep;
}

}  // namespace dkp
