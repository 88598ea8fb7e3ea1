#include "dkp/algebra.hpp"

#include <cmath>
#include <sstream>

namespace dkp {

namespace {

Mat5i unit(int i, int j, long long v) {
    Mat5i m{};
    m(i, j) = v;
    return m;
}

void check_radius(const PhysicalParams& p, double r) {
    require_valid(p);
    if (!(r > 0.0)) throw Error(ErrorCode::RhoGeOne, "radius must be positive");
    if (p.rho(r) >= 1.0) {
        std::ostringstream os;
        os << "rho >= 1 at r = " << r << " (r0 = " << p.r0() << ")";
        throw Error(ErrorCode::RhoGeOne, os.str());
    }
}

// Gauss-Jordan inverse of a 4x4; the tetrad block is well conditioned on the
// admissible domain.
Mat4 invert4(Mat4 a) {
    Mat4 inv = Mat4::identity();
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int i = col + 1; i < 4; ++i)
            if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
        if (piv != col)
            for (int j = 0; j < 4; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        const double d = a(col, col);
        for (int j = 0; j < 4; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int i = 0; i < 4; ++i) {
            if (i == col) continue;
            const double f = a(i, col);
            if (f == 0.0) continue;
            for (int j = 0; j < 4; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// d/dr of the tetrad legs, closed form.
Mat4 tetrad_deriv(const PhysicalParams& p, double r) {
    const double rho = p.rho(r);
    const double rp = p.omega_alpha();
    const double s2 = 1.0 - rho * rho;
    const double s = std::sqrt(s2);
    const double s3 = s2 * s;
    Mat4 d{};
    d(0, 0) = rho * rp / s3;
    d(2, 0) = rp / s3;
    d(2, 2) = (-rho * rp / s) / (p.alpha * r) - s / (p.alpha * r * r);
    return d;
}

}  // namespace

std::array<Mat5i, 4> flat_betas() {
    // beta^0 carries the theta block; beta^i pair rho^i against -rho^i^T.
    const Mat5i b0 = unit(0, 1, 1) + unit(1, 0, 1);
    const Mat5i b1 = unit(0, 2, -1) + unit(2, 0, 1);
    const Mat5i b2 = unit(0, 3, -1) + unit(3, 0, 1);
    const Mat5i b3 = unit(0, 4, -1) + unit(4, 0, 1);
    return {b0, b1, b2, b3};
}

Mat5i trilinear_defect(int a, int b, int c) {
    const auto beta = flat_betas();
    const Mat5i lhs = beta[a] * beta[b] * beta[c] + beta[c] * beta[b] * beta[a];
    Mat5i rhs{};
    if (a == b) rhs = rhs + kAlgebraEta[a] * beta[c];
    if (c == b) rhs = rhs + kAlgebraEta[c] * beta[a];
    return lhs - rhs;
}

TetradField tetrad(const PhysicalParams& p, double r) {
    check_radius(p, r);
    const double rho = p.rho(r);
    const double s = std::sqrt(1.0 - rho * rho);
    Mat4 e{};
    e(0, 0) = 1.0 / s;
    e(1, 1) = 1.0;
    e(2, 0) = rho / s;
    e(2, 2) = s / (p.alpha * r);
    e(3, 3) = 1.0;
    return TetradField{e};
}

Mat4 metric(const PhysicalParams& p, double r) {
    const double rho = p.rho(r);
    const double ar = p.alpha * r;
    Mat4 g{};
    g(0, 0) = -(1.0 - rho * rho);
    g(0, 2) = g(2, 0) = p.omega * ar * ar;
    g(1, 1) = 1.0;
    g(2, 2) = ar * ar;
    g(3, 3) = 1.0;
    return g;
}

Mat4 inverse_metric(const PhysicalParams& p, double r) {
    check_radius(p, r);
    const double rho = p.rho(r);
    const double ar = p.alpha * r;
    // 2x2 inversion of the (t, phi) block; its determinant is -(alpha r)^2.
    Mat4 gi{};
    gi(0, 0) = -1.0;
    gi(0, 2) = gi(2, 0) = p.omega;
    gi(1, 1) = 1.0;
    gi(2, 2) = (1.0 - rho * rho) / (ar * ar);
    gi(3, 3) = 1.0;
    return gi;
}

Mat4 algebra_metric(const PhysicalParams& p, double r) {
    const Mat4 e = tetrad(p, r).e;
    Mat4 g{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            double sum = 0.0;
            for (int a = 0; a < 4; ++a) sum += kAlgebraEta[a] * e(a, mu) * e(a, nu);
            g(mu, nu) = sum;
        }
    return g;
}

std::array<Mat5, 4> curved_betas(const PhysicalParams& p, double r) {
    const Mat4 e = tetrad(p, r).e;
    const auto flat = flat_betas();
    std::array<Mat5, 4> out;
    for (int mu = 0; mu < 4; ++mu) {
        Mat5 sum{};
        for (int a = 0; a < 4; ++a)
            if (e(a, mu) != 0.0) sum = sum + e(a, mu) * to_double(flat[a]);
        out[mu] = sum;
    }
    return out;
}

SpinConnectionSet spin_connections(const PhysicalParams& p, double r) {
    check_radius(p, r);
    const double rho = p.rho(r);
    const double s2 = 1.0 - rho * rho;
    const double s = std::sqrt(s2);
    const double wa = p.omega_alpha();

    // Shared entry pattern of gamma_t and gamma_phi.
    Mat5 core{};
    core(1, 2) = core(2, 1) = -wa * r;
    core(2, 3) = 1.0;
    core(3, 2) = -1.0;

    SpinConnectionSet out;
    out.gamma_t = (wa / s) * core;
    // gamma_phi = gamma_t / omega, written with its own prefactor so the
    // omega = 0 limit stays finite.
    out.gamma_phi = (p.alpha / s) * core;

    Mat5 gr{};
    gr(1, 3) = gr(3, 1) = -1.0;
    out.gamma_r = (-wa / s2) * gr;
    out.gamma_z = Mat5::zero();
    return out;
}

GeometryReport geometry_cross_check(const PhysicalParams& p, double r) {
    check_radius(p, r);
    const Mat4 e = tetrad(p, r).e;       // e_a^mu
    const Mat4 einv = invert4(e);        // (einv)(mu, a) = e^a_mu as einv(mu,a)
    const Mat4 de = tetrad_deriv(p, r);  // d/dr e_a^mu
    const Mat4 gi = inverse_metric(p, r);

    // d/dr of the covariant metric, closed form (only r-dependent entries).
    const double wa = p.omega_alpha();
    Mat4 dg{};
    dg(0, 0) = 2.0 * wa * wa * r;
    dg(0, 2) = dg(2, 0) = 2.0 * p.omega * p.alpha * p.alpha * r;
    dg(2, 2) = 2.0 * p.alpha * p.alpha * r;

    // Christoffels of the line element; only the d/dr terms survive.
    double chris[4][4][4] = {};
    for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu)
            for (int la = 0; la < 4; ++la) {
                double sum = 0.0;
                for (int sg = 0; sg < 4; ++sg) {
                    const double t1 = (mu == 1) ? dg(sg, la) : 0.0;
                    const double t2 = (la == 1) ? dg(sg, mu) : 0.0;
                    const double t3 = (sg == 1) ? dg(mu, la) : 0.0;
                    sum += gi(nu, sg) * (t1 + t2 - t3);
                }
                chris[nu][mu][la] = 0.5 * sum;
            }

    // omega_mu^a_b = e^a_nu (d_mu e_b^nu + Gamma^nu_{mu sigma} e_b^sigma);
    // frame indices lowered with the line-element frame metric (-,+,+,+).
    const auto flat = flat_betas();
    SpinConnectionSet built;
    Mat5* gammas[4] = {&built.gamma_t, &built.gamma_r, &built.gamma_phi, &built.gamma_z};
    for (int mu = 0; mu < 4; ++mu) {
        Mat5 g{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                double w = 0.0;
                for (int nu = 0; nu < 4; ++nu) {
                    double cov = (mu == 1) ? de(b, nu) : 0.0;
                    for (int sg = 0; sg < 4; ++sg) cov += chris[nu][mu][sg] * e(b, sg);
                    w += einv(nu, a) * cov;
                }
                const double w_low = kMetricEta[a] * w;
                if (w_low != 0.0)
                    g = g + (0.5 * w_low) * to_double(commutator(flat[a], flat[b]));
            }
        *gammas[mu] = g;
    }

    const SpinConnectionSet printed = spin_connections(p, r);
    GeometryReport rep;
    rep.from_tetrad = built;
    rep.max_abs_dev = {max_abs_diff(built.gamma_t, printed.gamma_t),
                       max_abs_diff(built.gamma_r, printed.gamma_r),
                       max_abs_diff(built.gamma_phi, printed.gamma_phi),
                       max_abs_diff(built.gamma_z, printed.gamma_z)};
    return rep;
}

}  // namespace dkp
