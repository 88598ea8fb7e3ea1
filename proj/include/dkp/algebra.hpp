#ifndef DKP_ALGEBRA_HPP
#define DKP_ALGEBRA_HPP

#include <array>

#include "dkp/mat.hpp"
#include "dkp/params.hpp"

namespace dkp {

// Two metric signatures coexist on purpose and must not be mixed:
//  - the frame (algebra) signature diag(+,-,-,-), the unique one under which
//    the 5x5 beta matrices satisfy the trilinear algebra (forced by
//    (beta^0)^3 = beta^0);
//  - the coordinate signature (-,+,+,+) of the rotating cosmic-string line
//    element, used for the metric and its inverse.
// Frame indices contract with kAlgebraEta, coordinate indices with the
// line-element metric.
inline constexpr std::array<int, 4> kAlgebraEta = {+1, -1, -1, -1};
inline constexpr std::array<int, 4> kMetricEta = {-1, +1, +1, +1};

/// The four constant flat-space beta matrices (exact integer entries).
std::array<Mat5i, 4> flat_betas();

/// beta^a beta^b beta^c + beta^c beta^b beta^a
///   - eta^{ab} beta^c - eta^{cb} beta^a, in integer arithmetic.
Mat5i trilinear_defect(int a, int b, int c);

/// Tetrad legs e_a^mu; row a in {0,1,2,3}, column mu in {t,r,phi,z}.
///
/// The only non-zero entries sit at (0,t), (1,r), (2,t), (2,phi), (3,z): the
/// off-diagonal rotating-frame entry omega*alpha*r/sqrt(1-rho^2) belongs to
/// leg a=2 with coordinate mu=t. That reading is forced: it is the one that
/// reproduces the curved beta^t from beta^mu = e_a^mu beta^a and satisfies
/// eta^{ab} e_a^mu e_b^nu = g^{mu nu} (the naive row-column reading does
/// neither).
struct TetradField {
    Mat4 e;
};

TetradField tetrad(const PhysicalParams& p, double r);

/// Inverse of the rotating-frame metric, coordinate order (t, r, phi, z),
/// line-element signature (-,+,+,+). Closed form via 2x2 block inversion of
/// the (t, phi) sector.
Mat4 inverse_metric(const PhysicalParams& p, double r);

/// Covariant metric of the line element (same ordering/signature).
Mat4 metric(const PhysicalParams& p, double r);

/// eta_alg^{ab} e_a^mu e_b^nu: the contraction that appears in the curved
/// trilinear identity. Equals minus inverse_metric() because of the signature
/// split documented above.
Mat4 algebra_metric(const PhysicalParams& p, double r);

/// Curved beta matrices beta^mu = e_a^mu beta^a, order (t, r, phi, z).
std::array<Mat5, 4> curved_betas(const PhysicalParams& p, double r);

/// Spin connection matrices of the covariant derivative; gamma_z is
/// identically zero and gamma_phi = gamma_t / omega whenever omega > 0.
struct SpinConnectionSet {
    Mat5 gamma_t, gamma_r, gamma_phi, gamma_z;
};

SpinConnectionSet spin_connections(const PhysicalParams& p, double r);

/// Diagnostic: rebuilds the spin connections from the tetrad alone
/// (analytic Christoffel symbols of the line element, metric-compatible
/// omega_{mu a b}, then Gamma_mu = 1/2 omega_{mu a b} [beta^a, beta^b]) and
/// reports the entrywise difference from spin_connections(). The deviation is
/// recorded, not asserted: the closed-form connection matrices come with no
/// intermediate coefficients to pin the convention against.
struct GeometryReport {
    SpinConnectionSet from_tetrad;
    std::array<double, 4> max_abs_dev;  // order t, r, phi, z
};

GeometryReport geometry_cross_check(const PhysicalParams& p, double r);

}  // namespace dkp

#endif
