#ifndef DKP_RADIAL_HPP
#define DKP_RADIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dkp/params.hpp"
#include "dkp/sampled.hpp"

namespace dkp {

enum class OperatorVariant {
    Eq14OnF,       // second-order equation for the first spinor component F
    Eq16Osc,       // R-form with the oscillator term
    Eq24Arbitrary, // R-form, varpi = 0
    Eq34Small,     // R-form, varpi = 0, rotational constant dropped
};

const char* operator_variant_name(OperatorVariant v);

/// Coefficient decomposition of a radial operator
///   d^2/dr^2 + c1(r) d/dr + V(r)
/// with c1(r) = d1_inv_r / r + d1_inv_u / (M + q r) and V(r) expanded over
/// the basis {r^2, r, 1, 1/r, 1/r^2, 1/(M+qr), 1/(M+qr)^2}.
///
/// The R-form variants have c1 identically zero: the F -> R substitution
/// cancels -U'/(M+U) + 1/r against 2 A'/A with A = (M+U)^{1/2} r^{-1/2}.
struct RadialOperator {
    OperatorVariant variant;
    PhysicalParams params;
    double E = 0.0;

    double d1_inv_r = 0.0;  // coefficient of (1/r) d/dr
    double d1_inv_u = 0.0;  // coefficient of (1/(M+qr)) d/dr

    double c_r2 = 0.0;
    double c_r = 0.0;
    double c_const = 0.0;
    double c_inv_r = 0.0;
    double c_inv_r2 = 0.0;
    double c_inv_u = 0.0;
    double c_inv_u2 = 0.0;

    double first_deriv_coeff(double r) const;
    double potential(double r) const;
    /// Applies the operator to a function given with its derivatives at r.
    double apply(double r, double f, double fp, double fpp) const;
};

/// kappa^2 = E^2 - k^2 - M^2 + 2 E m omega.
double kappa2_of_energy(const PhysicalParams& p, double E);

RadialOperator radial_operator(const PhysicalParams& p, double E, OperatorVariant variant);

/// The five radial spinor components determined by Phi1 plus the residual of
/// the remaining first-row equation (multiplied by (M+U) so it matches the
/// F-form operator's normalization exactly). Phi3 is purely imaginary; its
/// imaginary part is stored. The angular and axial factors exp(i m phi),
/// exp(i k z) are handled algebraically and cancel from the residual.
struct SpinorSample {
    SampledFunction phi1, phi2, phi3_im, phi4, phi5;
    SampledFunction residual;
    int m = 0;
    double k = 0.0;
    double E = 0.0;
};

SpinorSample eliminate_components(const SmoothFn& phi1, const PhysicalParams& p, double E,
                                  const std::vector<double>& grid);

/// F = (M+U)^{1/2} r^{-1/2} R and its inverse, with analytic propagation of
/// first and second derivatives. Requires M + q r > 0 on the evaluation
/// domain (principal square-root branch).
SmoothFn transform_15_to_F(const SmoothFn& R, const PhysicalParams& p);
SmoothFn transform_15_to_R(const SmoothFn& F, const PhysicalParams& p);

/// Pointwise versions for externally supplied samples.
SampledFunction transform_15_to_F(const SampledFunction& R, const PhysicalParams& p);
SampledFunction transform_15_to_R(const SampledFunction& F, const PhysicalParams& p);

/// Verifies the two derivation steps on random smooth test functions:
///  (i) component elimination against the Eq14 operator,
///  (ii) the F -> R substitution against the R-form operator.
struct EquivalenceReport {
    int trials = 0;
    std::uint64_t seed = 0;
    double max_dev_elimination = 0.0;
    double max_dev_substitution = 0.0;
    double tolerance = 1e-8;
    bool pass = true;
};

EquivalenceReport operator_equivalence_report(const PhysicalParams& p, double E, int trials,
                                              std::uint64_t seed);

/// Same protocol but with params and E randomized per trial; used by the
/// property suites.
EquivalenceReport operator_equivalence_report_random(int trials, std::uint64_t seed);

}  // namespace dkp

#endif
