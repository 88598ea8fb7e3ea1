#ifndef DKP_SAMPLED_HPP
#define DKP_SAMPLED_HPP

#include <functional>
#include <string>
#include <vector>

namespace dkp {

enum class SampleKind { F, R, Phi1, Phi2, Phi3, Phi4, Phi5, Residual };
enum class Normalization { Raw, Max1 };

const char* sample_kind_name(SampleKind k);

/// Real samples of a radial function on a strictly increasing grid.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<double> values;
    SampleKind kind = SampleKind::F;
    Normalization normalization = Normalization::Raw;
};

/// Rescales so the peak magnitude is 1 (no-op on the zero function).
SampledFunction normalize_max1(SampledFunction f);

/// Uniform grid of n points on [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int n);

/// A smooth test function carrying closed-form first and second derivatives,
/// so operator-equivalence checks are limited by roundoff, not by
/// discretization.
struct SmoothFn {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
};

/// (c0 + c1 r + c2 r^2 + c3 r^3) * exp(-a (r - r0)^2) with analytic
/// derivatives.
SmoothFn gaussian_poly(double a, double r0, const std::vector<double>& coeffs);

}  // namespace dkp

#endif
