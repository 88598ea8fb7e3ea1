#include "dkp/sampled.hpp"

#include <cmath>

namespace dkp {

const char* sample_kind_name(SampleKind k) {
    switch (k) {
        case SampleKind::F: return "F";
        case SampleKind::R: return "R";
        case SampleKind::Phi1: return "PHI1";
        case SampleKind::Phi2: return "PHI2";
        case SampleKind::Phi3: return "PHI3";
        case SampleKind::Phi4: return "PHI4";
        case SampleKind::Phi5: return "PHI5";
        case SampleKind::Residual: return "RESIDUAL";
    }
    return "?";
}

SampledFunction normalize_max1(SampledFunction f) {
    double peak = 0.0;
    for (double v : f.values) peak = std::max(peak, std::abs(v));
    if (peak > 0.0)
        for (double& v : f.values) v /= peak;
    f.normalization = Normalization::Max1;
    return f;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] =
            i == n - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return g;
}

SmoothFn gaussian_poly(double a, double r0, const std::vector<double>& coeffs) {
    auto poly = [coeffs](double r) {
        double p = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * r + *it;
        return p;
    };
    auto dpoly = [coeffs](double r) {
        double p = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 1;)
            p = p * r + static_cast<double>(i) * coeffs[i];
        return p;
    };
    auto d2poly = [coeffs](double r) {
        double p = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 2;)
            p = p * r + static_cast<double>(i) * static_cast<double>(i - 1) * coeffs[i];
        return p;
    };
    auto g = [a, r0](double r) { return std::exp(-a * (r - r0) * (r - r0)); };
    SmoothFn fn;
    fn.f = [poly, g](double r) { return poly(r) * g(r); };
    fn.df = [poly, dpoly, g, a, r0](double r) {
        const double gr = g(r);
        return (dpoly(r) - 2.0 * a * (r - r0) * poly(r)) * gr;
    };
    fn.d2f = [poly, dpoly, d2poly, g, a, r0](double r) {
        const double gr = g(r);
        const double u = r - r0;
        return (d2poly(r) - 4.0 * a * u * dpoly(r) +
                (4.0 * a * a * u * u - 2.0 * a) * poly(r)) *
               gr;
    };
    return fn;
}

}  // namespace dkp
