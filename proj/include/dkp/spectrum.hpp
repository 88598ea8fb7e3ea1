#ifndef DKP_SPECTRUM_HPP
#define DKP_SPECTRUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "dkp/ansatz.hpp"
#include "dkp/params.hpp"
#include "dkp/radial.hpp"
#include "dkp/sampled.hpp"

namespace dkp {

/// E+- = -m omega +- sqrt(m^2 omega^2 + kappa^2 + k^2 + M^2).
/// Throws ComplexEnergy when the discriminant is negative (no real bound
/// state for that kappa^2).
EnergyPair energy_pair(double kappa2, const PhysicalParams& p);

struct TableRow {
    double omega_alpha = 0;
    double alpha = 0;
    std::optional<double> alpha11;
    std::optional<double> printed_alpha11;
    double e_plus = 0;
    double e_minus = 0;
    std::optional<double> printed_e_plus;
    std::optional<double> printed_e_minus;
    // Set when the printed pair is exactly symmetric while m*omega != 0,
    // i.e. the published row dropped the -m*omega spectral shift.
    bool typo_flag = false;
};

/// Recomputes one of the three published energy tables with the canonical
/// parameters M = q = m = k = 1, omega = 0.01, alpha = 100 * (omega*alpha).
std::vector<TableRow> reproduce_table(int which);

enum class SweepVariable { Alpha, OmegaAlpha };
enum class SweepState { N0, N1 };

struct SweepRow {
    double sweep_value = 0;
    double omega = 0;
    double e_plus = 0;
    double e_minus = 0;
    std::string error;  // empty on success; failed points are kept, not dropped
};

/// Energy sweeps behind the published figure families: E+-(alpha) for
/// node-less states and E+-(omega*alpha) for one-node states.
std::vector<SweepRow> sweep_energy(const PhysicalParams& params_template,
                                   SweepVariable sweep_var, const std::vector<double>& grid,
                                   const std::vector<double>& omegas, SweepState state);

/// Radial factor f_n(r) exp(b1 r + b2 r^2) r^{b3} (M + q r)^{b4}.
SampledFunction eval_wavefunction(const AnsatzSolution& sol, const PhysicalParams& p,
                                  const std::vector<double>& grid, Normalization norm);

struct ResidualSummary {
    double max_abs = 0;
    double rms = 0;
};

/// R'' + bracket * R with the closed-form ansatz derivatives; measurement
/// only, callers decide what to make of it.
SampledFunction ode_residual(const AnsatzSolution& sol, const PhysicalParams& p,
                             OperatorVariant variant, const std::vector<double>& grid,
                             ResidualSummary* summary = nullptr);

/// Strict sign changes over the open interval (endpoints excluded).
int count_nodes(const SampledFunction& sample);

/// Default evaluation grid: 2000 points clear of both endpoints for the
/// hard-wall regime, (1e-3, 8/sqrt(|b2|)) for the decaying regime.
std::vector<double> default_grid(const AnsatzSolution& sol, const PhysicalParams& p);

}  // namespace dkp

#endif
