#ifndef DKP_PARAMS_HPP
#define DKP_PARAMS_HPP

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dkp {

// Error codes shared by all modules. Operations throw Error; validate()
// returns the violated codes instead.
enum class ErrorCode {
    AlphaOutOfRange,
    NegativeFrequency,
    RhoGeOne,
    PotentialZeroCrossing,
    PotentialNonpositive,
    MassZeroUnsupported,
    QZeroUnsupported,
    DegenerateBranch,
    Alpha11Singular,
    NoPhysicalBranch,
    ComplexEnergy,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// All physical inputs of the model, natural units (hbar = c = 1).
///
/// The potential is U(r) = q r with signed slope q: the hard-wall regime of
/// the finite-r0 solutions needs q < 0 (M + q r0 = 0 has no solution with
/// both M and q positive). m is an integer so that exp(i m phi) is
/// single-valued.
struct PhysicalParams {
    double M = 1.0;      // boson mass, M >= 0
    double q = 1.0;      // linear potential slope, signed
    double varpi = 0.0;  // oscillator frequency, >= 0
    double omega = 0.01; // angular velocity of the rotating frame, >= 0
    double alpha = 0.5;  // deficit parameter, in (0, 1]
    int m = 1;           // magnetic quantum number
    double k = 1.0;      // wave number

    double omega_alpha() const { return omega * alpha; }

    // r0 = 1/(omega*alpha); infinity in the non-rotating / flat limit so both
    // regimes share one code path.
    double r0() const {
        const double wa = omega_alpha();
        return wa > 0.0 ? 1.0 / wa : std::numeric_limits<double>::infinity();
    }

    double m_alpha() const { return static_cast<double>(m) / alpha; }
    double rho(double r) const { return omega_alpha() * r; }
    double potential(double r) const { return q * r; }
};

std::vector<ErrorCode> validate(const PhysicalParams& p,
                                std::optional<double> r = std::nullopt);

// Throws Error(RhoGeOne) on the first violation instead of collecting.
void require_valid(const PhysicalParams& p, std::optional<double> r = std::nullopt);

struct Derived {
    double rho;
    double r0;
    double m_alpha;
};

/// rho, r0 and m_alpha at a given radius; throws RhoGeOne for r >= r0.
Derived derived(const PhysicalParams& p, double r);

/// The two real roots of kappa^2 = E^2 - k^2 - M^2 + 2 E m omega.
struct EnergyPair {
    double e_plus;   // larger root
    double e_minus;  // smaller root
    double kappa2;
};

/// One of the 8 ansatz branches: the coupled (b1, b2) sign, the b3 sign and
/// the b4 root.
struct BranchSelection {
    int sign12 = +1;      // +1 or -1, picks the coupled (b1, b2) pair
    int sign3 = +1;       // +1 or -1, picks b3 = (alpha +- 2m) / (2 alpha)
    double b4 = 1.5;      // 3/2 or -1/2

    std::string id() const;
    static std::array<BranchSelection, 8> all();
    static std::optional<BranchSelection> from_id(const std::string& id);
};

}  // namespace dkp

#endif
