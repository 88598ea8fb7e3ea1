#include "dkp/params.hpp"

#include <sstream>

namespace dkp {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::AlphaOutOfRange: return "ALPHA_OUT_OF_RANGE";
        case ErrorCode::NegativeFrequency: return "NEGATIVE_FREQUENCY";
        case ErrorCode::RhoGeOne: return "RHO_GE_ONE";
        case ErrorCode::PotentialZeroCrossing: return "POTENTIAL_ZERO_CROSSING";
        case ErrorCode::PotentialNonpositive: return "POTENTIAL_NONPOSITIVE";
        case ErrorCode::MassZeroUnsupported: return "MASS_ZERO_UNSUPPORTED";
        case ErrorCode::QZeroUnsupported: return "Q_ZERO_UNSUPPORTED";
        case ErrorCode::DegenerateBranch: return "DEGENERATE_BRANCH";
        case ErrorCode::Alpha11Singular: return "ALPHA11_SINGULAR";
        case ErrorCode::NoPhysicalBranch: return "NO_PHYSICAL_BRANCH";
        case ErrorCode::ComplexEnergy: return "COMPLEX_ENERGY";
    }
    return "UNKNOWN";
}

std::vector<ErrorCode> validate(const PhysicalParams& p, std::optional<double> r) {
    std::vector<ErrorCode> errs;
    if (!(p.alpha > 0.0 && p.alpha <= 1.0)) errs.push_back(ErrorCode::AlphaOutOfRange);
    if (p.varpi < 0.0 || p.omega < 0.0) errs.push_back(ErrorCode::NegativeFrequency);
    if (r && p.alpha > 0.0 && p.rho(*r) >= 1.0) errs.push_back(ErrorCode::RhoGeOne);
    return errs;
}

void require_valid(const PhysicalParams& p, std::optional<double> r) {
    const auto errs = validate(p, r);
    if (errs.empty()) return;
    std::ostringstream os;
    os << "invalid parameters:";
    for (auto e : errs) os << ' ' << error_code_name(e);
    if (r) os << " (r = " << *r << ", r0 = " << p.r0() << ")";
    throw Error(errs.front(), os.str());
}

Derived derived(const PhysicalParams& p, double r) {
    require_valid(p);
    const double rho = p.rho(r);
    if (rho >= 1.0) {
        std::ostringstream os;
        os << "rho = " << rho << " >= 1 at r = " << r << " (r0 = " << p.r0() << ")";
        throw Error(ErrorCode::RhoGeOne, os.str());
    }
    return Derived{rho, p.r0(), p.m_alpha()};
}

std::string BranchSelection::id() const {
    std::string s;
    s += (sign12 > 0) ? 'p' : 'm';
    s += '.';
    s += (sign3 > 0) ? 'p' : 'm';
    s += '.';
    s += (b4 > 0) ? "32" : "m12";
    return s;
}

std::array<BranchSelection, 8> BranchSelection::all() {
    std::array<BranchSelection, 8> out;
    int i = 0;
    for (int s12 : {+1, -1})
        for (int s3 : {+1, -1})
            for (double b4 : {1.5, -0.5}) out[i++] = BranchSelection{s12, s3, b4};
    return out;
}

std::optional<BranchSelection> BranchSelection::from_id(const std::string& id) {
    for (const auto& sel : all())
        if (sel.id() == id) return sel;
    return std::nullopt;
}

}  // namespace dkp
