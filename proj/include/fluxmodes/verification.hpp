#ifndef FLUXMODES_VERIFICATION_HPP
#define FLUXMODES_VERIFICATION_HPP

#include <functional>
#include <string>
#include <vector>

#include "fluxmodes/run_config.hpp"

namespace fluxmodes {

// One verification check: passes when |observed - expected| <= tolerance.
struct CheckRecord {
    std::string name;
    double expected;
    double observed;
    double tolerance;
    bool pass;
};

struct VerificationReport {
    long long degree = 0; // deg(D) = total flux quanta
    int mode_count = 0;
    std::vector<CheckRecord> checks;
    bool overall_pass = true;
};

// Result of a second-order convergence probe: residuals at steps h and h/2
// and their ratio (~4 for clean O(h^2) behavior). When both residuals sit
// at the finite-difference rounding floor the ratio carries no information
// and at_floor is set; such probes are treated as vacuously convergent.
struct RatioCheck {
    double coarse;
    double fine;
    double ratio;
    bool at_floor;
};

// residual_at(step) -> residual magnitude. `scale` is the typical magnitude
// of the differenced field near the probe, used to size the rounding floor
// (eps * scale / step, with a safety factor).
RatioCheck residual_ratio(const std::function<double(double)>& residual_at, double h,
                          double scale);

// Runs the full check battery: contour flux and winding around every flux
// and around everything, single-valuedness defects, dirac/CR residual
// convergence ratios at 16 seeded points per mode, the chi-Phi derivative
// identity, the meromorphic image identity with L(D) membership, and the
// rank-verified dimension. Deterministic for a fixed config.
VerificationReport run_verification(const RunConfig& cfg);

// Pretty-printed JSON: {degree, mode_count, checks: [...], overall_pass}.
std::string to_json_text(const VerificationReport& report);

} // namespace fluxmodes

#endif
