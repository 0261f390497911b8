#ifndef FLUXMODES_PHASE_HPP
#define FLUXMODES_PHASE_HPP

#include <functional>

#include "fluxmodes/gauge.hpp"
#include "fluxmodes/rational.hpp"
#include "fluxmodes/zero_modes.hpp"

namespace fluxmodes {

// The unit-modulus transform chi(z) = prod_i e^{-i n_i arg(z - z_i)},
// computed through the argument form (principal argument per factor). The
// fractional-power form ((zbar - zbar_i)/(z - z_i))^{n_i/2} is
// branch-ambiguous for odd n_i; the argument form is single-valued for
// integer quanta.
class PhaseField {
public:
    explicit PhaseField(FluxConfig config) : config_(std::move(config)) {}

    const FluxConfig& config() const { return config_; }

    // Unit-modulus value; throws std::domain_error at a flux position.
    Complex chi(Complex z) const;

private:
    FluxConfig config_;
};

// Result of continuing the phase of a field along a closed loop.
struct PhaseContinuation {
    // Accumulated change of arg(field) over the full traversal, unwrapped
    // by nearest-branch continuation.
    double total_change;
    // |field(start) - continued end value| = |field(start)| * |1 - e^{i total_change}|.
    double closure_error;
};

// Walks the loop nodes, unwrapping consecutive phase steps to the nearest
// branch. Whenever a step reaches pi/2 the loop sampling is doubled, at
// most max_refinements times; an unresolvable jump throws
// std::runtime_error("loop too close to flux"). The field must be nonzero
// on the loop.
PhaseContinuation continue_phase(const std::function<Complex(Complex)>& field,
                                 const LoopPath& loop, int max_refinements = 10);

// Total continuous change of arg(chi) along the loop. Around a single
// enclosed flux of n_k quanta this is -2*pi*n_k.
double winding(const PhaseField& p, const LoopPath& loop);

// Defect |chi(start) - chi(continued around the loop)|; at most ~1e-9 for
// integer fluxes, order 2 for a genuine branch.
double single_valued_check(const PhaseField& p, const LoopPath& loop);

struct ImageCheck {
    FactoredRational image;
    // Largest |chi*u - image| / (1 + |image|) over the verification samples.
    double max_relative_error;
};

// The meromorphic function chi*u = z^k * prod_i (z - z_i)^{-n_i} for a
// canonical upper mode with f = z^k, together with a pointwise spot check
// of the identity at `samples` seeded random points. Throws
// std::invalid_argument for a non-canonical or lower mode.
ImageCheck meromorphic_image_checked(const PhaseField& p, const ZeroMode& m,
                                     unsigned long long seed = 0, int samples = 32);

// As above but only the rational function; a spot-check failure beyond
// relative 1e-10 throws std::runtime_error("phase transform identity violated").
FactoredRational meromorphic_image(const PhaseField& p, const ZeroMode& m);

// |d/dzbar (chi*u)| at z by centered finite differences of step h; the
// product is holomorphic away from fluxes so the exact value is 0. Throws
// std::domain_error within 10h of a flux.
double cr_residual(const PhaseField& p, const ZeroMode& m, Complex z, double h);

// Residual of the identity chi * (d/dzbar conj(chi)) = -d/dzbar Phi, with
// the left side finite-differenced and the right analytic. Throws
// std::domain_error within 10h of a flux.
double chi_phi_identity(const PhaseField& p, Complex z, double h);

} // namespace fluxmodes

#endif
