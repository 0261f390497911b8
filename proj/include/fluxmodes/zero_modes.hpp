#ifndef FLUXMODES_ZERO_MODES_HPP
#define FLUXMODES_ZERO_MODES_HPP

#include <optional>
#include <span>
#include <vector>

#include "fluxmodes/gauge.hpp"

namespace fluxmodes {

enum class SpinorComponent { Upper, Lower };

// A closed-form zero-energy spinor component in the delta-flux field:
//   Upper: u(z, zbar) = f(z)    * prod_i |z - z_i|^{-n_i}
//   Lower: v(z, zbar) = g(zbar) * prod_i |z - z_i|^{+n_i}
// `poly` holds the coefficients of f (in z) or g (in zbar), constant term
// first. Rational f is unrepresentable by construction.
class ZeroMode {
public:
    ZeroMode(FluxConfig config, std::vector<Complex> poly, SpinorComponent kind);

    const FluxConfig& config() const { return config_; }
    const std::vector<Complex>& poly() const { return poly_; }
    SpinorComponent kind() const { return kind_; }

    // True when poly is exactly the monomial z^k (single unit coefficient);
    // reports k through `exponent` when given.
    bool is_monomial(int* exponent = nullptr) const;

    // Closed-form value; std::nullopt where the mode diverges (a flux
    // position whose weight exponent is negative there).
    std::optional<Complex> evaluate(Complex z) const;

private:
    FluxConfig config_;
    std::vector<Complex> poly_;
    SpinorComponent kind_;
};

// The bounded solutions: total_quanta + 1 upper modes with f = z^k,
// k = 0..total_quanta. Negative total flux yields an empty list.
std::vector<ZeroMode> zero_mode_basis(const FluxConfig& cfg);

// Magnitude of the zero-energy equation residual at z:
//   Upper: |(d/dzbar u) + (d/dzbar Phi) u|
//   Lower: |(d/dz    v) - (d/dz    Phi) v|
// with the mode derivative from centered finite differences of step h and
// the Phi derivative analytic. Throws std::domain_error when z sits within
// 10h of a flux.
double dirac_residual(const ZeroMode& mode, Complex z, double h);

// Least-squares slope of log|mode(R * direction)| against log R. A positive
// slope marks a mode unbounded at infinity. Throws std::invalid_argument
// for fewer than 3 radii or when a probe point lands on a flux.
double growth_exponent(const ZeroMode& mode, Complex direction, std::span<const double> radii);

// Numerical rank of the samples-by-modes evaluation matrix: singular values
// above relative_threshold times the largest. Rows and columns are
// equilibrated first (rank-preserving diagonal scalings). Requires
// |samples| >= |modes| + 2 and pairwise-distinct samples away from fluxes;
// violations throw std::invalid_argument.
int dimension_by_rank(std::span<const ZeroMode> modes, std::span<const Complex> samples,
                      double relative_threshold = 1e-8);

} // namespace fluxmodes

#endif
