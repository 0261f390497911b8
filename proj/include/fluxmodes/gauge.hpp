#ifndef FLUXMODES_GAUGE_HPP
#define FLUXMODES_GAUGE_HPP

#include <vector>

#include "fluxmodes/divisor.hpp"

namespace fluxmodes {

// One delta-function flux point carrying an integer number of flux quanta
// (natural units, flux quantum 2*pi).
struct Flux {
    Complex position;
    int quanta; // nonzero in any stored config
};

// A finite collection of delta fluxes B(r) = sum_i 2*pi*n_i*delta(r - r_i).
// Construction merges entries at bitwise-identical positions by summing
// quanta and drops entries that cancel to zero. Immutable afterwards.
class FluxConfig {
public:
    FluxConfig() = default;
    explicit FluxConfig(std::vector<Flux> fluxes);

    const std::vector<Flux>& fluxes() const { return fluxes_; }
    std::size_t size() const { return fluxes_.size(); }
    bool empty() const { return fluxes_.empty(); }

    long long total_quanta() const;

    // Numeric coincidence with a stored position (the singular set of every
    // field below).
    bool is_flux_position(Complex z) const;

    // Distance from z to the nearest flux; +infinity for the empty config.
    double nearest_flux_distance(Complex z) const;

    // Mean of the flux positions; 0 for the empty config.
    Complex centroid() const;

    // The divisor sum n_i * z_i; no term at infinity.
    Divisor divisor() const;

    // Holomorphic potential F(z) = sum_i n_i / (z - z_i), the complex form
    // A_y + i*A_x of the gauge-fixed vector potential. Throws
    // std::domain_error at a flux position.
    Complex field(Complex z) const;

    // (A_x, A_y) = (Im F, Re F) at (x, y). Throws at a flux position.
    struct VectorPotential {
        double ax;
        double ay;
    };
    VectorPotential vector_potential(double x, double y) const;

    // Scalar potential Phi(z) = sum_i n_i * log|z - z_i|, the potential with
    // A_x = -d/dy Phi, A_y = d/dx Phi. Throws at a flux position.
    double phi(Complex z) const;

    // d/dzbar of Phi in closed form, (1/2) sum_i n_i / (zbar - zbar_i).
    // The analytic reference for every finite-difference check. Throws at a
    // flux position.
    Complex dphi_dzbar(Complex z) const;

private:
    std::vector<Flux> fluxes_; // sorted by position, deterministic layout
};

// A discretized closed contour, counter-clockwise, for contour integrals
// and winding. Circles sample the exact parameterization; polygons sample
// each edge uniformly.
class LoopPath {
public:
    // samples >= 16 nodes on the circle (throws std::invalid_argument
    // otherwise, or for radius <= 0).
    static LoopPath circle(Complex center, double radius, int samples = 256);

    // At least 3 vertices and samples_per_edge >= 16.
    static LoopPath polygon(std::vector<Complex> vertices, int samples_per_edge = 16);

    enum class Kind { Circle, Polygon };
    Kind kind() const { return kind_; }

    // Node j connects to node j+1, and the last node back to the first.
    const std::vector<Complex>& nodes() const { return nodes_; }

    // Same geometry with doubled sampling.
    LoopPath refined() const;

    // Whether p lies inside the loop (circle: open disk test; polygon:
    // nonzero winding number).
    bool encloses(Complex p) const;

    // Distance from p to the ideal path (circle: | |p-c| - r |; polygon:
    // minimum distance over the edges).
    double distance_to(Complex p) const;

    // Trapezoidal rule for the contour integral of f along this loop, on the
    // parameterization. For circles the periodic form converges
    // geometrically in the sample count; polygon edges converge at second
    // order in the per-edge step.
    template <typename F>
    Complex integrate(F&& f) const {
        Complex sum = 0.0;
        const std::size_t n = nodes_.size();
        if (kind_ == Kind::Circle) {
            // Closed periodic parameterization: the trapezoid sum collapses
            // to step * sum of f(z_j) * dz/dtheta.
            for (const Complex& z : nodes_) {
                sum += f(z) * Complex(0.0, 1.0) * (z - center_);
            }
            return sum * (two_pi() / static_cast<double>(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Complex a = nodes_[j];
            const Complex b = nodes_[(j + 1) % n];
            sum += 0.5 * (f(a) + f(b)) * (b - a);
        }
        return sum;
    }

private:
    LoopPath() = default;

    static double two_pi();

    Kind kind_ = Kind::Circle;
    Complex center_;
    double radius_ = 0.0;
    int samples_ = 0;
    std::vector<Complex> vertices_;
    int samples_per_edge_ = 0;
    std::vector<Complex> nodes_;
};

// Trapezoidal line integral of F along the loop; the exact value is
// 2*pi*i*(sum of enclosed quanta). Throws std::domain_error when a flux
// lies on the contour (within 1e-12 of the path).
Complex contour_flux(const FluxConfig& cfg, const LoopPath& loop);

} // namespace fluxmodes

#endif
