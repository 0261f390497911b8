#include "fluxmodes/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace fluxmodes {

double unit_norm_defect(const SpherePoint& p) {
    return std::abs(p.x * p.x + p.y * p.y + p.z * p.z - 1.0);
}

ExtendedPoint stereographic_project(const SpherePoint& p) {
    if (p.z == 1.0) return ExtendedPoint::infinity();
    return ExtendedPoint(Complex(p.x, p.y) / (1.0 - p.z));
}

SpherePoint stereographic_unproject(const ExtendedPoint& p) {
    if (p.is_infinity()) return SpherePoint{0.0, 0.0, 1.0};
    const Complex w = p.value();
    const double s = std::norm(w);
    if (!std::isfinite(s)) return SpherePoint{0.0, 0.0, 1.0};
    const double denom = 1.0 + s;
    return SpherePoint{2.0 * w.real() / denom, 2.0 * w.imag() / denom, (s - 1.0) / denom};
}

long long order_at_infinity(const FactoredRational& f) {
    if (f.is_zero()) {
        throw std::domain_error("order_at_infinity: undefined for zero function");
    }
    return -f.multiplicity_sum();
}

} // namespace fluxmodes
