#ifndef FLUXMODES_FINITE_DIFF_HPP
#define FLUXMODES_FINITE_DIFF_HPP

#include <complex>

namespace fluxmodes {

// Centered finite differences for the Wirtinger derivatives
//   d/dz    = (d/dx - i d/dy) / 2
//   d/dzbar = (d/dx + i d/dy) / 2
// of a complex-valued field of (x, y). Truncation error is O(h^2).

template <typename F>
std::complex<double> wirtinger_dzbar(F&& f, std::complex<double> z, double h) {
    using C = std::complex<double>;
    const C dx = (f(z + C(h, 0.0)) - f(z - C(h, 0.0))) / (2.0 * h);
    const C dy = (f(z + C(0.0, h)) - f(z - C(0.0, h))) / (2.0 * h);
    return 0.5 * (dx + C(0.0, 1.0) * dy);
}

template <typename F>
std::complex<double> wirtinger_dz(F&& f, std::complex<double> z, double h) {
    using C = std::complex<double>;
    const C dx = (f(z + C(h, 0.0)) - f(z - C(h, 0.0))) / (2.0 * h);
    const C dy = (f(z + C(0.0, h)) - f(z - C(0.0, h))) / (2.0 * h);
    return 0.5 * (dx - C(0.0, 1.0) * dy);
}

} // namespace fluxmodes

#endif
