#include "fluxmodes/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fluxmodes {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Complex> sample_points(const FluxConfig& cfg, std::size_t count,
                                   std::mt19937_64& rng, double min_flux_distance) {
    constexpr double kInner = 0.5;
    constexpr double kOuter = 2.0;
    const Complex center = cfg.centroid();
    std::vector<Complex> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 1000) {
                throw std::runtime_error("sample_points: cannot place samples away from fluxes");
            }
            // Stratified angle: sector i of the circle, jittered within it.
            const double theta = 2.0 * std::numbers::pi *
                                 (static_cast<double>(i) + uniform01(rng)) /
                                 static_cast<double>(count);
            const double radius = kInner + (kOuter - kInner) * uniform01(rng);
            const Complex z = center + std::polar(radius, theta);
            if (cfg.nearest_flux_distance(z) < min_flux_distance) {
                continue;
            }
            bool duplicate = false;
            for (const Complex& p : points) {
                if (p == z) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) {
                points.push_back(z);
                break;
            }
        }
    }
    return points;
}

} // namespace fluxmodes
