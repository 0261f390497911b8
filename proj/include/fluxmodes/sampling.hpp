#ifndef FLUXMODES_SAMPLING_HPP
#define FLUXMODES_SAMPLING_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "fluxmodes/gauge.hpp"

namespace fluxmodes {

// Uniform double in [0, 1) built from the top 53 bits of the generator
// output. mt19937_64 output is fixed by the standard, so sequences are
// identical across platforms (std::uniform_real_distribution is not).
double uniform01(std::mt19937_64& rng);

// `count` points in the annulus 0.5 <= |z - centroid| <= 2 around the flux
// centroid, angles stratified over the circle so no sector is left empty.
// Every point keeps at least min_flux_distance from each flux; pathological
// configs that leave no room throw std::runtime_error.
std::vector<Complex> sample_points(const FluxConfig& cfg, std::size_t count,
                                   std::mt19937_64& rng, double min_flux_distance = 0.05);

} // namespace fluxmodes

#endif
