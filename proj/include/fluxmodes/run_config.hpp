#ifndef FLUXMODES_RUN_CONFIG_HPP
#define FLUXMODES_RUN_CONFIG_HPP

#include <stdexcept>
#include <string>

#include "fluxmodes/gauge.hpp"

namespace fluxmodes {

// Anything wrong with a config file or its contents: unreadable path, bad
// JSON, unknown keys, invariant violations. The CLI maps this to exit 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    double xmin = -2.0;
    double xmax = 2.0;
    double ymin = -2.0;
    double ymax = 2.0;
    int nx = 41;
    int ny = 41;
};

struct Tolerances {
    double contour = 1e-6;    // contour-integral flux mismatch
    double winding = 1e-6;    // winding against -2*pi*n
    double residual_h = 1e-5; // finite-difference step for residual checks
    double rank_rel = 1e-8;   // relative singular-value cutoff
};

// Parsed run configuration. JSON schema:
//   {
//     "fluxes": [{"x": 0.0, "y": 0.0, "n": 1}, ...],
//     "grid": {"xmin": -2, "xmax": 2, "ymin": -2, "ymax": 2, "nx": 41, "ny": 41},
//     "tolerances": {"contour": 1e-6, "winding": 1e-6, "residual_h": 1e-5, "rank_rel": 1e-8},
//     "seed": 0
//   }
// Every key is optional except that a present object may not carry unknown
// keys (typos fail fast). Invariants: nx, ny >= 2; xmin < xmax; ymin < ymax;
// every n != 0; tolerances positive.
struct RunConfig {
    FluxConfig fluxes; // coincident entries merged, cancellations dropped
    GridSpec grid;
    Tolerances tolerances;
    unsigned long long seed = 0;
};

// Parses JSON text; throws ConfigError with a one-line reason.
RunConfig parse_run_config(const std::string& json_text);

// Reads and parses a config file; unreadable files throw ConfigError.
RunConfig load_run_config(const std::string& path);

} // namespace fluxmodes

#endif
