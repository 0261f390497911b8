#ifndef FLUXMODES_GRID_EXPORT_HPP
#define FLUXMODES_GRID_EXPORT_HPP

#include <iosfwd>
#include <string>

#include "fluxmodes/run_config.hpp"

namespace fluxmodes {

// Writes the named field sampled over cfg.grid as CSV, one row per node,
// row-major with y as the outer loop. Complex fields (F, chi, u0..u<deg>)
// carry the header x,y,re,im; the real field phi carries x,y,value, with a
// trailing empty column so every file has four columns. Nodes within 1e-9
// of a flux emit nan value fields (holes stay visible in plots). Unknown
// field names throw ConfigError.
void write_field_grid(std::ostream& os, const RunConfig& cfg, const std::string& field);

} // namespace fluxmodes

#endif
