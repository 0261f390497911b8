#include "fluxmodes/run_config.hpp"

#include <climits>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace fluxmodes {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const char* where) {
    for (const auto& item : object.items()) {
        bool found = false;
        for (const char* key : known) {
            if (item.key() == key) {
                found = true;
                break;
            }
        }
        if (!found) {
            throw ConfigError("config: unknown key '" + item.key() + "' in " + where);
        }
    }
}

double finite_number(const json& j, const char* where) {
    if (!j.is_number()) {
        throw ConfigError(std::string("config: ") + where + " must be a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ConfigError(std::string("config: ") + where + " must be finite");
    }
    return v;
}

long long integer_number(const json& j, const char* where) {
    if (!j.is_number_integer()) {
        throw ConfigError(std::string("config: ") + where + " must be an integer");
    }
    return j.get<long long>();
}

double positive_number(const json& j, const char* where) {
    const double v = finite_number(j, where);
    if (!(v > 0.0)) {
        throw ConfigError(std::string("config: ") + where + " must be positive");
    }
    return v;
}

std::vector<Flux> parse_fluxes(const json& j) {
    if (!j.is_array()) {
        throw ConfigError("config: fluxes must be an array");
    }
    std::vector<Flux> fluxes;
    fluxes.reserve(j.size());
    for (const json& entry : j) {
        if (!entry.is_object()) {
            throw ConfigError("config: each flux must be an object {x, y, n}");
        }
        reject_unknown_keys(entry, {"x", "y", "n"}, "a flux entry");
        if (!entry.contains("x") || !entry.contains("y") || !entry.contains("n")) {
            throw ConfigError("config: each flux needs keys x, y, n");
        }
        const double x = finite_number(entry.at("x"), "flux x");
        const double y = finite_number(entry.at("y"), "flux y");
        const long long n = integer_number(entry.at("n"), "flux n");
        if (n == 0) {
            throw ConfigError("config: flux n must be nonzero");
        }
        if (n < INT_MIN || n > INT_MAX) {
            throw ConfigError("config: flux n out of range");
        }
        fluxes.push_back(Flux{Complex(x, y), static_cast<int>(n)});
    }
    return fluxes;
}

GridSpec parse_grid(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config: grid must be an object");
    }
    reject_unknown_keys(j, {"xmin", "xmax", "ymin", "ymax", "nx", "ny"}, "grid");
    GridSpec grid;
    if (j.contains("xmin")) grid.xmin = finite_number(j.at("xmin"), "grid xmin");
    if (j.contains("xmax")) grid.xmax = finite_number(j.at("xmax"), "grid xmax");
    if (j.contains("ymin")) grid.ymin = finite_number(j.at("ymin"), "grid ymin");
    if (j.contains("ymax")) grid.ymax = finite_number(j.at("ymax"), "grid ymax");
    if (j.contains("nx")) {
        const long long nx = integer_number(j.at("nx"), "grid nx");
        if (nx < 2 || nx > 100000) {
            throw ConfigError("config: grid nx must be in [2, 100000]");
        }
        grid.nx = static_cast<int>(nx);
    }
    if (j.contains("ny")) {
        const long long ny = integer_number(j.at("ny"), "grid ny");
        if (ny < 2 || ny > 100000) {
            throw ConfigError("config: grid ny must be in [2, 100000]");
        }
        grid.ny = static_cast<int>(ny);
    }
    if (!(grid.xmin < grid.xmax)) {
        throw ConfigError("config: grid needs xmin < xmax");
    }
    if (!(grid.ymin < grid.ymax)) {
        throw ConfigError("config: grid needs ymin < ymax");
    }
    return grid;
}

Tolerances parse_tolerances(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config: tolerances must be an object");
    }
    reject_unknown_keys(j, {"contour", "winding", "residual_h", "rank_rel"}, "tolerances");
    Tolerances tol;
    if (j.contains("contour")) tol.contour = positive_number(j.at("contour"), "tolerances.contour");
    if (j.contains("winding")) tol.winding = positive_number(j.at("winding"), "tolerances.winding");
    if (j.contains("residual_h")) {
        tol.residual_h = positive_number(j.at("residual_h"), "tolerances.residual_h");
    }
    if (j.contains("rank_rel")) {
        tol.rank_rel = positive_number(j.at("rank_rel"), "tolerances.rank_rel");
    }
    return tol;
}

} // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config: top level must be an object");
    }
    reject_unknown_keys(root, {"fluxes", "grid", "tolerances", "seed"}, "the top level");

    RunConfig cfg;
    if (root.contains("fluxes")) {
        cfg.fluxes = FluxConfig(parse_fluxes(root.at("fluxes")));
    }
    if (root.contains("grid")) {
        cfg.grid = parse_grid(root.at("grid"));
    }
    if (root.contains("tolerances")) {
        cfg.tolerances = parse_tolerances(root.at("tolerances"));
    }
    if (root.contains("seed")) {
        cfg.seed = static_cast<unsigned long long>(integer_number(root.at("seed"), "seed"));
    }
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

} // namespace fluxmodes
