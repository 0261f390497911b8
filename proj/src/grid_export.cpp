#include "fluxmodes/grid_export.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <ostream>

#include "fluxmodes/phase.hpp"
#include "fluxmodes/zero_modes.hpp"

namespace fluxmodes {

namespace {

constexpr double kFluxHole = 1e-9; // nodes this close to a flux emit nan

// Parses "u<k>" into k; -1 when the name has a different shape.
int mode_index(const std::string& field) {
    if (field.size() < 2 || field[0] != 'u') {
        return -1;
    }
    int k = 0;
    const char* first = field.data() + 1;
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || ptr != last || k < 0) {
        return -1;
    }
    return k;
}

void write_number(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

} // namespace

void write_field_grid(std::ostream& os, const RunConfig& cfg, const std::string& field) {
    const long long degree = cfg.fluxes.total_quanta();

    // Resolve the field to an evaluator away from fluxes. Real fields set
    // `real_valued` and report their value in the third column.
    bool real_valued = false;
    std::function<Complex(Complex)> eval;
    if (field == "phi") {
        real_valued = true;
        eval = [&cfg](Complex z) { return Complex(cfg.fluxes.phi(z)); };
    } else if (field == "F") {
        eval = [&cfg](Complex z) { return cfg.fluxes.field(z); };
    } else if (field == "chi") {
        eval = [phase = PhaseField(cfg.fluxes)](Complex z) { return phase.chi(z); };
    } else {
        const int k = mode_index(field);
        if (k < 0 || degree < 0 || k > degree) {
            throw ConfigError("sample: unknown field '" + field +
                              "' (expected phi, F, chi, or u0..u" +
                              std::to_string(degree < 0 ? 0 : degree) + ")");
        }
        std::vector<Complex> coeffs(static_cast<std::size_t>(k) + 1, 0.0);
        coeffs.back() = 1.0;
        eval = [mode = ZeroMode(cfg.fluxes, std::move(coeffs), SpinorComponent::Upper)](
                   Complex z) { return mode.evaluate(z).value_or(Complex(0.0)); };
    }

    os << (real_valued ? "x,y,value,\n" : "x,y,re,im\n");
    const GridSpec& g = cfg.grid;
    const double dx = (g.xmax - g.xmin) / (g.nx - 1);
    const double dy = (g.ymax - g.ymin) / (g.ny - 1);
    for (int j = 0; j < g.ny; ++j) {
        const double y = g.ymin + j * dy;
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.xmin + i * dx;
            const Complex z(x, y);
            write_number(os, x);
            os << ',';
            write_number(os, y);
            os << ',';
            if (cfg.fluxes.nearest_flux_distance(z) <= kFluxHole) {
                os << (real_valued ? "nan," : "nan,nan");
            } else {
                const Complex v = eval(z);
                write_number(os, v.real());
                os << ',';
                if (!real_valued) {
                    write_number(os, v.imag());
                }
            }
            os << '\n';
        }
    }
}

} // namespace fluxmodes
