#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "fluxmodes/grid_export.hpp"
#include "fluxmodes/run_config.hpp"
#include "fluxmodes/sampling.hpp"
#include "fluxmodes/verification.hpp"
#include "fluxmodes/zero_modes.hpp"

namespace {

using namespace fluxmodes;

int cmd_dim(const std::string& config_path) {
    const RunConfig cfg = load_run_config(config_path);
    const long long degree = cfg.fluxes.total_quanta();
    const long long analytic = degree >= 0 ? degree + 1 : 0;
    int verified = 0;
    const std::vector<ZeroMode> modes = zero_mode_basis(cfg.fluxes);
    if (!modes.empty()) {
        std::mt19937_64 rng(cfg.seed);
        const std::size_t count = std::max<std::size_t>(20, 2 * modes.size() + 2);
        const std::vector<Complex> samples = sample_points(cfg.fluxes, count, rng);
        verified = dimension_by_rank(modes, samples, cfg.tolerances.rank_rel);
    }
    std::cout << "analytic=" << analytic << " verified=" << verified << "\n";
    return analytic == verified ? 0 : 1;
}

int cmd_verify(const std::string& config_path, const std::string& out_path) {
    const RunConfig cfg = load_run_config(config_path);
    const VerificationReport report = run_verification(cfg);
    std::ofstream out(out_path);
    if (!out) {
        throw ConfigError("verify: cannot write '" + out_path + "'");
    }
    out << to_json_text(report);

    int passed = 0;
    for (const CheckRecord& check : report.checks) {
        if (check.pass) {
            ++passed;
        } else {
            std::cout << "FAIL " << check.name << ": observed=" << check.observed
                      << " expected=" << check.expected << " tolerance=" << check.tolerance
                      << "\n";
        }
    }
    std::cout << "degree=" << report.degree << " modes=" << report.mode_count << " checks="
              << passed << "/" << report.checks.size() << " -> "
              << (report.overall_pass ? "pass" : "fail") << "\n";
    return report.overall_pass ? 0 : 1;
}

int cmd_sample(const std::string& config_path, const std::string& field,
               const std::string& out_path) {
    const RunConfig cfg = load_run_config(config_path);
    std::ofstream out(out_path);
    if (!out) {
        throw ConfigError("sample: cannot write '" + out_path + "'");
    }
    write_field_grid(out, cfg, field);
    return 0;
}

int cmd_contour(const std::string& config_path, double cx, double cy, double radius) {
    const RunConfig cfg = load_run_config(config_path);
    if (!(radius > 0.0)) {
        throw ConfigError("contour: radius must be positive");
    }
    const LoopPath loop = LoopPath::circle(Complex(cx, cy), radius, 4096);
    long long enclosed = 0;
    for (const Flux& f : cfg.fluxes.fluxes()) {
        if (loop.encloses(f.position)) {
            enclosed += f.quanta;
        }
    }
    const Complex observed = contour_flux(cfg.fluxes, loop);
    const Complex expected(0.0, 2.0 * std::numbers::pi * static_cast<double>(enclosed));
    std::printf("observed=%.6f%+.6fi expected=%.6f%+.6fi\n", observed.real(), observed.imag(),
                expected.real(), expected.imag());
    return std::abs(observed - expected) <= cfg.tolerances.contour ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero modes of the Dirac operator in delta-function magnetic fields"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string field;
    double cx = 0.0;
    double cy = 0.0;
    double radius = 1.0;

    CLI::App* dim = app.add_subcommand("dim", "Analytic vs rank-verified solution-space dimension");
    dim->add_option("-c,--config", config_path, "JSON config path")->required();

    CLI::App* verify =
        app.add_subcommand("verify", "Run the full check battery and write a JSON report");
    verify->add_option("-c,--config", config_path, "JSON config path")->required();
    verify->add_option("-o,--output", out_path, "report output path")->required();

    CLI::App* sample = app.add_subcommand("sample", "Sample a field over the grid as CSV");
    sample->add_option("-c,--config", config_path, "JSON config path")->required();
    sample->add_option("--field", field, "phi, F, chi, or u<k>")->required();
    sample->add_option("-o,--output", out_path, "CSV output path")->required();

    CLI::App* contour =
        app.add_subcommand("contour", "Contour-integrate the gauge field along a circle");
    contour->add_option("-c,--config", config_path, "JSON config path")->required();
    contour->add_option("--cx", cx, "circle center x")->required();
    contour->add_option("--cy", cy, "circle center y")->required();
    contour->add_option("--r", radius, "circle radius")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dim->parsed()) {
            return cmd_dim(config_path);
        }
        if (verify->parsed()) {
            return cmd_verify(config_path, out_path);
        }
        if (sample->parsed()) {
            return cmd_sample(config_path, field, out_path);
        }
        return cmd_contour(config_path, cx, cy, radius);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
