// Acceptance battery: one line per criterion, [PASS]/[FAIL] plus timing.
// Exit status 0 only when every criterion passes. argv[1] must point at the
// command-line binary for the end-to-end criterion.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fluxmodes/divisor.hpp"
#include "fluxmodes/finite_diff.hpp"
#include "fluxmodes/gauge.hpp"
#include "fluxmodes/phase.hpp"
#include "fluxmodes/rational.hpp"
#include "fluxmodes/sampling.hpp"
#include "fluxmodes/sphere.hpp"
#include "fluxmodes/verification.hpp"
#include "fluxmodes/zero_modes.hpp"
#include "test_support.hpp"

namespace {

using namespace fluxmodes;
using testsupport::growth_direction;
using testsupport::growth_radii;
using testsupport::random_config;
using testsupport::random_disk_point;

constexpr double kTwoPi = 6.28318530717958647692;
const Complex kI(0.0, 1.0);

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Shared fixed configs exercised by the analytic criteria; the first is the
// canonical single unit flux.
std::vector<FluxConfig> study_configs() {
    std::vector<FluxConfig> configs;
    configs.push_back(FluxConfig({{0.0, 1}}));
    configs.push_back(FluxConfig({{kI, 1}, {-kI, 1}}));
    configs.push_back(FluxConfig({{Complex(0.6), 1}, {Complex(-0.5, 0.3), 2},
                                  {Complex(0.0, -0.6), 3}}));
    std::mt19937_64 rng(0xACCE5501u);
    for (int trial = 0; trial < 3; ++trial) {
        configs.push_back(random_config(rng));
    }
    return configs;
}

// Isolating circle around one flux: stays clear of every other flux.
LoopPath isolating_loop(const FluxConfig& cfg, std::size_t index, int samples = 256) {
    const Complex center = cfg.fluxes()[index].position;
    double nearest = 2.0;
    for (std::size_t j = 0; j < cfg.size(); ++j) {
        if (j == index) continue;
        nearest = std::min(nearest, std::abs(cfg.fluxes()[j].position - center));
    }
    return LoopPath::circle(center, 0.45 * nearest, samples);
}

LoopPath enclosing_loop(const FluxConfig& cfg, int samples = 256) {
    const Complex center = cfg.centroid();
    double reach = 0.0;
    for (const Flux& f : cfg.fluxes()) {
        reach = std::max(reach, std::abs(f.position - center));
    }
    return LoopPath::circle(center, reach + 1.5, samples);
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// 1. dim L(D) = deg(D) + 1, recovered as numerical rank. Budget: 5 s.
Outcome criterion_dimension() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xD1Au);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const FluxConfig cfg = random_config(rng);
        const auto modes = zero_mode_basis(cfg);
        const auto samples =
            sample_points(cfg, std::max<std::size_t>(20, 2 * modes.size() + 2), rng);
        const int expected = static_cast<int>(cfg.total_quanta()) + 1;
        if (dimension_by_rank(modes, samples) != expected) {
            return {false, "rank mismatch on config " + std::to_string(trial)};
        }
        ++checked;
    }
    if (seconds_since(start) >= 5.0) {
        return {false, "over the 5 s budget"};
    }
    return {true, std::to_string(checked) + " random configs exact"};
}

// ---------------------------------------------------------------------------
// 2. Contour integrals of F count the enclosed quanta times 2*pi*i at 4096
// trapezoid nodes with clearance >= 0.1 * radius. Budget: 1 s.
Outcome criterion_contour() {
    const auto start = std::chrono::steady_clock::now();
    int checked = 0;
    double worst = 0.0;
    for (const FluxConfig& cfg : study_configs()) {
        // Pair each loop with its radius so the clearance precondition is
        // checked explicitly.
        std::vector<std::pair<LoopPath, double>> loops;
        for (std::size_t i = 0; i < cfg.size(); ++i) {
            const LoopPath loop = isolating_loop(cfg, i, 4096);
            loops.emplace_back(loop, loop.distance_to(cfg.fluxes()[i].position));
        }
        const LoopPath big = enclosing_loop(cfg, 4096);
        loops.emplace_back(big, std::abs(big.nodes()[0] - cfg.centroid()));
        for (const auto& [loop, radius] : loops) {
            // Enclosure and clearance established independently of the
            // integral itself.
            long long enclosed = 0;
            double clearance = std::numeric_limits<double>::infinity();
            for (const Flux& f : cfg.fluxes()) {
                if (loop.encloses(f.position)) enclosed += f.quanta;
                clearance = std::min(clearance, loop.distance_to(f.position));
            }
            if (clearance < 0.1 * radius) {
                return {false, "clearance precondition violated by a test loop"};
            }
            const Complex expected(0.0, kTwoPi * static_cast<double>(enclosed));
            const double err = std::abs(contour_flux(cfg, loop) - expected);
            worst = std::max(worst, err);
            if (err > 1e-6) {
                return {false, "contour error " + std::to_string(err)};
            }
            ++checked;
        }
    }
    if (seconds_since(start) >= 1.0) {
        return {false, "over the 1 s budget"};
    }
    std::ostringstream detail;
    detail << checked << " loops, worst error " << worst;
    return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 3. Monodromy -2*pi*n_k, additivity, single-valuedness, and the
// half-quantum negative control.
Outcome criterion_monodromy() {
    for (const FluxConfig& cfg : study_configs()) {
        const PhaseField p(cfg);
        double small_sum = 0.0;
        for (std::size_t i = 0; i < cfg.size(); ++i) {
            const LoopPath loop = isolating_loop(cfg, i);
            const double w = winding(p, loop);
            small_sum += w;
            const double expected = -kTwoPi * cfg.fluxes()[i].quanta;
            if (std::abs(w - expected) > 1e-6) {
                return {false, "per-flux winding off by " + std::to_string(w - expected)};
            }
            if (single_valued_check(p, loop) > 1e-9) {
                return {false, "single-valuedness defect on a per-flux loop"};
            }
        }
        const LoopPath big = enclosing_loop(cfg);
        const double big_winding = winding(p, big);
        if (std::abs(big_winding - (-kTwoPi * static_cast<double>(cfg.total_quanta()))) > 1e-6) {
            return {false, "enclosing winding off"};
        }
        if (!cfg.empty() && std::abs(big_winding - small_sum) > 1e-6) {
            return {false, "winding not additive"};
        }
        if (single_valued_check(p, big) > 1e-9) {
            return {false, "single-valuedness defect on the enclosing loop"};
        }
    }

    // Negative control: the n/2 = 0.5 fractional power. Its branch jump
    // defeats value-based continuation outright, so the defect is evaluated
    // arithmetically from the integer field's continued phase.
    bool threw = false;
    try {
        continue_phase([](Complex z) { return std::polar(1.0, -0.5 * std::arg(z)); },
                       LoopPath::circle(0.0, 1.0));
    } catch (const std::runtime_error&) {
        threw = true;
    }
    if (!threw) {
        return {false, "half-quantum continuation unexpectedly resolved"};
    }
    const double integer_winding =
        winding(PhaseField(FluxConfig({{0.0, 1}})), LoopPath::circle(0.0, 1.0));
    const double defect = std::abs(1.0 - std::polar(1.0, 0.5 * integer_winding));
    if (std::abs(defect - 2.0) > 1e-6) {
        return {false, "half-quantum defect " + std::to_string(defect)};
    }
    return {true, "windings, additivity, closure, and half-quantum control"};
}

// Shared probe set for the convergence criteria: 16 seeded points per mode.
struct RatioStudy {
    int informative = 0;
    int floored = 0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    bool pass = true;

    void feed(const RatioCheck& check) {
        if (check.at_floor) {
            ++floored;
            return;
        }
        ++informative;
        lo = std::min(lo, check.ratio);
        hi = std::max(hi, check.ratio);
        if (check.ratio < 2.5 || check.ratio > 6.0) pass = false;
    }

    std::string band() const {
        std::ostringstream out;
        out << informative << " informative ratios in [" << lo << ", " << hi << "], "
            << floored << " at rounding floor";
        return out.str();
    }
};

// ---------------------------------------------------------------------------
// 4. dirac_residual converges at second order; corrupted modes do not pass.
Outcome criterion_dirac() {
    const double h = 1e-4;
    RatioStudy study;
    for (const FluxConfig& cfg : study_configs()) {
        std::mt19937_64 rng(0xD17AC0u);
        for (const ZeroMode& mode : zero_mode_basis(cfg)) {
            for (const Complex z : sample_points(cfg, 16, rng)) {
                const double scale = 1.0 + std::abs(mode.evaluate(z).value());
                study.feed(residual_ratio(
                    [&](double step) { return dirac_residual(mode, z, step); }, h, scale));
            }
        }
    }
    if (!study.pass || study.informative == 0) {
        return {false, "ratio out of [2.5, 6]: " + study.band()};
    }

    // Negative control on the single unit flux, where |u| stays order one
    // on the sampling annulus: u * (1 + 0.1 zbar) leaves residual 0.1|u|.
    const FluxConfig cfg({{0.0, 1}});
    const ZeroMode u = zero_mode_basis(cfg)[0];
    std::mt19937_64 rng(0xC0117u);
    double min_residual = std::numeric_limits<double>::infinity();
    for (const Complex z : sample_points(cfg, 16, rng)) {
        auto corrupted = [&](Complex w) {
            return u.evaluate(w).value() * (1.0 + 0.1 * std::conj(w));
        };
        const Complex dz = wirtinger_dzbar(corrupted, z, h);
        min_residual = std::min(min_residual, std::abs(dz + cfg.dphi_dzbar(z) * corrupted(z)));
    }
    if (min_residual < 1e-3) {
        return {false, "corrupted-mode residual " + std::to_string(min_residual)};
    }
    return {true, study.band() + "; corrupted-mode floor " + std::to_string(min_residual)};
}

// ---------------------------------------------------------------------------
// 5. The transformed field is anti-analytic-free: cr_residual and the
// chi-Phi derivative identity converge at second order at the same points.
Outcome criterion_cauchy_riemann() {
    const double h = 1e-4;
    RatioStudy cr_study;
    RatioStudy identity_study;
    for (const FluxConfig& cfg : study_configs()) {
        const PhaseField p(cfg);
        std::mt19937_64 rng(0xD17AC0u); // same seed: same points as criterion 4
        for (const ZeroMode& mode : zero_mode_basis(cfg)) {
            for (const Complex z : sample_points(cfg, 16, rng)) {
                const double scale = 1.0 + std::abs(mode.evaluate(z).value());
                cr_study.feed(residual_ratio(
                    [&](double step) { return cr_residual(p, mode, z, step); }, h, scale));
            }
        }
        std::mt19937_64 rng2(0x1DE47u);
        for (const Complex z : sample_points(cfg, 16, rng2)) {
            identity_study.feed(residual_ratio(
                [&](double step) { return chi_phi_identity(p, z, step); }, h, 1.0));
        }
    }
    if (!cr_study.pass || cr_study.informative == 0) {
        return {false, "cr ratios out of band: " + cr_study.band()};
    }
    if (!identity_study.pass || identity_study.informative == 0) {
        return {false, "chi-Phi ratios out of band: " + identity_study.band()};
    }
    return {true, "cr " + cr_study.band() + "; identity " + identity_study.band()};
}

// ---------------------------------------------------------------------------
// 6. chi * u lands exactly on the L(D) basis rational, pointwise and as a
// divisor-membership statement.
Outcome criterion_image() {
    double worst = 0.0;
    int modes_checked = 0;
    for (const FluxConfig& cfg : study_configs()) {
        const PhaseField p(cfg);
        const Divisor d = cfg.divisor();
        for (const ZeroMode& mode : zero_mode_basis(cfg)) {
            const ImageCheck check = meromorphic_image_checked(p, mode, 0xBEEFu, 32);
            worst = std::max(worst, check.max_relative_error);
            if (check.max_relative_error > 1e-10) {
                return {false, "pointwise identity error " +
                                   std::to_string(check.max_relative_error)};
            }
            if (!l_membership(check.image, d)) {
                return {false, "image escaped L(D)"};
            }
            ++modes_checked;
        }
    }
    std::ostringstream detail;
    detail << modes_checked << " modes, worst relative error " << worst;
    return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 7. Boundedness screening at infinity by log-log slope.
Outcome criterion_growth() {
    const auto radii = growth_radii();
    for (const FluxConfig& cfg : study_configs()) {
        const Complex dir = growth_direction(cfg);
        const double total = static_cast<double>(cfg.total_quanta());

        // v with g = 1 grows like |z|^{+total}: rejected.
        const ZeroMode v(cfg, {1.0}, SpinorComponent::Lower);
        const double v_slope = growth_exponent(v, dir, radii);
        if (std::abs(v_slope - total) > 0.05) {
            return {false, "v-mode slope " + std::to_string(v_slope)};
        }

        // f = z^{deg+1} overshoots by one power: slope +1, rejected.
        std::vector<Complex> coeffs(static_cast<std::size_t>(cfg.total_quanta()) + 2, 0.0);
        coeffs.back() = 1.0;
        const ZeroMode overshoot(cfg, coeffs, SpinorComponent::Upper);
        const double overshoot_slope = growth_exponent(overshoot, dir, radii);
        if (std::abs(overshoot_slope - 1.0) > 0.05) {
            return {false, "overshoot slope " + std::to_string(overshoot_slope)};
        }

        // Every accepted basis mode stays bounded: slope <= 0 + 0.05.
        for (const ZeroMode& mode : zero_mode_basis(cfg)) {
            if (growth_exponent(mode, dir, radii) > 0.05) {
                return {false, "an accepted mode grows at infinity"};
            }
        }
    }
    return {true, "rejected modes slope +deg/+1, accepted modes bounded"};
}

// ---------------------------------------------------------------------------
// 8. Exact algebra and geometry, 1000 randomized cases. Budget: 1 s.
Outcome criterion_exact_algebra() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xA16EB7Au);

    std::vector<ExtendedPoint> pool;
    pool.push_back(ExtendedPoint::infinity());
    for (int k = 0; k < 7; ++k) {
        pool.push_back(ExtendedPoint(0.25 * k, -0.5 * (k % 3)));
    }
    auto random_divisor = [&]() {
        Divisor d;
        const int terms = static_cast<int>(uniform01(rng) * 5.0);
        for (int t = 0; t < terms; ++t) {
            const auto& p = pool[static_cast<std::size_t>(uniform01(rng) *
                                                          static_cast<double>(pool.size()))];
            d.add_term(p, static_cast<int>(uniform01(rng) * 11.0) - 5);
        }
        return d;
    };
    auto random_rational = [&]() {
        std::vector<Factor> factors;
        const int count = static_cast<int>(uniform01(rng) * 4.0);
        for (int t = 0; t < count; ++t) {
            const int slot = static_cast<int>(uniform01(rng) * 4.0);
            const int mult = static_cast<int>(uniform01(rng) * 7.0) - 3;
            if (mult != 0) factors.push_back({Complex(0.5 * slot, slot % 2 ? -0.5 : 0.25), mult});
        }
        return FactoredRational(Complex(1.0 + uniform01(rng), uniform01(rng) - 0.5),
                                std::move(factors));
    };

    for (int trial = 0; trial < 1000; ++trial) {
        const Divisor a = random_divisor();
        const Divisor b = random_divisor();
        const Divisor c = random_divisor();
        if (!(a + b == b + a) || !((a + b) + c == a + (b + c)) ||
            !(a + a.negated()).empty() || (a + b).degree() != a.degree() + b.degree()) {
            return {false, "divisor group law failed on trial " + std::to_string(trial)};
        }

        const FactoredRational f = random_rational();
        const FactoredRational g = random_rational();
        if (!((f * g).divisor() == f.divisor() + g.divisor()) || f.divisor().degree() != 0) {
            return {false, "div homomorphism failed on trial " + std::to_string(trial)};
        }

        const Complex z = 10.0 * random_disk_point(rng);
        const ExtendedPoint back = stereographic_project(stereographic_unproject(ExtendedPoint(z)));
        if (back.is_infinity() || std::abs(back.value() - z) > 1e-12 * (1.0 + std::abs(z))) {
            return {false, "projection round trip drifted"};
        }
    }
    if (seconds_since(start) >= 1.0) {
        return {false, "over the 1 s budget"};
    }
    return {true, "1000 randomized cases exact"};
}

// ---------------------------------------------------------------------------
// 9. End-to-end through the command line.
int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Outcome criterion_cli(const std::string& cli) {
    if (cli.empty()) {
        return {false, "no CLI path on the command line"};
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::path("acceptance_scratch");
    fs::remove_all(dir);
    fs::create_directories(dir);

    const fs::path good_cfg = dir / "single.json";
    std::ofstream(good_cfg) << R"({"fluxes": [{"x": 0, "y": 0, "n": 1}]})" << "\n";
    const fs::path good_report = dir / "report.json";
    const int good_exit =
        run_command("\"" + cli + "\" verify -c " + good_cfg.string() + " -o " +
                    good_report.string() + " > /dev/null 2>&1");
    if (good_exit != 0) {
        return {false, "verify on the single-flux config exited " + std::to_string(good_exit)};
    }
    const std::string report = read_file(good_report);
    for (const char* family :
         {"contour_flux/", "winding/", "single_valued/", "dirac_residual_ratio/",
          "cr_residual_ratio/", "chi_phi_identity", "meromorphic_image/", "membership/",
          "dimension_rank"}) {
        if (report.find(family) == std::string::npos) {
            return {false, std::string("report lacks the ") + family + " checks"};
        }
    }

    // A fabricated wrong tolerance must fail, twice, with identical reports.
    const fs::path bad_cfg = dir / "strict.json";
    std::ofstream(bad_cfg)
        << R"({"fluxes": [{"x": 0, "y": 0, "n": 1}], "tolerances": {"winding": 1e-15}})"
        << "\n";
    const fs::path bad_report1 = dir / "strict1.json";
    const fs::path bad_report2 = dir / "strict2.json";
    const int bad_exit1 = run_command("\"" + cli + "\" verify -c " + bad_cfg.string() + " -o " +
                                      bad_report1.string() + " > /dev/null 2>&1");
    const int bad_exit2 = run_command("\"" + cli + "\" verify -c " + bad_cfg.string() + " -o " +
                                      bad_report2.string() + " > /dev/null 2>&1");
    if (bad_exit1 != 1 || bad_exit2 != 1) {
        return {false, "wrong-tolerance config exited " + std::to_string(bad_exit1) + "/" +
                           std::to_string(bad_exit2) + ", wanted 1/1"};
    }
    if (read_file(bad_report1) != read_file(bad_report2)) {
        return {false, "failure reports differ between runs"};
    }
    fs::remove_all(dir);
    return {true, "exit codes 0/1/1, all check families present, reports byte-identical"};
}

bool report_line(int index, const std::string& label, const std::function<Outcome()>& run) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = run();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] %d. %s — %s (%lld ms)\n", outcome.pass ? "PASS" : "FAIL", index,
                label.c_str(), outcome.detail.c_str(), static_cast<long long>(ms));
    return outcome.pass;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    bool all = true;

    all &= report_line(1, "dimension of L(D) equals deg(D)+1 by rank", criterion_dimension);
    all &= report_line(2, "contour integrals quantize enclosed flux", criterion_contour);
    all &= report_line(3, "monodromy, additivity, and single-valuedness", criterion_monodromy);
    all &= report_line(4, "zero modes solve the field equation at second order",
                       criterion_dirac);
    all &= report_line(5, "transformed modes satisfy Cauchy-Riemann", criterion_cauchy_riemann);
    all &= report_line(6, "phase transform lands in L(D)", criterion_image);
    all &= report_line(7, "growth screening at infinity", criterion_growth);
    all &= report_line(8, "exact algebra under randomized stress", criterion_exact_algebra);
    all &= report_line(9, "CLI verify end-to-end", [&] { return criterion_cli(cli); });

    if (!all) {
        std::printf("acceptance: FAILURES PRESENT\n");
        return 1;
    }
    std::printf("acceptance: all criteria pass\n");
    return 0;
}
