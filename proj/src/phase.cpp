#include "fluxmodes/phase.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fluxmodes/finite_diff.hpp"
#include "fluxmodes/sampling.hpp"

namespace fluxmodes {

namespace {

constexpr double kImageTolerance = 1e-10;

bool same_config(const FluxConfig& a, const FluxConfig& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.fluxes()[i].position != b.fluxes()[i].position ||
            a.fluxes()[i].quanta != b.fluxes()[i].quanta) {
            return false;
        }
    }
    return true;
}

Complex mode_value(const ZeroMode& m, Complex z, const char* what) {
    const std::optional<Complex> v = m.evaluate(z);
    if (!v) {
        throw std::domain_error(what);
    }
    return *v;
}

void require_clear_of_fluxes(const FluxConfig& cfg, const LoopPath& loop) {
    for (const Flux& f : cfg.fluxes()) {
        if (loop.distance_to(f.position) <= 1e-12) {
            throw std::runtime_error("loop too close to flux");
        }
    }
}

} // namespace

Complex PhaseField::chi(Complex z) const {
    double theta = 0.0;
    for (const Flux& f : config_.fluxes()) {
        const Complex d = z - f.position;
        if (d == 0.0) {
            throw std::domain_error("phase undefined at flux");
        }
        theta -= f.quanta * std::arg(d);
    }
    return std::polar(1.0, theta);
}

PhaseContinuation continue_phase(const std::function<Complex(Complex)>& field,
                                 const LoopPath& loop, int max_refinements) {
    LoopPath current = loop;
    for (int round = 0;; ++round) {
        const std::vector<Complex>& nodes = current.nodes();
        const std::size_t n = nodes.size();
        std::vector<Complex> values(n);
        for (std::size_t j = 0; j < n; ++j) {
            values[j] = field(nodes[j]);
            if (values[j] == 0.0) {
                throw std::invalid_argument("continue_phase: field vanishes on the loop");
            }
        }
        double total = 0.0;
        bool resolved = true;
        for (std::size_t j = 0; j < n; ++j) {
            // Nearest-branch step from node j to its successor (closing the
            // loop at the end).
            const Complex prev = values[j];
            const Complex next = values[(j + 1) % n];
            const double step = std::arg(next * std::conj(prev));
            if (std::abs(step) >= std::numbers::pi / 2.0) {
                resolved = false;
                break;
            }
            total += step;
        }
        if (resolved) {
            const double closure = std::abs(values[0] - values[0] * std::polar(1.0, total));
            return PhaseContinuation{total, closure};
        }
        if (round >= max_refinements) {
            throw std::runtime_error("loop too close to flux");
        }
        current = current.refined();
    }
}

double winding(const PhaseField& p, const LoopPath& loop) {
    require_clear_of_fluxes(p.config(), loop);
    return continue_phase([&p](Complex z) { return p.chi(z); }, loop).total_change;
}

double single_valued_check(const PhaseField& p, const LoopPath& loop) {
    require_clear_of_fluxes(p.config(), loop);
    return continue_phase([&p](Complex z) { return p.chi(z); }, loop).closure_error;
}

ImageCheck meromorphic_image_checked(const PhaseField& p, const ZeroMode& m,
                                     unsigned long long seed, int samples) {
    int exponent = 0;
    if (m.kind() != SpinorComponent::Upper || !m.is_monomial(&exponent)) {
        throw std::invalid_argument("meromorphic_image: canonical upper mode required");
    }
    if (!same_config(p.config(), m.config())) {
        throw std::invalid_argument("meromorphic_image: mode and phase configs differ");
    }
    if (samples < 1) {
        throw std::invalid_argument("meromorphic_image: sample count must be positive");
    }

    std::vector<Factor> factors;
    if (exponent != 0) {
        factors.push_back(Factor{Complex(0.0), exponent});
    }
    for (const Flux& f : p.config().fluxes()) {
        factors.push_back(Factor{f.position, -f.quanta});
    }
    FactoredRational image(1.0, std::move(factors));

    std::mt19937_64 rng(seed);
    const std::vector<Complex> points =
        sample_points(p.config(), static_cast<std::size_t>(samples), rng);
    double worst = 0.0;
    for (const Complex& z : points) {
        const std::optional<Complex> expected = image.evaluate(z);
        if (!expected) {
            throw std::runtime_error("phase transform identity violated");
        }
        const Complex product =
            p.chi(z) * mode_value(m, z, "phase transform identity violated");
        const double err = std::abs(product - *expected) / (1.0 + std::abs(*expected));
        if (err > worst) {
            worst = err;
        }
    }
    return ImageCheck{std::move(image), worst};
}

FactoredRational meromorphic_image(const PhaseField& p, const ZeroMode& m) {
    ImageCheck check = meromorphic_image_checked(p, m);
    if (check.max_relative_error > kImageTolerance) {
        throw std::runtime_error("phase transform identity violated");
    }
    return std::move(check.image);
}

double cr_residual(const PhaseField& p, const ZeroMode& m, Complex z, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("cr_residual: step must be positive");
    }
    if (!(p.config().nearest_flux_distance(z) > 10.0 * h)) {
        throw std::domain_error("residual undefined near flux");
    }
    const auto product = [&p, &m](Complex w) {
        return p.chi(w) * mode_value(m, w, "residual undefined near flux");
    };
    return std::abs(wirtinger_dzbar(product, z, h));
}

double chi_phi_identity(const PhaseField& p, Complex z, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("chi_phi_identity: step must be positive");
    }
    if (!(p.config().nearest_flux_distance(z) > 10.0 * h)) {
        throw std::domain_error("residual undefined near flux");
    }
    const auto conj_chi = [&p](Complex w) { return std::conj(p.chi(w)); };
    const Complex lhs = p.chi(z) * wirtinger_dzbar(conj_chi, z, h);
    return std::abs(lhs + p.config().dphi_dzbar(z));
}

} // namespace fluxmodes
