#include "fluxmodes/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fluxmodes {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOnPathTolerance = 1e-12;

[[noreturn]] void throw_at_flux(const char* what) {
    throw std::domain_error(what);
}

// Distance from p to the segment [a, b].
double segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

} // namespace

FluxConfig::FluxConfig(std::vector<Flux> fluxes) : fluxes_(std::move(fluxes)) {
    std::sort(fluxes_.begin(), fluxes_.end(), [](const Flux& a, const Flux& b) {
        return ExtendedPointLess{}(ExtendedPoint(a.position), ExtendedPoint(b.position));
    });
    std::vector<Flux> merged;
    merged.reserve(fluxes_.size());
    for (const Flux& f : fluxes_) {
        if (!merged.empty() && ExtendedPoint(merged.back().position) == ExtendedPoint(f.position)) {
            const long long sum = static_cast<long long>(merged.back().quanta) + f.quanta;
            if (sum > std::numeric_limits<int>::max() || sum < std::numeric_limits<int>::min()) {
                throw std::overflow_error("FluxConfig: quanta overflow while merging positions");
            }
            merged.back().quanta = static_cast<int>(sum);
        } else {
            merged.push_back(f);
        }
    }
    std::erase_if(merged, [](const Flux& f) { return f.quanta == 0; });
    fluxes_ = std::move(merged);
}

long long FluxConfig::total_quanta() const {
    long long sum = 0;
    for (const Flux& f : fluxes_) sum += f.quanta;
    return sum;
}

bool FluxConfig::is_flux_position(Complex z) const {
    for (const Flux& f : fluxes_) {
        if (z == f.position) return true;
    }
    return false;
}

double FluxConfig::nearest_flux_distance(Complex z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Flux& f : fluxes_) {
        best = std::min(best, std::abs(z - f.position));
    }
    return best;
}

Complex FluxConfig::centroid() const {
    if (fluxes_.empty()) return Complex(0.0);
    Complex sum = 0.0;
    for (const Flux& f : fluxes_) sum += f.position;
    return sum / static_cast<double>(fluxes_.size());
}

Divisor FluxConfig::divisor() const {
    Divisor d;
    for (const Flux& f : fluxes_) {
        d.add_term(ExtendedPoint(f.position), f.quanta);
    }
    return d;
}

Complex FluxConfig::field(Complex z) const {
    Complex sum = 0.0;
    for (const Flux& f : fluxes_) {
        const Complex dz = z - f.position;
        if (dz == Complex(0.0)) throw_at_flux("FluxConfig::field: evaluation at flux point");
        sum += static_cast<double>(f.quanta) / dz;
    }
    return sum;
}

FluxConfig::VectorPotential FluxConfig::vector_potential(double x, double y) const {
    const Complex f = field(Complex(x, y));
    return VectorPotential{f.imag(), f.real()};
}

double FluxConfig::phi(Complex z) const {
    double sum = 0.0;
    for (const Flux& f : fluxes_) {
        const double r = std::abs(z - f.position);
        if (r == 0.0) throw_at_flux("FluxConfig::phi: evaluation at flux point");
        sum += f.quanta * std::log(r);
    }
    return sum;
}

Complex FluxConfig::dphi_dzbar(Complex z) const {
    Complex sum = 0.0;
    for (const Flux& f : fluxes_) {
        const Complex dz = std::conj(z - f.position);
        if (dz == Complex(0.0)) throw_at_flux("FluxConfig::dphi_dzbar: evaluation at flux point");
        sum += static_cast<double>(f.quanta) / dz;
    }
    return 0.5 * sum;
}

LoopPath LoopPath::circle(Complex center, double radius, int samples) {
    if (!(radius > 0.0)) throw std::invalid_argument("LoopPath: circle radius must be positive");
    if (samples < 16) throw std::invalid_argument("LoopPath: at least 16 samples required");
    LoopPath loop;
    loop.kind_ = Kind::Circle;
    loop.center_ = center;
    loop.radius_ = radius;
    loop.samples_ = samples;
    loop.nodes_.reserve(samples);
    for (int j = 0; j < samples; ++j) {
        const double theta = kTwoPi * j / samples;
        loop.nodes_.push_back(center + std::polar(radius, theta));
    }
    return loop;
}

LoopPath LoopPath::polygon(std::vector<Complex> vertices, int samples_per_edge) {
    if (vertices.size() < 3) throw std::invalid_argument("LoopPath: polygon needs >= 3 vertices");
    if (samples_per_edge < 16) throw std::invalid_argument("LoopPath: at least 16 samples per edge");
    LoopPath loop;
    loop.kind_ = Kind::Polygon;
    loop.vertices_ = std::move(vertices);
    loop.samples_per_edge_ = samples_per_edge;
    const std::size_t n = loop.vertices_.size();
    loop.nodes_.reserve(n * samples_per_edge);
    for (std::size_t v = 0; v < n; ++v) {
        const Complex a = loop.vertices_[v];
        const Complex b = loop.vertices_[(v + 1) % n];
        for (int k = 0; k < samples_per_edge; ++k) {
            loop.nodes_.push_back(a + (b - a) * (static_cast<double>(k) / samples_per_edge));
        }
    }
    return loop;
}

LoopPath LoopPath::refined() const {
    if (kind_ == Kind::Circle) return circle(center_, radius_, samples_ * 2);
    return polygon(vertices_, samples_per_edge_ * 2);
}

bool LoopPath::encloses(Complex p) const {
    if (kind_ == Kind::Circle) return std::abs(p - center_) < radius_;
    // Winding-number test: accumulate the signed angle swept by the vertex
    // directions as seen from p.
    double angle = 0.0;
    const std::size_t n = vertices_.size();
    for (std::size_t v = 0; v < n; ++v) {
        const Complex a = vertices_[v] - p;
        const Complex b = vertices_[(v + 1) % n] - p;
        angle += std::arg(b / a);
    }
    return std::lround(angle / kTwoPi) != 0;
}

double LoopPath::distance_to(Complex p) const {
    if (kind_ == Kind::Circle) return std::abs(std::abs(p - center_) - radius_);
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = vertices_.size();
    for (std::size_t v = 0; v < n; ++v) {
        best = std::min(best, segment_distance(p, vertices_[v], vertices_[(v + 1) % n]));
    }
    return best;
}

double LoopPath::two_pi() {
    return kTwoPi;
}

Complex contour_flux(const FluxConfig& cfg, const LoopPath& loop) {
    const std::vector<Complex>& nodes = loop.nodes();
    for (const Flux& f : cfg.fluxes()) {
        if (loop.distance_to(f.position) <= kOnPathTolerance) {
            throw std::domain_error("contour_flux: flux on contour");
        }
        // Sample chords can sit off the ideal circle; guard those too.
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const Complex a = nodes[j];
            const Complex b = nodes[(j + 1) % nodes.size()];
            if (segment_distance(f.position, a, b) <= kOnPathTolerance) {
                throw std::domain_error("contour_flux: flux on contour");
            }
        }
    }
    return loop.integrate([&cfg](Complex z) { return cfg.field(z); });
}

} // namespace fluxmodes
