#include "fluxmodes/zero_modes.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "fluxmodes/finite_diff.hpp"

namespace fluxmodes {

namespace {

// Horner evaluation of the stored coefficient list (constant term first).
Complex poly_eval(const std::vector<Complex>& coeffs, Complex w) {
    Complex acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        acc = acc * w + coeffs[j];
    }
    return acc;
}

Complex mode_value_or_throw(const ZeroMode& mode, Complex z, const char* what) {
    const std::optional<Complex> value = mode.evaluate(z);
    if (!value) {
        throw std::domain_error(what);
    }
    return *value;
}

} // namespace

ZeroMode::ZeroMode(FluxConfig config, std::vector<Complex> poly, SpinorComponent kind)
    : config_(std::move(config)), poly_(std::move(poly)), kind_(kind) {
    // Trailing zero coefficients carry no information; drop them so the
    // degree is readable from the list length.
    while (!poly_.empty() && poly_.back() == 0.0) {
        poly_.pop_back();
    }
}

bool ZeroMode::is_monomial(int* exponent) const {
    if (poly_.empty() || poly_.back() != Complex(1.0)) {
        return false;
    }
    for (std::size_t j = 0; j + 1 < poly_.size(); ++j) {
        if (poly_[j] != 0.0) {
            return false;
        }
    }
    if (exponent) {
        *exponent = static_cast<int>(poly_.size()) - 1;
    }
    return true;
}

std::optional<Complex> ZeroMode::evaluate(Complex z) const {
    // Weight exponent per flux: -n_i for the upper component, +n_i for the
    // lower. A probe landing exactly on a flux either diverges (negative
    // exponent: the divergence marker) or kills the value (positive
    // exponent: |0|^e = 0).
    const int sign = kind_ == SpinorComponent::Upper ? -1 : +1;
    double log_weight = 0.0;
    long long exponent_at_z = 0;
    bool at_flux = false;
    for (const Flux& f : config_.fluxes()) {
        const double r = std::abs(z - f.position);
        const int e = sign * f.quanta;
        if (r == 0.0) {
            at_flux = true;
            exponent_at_z += e;
        } else {
            log_weight += e * std::log(r);
        }
    }
    if (at_flux) {
        if (exponent_at_z < 0) {
            return std::nullopt;
        }
        return Complex(0.0);
    }
    const Complex factor = kind_ == SpinorComponent::Upper ? poly_eval(poly_, z)
                                                           : poly_eval(poly_, std::conj(z));
    return factor * std::exp(log_weight);
}

std::vector<ZeroMode> zero_mode_basis(const FluxConfig& cfg) {
    const long long total = cfg.total_quanta();
    std::vector<ZeroMode> modes;
    if (total < 0) {
        return modes; // only the zero function is bounded
    }
    modes.reserve(static_cast<std::size_t>(total) + 1);
    for (long long k = 0; k <= total; ++k) {
        std::vector<Complex> coeffs(static_cast<std::size_t>(k) + 1, 0.0);
        coeffs.back() = 1.0;
        modes.emplace_back(cfg, std::move(coeffs), SpinorComponent::Upper);
    }
    return modes;
}

double dirac_residual(const ZeroMode& mode, Complex z, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("dirac_residual: step must be positive");
    }
    if (!(mode.config().nearest_flux_distance(z) > 10.0 * h)) {
        throw std::domain_error("residual undefined near flux");
    }
    const auto value = [&mode](Complex w) {
        return mode_value_or_throw(mode, w, "residual undefined near flux");
    };
    const Complex center = value(z);
    if (mode.kind() == SpinorComponent::Upper) {
        const Complex du = wirtinger_dzbar(value, z, h);
        return std::abs(du + mode.config().dphi_dzbar(z) * center);
    }
    // Phi is real, so d/dz Phi is the conjugate of d/dzbar Phi.
    const Complex dv = wirtinger_dz(value, z, h);
    return std::abs(dv - std::conj(mode.config().dphi_dzbar(z)) * center);
}

double growth_exponent(const ZeroMode& mode, Complex direction, std::span<const double> radii) {
    if (radii.size() < 3) {
        throw std::invalid_argument("growth_exponent: need at least 3 radii");
    }
    const double dir_norm = std::abs(direction);
    if (dir_norm == 0.0) {
        throw std::invalid_argument("growth_exponent: zero direction");
    }
    const Complex dir = direction / dir_norm;
    double prev = 0.0;
    for (std::size_t j = 0; j < radii.size(); ++j) {
        if (!(radii[j] > 0.0) || (j > 0 && !(radii[j] > prev))) {
            throw std::invalid_argument("growth_exponent: radii must be positive and increasing");
        }
        prev = radii[j];
    }

    // Least-squares slope of log|mode| against log R.
    const std::size_t n = radii.size();
    std::vector<double> xs(n), ys(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::optional<Complex> value = mode.evaluate(radii[j] * dir);
        if (!value || *value == 0.0) {
            throw std::invalid_argument("growth_exponent: probe ray hits a singular point");
        }
        xs[j] = std::log(radii[j]);
        ys[j] = std::log(std::abs(*value));
    }
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        x_mean += xs[j];
        y_mean += ys[j];
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        sxy += (xs[j] - x_mean) * (ys[j] - y_mean);
        sxx += (xs[j] - x_mean) * (xs[j] - x_mean);
    }
    return sxy / sxx;
}

int dimension_by_rank(std::span<const ZeroMode> modes, std::span<const Complex> samples,
                      double relative_threshold) {
    if (modes.empty()) {
        return 0;
    }
    if (samples.size() < modes.size() + 2) {
        throw std::invalid_argument("dimension_by_rank: too few samples");
    }
    for (std::size_t a = 0; a < samples.size(); ++a) {
        for (std::size_t b = a + 1; b < samples.size(); ++b) {
            if (samples[a] == samples[b]) {
                throw std::invalid_argument("dimension_by_rank: repeated sample points");
            }
        }
    }

    Eigen::MatrixXcd matrix(static_cast<Eigen::Index>(samples.size()),
                            static_cast<Eigen::Index>(modes.size()));
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = 0; j < modes.size(); ++j) {
            const std::optional<Complex> value = modes[j].evaluate(samples[i]);
            if (!value) {
                throw std::invalid_argument("dimension_by_rank: sample at a flux position");
            }
            matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = *value;
        }
    }

    // Diagonal row/column scalings are rank-preserving and strip the wide
    // dynamic range the weight factors put on the raw evaluations.
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        const double m = matrix.row(i).cwiseAbs().maxCoeff();
        if (m > 0.0) {
            matrix.row(i) /= m;
        }
    }
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
        const double m = matrix.col(j).cwiseAbs().maxCoeff();
        if (m > 0.0) {
            matrix.col(j) /= m;
        }
    }

    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
    const Eigen::VectorXd sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) <= 0.0) {
        return 0;
    }
    const double cutoff = relative_threshold * sigma(0);
    int rank = 0;
    for (Eigen::Index k = 0; k < sigma.size(); ++k) {
        if (sigma(k) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

} // namespace fluxmodes
