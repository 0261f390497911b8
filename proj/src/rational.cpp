#include "fluxmodes/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace fluxmodes {

namespace {

bool same_root(const Complex& a, const Complex& b) {
    return ExtendedPoint(a) == ExtendedPoint(b);
}

bool root_less(const Complex& a, const Complex& b) {
    return ExtendedPointLess{}(ExtendedPoint(a), ExtendedPoint(b));
}

} // namespace

FactoredRational::FactoredRational(Complex scale, std::vector<Factor> factors)
    : scale_(scale), factors_(std::move(factors)) {
    if (scale_ == 0.0) {
        factors_.clear();
        return;
    }
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return root_less(a.root, b.root); });
    std::vector<Factor> merged;
    merged.reserve(factors_.size());
    for (const Factor& f : factors_) {
        if (!merged.empty() && same_root(merged.back().root, f.root)) {
            merged.back().multiplicity += f.multiplicity;
        } else {
            merged.push_back(f);
        }
    }
    std::erase_if(merged, [](const Factor& f) { return f.multiplicity == 0; });
    factors_ = std::move(merged);
}

FactoredRational FactoredRational::zero() {
    return FactoredRational(0.0, {});
}

FactoredRational FactoredRational::constant(Complex c) {
    return FactoredRational(c, {});
}

FactoredRational FactoredRational::monomial(int exponent) {
    if (exponent == 0) return FactoredRational();
    return FactoredRational(1.0, {Factor{Complex(0.0), exponent}});
}

long long FactoredRational::multiplicity_sum() const {
    long long sum = 0;
    for (const Factor& f : factors_) sum += f.multiplicity;
    return sum;
}

Divisor FactoredRational::divisor() const {
    if (is_zero()) {
        throw std::domain_error("FactoredRational: divisor undefined for zero function");
    }
    Divisor d;
    for (const Factor& f : factors_) {
        d.add_term(ExtendedPoint(f.root), f.multiplicity);
    }
    const long long at_infinity = -multiplicity_sum();
    d.add_term(ExtendedPoint::infinity(), static_cast<int>(at_infinity));
    return d;
}

Complex integer_power(Complex z, long long exponent) {
    if (exponent < 0) return 1.0 / integer_power(z, -exponent);
    Complex result = 1.0;
    Complex base = z;
    for (long long e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= base;
        base *= base;
    }
    return result;
}

std::optional<Complex> FactoredRational::evaluate(Complex z) const {
    if (is_zero()) return Complex(0.0);
    bool hits_zero = false;
    for (const Factor& f : factors_) {
        if (z == f.root) {
            if (f.multiplicity < 0) return std::nullopt;
            hits_zero = true;
        }
    }
    if (hits_zero) return Complex(0.0);
    Complex result = scale_;
    for (const Factor& f : factors_) {
        result *= integer_power(z - f.root, f.multiplicity);
    }
    return result;
}

FactoredRational operator*(const FactoredRational& f, const FactoredRational& g) {
    std::vector<Factor> factors = f.factors_;
    factors.insert(factors.end(), g.factors_.begin(), g.factors_.end());
    return FactoredRational(f.scale_ * g.scale_, std::move(factors));
}

std::ostream& operator<<(std::ostream& os, const FactoredRational& f) {
    if (f.is_zero()) return os << "0";
    os << f.scale();
    for (const Factor& fac : f.factors()) {
        os << " * (z - " << fac.root << ")^" << fac.multiplicity;
    }
    return os;
}

LBasis l_basis(const Divisor& d) {
    if (d.coefficient(ExtendedPoint::infinity()) != 0) {
        throw std::invalid_argument(
            "l_basis: divisor has a nonzero coefficient at infinity; re-project base point");
    }
    LBasis basis{d, {}};
    const long long deg = d.degree();
    if (deg < 0) return basis; // L(D) = {0}: no nonzero elements

    // f_D = prod (z - p_i)^{-n_i} over the finite support.
    std::vector<Factor> pole_factors;
    pole_factors.reserve(d.size());
    for (const auto& [p, n] : d.terms()) {
        pole_factors.push_back(Factor{p.value(), -n});
    }

    basis.elements.reserve(static_cast<std::size_t>(deg) + 1);
    for (long long k = 0; k <= deg; ++k) {
        std::vector<Factor> factors = pole_factors;
        if (k > 0) factors.push_back(Factor{Complex(0.0), static_cast<int>(k)});
        basis.elements.emplace_back(Complex(1.0), std::move(factors));
    }
    return basis;
}

bool l_membership(const FactoredRational& h, const Divisor& d) {
    if (h.is_zero()) return true;
    return (h.divisor() + d).is_nonnegative();
}

} // namespace fluxmodes
