#ifndef FLUXMODES_RATIONAL_HPP
#define FLUXMODES_RATIONAL_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "fluxmodes/divisor.hpp"

namespace fluxmodes {

// One factor (z - root)^multiplicity.
struct Factor {
    Complex root;
    int multiplicity; // nonzero in any stored list
};

// A meromorphic function on the sphere kept in factored form,
// scale * prod_i (z - root_i)^{m_i}. Roots are pairwise distinct under
// bitwise identity (duplicates are merged on construction); the zero
// function is scale == 0 with an empty factor list. Nothing is ever
// expanded into coefficients and no root finding happens.
class FactoredRational {
public:
    // The constant 1.
    FactoredRational() : scale_(1.0) {}

    // Normalizes: merges duplicate roots, drops zero multiplicities,
    // clears the factor list when scale is zero.
    FactoredRational(Complex scale, std::vector<Factor> factors);

    static FactoredRational zero();
    static FactoredRational constant(Complex c);
    // z^exponent; negative exponents give a pole at the origin.
    static FactoredRational monomial(int exponent);

    bool is_zero() const { return scale_ == 0.0; }
    Complex scale() const { return scale_; }
    const std::vector<Factor>& factors() const { return factors_; }

    // Sum of all multiplicities; the order at infinity is its negative.
    long long multiplicity_sum() const;

    // div(f): coefficient m_i at each root plus the balancing term at
    // infinity. Throws std::domain_error for the zero function.
    Divisor divisor() const;

    // Product evaluation. Returns std::nullopt at a pole; a root with
    // positive multiplicity evaluates to exactly 0.
    std::optional<Complex> evaluate(Complex z) const;

    friend FactoredRational operator*(const FactoredRational& f, const FactoredRational& g);

private:
    Complex scale_;
    std::vector<Factor> factors_; // sorted by root, deterministic layout
};

std::ostream& operator<<(std::ostream& os, const FactoredRational& f);

// z^w for integer w by repeated multiplication; w < 0 inverts.
Complex integer_power(Complex z, long long exponent);

// Basis of L(D) = { f meromorphic : div(f) + D >= 0 } on the sphere,
// from the explicit construction: element k is z^k * f_D(z) with
// f_D = prod (z - p_i)^{-n_i} over the finite support of D, 0 <= k <= deg D.
struct LBasis {
    Divisor divisor;
    std::vector<FactoredRational> elements; // deg(D)+1 entries when deg >= 0
};

// Requires the coefficient of D at infinity to be zero (throw
// std::invalid_argument otherwise; re-project from another base point
// first). A divisor of negative degree yields an empty basis: L(D) = {0}.
LBasis l_basis(const Divisor& d);

// div(h) + D >= 0, an exact integer test. The zero function is a member of
// every L(D) by convention (query h.is_zero() to tell the cases apart).
bool l_membership(const FactoredRational& h, const Divisor& d);

} // namespace fluxmodes

#endif
