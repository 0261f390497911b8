#ifndef FLUXMODES_DIVISOR_HPP
#define FLUXMODES_DIVISOR_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <utility>

namespace fluxmodes {

using Complex = std::complex<double>;

// Monotone bijection double -> uint64 whose integer order matches numeric
// order, with -0.0 < +0.0 and NaNs at the extremes. Gives point containers a
// deterministic total order.
std::uint64_t total_order_key(double x) noexcept;

// A point of the Riemann sphere: a finite complex number or the point at
// infinity. Finite points are identical iff both coordinates are
// bitwise-equal as stored; positions are user inputs, never computed
// quantities, so there is no tolerance-based merging anywhere.
class ExtendedPoint {
public:
    ExtendedPoint(Complex z) : finite_(true), value_(z) {}
    ExtendedPoint(double re, double im = 0.0) : ExtendedPoint(Complex(re, im)) {}

    static ExtendedPoint infinity();

    bool is_infinity() const { return !finite_; }

    // Coordinate of a finite point; throws std::domain_error at infinity.
    Complex value() const;

    friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b);
    friend bool operator!=(const ExtendedPoint& a, const ExtendedPoint& b) { return !(a == b); }

private:
    ExtendedPoint() : finite_(false), value_(0.0) {}

    bool finite_;
    Complex value_;
};

struct ExtendedPointLess {
    bool operator()(const ExtendedPoint& a, const ExtendedPoint& b) const;
};

std::ostream& operator<<(std::ostream& os, const ExtendedPoint& p);

// Formal finite integer combination of sphere points, the abelian group
// Div(X). Zero coefficients are never stored. Coefficients live in `int`;
// any addition that would leave that range throws std::overflow_error
// instead of wrapping.
class Divisor {
public:
    using TermMap = std::map<ExtendedPoint, int, ExtendedPointLess>;

    Divisor() = default;
    Divisor(std::initializer_list<std::pair<ExtendedPoint, int>> terms);

    static Divisor single(ExtendedPoint p, int coefficient);

    // Accumulates `coefficient` at `p`, dropping the term if the sum is zero.
    void add_term(const ExtendedPoint& p, int coefficient);

    // 0 when the point carries no term.
    int coefficient(const ExtendedPoint& p) const;

    // Exact integer sum of all coefficients.
    long long degree() const;

    // The partial-order test D >= 0: every stored coefficient nonnegative.
    // The empty divisor qualifies vacuously.
    bool is_nonnegative() const;

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Divisor negated() const;

    friend Divisor operator+(const Divisor& a, const Divisor& b);
    friend bool operator==(const Divisor& a, const Divisor& b);
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

private:
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Divisor& d);

} // namespace fluxmodes

#endif
