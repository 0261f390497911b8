#include "fluxmodes/divisor.hpp"

#include <bit>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace fluxmodes {

std::uint64_t total_order_key(double x) noexcept {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    // Negative values: reverse their order. Nonnegative: shift above them.
    return (bits & 0x8000000000000000ull) ? ~bits : (bits | 0x8000000000000000ull);
}

ExtendedPoint ExtendedPoint::infinity() {
    return ExtendedPoint();
}

Complex ExtendedPoint::value() const {
    if (!finite_) {
        throw std::domain_error("ExtendedPoint: the point at infinity has no finite coordinate");
    }
    return value_;
}

bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
    if (a.finite_ != b.finite_) return false;
    if (!a.finite_) return true;
    return std::bit_cast<std::uint64_t>(a.value_.real()) == std::bit_cast<std::uint64_t>(b.value_.real()) &&
           std::bit_cast<std::uint64_t>(a.value_.imag()) == std::bit_cast<std::uint64_t>(b.value_.imag());
}

bool ExtendedPointLess::operator()(const ExtendedPoint& a, const ExtendedPoint& b) const {
    // Infinity sorts after every finite point.
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    const Complex za = a.value();
    const Complex zb = b.value();
    const auto ra = total_order_key(za.real());
    const auto rb = total_order_key(zb.real());
    if (ra != rb) return ra < rb;
    return total_order_key(za.imag()) < total_order_key(zb.imag());
}

std::ostream& operator<<(std::ostream& os, const ExtendedPoint& p) {
    if (p.is_infinity()) return os << "inf";
    const Complex z = p.value();
    return os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
}

namespace {

int checked_add(int a, int b) {
    const long long sum = static_cast<long long>(a) + static_cast<long long>(b);
    if (sum > std::numeric_limits<int>::max() || sum < std::numeric_limits<int>::min()) {
        throw std::overflow_error("Divisor: coefficient addition overflow");
    }
    return static_cast<int>(sum);
}

} // namespace

Divisor::Divisor(std::initializer_list<std::pair<ExtendedPoint, int>> terms) {
    for (const auto& [p, n] : terms) {
        add_term(p, n);
    }
}

Divisor Divisor::single(ExtendedPoint p, int coefficient) {
    Divisor d;
    d.add_term(p, coefficient);
    return d;
}

void Divisor::add_term(const ExtendedPoint& p, int coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, coefficient);
        return;
    }
    const int sum = checked_add(it->second, coefficient);
    if (sum == 0) {
        terms_.erase(it);
    } else {
        it->second = sum;
    }
}

int Divisor::coefficient(const ExtendedPoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
    long long sum = 0;
    for (const auto& [p, n] : terms_) sum += n;
    return sum;
}

bool Divisor::is_nonnegative() const {
    for (const auto& [p, n] : terms_) {
        if (n < 0) return false;
    }
    return true;
}

Divisor Divisor::negated() const {
    Divisor out;
    for (const auto& [p, n] : terms_) {
        if (n == std::numeric_limits<int>::min()) {
            throw std::overflow_error("Divisor: coefficient negation overflow");
        }
        out.terms_.emplace(p, -n);
    }
    return out;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [p, n] : b.terms_) {
        out.add_term(p, n);
    }
    return out;
}

bool operator==(const Divisor& a, const Divisor& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ita = a.terms_.begin();
    auto itb = b.terms_.begin();
    for (; ita != a.terms_.end(); ++ita, ++itb) {
        if (!(ita->first == itb->first) || ita->second != itb->second) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Divisor& d) {
    os << "{";
    bool first = true;
    for (const auto& [p, n] : d.terms()) {
        if (!first) os << ", ";
        first = false;
        os << p << ":" << n;
    }
    return os << "}";
}

} // namespace fluxmodes
