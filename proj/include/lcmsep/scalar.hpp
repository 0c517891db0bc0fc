#pragma once

#include "lcmsep/rational.hpp"

#include <optional>
#include <string>

namespace lcmsep {

/// Exact number of the form a + b*sqrt(3).
///
/// Field operations stay closed, so every coordinate the shipped algorithms
/// produce by field ops, floors, 90-degree turns, or hexagon steps is
/// representable exactly. Values that genuinely need transcendental math
/// (general chord angles) enter as dyadic rationals snapped from doubles.
struct Scalar {
    Rat a;  // rational part
    Rat b;  // coefficient of sqrt(3)

    Scalar() = default;
    Scalar(int v) : a(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rat v) : a(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

    bool is_rational() const { return b == 0; }

    friend Scalar operator+(const Scalar& x, const Scalar& y) { return {x.a + y.a, x.b + y.b}; }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return {x.a - y.a, x.b - y.b}; }
    friend Scalar operator-(const Scalar& x) { return {-x.a, -x.b}; }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        // 1/(a+b√3) = (a-b√3)/(a²-3b²)
        Rat norm = y.a * y.a - 3 * y.b * y.b;
        if (norm == 0) throw std::domain_error("Scalar division by zero");
        Scalar conj{y.a, -y.b};
        Scalar num = x * conj;
        return {num.a / norm, num.b / norm};
    }
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
};

/// Exact sign of a + b*sqrt(3).
inline int sign(const Scalar& x) {
    int sa = sign_rat(x.a), sb = sign_rat(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a² with 3b²; the larger magnitude wins.
    int cmp = sign_rat(x.a * x.a - 3 * x.b * x.b);
    return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

inline bool operator<(const Scalar& x, const Scalar& y) { return sign(x - y) < 0; }
inline bool operator>(const Scalar& x, const Scalar& y) { return sign(x - y) > 0; }
inline bool operator<=(const Scalar& x, const Scalar& y) { return sign(x - y) <= 0; }
inline bool operator>=(const Scalar& x, const Scalar& y) { return sign(x - y) >= 0; }

inline Scalar abs(const Scalar& x) { return sign(x) < 0 ? -x : x; }

inline double to_double(const Scalar& x) {
    return rat_to_double(x.a) + rat_to_double(x.b) * 1.7320508075688772;
}

/// Floor toward -inf, exact. Rational fast path; otherwise verify a double
/// estimate with exact sign tests, widening if the estimate was off.
Int floor_scalar(const Scalar& x);

/// Exact square root within Q[sqrt(3)] when one exists.
std::optional<Scalar> sqrt_scalar(const Scalar& x);

inline Scalar scalar_from_double(double v) { return Scalar(rat_from_double(v)); }

std::string scalar_str(const Scalar& x);
Scalar parse_scalar(const std::string& text);

}  // namespace lcmsep
