#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace lcmsep {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Floor toward negative infinity (cpp_int division truncates toward zero).
inline Int floor_rat(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline int sign_rat(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

/// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("rat_from_double: non-finite");
    if (v == 0.0) return Rat(0);
    int exp = 0;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    Int m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rat r(m);
    if (exp > 0)
        r *= Rat(Int(1) << exp);
    else if (exp < 0)
        r /= Rat(Int(1) << -exp);
    return r;
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

/// "p" or "p/q"; the format used everywhere rationals are serialized.
inline std::string rat_str(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

/// Parses "p", "p/q", or a decimal like "-1.25e-3" (exact).
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("parse_rat: zero denominator");
        return Rat(n, d);
    }
    auto dot = text.find('.');
    auto e = text.find_first_of("eE");
    if (dot == std::string::npos && e == std::string::npos) return Rat(Int(text));
    std::string mant = e == std::string::npos ? text : text.substr(0, e);
    long expo = e == std::string::npos ? 0 : std::stol(text.substr(e + 1));
    std::string digits;
    long frac_digits = 0;
    dot = mant.find('.');
    if (dot == std::string::npos) {
        digits = mant;
    } else {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        frac_digits = static_cast<long>(mant.size() - dot - 1);
    }
    Rat r{Int(digits)};
    long net = expo - frac_digits;
    Int p10 = boost::multiprecision::pow(Int(10), static_cast<unsigned>(net < 0 ? -net : net));
    if (net > 0) r *= Rat(p10);
    if (net < 0) r /= Rat(p10);
    return r;
}

/// Exact integer square root if n is a perfect square.
inline std::optional<Int> perfect_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

inline std::optional<Rat> perfect_sqrt(const Rat& r) {
    auto n = perfect_sqrt(rat_num(r));
    if (!n) return std::nullopt;
    auto d = perfect_sqrt(rat_den(r));
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

}  // namespace lcmsep
