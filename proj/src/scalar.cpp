#include "lcmsep/scalar.hpp"
#include <cctype>

namespace lcmsep {

Int floor_scalar(const Scalar& x) {
    if (x.b == 0) return floor_rat(x.a);
    // Bracket sqrt(3) between rationals tight enough that the interval
    // [a + b*lo, a + b*hi] pins a single integer, then confirm exactly.
    unsigned prec = 40;
    for (;;) {
        Int p10 = boost::multiprecision::pow(Int(10), prec);
        Int lo_num = boost::multiprecision::sqrt(Int(3) * p10 * p10);
        Rat lo(lo_num, p10), hi(lo_num + 1, p10);
        Rat vlo = x.a + x.b * (x.b > 0 ? lo : hi);
        Rat vhi = x.a + x.b * (x.b > 0 ? hi : lo);
        Int k = floor_rat(vlo);
        if (floor_rat(vhi) == k) {
            // Confirm k <= x < k+1 with exact signs.
            if (sign(x - Scalar(Rat(k))) >= 0 && sign(x - Scalar(Rat(k + 1))) < 0) return k;
        }
        prec *= 2;
        if (prec > 1u << 20) throw std::runtime_error("floor_scalar: no convergence");
    }
}

std::optional<Scalar> sqrt_scalar(const Scalar& x) {
    if (sign(x) < 0) return std::nullopt;
    if (sign(x) == 0) return Scalar(0);
    if (x.b == 0) {
        if (auto r = perfect_sqrt(x.a)) return Scalar(*r);
        // a = 3y² case: sqrt(a) = y*sqrt(3)
        if (auto y = perfect_sqrt(x.a / 3)) return Scalar(Rat(0), *y);
        return std::nullopt;
    }
    // Solve (p + q√3)² = A + B√3: p²+3q² = A, 2pq = B.
    // p² and 3q² are roots of t² - A t + 3(B/2)² = 0.
    Rat A = x.a, B = x.b;
    Rat disc = A * A - 3 * B * B;
    auto s = perfect_sqrt(disc);
    if (!s) return std::nullopt;
    for (int which : {1, -1}) {
        Rat t = (A + which * *s) / 2;  // candidate p²
        if (t < 0) continue;
        auto p = perfect_sqrt(t);
        if (!p || *p == 0) continue;
        Rat q = B / (2 * *p);
        Scalar cand{*p, q};
        if (cand * cand == x && sign(cand) > 0) return cand;
        cand = -cand;
        if (cand * cand == x && sign(cand) > 0) return cand;
    }
    return std::nullopt;
}

std::string scalar_str(const Scalar& x) {
    if (x.b == 0) return rat_str(x.a);
    return rat_str(x.a) + "+" + rat_str(x.b) + "r3";
}

Scalar parse_scalar(const std::string& text) {
    auto pos = text.find("r3");
    if (pos == std::string::npos) return Scalar(parse_rat(text));
    // form "<a>+<b>r3"; the '+' separating the parts is the last '+' or the
    // last '-' that is not a leading sign or exponent sign.
    std::string head = text.substr(0, pos);
    // The separator sign directly follows the last digit of the a-part.
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        char c = head[i];
        if ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(head[i - 1]))) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) throw std::invalid_argument("parse_scalar: bad form " + text);
    Rat a = parse_rat(head.substr(0, split));
    std::string btxt = head.substr(split);
    if (btxt[0] == '+') btxt.erase(0, 1);
    return {a, parse_rat(btxt)};
}

}  // namespace lcmsep
