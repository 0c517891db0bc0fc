#pragma once

#include "lcmsep/error.hpp"
#include "lcmsep/scalar.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace lcmsep {

/// Tolerance for trig-derived quantities; exact paths never consult it.
inline constexpr double kEpsGeom = 1e-9;

struct Vec2 {
    Scalar x, y;

    Vec2() = default;
    Vec2(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}

    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
    friend Vec2 operator-(const Vec2& u) { return {-u.x, -u.y}; }
    friend Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator/(const Vec2& v, const Scalar& s) { return {v.x / s, v.y / s}; }
    friend bool operator==(const Vec2& u, const Vec2& v) { return u.x == v.x && u.y == v.y; }
    friend bool operator!=(const Vec2& u, const Vec2& v) { return !(u == v); }
};

inline Scalar dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }
inline Scalar cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline Scalar norm2(const Vec2& v) { return dot(v, v); }
inline Scalar dist2(const Vec2& u, const Vec2& v) { return norm2(u - v); }
inline double dist(const Vec2& u, const Vec2& v) { return std::sqrt(to_double(dist2(u, v))); }

/// Unit direction for k*30 degrees, exact in Q[sqrt(3)]. k taken mod 12.
Vec2 unit_dir_30(int k);

/// Rotation of v by k*30 degrees about the origin (k may be negative).
Vec2 rotate_30(const Vec2& v, int k);

/// Local coordinate frame: origin, exact unit rotation vector, positive scale.
/// dir must satisfy |dir| = 1 exactly; orientation is never reflected.
struct Frame {
    Vec2 origin;
    Vec2 dir{Scalar(1), Scalar(0)};
    Scalar scale{1};

    static Frame identity() { return {}; }
    static Frame at(Vec2 origin, Vec2 dir = {Scalar(1), Scalar(0)}, Scalar scale = Scalar(1));
    /// Rational-angle frame via the tan-half-angle parametrization (always
    /// exactly unit length). t = tan(theta/2).
    static Frame from_tan_half(Vec2 origin, const Rat& t, Scalar scale = Scalar(1));
};

Vec2 to_local(const Frame& f, const Vec2& p);
Vec2 from_local(const Frame& f, const Vec2& q);

struct Circle {
    Vec2 center;
    Scalar radius_sq;
    double radius() const { return std::sqrt(to_double(radius_sq)); }
};

/// Regular hexagon with vertex 0 at phase_30 * 30 degrees from center.
struct Hexagon {
    Vec2 center;
    Scalar circumradius;
    int phase_30 = 0;

    Vec2 vertex(int k) const;  // k mod 6
};

Vec2 centroid(const std::vector<Vec2>& points);

Circle circumcircle(const Vec2& a, const Vec2& b, const Vec2& c);

/// angle is signed radians; negative = clockwise (global chirality).
/// Multiples of 30 degrees take the exact path; everything else is computed
/// in doubles and snapped to dyadic rationals.
Vec2 rotate_about(const Vec2& p, const Vec2& pivot, double angle);

/// Clockwise step of chord length d along circle c, starting from p.
Vec2 chord_step(const Circle& c, const Vec2& p, const Scalar& d);

struct CollinearRatio {
    enum class Kind { NotCollinear, Between, Outside } kind;
    Scalar t;  // m = a + t*(b - a); valid unless NotCollinear
    std::optional<std::pair<Int, Int>> lowest_terms;  // |am|:|mb| when Between and rational
};

CollinearRatio collinear_ratio(const Vec2& a, const Vec2& m, const Vec2& b);

/// True iff m lies strictly between a and b with |am|:|mb| = num:den.
bool ratio_between_is(const Vec2& a, const Vec2& m, const Vec2& b, int num, int den);

/// Exact squared distance from point p to segment [a, b].
Scalar point_segment_dist2(const Vec2& p, const Vec2& a, const Vec2& b);

/// True iff p lies on the closed segment [a, b] (exact).
bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b);

/// Strict counterclockwise angular order around the origin (exact). Suitable
/// as a sorting comparator; angle 0 (positive x axis) sorts first.
bool angle_less_ccw(const Vec2& u, const Vec2& v);

}  // namespace lcmsep
