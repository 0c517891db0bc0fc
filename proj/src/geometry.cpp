#include "lcmsep/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace lcmsep {

Vec2 unit_dir_30(int k) {
    k %= 12;
    if (k < 0) k += 12;
    const Rat half(1, 2);
    const Scalar zero(0), one(1);
    const Scalar h(half);              // 1/2
    const Scalar s3h(Rat(0), half);    // sqrt(3)/2
    switch (k) {
        case 0: return {one, zero};
        case 1: return {s3h, h};
        case 2: return {h, s3h};
        case 3: return {zero, one};
        case 4: return {-h, s3h};
        case 5: return {-s3h, h};
        case 6: return {-one, zero};
        case 7: return {-s3h, -h};
        case 8: return {-h, -s3h};
        case 9: return {zero, -one};
        case 10: return {h, -s3h};
        default: return {s3h, -h};
    }
}

Vec2 rotate_30(const Vec2& v, int k) {
    Vec2 d = unit_dir_30(k);
    return {v.x * d.x - v.y * d.y, v.x * d.y + v.y * d.x};
}

Frame Frame::at(Vec2 origin, Vec2 dir, Scalar scale) {
    if (norm2(dir) != Scalar(1)) throw Error("BadFrame", "rotation vector must be exactly unit");
    if (sign(scale) <= 0) throw Error("BadFrame", "scale must be positive");
    return Frame{std::move(origin), std::move(dir), std::move(scale)};
}

Frame Frame::from_tan_half(Vec2 origin, const Rat& t, Scalar scale) {
    // (cos, sin) = ((1-t^2)/(1+t^2), 2t/(1+t^2)) is exactly unit for rational t.
    Rat den = 1 + t * t;
    Vec2 dir{Scalar(Rat(1 - t * t) / den), Scalar(Rat(2 * t) / den)};
    return Frame::at(std::move(origin), dir, std::move(scale));
}

Vec2 to_local(const Frame& f, const Vec2& p) {
    Vec2 v = p - f.origin;
    // rotate by -theta: (c s; -s c)
    Vec2 r{v.x * f.dir.x + v.y * f.dir.y, -v.x * f.dir.y + v.y * f.dir.x};
    return r / f.scale;
}

Vec2 from_local(const Frame& f, const Vec2& q) {
    Vec2 v = f.scale * q;
    Vec2 r{v.x * f.dir.x - v.y * f.dir.y, v.x * f.dir.y + v.y * f.dir.x};
    return r + f.origin;
}

Vec2 Hexagon::vertex(int k) const {
    k %= 6;
    if (k < 0) k += 6;
    return center + circumradius * unit_dir_30(phase_30 + 2 * k);
}

Vec2 centroid(const std::vector<Vec2>& points) {
    if (points.empty()) throw Error("EmptyInput", "centroid of empty set");
    Vec2 sum{Scalar(0), Scalar(0)};
    for (const auto& p : points) sum = sum + p;
    return sum / Scalar(Rat(points.size()));
}

Circle circumcircle(const Vec2& a, const Vec2& b, const Vec2& c) {
    Vec2 ab = b - a, ac = c - a;
    Scalar det = cross(ab, ac) * Scalar(2);
    if (sign(det) == 0) throw Error("DegenerateTriangle", "collinear or coincident points");
    Scalar nab = norm2(b) - norm2(a);
    Scalar nac = norm2(c) - norm2(a);
    // 2*ab . p = |b|^2-|a|^2 ; 2*ac . p = |c|^2-|a|^2 (Cramer)
    Scalar cx = (nab * ac.y - nac * ab.y) / det;
    Scalar cy = (nac * ab.x - nab * ac.x) / det;
    Vec2 center{cx, cy};
    return Circle{center, dist2(center, a)};
}

Vec2 rotate_about(const Vec2& p, const Vec2& pivot, double angle) {
    constexpr double kStep = M_PI / 6.0;
    double steps = angle / kStep;
    double rounded = std::round(steps);
    if (std::abs(steps - rounded) < 1e-12 && std::abs(rounded) < 1e9) {
        return pivot + rotate_30(p - pivot, static_cast<int>(rounded));
    }
    double c = std::cos(angle), s = std::sin(angle);
    double vx = to_double(p.x - pivot.x), vy = to_double(p.y - pivot.y);
    Vec2 r{scalar_from_double(vx * c - vy * s), scalar_from_double(vx * s + vy * c)};
    return pivot + r;
}

Vec2 chord_step(const Circle& c, const Vec2& p, const Scalar& d) {
    Scalar d2 = d * d;
    if (sign(d) <= 0) throw Error("ChordTooLong", "chord must be positive");
    // d == 2R (diameter) is allowed; compare via squares to stay exact.
    if (sign(d2 - Scalar(4) * c.radius_sq) > 0) throw Error("ChordTooLong", "chord exceeds diameter");
    double off = std::abs(std::sqrt(to_double(dist2(p, c.center))) - c.radius());
    if (off > kEpsGeom) throw Error("NotOnCircle", "point not on circle");
    // theta = 2 asin(d / 2R); cos(theta) = 1 - d^2/(2R^2) is exact.
    Scalar cos_t = Scalar(1) - d2 / (Scalar(2) * c.radius_sq);
    Scalar sin2 = Scalar(1) - cos_t * cos_t;
    Vec2 v = p - c.center;
    if (auto sin_t = sqrt_scalar(sin2)) {
        // clockwise: rotate by -theta
        return c.center + Vec2{v.x * cos_t + v.y * *sin_t, -v.x * *sin_t + v.y * cos_t};
    }
    double ct = to_double(cos_t), st = std::sqrt(std::max(0.0, to_double(sin2)));
    double vx = to_double(v.x), vy = to_double(v.y);
    return c.center + Vec2{scalar_from_double(vx * ct + vy * st), scalar_from_double(-vx * st + vy * ct)};
}

CollinearRatio collinear_ratio(const Vec2& a, const Vec2& m, const Vec2& b) {
    if (a == b) throw Error("DegenerateSegment", "a and b coincide");
    Vec2 v = b - a, w = m - a;
    if (sign(cross(v, w)) != 0) return {CollinearRatio::Kind::NotCollinear, Scalar(0), std::nullopt};
    Scalar t = dot(w, v) / norm2(v);
    CollinearRatio out{CollinearRatio::Kind::Outside, t, std::nullopt};
    if (sign(t) > 0 && sign(t - Scalar(1)) < 0) {
        out.kind = CollinearRatio::Kind::Between;
        if (t.is_rational()) {
            Int p = rat_num(t.a), q = rat_den(t.a);
            out.lowest_terms = std::make_pair(p, q - p);
            Int g = boost::multiprecision::gcd(out.lowest_terms->first, out.lowest_terms->second);
            if (g > 1) {
                out.lowest_terms->first /= g;
                out.lowest_terms->second /= g;
            }
        }
    }
    return out;
}

bool ratio_between_is(const Vec2& a, const Vec2& m, const Vec2& b, int num, int den) {
    auto r = collinear_ratio(a, m, b);
    if (r.kind != CollinearRatio::Kind::Between) return false;
    // |am|:|mb| = num:den  <=>  t == num/(num+den)
    return r.t == Scalar(Rat(num, num + den));
}

Scalar point_segment_dist2(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (a == b) return dist2(p, a);
    Vec2 v = b - a;
    Scalar t = dot(p - a, v) / norm2(v);
    if (sign(t) <= 0) return dist2(p, a);
    if (sign(t - Scalar(1)) >= 0) return dist2(p, b);
    return dist2(p, a + t * v);
}

bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (a == b) return p == a;
    Vec2 v = b - a;
    if (sign(cross(v, p - a)) != 0) return false;
    Scalar t = dot(p - a, v);
    return sign(t) >= 0 && sign(t - norm2(v)) <= 0;
}

bool angle_less_ccw(const Vec2& u, const Vec2& v) {
    auto half = [](const Vec2& w) {
        // 0: angle in [0, pi), 1: [pi, 2pi)
        int sy = sign(w.y);
        if (sy > 0) return 0;
        if (sy < 0) return 1;
        return sign(w.x) > 0 ? 0 : 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return sign(cross(u, v)) > 0;
}

}  // namespace lcmsep
