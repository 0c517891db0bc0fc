#include <doctest.h>

#include "lcmsep/geometry.hpp"
#include "lcmsep/prng.hpp"

using namespace lcmsep;

namespace {
Vec2 vr(long x, long y) { return {Scalar(Rat(x)), Scalar(Rat(y))}; }
Vec2 vq(Rat x, Rat y) { return {Scalar(std::move(x)), Scalar(std::move(y))}; }
}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(parse_rat("13/4")) == "13/4");
    CHECK(parse_rat("-1.25e-3") == Rat(-1, 800));
    CHECK(parse_rat("42") == Rat(42));
    CHECK(floor_rat(Rat(13, 5)) == 2);
    CHECK(floor_rat(Rat(-13, 5)) == -3);
    CHECK(rat_from_double(0.5) == Rat(1, 2));
    CHECK(rat_from_double(-3.25) == Rat(-13, 4));
}

TEST_CASE("scalar field ops and ordering") {
    Scalar s3{Rat(0), Rat(1)};  // sqrt(3)
    CHECK(s3 * s3 == Scalar(3));
    CHECK(sign(s3 - Scalar(Rat(7, 4))) < 0);   // sqrt(3) < 1.75
    CHECK(sign(s3 - Scalar(Rat(12, 7))) > 0);  // sqrt(3) > 12/7
    Scalar x{Rat(1, 2), Rat(-1, 3)};
    CHECK(x / x == Scalar(1));
    CHECK(floor_scalar(s3) == 1);
    CHECK(floor_scalar(-s3) == -2);
    CHECK(floor_scalar(Scalar(Rat(5)) + s3) == 6);
    CHECK(*sqrt_scalar(Scalar(Rat(9, 4))) == Scalar(Rat(3, 2)));
    CHECK(*sqrt_scalar(Scalar(Rat(3, 4))) == Scalar(Rat(0), Rat(1, 2)));
    // (1 + sqrt(3))^2 = 4 + 2 sqrt(3)
    CHECK(*sqrt_scalar(Scalar(Rat(4), Rat(2))) == Scalar(Rat(1), Rat(1)));
    CHECK(!sqrt_scalar(Scalar(2)).has_value());
    CHECK(parse_scalar(scalar_str(x)) == x);
    CHECK(parse_scalar("-1/2+-2/3r3") == Scalar(Rat(-1, 2), Rat(-2, 3)));
}

TEST_CASE("to_local examples") {
    CHECK(to_local(Frame::identity(), vr(3, 4)) == vr(3, 4));
    Frame f = Frame::at(vr(1, 0), {Scalar(1), Scalar(0)}, Scalar(2));
    CHECK(to_local(f, vr(3, 0)) == vr(1, 0));
    Frame g = Frame::at(vr(0, 0), unit_dir_30(3));  // 90 degrees CCW
    CHECK(to_local(g, vr(1, 0)) == vr(0, -1));
}

TEST_CASE("frame round trip is exact for random exact-unit frames") {
    Prng rng(11);
    for (int i = 0; i < 200; ++i) {
        Rat t(rng.range(-50, 50), rng.range(1, 19));
        Frame f = Frame::from_tan_half(vq(Rat(rng.range(-9, 9)), Rat(rng.range(-9, 9))), t,
                                       Scalar(Rat(rng.range(1, 8), rng.range(1, 5))));
        Vec2 p = vq(Rat(rng.range(-100, 100), 7), Rat(rng.range(-100, 100), 3));
        CHECK(from_local(f, to_local(f, p)) == p);
    }
}

TEST_CASE("frame scale invariance") {
    // Scaling the configuration by s about the frame origin and using scale s
    // reproduces the scale-1 view of the unscaled configuration.
    Prng rng(5);
    for (int i = 0; i < 50; ++i) {
        Vec2 origin = vr(rng.range(-4, 4), rng.range(-4, 4));
        Scalar s{Rat(rng.range(1, 9), rng.range(1, 4))};
        Frame base = Frame::at(origin, unit_dir_30(static_cast<int>(rng.below(12))), Scalar(1));
        Frame scaled = Frame::at(origin, base.dir, s);
        Vec2 p = vr(rng.range(-20, 20), rng.range(-20, 20));
        Vec2 p_scaled = origin + s * (p - origin);
        CHECK(to_local(scaled, p_scaled) == to_local(base, p));
    }
}

TEST_CASE("centroid examples") {
    CHECK(centroid({vr(-1, 0), vr(1, 0)}) == vr(0, 0));
    CHECK(centroid({vr(-3, 0), vr(-1, 0), vr(4, 0)}) == vr(0, 0));
    CHECK(centroid({vr(0, 0), vr(0, 3)}) == vq(Rat(0), Rat(3, 2)));
    CHECK_THROWS_WITH_AS(centroid({}), doctest::Contains("EmptyInput"), Error);
}

TEST_CASE("circumcircle examples") {
    Circle c1 = circumcircle(vr(1, 0), vr(-1, 0), vr(0, 1));
    CHECK(c1.center == vr(0, 0));
    CHECK(c1.radius_sq == Scalar(1));

    // equilateral at 90, 210, 330 degrees on the unit circle
    Circle c2 = circumcircle(unit_dir_30(3), unit_dir_30(7), unit_dir_30(11));
    CHECK(c2.center == vr(0, 0));
    CHECK(c2.radius_sq == Scalar(1));

    // hand oracle: perpendicular bisectors x=1 and y=1 meet at (1,1), r^2 = 2
    Circle c3 = circumcircle(vr(0, 0), vr(2, 0), vr(0, 2));
    CHECK(c3.center == vr(1, 1));
    CHECK(c3.radius_sq == Scalar(2));

    CHECK_THROWS_WITH_AS(circumcircle(vr(0, 0), vr(1, 0), vr(2, 0)),
                         doctest::Contains("DegenerateTriangle"), Error);
}

TEST_CASE("rotate_about examples") {
    CHECK(rotate_about(vr(1, 0), vr(0, 0), -M_PI / 2) == vr(0, -1));
    CHECK(rotate_about(vr(5, 7), vr(5, 7), -1.234) == vr(5, 7));
    CHECK(rotate_about(vr(2, 0), vr(1, 0), -M_PI / 2) == vr(1, -1));
}

TEST_CASE("chord_step examples") {
    Circle unit{vr(0, 0), Scalar(1)};
    // chord 1 on the unit circle subtends 60 degrees; exact result
    Vec2 p = chord_step(unit, vr(1, 0), Scalar(1));
    CHECK(p == Vec2{Scalar(Rat(1, 2)), Scalar(Rat(0), Rat(-1, 2))});

    // diameter -> antipodal point
    CHECK(chord_step(unit, vr(1, 0), Scalar(2)) == vr(-1, 0));

    // chord sqrt(2): 90 degrees clockwise, double path within tolerance
    Vec2 q = chord_step(unit, vr(1, 0), scalar_from_double(std::sqrt(2.0)));
    CHECK(std::abs(to_double(q.x)) < kEpsGeom);
    CHECK(std::abs(to_double(q.y) + 1) < kEpsGeom);

    CHECK_THROWS_WITH_AS(chord_step(unit, vr(1, 0), Scalar(3)), doctest::Contains("ChordTooLong"),
                         Error);
    CHECK_THROWS_WITH_AS(chord_step(unit, vr(2, 0), Scalar(1)), doctest::Contains("NotOnCircle"),
                         Error);
}

TEST_CASE("chord_step keeps points on the circle") {
    Prng rng(77);
    Circle c{vr(2, -1), Scalar(Rat(25, 4))};
    double R = c.radius();
    for (int i = 0; i < 1000; ++i) {
        double ang = rng.uniform01() * 2 * M_PI;
        Vec2 p = c.center + Vec2{scalar_from_double(R * std::cos(ang)), scalar_from_double(R * std::sin(ang))};
        double d = rng.uniform01() * 2 * R;
        if (d <= 1e-6) d = 1e-3;
        Vec2 q = chord_step(c, p, scalar_from_double(d));
        CHECK(std::abs(dist(q, c.center) - R) < kEpsGeom);
        CHECK(std::abs(dist(q, p) - d) < kEpsGeom);
    }
}

TEST_CASE("collinear_ratio examples") {
    auto r1 = collinear_ratio(vr(0, 0), vr(2, 0), vr(3, 0));
    REQUIRE(r1.kind == CollinearRatio::Kind::Between);
    CHECK(r1.lowest_terms == std::make_pair(Int(2), Int(1)));

    CHECK(collinear_ratio(vr(0, 0), vr(1, 1), vr(2, 0)).kind == CollinearRatio::Kind::NotCollinear);

    auto r3 = collinear_ratio(vr(0, 0), vr(3, 0), vr(4, 0));
    REQUIRE(r3.kind == CollinearRatio::Kind::Between);
    CHECK(r3.lowest_terms == std::make_pair(Int(3), Int(1)));

    CHECK(collinear_ratio(vr(0, 0), vr(5, 0), vr(4, 0)).kind == CollinearRatio::Kind::Outside);
    CHECK_THROWS_WITH_AS(collinear_ratio(vr(1, 1), vr(0, 0), vr(1, 1)),
                         doctest::Contains("DegenerateSegment"), Error);

    CHECK(ratio_between_is(vr(0, 0), vr(2, 0), vr(3, 0), 2, 1));
    CHECK(!ratio_between_is(vr(0, 0), vr(2, 0), vr(3, 0), 3, 1));
}

TEST_CASE("hexagon vertices: side equals circumradius, exactly") {
    Hexagon h{vr(1, 2), Scalar(Rat(7, 2)), 1};
    for (int k = 0; k < 6; ++k) {
        CHECK(dist2(h.vertex(k), h.vertex(k + 1)) == h.circumradius * h.circumradius);
        CHECK(dist2(h.vertex(k), h.center) == h.circumradius * h.circumradius);
    }
    CHECK(h.vertex(6) == h.vertex(0));
    // antipodal vertex is the reflection through the center
    for (int k = 0; k < 6; ++k)
        CHECK(h.vertex(k + 3) == h.center + (h.center - h.vertex(k)) - (h.center - h.center));
}

TEST_CASE("segment helpers") {
    CHECK(on_segment(vr(1, 0), vr(0, 0), vr(2, 0)));
    CHECK(!on_segment(vr(3, 0), vr(0, 0), vr(2, 0)));
    CHECK(point_segment_dist2(vr(1, 1), vr(0, 0), vr(2, 0)) == Scalar(1));
    CHECK(point_segment_dist2(vr(-2, 0), vr(0, 0), vr(2, 0)) == Scalar(4));
    // segment through the origin dips to zero even though endpoints are far
    CHECK(point_segment_dist2(vr(0, 0), vr(-2, 0), vr(2, 0)) == Scalar(0));
}

TEST_CASE("angular order comparator") {
    std::vector<Vec2> dirs = {unit_dir_30(0), unit_dir_30(2), unit_dir_30(3),
                              unit_dir_30(7), unit_dir_30(11)};
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = 0; j < dirs.size(); ++j)
            CHECK(angle_less_ccw(dirs[i], dirs[j]) == (i < j));
}
