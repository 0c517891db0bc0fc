#include <doctest.h>

#include "lcmsep/checkers.hpp"
#include "lcmsep/engine.hpp"
#include "lcmsep/prng.hpp"

#include "test_support.hpp"

using namespace lcmsep;
using namespace lcmsep::testsup;

namespace {
const StaticParams kNoParams{};

SnapshotEntry entry(Vec2 p, std::vector<std::string> colors = {}) {
    return SnapshotEntry{std::move(p), std::move(colors)};
}
}  // namespace

TEST_CASE("ete_scale_target examples") {
    CHECK(ete_scale_target(Rat(3), Rat(0), Rat(2)) == 6);
    CHECK(ete_scale_target(Rat(7, 5), Rat(1, 5), Rat(2)) == 2);  // floor(13/5)

    // point set {-3,-1,4}, centroid 0, d = 2: targets  {-6,-2,8}; shifting all
    // points by 3/10 leaves every target unchanged
    std::vector<Rat> xs{Rat(-3), Rat(-1), Rat(4)};
    std::vector<Int> base, shifted;
    Rat g(0), gs(0);
    for (const Rat& x : xs) g += x;
    g /= 3;
    for (const Rat& x : xs) base.push_back(ete_scale_target(x, g, Rat(2)));
    CHECK(base == std::vector<Int>{-6, -2, 8});
    Rat shift(3, 10);
    for (const Rat& x : xs) gs += x + shift;
    gs /= 3;
    for (const Rat& x : xs) shifted.push_back(ete_scale_target(x + shift, gs, Rat(2)));
    CHECK(base == shifted);
}

TEST_CASE("floor_margin: shift inside the bound never changes targets") {
    Prng rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Vec2> pts;
        int n = 3 + static_cast<int>(rng.below(4));
        for (int i = 0; i < n; ++i)
            pts.push_back({Scalar(Rat(rng.range(-40, 40), 1 + rng.below(7))),
                           Scalar(Rat(rng.range(-40, 40), 1 + rng.below(7)))});
        Rat d(1 + static_cast<long>(rng.below(6)), 1 + rng.below(3));
        FloorMargin m = floor_margin(pts, d);
        REQUIRE(m.delta_x > 0);
        REQUIRE(m.delta_x <= 1);
        REQUIRE(m.epsilon > 0);
        REQUIRE(m.epsilon < std::min(m.delta_x, m.delta_y));

        auto targets = [&](const Rat& shift) {
            std::vector<Vec2> moved;
            for (const auto& p : pts) moved.push_back({p.x + Scalar(shift), p.y + Scalar(shift)});
            FloorMargin mm = floor_margin(moved, d);
            return std::make_pair(mm.targets_x, mm.targets_y);
        };
        // epsilon/2 preserves everything
        auto small = targets(m.epsilon / 2);
        CHECK(small.first == m.targets_x);
        CHECK(small.second == m.targets_y);
        // a shift of 2 (far beyond any delta) changes at least one target
        auto big = targets(Rat(2));
        CHECK((big.first != m.targets_x || big.second != m.targets_y));
    }
}

TEST_CASE("floor_margin: delta = 1 when the map lands exactly on integers") {
    // points already at integer targets with integer d: in-floor values are
    // integers, so every delta is exactly 1
    std::vector<Vec2> pts{vr(-3, 0), vr(-1, 0), vr(4, 0)};
    FloorMargin m = floor_margin(pts, Rat(2));
    CHECK(m.delta_x == 1);
    CHECK(m.delta_y == 1);
    CHECK(m.epsilon == Rat(1, 2));

    // single point at the centroid: targets are floor(g); shifts keep a = b
    FloorMargin s = floor_margin({vr(7, 7)}, Rat(5));
    CHECK(s.targets_x == std::vector<Int>{7});
    CHECK(s.delta_x == 1);
}

TEST_CASE("derive_ete_roles orders the circle clockwise from the gap") {
    auto pts = ete_points(4);
    auto roles = derive_ete_roles(pts);
    REQUIRE(roles.has_value());
    CHECK(roles->center == 0);
    // circle positions: (0,3)=1, (-3,0)=2, (0,-3)=3; gap toward +x; clockwise
    // from the gap: (0,-3), (-3,0), (0,3)
    CHECK(roles->circle == std::vector<int>{3, 2, 1});

    // degenerate: no strict interior robot
    CHECK(!derive_ete_roles({vr(0, 0), vr(1, 0), vr(2, 0), vr(3, 0)}).has_value());
}

TEST_CASE("ETE counter: FSYNCH formations enumerate the binary counter") {
    for (int n : {3, 4, 5}) {
        auto pts = ete_points(n);
        std::vector<StaticParams> params(1);
        params[0].expansion = ete_schedule(n);
        long k = 1L << (n - 1);
        int rounds_needed = static_cast<int>(8 * (k + 2));
        ExecutionRequest req = request("ete.fcom.fsynch", pts, fsynch_policy(n),
                                       rounds_needed * n, params);
        Trace tr = run_execution(req);

        CheckOptions opts;
        opts.expansion = params[0].expansion;
        auto formations = ete_formations(tr, opts);
        REQUIRE(static_cast<long>(formations.size()) >= k + 1);

        auto roles = derive_ete_roles(pts);
        REQUIRE(roles.has_value());
        // B value read from the b lights (register 2), most significant last
        // in the clockwise role order; the wrap pattern C_k repeats C_{k-1}'s
        // placement, so its tuple is unconstrained
        for (long f = 0; f <= k; ++f) CHECK(formations[f].second == f);
        for (long f = 0; f < k; ++f) {
            const Rat& t = formations[f].first;
            long value = 0;
            for (std::size_t j = 0; j < roles->circle.size(); ++j) {
                if (tr.lights_at(roles->circle[j], t).values[2] == "1") value += 1L << j;
            }
            CHECK(value == f);
        }

        CheckResult res = check_expansion_family(Problem::ETE, tr, opts);
        CHECK(res.verdict == CheckResult::Verdict::Satisfied);
        CHECK(res.cycles >= k);
    }
}

TEST_CASE("ete compute: center robot resets the adder when others are initial") {
    // n=4; self is the center; all circle robots initial, mirrors initial
    std::vector<std::string> init{"initial", "initial", "0", "0", "0"};
    auto pts = ete_points(4);
    Snapshot s = snap({entry(pts[1], init), entry(pts[2], init), entry(pts[3], init)});
    StaticParams p;
    p.expansion = ete_schedule(4);
    const RobotAlgorithm* alg = find_algorithm("ete.fcom.fsynch");
    Decision d = alg->compute(ComputeInput{s, p});
    REQUIRE(d.lights.size() == 5);
    CHECK(d.lights[0].kind == LightOp::Kind::Set);  // status
    CHECK(d.lights[0].color == "final");
    CHECK(d.lights[2].color == "0");  // b
    CHECK(d.lights[3].color == "1");  // c
    CHECK(d.destination == vr(0, 0));
}

TEST_CASE("het compute examples") {
    Hexagon hex{vr(0, 0), Scalar(4), 0};
    StaticParams p = hex_params(hex, 0);
    const RobotAlgorithm* alg = find_algorithm("het.fsta.fsynch");

    // r at v_0 status 0: advance to 1 and head for v_5
    Snapshot s = snap({entry(hex.vertex(3) - hex.vertex(0))}, {{"0"}});
    Decision d = alg->compute(ComputeInput{s, p});
    CHECK(d.lights[0].color == "1");
    CHECK(d.destination == hex.vertex(5) - hex.vertex(0));

    // status 3: home
    Snapshot s3 = snap({entry(hex.vertex(3) - hex.vertex(1))}, {{"3"}});
    Decision d3 = alg->compute(ComputeInput{s3, p});
    CHECK(d3.lights[0].color == "0");
    CHECK(d3.destination == hex.vertex(0) - hex.vertex(1));
}

TEST_CASE("het FSYNCH: four rounds complete one traversal cycle") {
    Hexagon hex{vr(0, 0), Scalar(4), 0};
    std::vector<StaticParams> params{hex_params(hex, 0), hex_params(hex, 3)};
    ExecutionRequest req = request("het.fsta.fsynch", {hex.vertex(0), hex.vertex(3)},
                                   fsynch_policy(2), 16, params);
    Trace tr = run_execution(req);
    // after rounds 1..4 both robots are home again
    CHECK(tr.position_at(0, Rat(4)) == hex.vertex(0));
    CHECK(tr.position_at(1, Rat(4)) == hex.vertex(3));
    CHECK(tr.position_at(0, Rat(1)) == hex.vertex(5));
    CHECK(tr.position_at(1, Rat(1)) == hex.vertex(2));

    CheckOptions opts;
    opts.hexagon = hex;
    opts.vertex_assignment = {0, 3};
    opts.min_cycles = 2;
    CheckResult res = check_traversal_family(Problem::HET, tr, opts);
    CHECK(res.verdict == CheckResult::Verdict::Satisfied);
    CHECK(res.cycles == 2);
}

TEST_CASE("het lumi guards") {
    Hexagon hex{vr(0, 0), Scalar(4), 0};
    StaticParams p = hex_params(hex, 0);
    const RobotAlgorithm* alg = find_algorithm("het.lumi.rsynch");
    Vec2 diag = hex.vertex(3) - hex.vertex(0);

    Decision adv = alg->compute(ComputeInput{snap({entry(diag, {"0"})}, {{"0"}}), p});
    CHECK(adv.lights[0].color == "1");
    CHECK(adv.destination == hex.vertex(5) - hex.vertex(0));

    Decision stay = alg->compute(ComputeInput{snap({entry(diag, {"2"})}, {{"0"}}), p});
    CHECK(stay.lights.empty());
    CHECK(stay.destination == vr(0, 0));

    Decision wrap = alg->compute(ComputeInput{snap({entry(diag, {"0"})}, {{"3"}}), p});
    CHECK(wrap.lights[0].color == "0");
    CHECK(wrap.destination == hex.vertex(0) - hex.vertex(1));
}

TEST_CASE("tar_star compute examples") {
    const RobotAlgorithm* alg = find_algorithm("tar_star.lumi.rsynch");
    StaticParams p;
    p.chord_d = Scalar(1);
    // equilateral triangle on the unit circle; self at (1,0)
    Vec2 o1 = unit_dir_30(4) - unit_dir_30(0), o2 = unit_dir_30(8) - unit_dir_30(0);

    Decision d = alg->compute(ComputeInput{snap({entry(o1, {"0"}), entry(o2, {"0"})}, {{"0"}}), p});
    CHECK(d.lights[0].color == "1");
    // clockwise 60-degree chord from (1,0) about the local center (-1,0)+(1,0)... the
    // circumcircle of the local points is centered at -self
    Vec2 expect = (unit_dir_30(10) - unit_dir_30(0));
    CHECK(d.destination == expect);

    Decision d2 = alg->compute(ComputeInput{snap({entry(o1, {"1"}), entry(o2, {"1"})}, {{"0"}}), p});
    CHECK(d2.lights[0].color == "1");  // some other has status own+1

    Decision d3 = alg->compute(ComputeInput{snap({entry(o1, {"2"}), entry(o2, {"2"})}, {{"0"}}), p});
    CHECK(d3.lights.empty());
    CHECK(d3.destination == vr(0, 0));
}

TEST_CASE("lp_mlcv compute examples") {
    const RobotAlgorithm* fsta = find_algorithm("lp_mlcv.fsta.rsynch");
    Decision a = fsta->compute(ComputeInput{snap({entry(vr(2, 0))}, {{"A"}}), kNoParams});
    CHECK(a.lights[0].color == "B");
    CHECK(a.destination == vr(-1, 0));
    Decision b = fsta->compute(ComputeInput{snap({entry(vr(2, 0))}, {{"B"}}), kNoParams});
    CHECK(b.lights.empty());
    CHECK(b.destination == vr(1, 0));

    const RobotAlgorithm* fcom = find_algorithm("lp_mlcv.fcom.ssynch");
    Decision fa = fcom->compute(ComputeInput{snap({entry(vr(2, 0), {"A"})}), kNoParams});
    CHECK(fa.lights[0].color == "B");
    CHECK(fa.destination == vr(-1, 0));
    Decision fc = fcom->compute(ComputeInput{snap({entry(vr(2, 0), {"C"})}), kNoParams});
    CHECK(fc.lights[0].color == "C");
    CHECK(fc.destination == vr(1, 0));

    // zero-distance: stay and flag
    Decision z = fsta->compute(ComputeInput{snap({entry(vr(0, 0))}, {{"A"}}), kNoParams});
    CHECK(z.destination == vr(0, 0));
    CHECK(z.note.has_value());
}

TEST_CASE("vec compute examples") {
    const RobotAlgorithm* alg = find_algorithm("vec.fsta.async_m");
    Decision d = alg->compute(ComputeInput{snap({entry(vr(2, 0))}, {{"1"}}), kNoParams});
    CHECK(d.lights[0].color == "2");
    CHECK(d.destination == vr(1, 1));  // quarter turn about the midpoint (1,0)
    Decision s = alg->compute(ComputeInput{snap({entry(vr(2, 0))}, {{"2"}}), kNoParams});
    CHECK(s.destination == vr(0, 0));
    CHECK_THROWS_WITH_AS(alg->compute(ComputeInput{snap({entry(vr(0, 0))}, {{"1"}}), kNoParams}),
                         doctest::Contains("DegenerateSegment"), Error);
}

TEST_CASE("zcc compute examples") {
    const RobotAlgorithm* alg = find_algorithm("zcc.fsta.ssynch");
    Decision a = alg->compute(ComputeInput{snap({entry(vr(4, 0))}, {{"A"}}), kNoParams});
    CHECK(a.lights[0].color == "B");
    CHECK(a.destination == vr(2, 0));
    Decision b = alg->compute(ComputeInput{snap({entry(vr(4, 0))}, {{"B"}}), kNoParams});
    CHECK(b.lights[0].color == "A");
    CHECK(b.destination == vr(-1, 0));
}

TEST_CASE("lp_cv compute matches the lp structure") {
    const RobotAlgorithm* alg = find_algorithm("lp_cv.fsta.rsynch");
    Decision a = alg->compute(ComputeInput{snap({entry(vr(2, 0))}, {{"A"}}), kNoParams});
    CHECK(a.lights[0].color == "B");
    CHECK(a.destination == vr(-1, 0));

    const RobotAlgorithm* fcom = find_algorithm("lp_cv.fcom.async_m");
    Decision fb = fcom->compute(ComputeInput{snap({entry(vr(2, 0), {"B"})}), kNoParams});
    CHECK(fb.lights[0].color == "C");
    CHECK(fb.destination == vr(-1, 0));
}

TEST_CASE("vtr compute examples") {
    Hexagon hex{vr(0, 0), Scalar(4), 0};
    const RobotAlgorithm* alg = find_algorithm("vtr.fsta.async_m");
    // self at v_0, others at v_2, v_4 (the equilateral placement)
    Snapshot s = snap({entry(hex.vertex(2) - hex.vertex(0)), entry(hex.vertex(4) - hex.vertex(0))},
                      {{"A"}});
    Decision d = alg->compute(ComputeInput{s, kNoParams});
    CHECK(d.lights[0].color == "B");
    CHECK(d.destination == hex.vertex(3) - hex.vertex(0));  // the diagonal vertex

    Snapshot sC = snap({entry(hex.vertex(2) - hex.vertex(0)), entry(hex.vertex(4) - hex.vertex(0))},
                       {{"C"}});
    CHECK(alg->compute(ComputeInput{sC, kNoParams}).destination == vr(0, 0));

    // off-hexagon placement is rejected
    Snapshot bad = snap({entry(vr(1, 1)), entry(vr(2, 0))}, {{"A"}});
    CHECK_THROWS_WITH_AS(alg->compute(ComputeInput{bad, kNoParams}),
                         doctest::Contains("BadPattern"), Error);
}

TEST_CASE("vtr fcom guards and mirror writes") {
    Hexagon hex{vr(0, 0), Scalar(4), 0};
    const RobotAlgorithm* alg = find_algorithm("vtr.fcom.ssynch");
    auto others = [&](int va, int vb, std::vector<std::string> ca, std::vector<std::string> cb) {
        return snap({entry(hex.vertex(va) - hex.vertex(0), std::move(ca)),
                     entry(hex.vertex(vb) - hex.vertex(0), std::move(cb))});
    };
    // C_1, neighbors both state 0: advance and move to the diagonal
    Decision d = alg->compute(ComputeInput{others(2, 4, {"0", "0", "0"}, {"0", "0", "0"}), kNoParams});
    CHECK(d.lights[0].kind == LightOp::Kind::Increment);
    CHECK(d.destination == hex.vertex(3) - hex.vertex(0));

    // C_1, both neighbors done: guard false, but mirrors still update
    Decision d2 = alg->compute(ComputeInput{others(2, 4, {"2", "0", "0"}, {"2", "0", "0"}), kNoParams});
    CHECK(d2.lights[0].kind == LightOp::Kind::Keep);
    CHECK(d2.lights[1].kind == LightOp::Kind::Set);
    CHECK(d2.lights[2].kind == LightOp::Kind::Set);
    CHECK(d2.destination == vr(0, 0));
}

TEST_CASE("lcm_m compute examples") {
    // B's local view of the line (0, 2, 3)
    Snapshot b_view = snap({entry(vr(-2, 0)), entry(vr(1, 0))});
    const RobotAlgorithm* oblot = find_algorithm("lcm_m.oblot.fsynch");
    Decision db = oblot->compute(ComputeInput{b_view, kNoParams});
    CHECK(db.destination == vr(2, 0));  // away from A by |AB| = 2

    // C at the initial configuration is outside the trigger pattern and stays
    Snapshot c_view = snap({entry(vr(-3, 0)), entry(vr(-1, 0))});
    CHECK(oblot->compute(ComputeInput{c_view, kNoParams}).destination == vr(0, 0));

    const RobotAlgorithm* fsta = find_algorithm("lcm_m.fsta.async_lc");
    Decision f1 = fsta->compute(ComputeInput{snap({entry(vr(-2, 0)), entry(vr(1, 0))}, {{"0"}}),
                                             kNoParams});
    CHECK(f1.lights[0].color == "1");
    CHECK(f1.destination == vr(2, 0));
    // B at (0,4,6) with state 1: away by |AB|/2
    Decision f2 = fsta->compute(ComputeInput{snap({entry(vr(-4, 0)), entry(vr(2, 0))}, {{"1"}}),
                                             kNoParams});
    CHECK(f2.destination == vr(2, 0));
    // collocated other: stay
    Decision f3 = fsta->compute(ComputeInput{snap({entry(vr(-6, 0)), entry(vr(0, 0))}, {{"1"}}),
                                             kNoParams});
    CHECK(f3.destination == vr(0, 0));

    const RobotAlgorithm* fcom = find_algorithm("lcm_m.fcom.async_m");
    Decision g1 = fcom->compute(ComputeInput{snap({entry(vr(-2, 0)), entry(vr(1, 0), {"0"})})
                                             , kNoParams});
    CHECK(g1.lights[0].color == "1");
    CHECK(g1.destination == vr(2, 0));
    // C's view of (0,4,3): 3:1 with B's state visible as 1
    Decision g3 = fcom->compute(ComputeInput{snap({entry(vr(-3, 0)), entry(vr(1, 0), {"1"})})
                                             , kNoParams});
    CHECK(g3.destination == vr(3, 0));
}

TEST_CASE("purity and anonymity of compute") {
    Prng rng(6);
    Hexagon hex{vr(0, 0), Scalar(4), 0};
    StaticParams hexp = hex_params(hex, 0);
    StaticParams tar;
    tar.chord_d = Scalar(1);
    StaticParams ete;
    ete.expansion = ete_schedule(4);
    for (const std::string& id : algorithm_ids()) {
        const RobotAlgorithm* alg = find_algorithm(id);
        const StaticParams* p = &kNoParams;
        Snapshot s;
        if (id.rfind("het", 0) == 0) {
            p = &hexp;
            s = snap({entry(hex.vertex(3) - hex.vertex(0), {"0"})}, {{"0"}});
        } else if (id.rfind("tar_star", 0) == 0) {
            p = &tar;
            s = snap({entry(unit_dir_30(4) - unit_dir_30(0), {"0"}),
                      entry(unit_dir_30(8) - unit_dir_30(0), {"0"})},
                     {{"0"}});
        } else if (id.rfind("vtr", 0) == 0) {
            s = snap({entry(hex.vertex(2) - hex.vertex(0), {"0", "0", "0"}),
                      entry(hex.vertex(4) - hex.vertex(0), {"0", "0", "0"})},
                     {{"A"}});
        } else if (id.rfind("ete", 0) == 0) {
            p = &ete;
            std::vector<std::string> init{"initial", "initial", "0", "0", "0"};
            auto pts = ete_points(4);
            s = snap({entry(pts[1], init), entry(pts[2], init), entry(pts[3], init)});
        } else if (id.rfind("lcm_m", 0) == 0) {
            s = snap({entry(vr(-2, 0), {"0"}), entry(vr(1, 0), {"0"})}, {{"0"}});
        } else {
            s = snap({entry(vr(2, 0), {"A"})}, {{"A"}});
        }
        // align the snapshot with the model's visibility rules; own lights are
        // the algorithm's declared initial colors
        Capability m = alg->home_model();
        if (sees_own_lights(m)) {
            LightBank bank;
            for (const auto& ls : alg->lights()) bank.values.push_back(ls.initial);
            s.own_lights = bank;
        } else {
            s.own_lights.reset();
        }
        if (!sees_other_lights(m))
            for (auto& e : s.others) e.colors.clear();

        Decision d1 = alg->compute(ComputeInput{s, *p});
        Decision d2 = alg->compute(ComputeInput{s, *p});
        CHECK(d1.destination == d2.destination);

        Snapshot rev = s;
        std::reverse(rev.others.begin(), rev.others.end());
        Decision d3 = alg->compute(ComputeInput{rev, *p});
        CHECK(d1.destination == d3.destination);
        (void)rng;
    }
}
