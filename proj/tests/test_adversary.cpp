#include <doctest.h>

#include "lcmsep/adversary.hpp"
#include "lcmsep/checkers.hpp"
#include "lcmsep/engine.hpp"

#include "test_support.hpp"

using namespace lcmsep;
using namespace lcmsep::testsup;

namespace {
using Verdict = CheckResult::Verdict;

Trace run_against(const std::string& alg, AdversaryPolicy policy, std::vector<Vec2> pts,
                  int horizon, SchedulerKind kind,
                  std::vector<StaticParams> params = {StaticParams{}}) {
    ExecutionRequest req = request(alg, pts, std::move(policy), horizon, std::move(params));
    req.kind = kind;
    return run_execution(req);
}
}  // namespace

TEST_CASE("unit-normalizing frames make scaled configurations indistinguishable") {
    // the collinear pair (0,2,3) and its doubling (0,4,6), observed by the
    // middle robot
    Configuration c1 = config_of({vr(0, 0), vr(2, 0), vr(3, 0)});
    Configuration c2 = config_of({vr(0, 0), vr(4, 0), vr(6, 0)});
    FrameFn unit = unit_normalizing_frames();
    Snapshot s1 = take_snapshot(Capability::OBLOT, c1, 1, unit(1, vr(2, 0), c1));
    Snapshot s2 = take_snapshot(Capability::OBLOT, c2, 1, unit(1, vr(4, 0), c2));
    REQUIRE(s1.others.size() == s2.others.size());
    for (std::size_t i = 0; i < s1.others.size(); ++i) CHECK(s1.others[i] == s2.others[i]);

    // hexagons at radius 1 and radius 5: identical two-point views
    Hexagon small{vr(0, 0), Scalar(1), 0}, big{vr(7, 7), Scalar(5), 0};
    Configuration h1 = config_of({small.vertex(0), small.vertex(3)});
    Configuration h2 = config_of({big.vertex(0), big.vertex(3)});
    Snapshot t1 = take_snapshot(Capability::OBLOT, h1, 0, unit(0, h1.robots[0].position, h1));
    Snapshot t2 = take_snapshot(Capability::OBLOT, h2, 0, unit(0, h2.robots[0].position, h2));
    REQUIRE(t1.others.size() == 1);
    CHECK(t1.others[0] == t2.others[0]);

    // single-robot world: scale falls back to 1
    Configuration lone = config_of({vr(5, 5)});
    Frame f = unit(0, vr(5, 5), lone);
    CHECK(f.scale == Scalar(1));
}

TEST_CASE("rdv adversary: distance stays positive against all three shapes") {
    struct Case {
        const char* alg;
        bool constant;
    };
    for (const Case& c : {Case{"rdv.shape_swap", true}, Case{"rdv.shape_midpoint", false},
                          Case{"rdv.shape_stay", true}}) {
        const RobotAlgorithm* alg = find_algorithm(c.alg);
        REQUIRE(alg);
        // paired rounds share their four instants, so 1000 distinct event
        // times need 250 rounds of two activations
        int horizon = c.alg == std::string("rdv.shape_midpoint") ? 256 : 520;
        Trace tr = run_against(c.alg, rdv_adversary(*alg, 2), {vr(0, 0), vr(8, 0)}, horizon,
                               SchedulerKind::SSYNCH);
        auto times = tr.event_times();
        CHECK(times.size() >= 1000);
        std::size_t checked = 0;
        Scalar initial = dist2(tr.position_at(0, Rat(0)), tr.position_at(1, Rat(0)));
        for (const Rat& t : times) {
            if (checked >= 1000) break;
            Scalar d2 = dist2(tr.position_at(0, t), tr.position_at(1, t));
            CHECK(sign(d2) > 0);
            if (c.constant) CHECK(d2 == initial);
            ++checked;
        }
        CHECK(checked == 1000);
        CHECK(!validate_timeline(SchedulerKind::SSYNCH, tr.timeline, 2).has_value());
    }
}

TEST_CASE("rdv adversary: swap shape exchanges positions forever") {
    const RobotAlgorithm* alg = find_algorithm("rdv.shape_swap");
    Trace tr = run_against("rdv.shape_swap", rdv_adversary(*alg, 2), {vr(0, 0), vr(8, 0)}, 20,
                           SchedulerKind::SSYNCH);
    CHECK(tr.position_at(0, Rat(1)) == vr(8, 0));
    CHECK(tr.position_at(1, Rat(1)) == vr(0, 0));
    CHECK(tr.position_at(0, Rat(2)) == vr(0, 0));
}

TEST_CASE("rdv adversary: midpoint shape halves the gap but never closes it") {
    const RobotAlgorithm* alg = find_algorithm("rdv.shape_midpoint");
    Trace tr = run_against("rdv.shape_midpoint", rdv_adversary(*alg, 2), {vr(0, 0), vr(8, 0)}, 1000,
                           SchedulerKind::SSYNCH);
    // exact rationals: after 1000 single activations the gap is 8 / 2^1000 > 0
    Rat end = tr.end_time();
    Scalar gap2 = dist2(tr.position_at(0, end), tr.position_at(1, end));
    CHECK(sign(gap2) > 0);
    CHECK(!validate_timeline(SchedulerKind::SSYNCH, tr.timeline, 2).has_value());
}

TEST_CASE("starve_then_release rejects starvation beyond the fairness window") {
    CHECK_THROWS_WITH_AS(starve_then_release(2, 0, 100, 8), doctest::Contains("UnfairRequest"),
                         Error);
    // x = 0 degenerates to plain round-robin
    Trace tr = run_against("rdv.shape_stay", starve_then_release(2, 0, 0, 8), {vr(0, 0), vr(4, 0)},
                           8, SchedulerKind::SSYNCH);
    CHECK(tr.timeline.activations[0].sim_id == 1);
    CHECK(tr.timeline.activations[1].sim_id == 0);
}

TEST_CASE("starvation collapses the other-light ZCC variant (toward-move repetition)") {
    Trace tr = run_against("zcc.fcom_style.ssynch", starve_then_release(2, 0, 6, 8),
                           {vr(0, 0), vr(64, 0)}, 30, SchedulerKind::SSYNCH);
    // during the starvation phase robot 0 keeps seeing color A and halves the
    // gap monotonically: 64 -> 32 -> 16 -> 8 -> 4 -> 2 -> 1
    CHECK(tr.position_at(0, Rat(6)) == vr(63, 0));
    Scalar gap = dist2(tr.position_at(0, Rat(6)), tr.position_at(1, Rat(6)));
    CHECK(gap == Scalar(1));
    CHECK(!validate_timeline(SchedulerKind::SSYNCH, tr.timeline, 2).has_value());
    // the trace violates the ZCC oscillation structure
    CheckOptions opts;
    CheckResult res = check_convergence_family(Problem::ZCC, tr, opts);
    CHECK(res.verdict == Verdict::Violated);
}

TEST_CASE("starvation drives the other-light VEC variant past condition 5") {
    Trace tr = run_against("vec.fcom_style.ssynch", starve_then_release(2, 0, 3, 8),
                           {vr(0, 0), vr(2, 0)}, 12, SchedulerKind::SSYNCH);
    CheckOptions opts;
    CheckResult res = check_expansion_family(Problem::VEC, tr, opts);
    CHECK(res.verdict == Verdict::Violated);
    CHECK((res.clause == "condition-5" || res.clause == "transition-shape" ||
           res.clause == "square-containment"));
}

TEST_CASE("rsynch_prefix_switch defeats the FSTA hexagon traversal") {
    Hexagon hex{vr(0, 0), Scalar(4), 0};
    Trace tr = run_against("het.fsta.fsynch", rsynch_prefix_switch(2, 2, 0),
                           {hex.vertex(0), hex.vertex(3)}, 60, SchedulerKind::RSYNCH,
                           {hex_params(hex, 0), hex_params(hex, 3)});
    CheckOptions opts;
    opts.hexagon = hex;
    opts.vertex_assignment = {0, 3};
    CheckResult res = check_traversal_family(Problem::HET, tr, opts);
    CHECK(res.verdict == Verdict::Violated);
    CHECK(!validate_timeline(SchedulerKind::RSYNCH, tr.timeline, 2).has_value());
}

TEST_CASE("rsynch_prefix_switch stalls or breaks the triangle rotation") {
    std::vector<StaticParams> p(1);
    p[0].chord_d = Scalar(1);
    // under unit frames the robots mis-scale their chords; the run either
    // leaves the circumcircle (checker violation) or degenerates until the
    // algorithm cannot even reconstruct a triangle
    bool broken = false;
    try {
        Trace tr = run_against("tar_star.lumi.rsynch", rsynch_prefix_switch(3, 1, 0),
                               {unit_dir_30(0), unit_dir_30(4), unit_dir_30(8)}, 40,
                               SchedulerKind::RSYNCH, std::move(p));
        CheckOptions opts;
        opts.chord_d = Scalar(1);
        opts.min_cycles = 10;
        CheckResult res = check_expansion_family(Problem::TAR_STAR, tr, opts);
        broken = res.verdict != Verdict::Satisfied;
    } catch (const Error& e) {
        broken = e.code() == "DegenerateTriangle" || e.code() == "BadPattern";
    }
    CHECK(broken);
}

TEST_CASE("rsynch_prefix_switch with a long prefix degenerates to FSYNCH") {
    Hexagon hex{vr(0, 0), Scalar(4), 0};
    Trace tr = run_against("het.fsta.fsynch", rsynch_prefix_switch(2, 100, 0),
                           {hex.vertex(0), hex.vertex(3)}, 16, SchedulerKind::RSYNCH,
                           {hex_params(hex, 0), hex_params(hex, 3)});
    CheckOptions opts;
    opts.hexagon = hex;
    opts.vertex_assignment = {0, 3};
    opts.min_cycles = 2;
    CheckResult res = check_traversal_family(Problem::HET, tr, opts);
    CHECK(res.verdict == Verdict::Satisfied);
}

TEST_CASE("adversary policies emit kind-valid timelines") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        int x = static_cast<int>(seed % 8);
        Trace tr = run_against("rdv.shape_stay", starve_then_release(2, seed % 2 ? 0 : 1, x, 8),
                               {vr(0, 0), vr(4, 0)}, 24, SchedulerKind::SSYNCH);
        CHECK(!validate_timeline(SchedulerKind::SSYNCH, tr.timeline, 2).has_value());

        Hexagon hex{vr(0, 0), Scalar(4), 0};
        Trace tq = run_against("het.fsta.fsynch", rsynch_prefix_switch(2, seed % 4, 0),
                               {hex.vertex(0), hex.vertex(3)}, 20, SchedulerKind::RSYNCH,
                               {hex_params(hex, 0), hex_params(hex, 3)});
        CHECK(!validate_timeline(SchedulerKind::RSYNCH, tq.timeline, 2).has_value());
    }
}

TEST_CASE("ete scenario pair: identical outcomes, diverging correct targets") {
    EteScenarioPair pair = ete_scenario_pair({-3, -1, 4}, Rat(3, 10));
    EtePairOutcome out = ete_pair_outcome(pair, Rat(2));
    CHECK(out.post_configs_identical);
    CHECK(out.snapshots_identical);
    CHECK(out.target_a != out.target_b);
    CHECK(out.target_a == vr(8, 0));
    CHECK(out.target_b == vr(7, 0));
    // movers land on the same integers in both scenarios
    CHECK(out.after_a.robots[0].position == vr(-6, 0));
    CHECK(out.after_a.robots[1].position == vr(-2, 0));

    CHECK_THROWS_WITH_AS(ete_scenario_pair({-3, -1, 4}, Rat(3, 2)), doctest::Contains("BadScenario"),
                         Error);
    CHECK_THROWS_WITH_AS(ete_scenario_pair({-3, -3, 6}, Rat(1, 2)), doctest::Contains("BadScenario"),
                         Error);
    CHECK_THROWS_WITH_AS(ete_scenario_pair({-3, 1, 2}, Rat(1, 2)), doctest::Contains("BadScenario"),
                         Error);
}
