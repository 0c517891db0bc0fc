#include "lcmsep/scenario.hpp"

#include "lcmsep/adversary.hpp"
#include "lcmsep/error.hpp"
#include "lcmsep/prng.hpp"

#include <json.hpp>

#include <cmath>
#include <istream>

namespace lcmsep {

using nlohmann::json;

namespace {

Scalar scalar_of(const json& j) { return parse_scalar(j.get<std::string>()); }

Vec2 vec_of(const json& j) { return {scalar_of(j.at(0)), scalar_of(j.at(1))}; }

std::vector<Vec2> expand_placement(const Scenario& sc) {
    if (!sc.points.empty()) return sc.points;
    if (sc.pattern == "hexagon-opposite") {
        if (!sc.hexagon) throw Error("BadScenario", "hexagon-opposite needs a hexagon");
        int i = sc.vertex_assignment.empty() ? 0 : sc.vertex_assignment[0];
        return {sc.hexagon->vertex(i), sc.hexagon->vertex(i + 3)};
    }
    if (sc.pattern == "hexagon-vertices") {
        if (!sc.hexagon || sc.vertex_assignment.empty())
            throw Error("BadScenario", "hexagon-vertices needs a hexagon and assignments");
        std::vector<Vec2> pts;
        for (int v : sc.vertex_assignment) pts.push_back(sc.hexagon->vertex(v));
        return pts;
    }
    if (sc.pattern == "circle+center") {
        int n = sc.robots ? sc.robots : 4;
        // integer placements with the center robot first
        std::vector<Vec2> pts{{Scalar(0), Scalar(0)}};
        auto vi = [](long x, long y) { return Vec2{Scalar(Rat(x)), Scalar(Rat(y))}; };
        if (n == 3) {
            pts.push_back(vi(4, 0));
            pts.push_back(vi(-4, 0));
        } else if (n == 4) {
            pts.push_back(vi(0, 3));
            pts.push_back(vi(-3, 0));
            pts.push_back(vi(0, -3));
        } else if (n == 5) {
            pts.push_back(vi(5, 0));
            pts.push_back(vi(-5, 0));
            pts.push_back(vi(3, 4));
            pts.push_back(vi(-3, -4));
        } else {
            throw Error("BadScenario", "circle+center placements cover 3..5 robots");
        }
        return pts;
    }
    if (sc.pattern == "collinear-2:1") {
        return {{Scalar(0), Scalar(0)},
                {Scalar(2) * sc.unit, Scalar(0)},
                {Scalar(3) * sc.unit, Scalar(0)}};
    }
    if (sc.pattern == "triangle-on-circle") {
        if (!sc.jitter) {
            Scalar r = sc.unit;
            return {r * unit_dir_30(0), r * unit_dir_30(4), r * unit_dir_30(8)};
        }
        Prng rng(sc.seed ^ 0x7261646975735ULL);
        double R = to_double(sc.unit);
        double base = rng.uniform01() * 2 * M_PI;
        std::vector<Vec2> pts;
        for (int k = 0; k < 3; ++k) {
            double ang = base + k * 2 * M_PI / 3 + (rng.uniform01() - 0.5) * 0.5;
            pts.push_back({scalar_from_double(R * std::cos(ang)),
                           scalar_from_double(R * std::sin(ang))});
        }
        return pts;
    }
    if (sc.pattern == "pair")
        return {{Scalar(0), Scalar(0)}, {sc.pair_gap, Scalar(0)}};
    throw Error("BadScenario", "unknown placement pattern '" + sc.pattern + "'");
}

AdversaryPolicy build_policy(const Scenario& sc, int robot_count) {
    AdversaryPolicy p;
    if (sc.policy == "fsynch") {
        p = fsynch_policy(robot_count);
    } else if (sc.policy == "round-robin") {
        p = round_robin_policy(robot_count);
    } else if (sc.policy == "random") {
        switch (canonicalize_kind(sc.scheduler)) {
            case SchedulerKind::FSYNCH: p = fsynch_policy(robot_count); break;
            case SchedulerKind::SSYNCH:
                p = random_ssynch_policy(robot_count, sc.seed, sc.fairness_window);
                break;
            case SchedulerKind::RSYNCH:
                p = random_rsynch_policy(robot_count, sc.seed, sc.rsynch_prefix,
                                         sc.fairness_window);
                break;
            default:
                p = random_async_policy(sc.scheduler, robot_count, sc.seed, sc.fairness_window);
                break;
        }
    } else if (sc.policy == "rdv-adversary") {
        const RobotAlgorithm* alg = find_algorithm(sc.algorithm);
        if (!alg) throw Error("BadScenario", "unknown algorithm " + sc.algorithm);
        p = rdv_adversary(*alg, robot_count);
    } else if (sc.policy == "starve-then-release") {
        p = starve_then_release(robot_count, sc.target, sc.starve_rounds, sc.fairness_window);
    } else if (sc.policy == "rsynch-prefix-switch") {
        p = rsynch_prefix_switch(robot_count, sc.rsynch_prefix, sc.target);
    } else {
        throw Error("BadScenario", "unknown schedule policy '" + sc.policy + "'");
    }
    if (sc.frames == "identity")
        p.frame = identity_frames();
    else if (sc.frames == "unit")
        p.frame = unit_normalizing_frames();
    else if (sc.frames == "fixed")
        p.frame = fixed_frames(sc.fixed_frames);
    else if (sc.frames != "default")
        throw Error("BadScenario", "unknown frames mode '" + sc.frames + "'");
    return p;
}

}  // namespace

Scenario parse_scenario(std::istream& is, const std::string& name_hint) {
    json j;
    try {
        j = json::parse(is);
    } catch (const json::exception& e) {
        throw Error("BadScenario", std::string("scenario does not parse: ") + e.what());
    }
    Scenario sc;
    sc.name = j.value("name", name_hint);
    sc.model = parse_capability(j.at("model").get<std::string>());
    sc.scheduler = parse_kind(j.at("scheduler").get<std::string>());
    sc.algorithm = j.at("algorithm").get<std::string>();
    sc.cross_model = j.value("cross_model", false);

    if (j.contains("placement")) {
        const json& pl = j.at("placement");
        if (pl.contains("explicit"))
            for (const auto& p : pl.at("explicit")) sc.points.push_back(vec_of(p));
        sc.pattern = pl.value("pattern", std::string{});
        if (pl.contains("center") || pl.contains("circumradius")) {
            Hexagon h;
            h.center = pl.contains("center") ? vec_of(pl.at("center")) : Vec2{Scalar(0), Scalar(0)};
            h.circumradius = pl.contains("circumradius") ? scalar_of(pl.at("circumradius")) : Scalar(4);
            h.phase_30 = pl.value("phase_30", 0);
            sc.hexagon = h;
        }
        if (pl.contains("vertices")) sc.vertex_assignment = pl.at("vertices").get<std::vector<int>>();
        sc.robots = pl.value("robots", 0);
        if (pl.contains("gap")) sc.pair_gap = scalar_of(pl.at("gap"));
        if (pl.contains("unit")) sc.unit = scalar_of(pl.at("unit"));
        sc.jitter = pl.value("jitter", false);
    }

    if (j.contains("params")) {
        const json& pr = j.at("params");
        if (pr.contains("chord_d")) sc.params.chord_d = scalar_of(pr.at("chord_d"));
        if (pr.contains("expansion"))
            for (const auto& d : pr.at("expansion")) sc.params.expansion.push_back(parse_rat(d.get<std::string>()));
    }

    if (j.contains("schedule")) {
        const json& s = j.at("schedule");
        sc.policy = s.value("policy", std::string{"fsynch"});
        sc.frames = s.value("frames", std::string{"default"});
        sc.rsynch_prefix = s.value("prefix", 0);
        sc.target = s.value("target", 0);
        sc.starve_rounds = s.value("starve_rounds", 0);
        if (s.contains("fixed_frames"))
            for (const auto& f : s.at("fixed_frames"))
                sc.fixed_frames.emplace_back(parse_rat(f.at(0).get<std::string>()),
                                             scalar_of(f.at(1)));
    }

    sc.seed = j.value("seed", 1);
    sc.horizon = j.value("horizon", 100);
    sc.fairness_window = j.value("fairness_window", 8);
    if (j.contains("predicate")) sc.predicate = parse_problem(j.at("predicate").get<std::string>());
    if (j.contains("epsilon")) sc.epsilon = std::stod(j.at("epsilon").get<std::string>());
    sc.min_cycles = j.value("min_cycles", 2);
    return sc;
}

std::vector<std::string> lint_scenario(const Scenario& sc) {
    std::vector<std::string> issues;
    const RobotAlgorithm* alg = find_algorithm(sc.algorithm);
    if (!alg) {
        issues.push_back("unknown algorithm '" + sc.algorithm + "'");
        return issues;
    }
    if (!sc.cross_model) {
        if (alg->home_model() != sc.model)
            issues.push_back("model differs from the algorithm's home model " +
                             capability_name(alg->home_model()) + " (set cross_model to override)");
        if (alg->home_scheduler() != sc.scheduler &&
            canonicalize_kind(alg->home_scheduler()) != canonicalize_kind(sc.scheduler))
            issues.push_back("scheduler differs from the algorithm's home scheduler " +
                             kind_name(alg->home_scheduler()) + " (set cross_model to override)");
    }
    try {
        auto pts = expand_placement(sc);
        if (pts.size() < 2) issues.push_back("placement needs at least two robots");
    } catch (const Error& e) {
        issues.push_back(e.what());
    }
    if (sc.horizon <= 0) issues.push_back("horizon must be positive");
    if (sc.algorithm.rfind("het", 0) == 0 && !sc.hexagon)
        issues.push_back("hexagon algorithms need a declared hexagon");
    if (sc.algorithm.rfind("tar_star", 0) == 0 && sign(sc.params.chord_d) <= 0)
        issues.push_back("tar_star needs a positive chord_d parameter");
    if (sc.algorithm.rfind("ete", 0) == 0 && sc.params.expansion.empty())
        issues.push_back("ete needs an expansion schedule");
    return issues;
}

PreparedRun prepare_run(const Scenario& sc) {
    auto issues = lint_scenario(sc);
    if (!issues.empty()) throw Error("BadScenario", issues.front());

    PreparedRun run;
    const RobotAlgorithm* alg = find_algorithm(sc.algorithm);
    std::vector<Vec2> pts = expand_placement(sc);
    int n = static_cast<int>(pts.size());

    run.request.model = sc.model;
    run.request.algorithm = alg;
    run.request.kind = sc.scheduler;
    run.request.horizon = sc.horizon;
    run.request.fairness_window = sc.fairness_window;
    run.request.initial.time = Rat(0);
    for (int i = 0; i < n; ++i) {
        RobotState r;
        r.sim_id = i;
        r.position = pts[i];
        run.request.initial.robots.push_back(std::move(r));
    }

    // per-robot static parameters; hexagon itineraries are the vertex list in
    // each robot's initialization frame (identity), plus its home index
    if (sc.hexagon && !sc.vertex_assignment.empty()) {
        for (int i = 0; i < n; ++i) {
            StaticParams p = sc.params;
            std::array<Vec2, 6> it;
            for (int k = 0; k < 6; ++k) it[k] = sc.hexagon->vertex(k);
            p.itinerary = it;
            p.home_vertex = sc.vertex_assignment[i % sc.vertex_assignment.size()];
            run.request.params.push_back(std::move(p));
        }
    } else {
        run.request.params.push_back(sc.params);
    }

    run.request.policy = build_policy(sc, n);

    run.opts.epsilon = sc.epsilon;
    run.opts.min_cycles = sc.min_cycles;
    run.opts.hexagon = sc.hexagon;
    run.opts.vertex_assignment = sc.vertex_assignment;
    run.opts.expansion = sc.params.expansion;
    run.opts.chord_d = sc.params.chord_d;
    run.predicate = sc.predicate;
    return run;
}

}  // namespace lcmsep
