#include "lcmsep/adversary.hpp"

#include "lcmsep/error.hpp"

#include <algorithm>
#include <memory>

namespace lcmsep {

FrameFn unit_normalizing_frames() {
    return [](int sim_id, const Vec2& pos, const Configuration& config) {
        std::optional<Scalar> best;
        for (const auto& r : config.robots) {
            if (r.sim_id == sim_id) continue;
            Scalar d2 = dist2(pos, r.position);
            if (!best || d2 < *best) best = d2;
        }
        Scalar scale(1);
        if (best && sign(*best) > 0) {
            if (auto s = sqrt_scalar(*best))
                scale = *s;
            else
                scale = scalar_from_double(std::sqrt(to_double(*best)));
        }
        return Frame::at(pos, {Scalar(1), Scalar(0)}, scale);
    };
}

AdversaryPolicy rdv_adversary(const RobotAlgorithm& algorithm, int robot_count) {
    if (robot_count != 2) throw Error("BadScenario", "rendezvous adversary expects two robots");
    // Classify the decision shape by probing the compute function once.
    Snapshot probe;
    probe.others.push_back(SnapshotEntry{Vec2{Scalar(1), Scalar(0)}, {}});
    LightBank own;
    for (const auto& s : algorithm.lights()) own.values.push_back(s.initial);
    if (sees_own_lights(algorithm.home_model())) probe.own_lights = own;
    StaticParams none;
    Vec2 dest = algorithm.compute(ComputeInput{probe, none}).destination;

    enum class Shape { Swap, Midpoint, Symmetric };
    Shape shape = Shape::Symmetric;
    if (dest == Vec2{Scalar(1), Scalar(0)}) shape = Shape::Swap;
    if (dest == Vec2{Scalar(Rat(1, 2)), Scalar(0)}) shape = Shape::Midpoint;

    auto round = std::make_shared<long>(0);
    AdversaryPolicy p;
    p.description = std::string("rdv-adversary/") +
                    (shape == Shape::Swap ? "swap" : shape == Shape::Midpoint ? "midpoint" : "symmetric");
    if (shape == Shape::Midpoint) {
        p.plan = [round](const PlanContext& ctx) {
            if (ctx.total_activations >= ctx.horizon) return std::vector<ActivationPlan>{};
            long r = (*round)++;
            return std::vector<ActivationPlan>{round_slot(static_cast<int>(r % 2), r)};
        };
        p.frame = identity_frames();
    } else {
        p.plan = [round](const PlanContext& ctx) {
            if (ctx.total_activations + 2 > ctx.horizon) return std::vector<ActivationPlan>{};
            long r = (*round)++;
            return std::vector<ActivationPlan>{round_slot(0, r), round_slot(1, r)};
        };
        if (shape == Shape::Swap) {
            p.frame = identity_frames();
        } else {
            // point-symmetric frames: the second robot sees the plane rotated
            // by 180 degrees, so equal local decisions preserve the symmetry
            p.frame = [](int sim_id, const Vec2& pos, const Configuration&) {
                return sim_id == 0 ? Frame::at(pos)
                                   : Frame::at(pos, Vec2{Scalar(-1), Scalar(0)});
            };
        }
    }
    return p;
}

AdversaryPolicy starve_then_release(int robot_count, int target, int x, int fairness_window) {
    if (x > (fairness_window - 1) * robot_count)
        throw Error("UnfairRequest", "starvation length exceeds the fairness window");
    if (target < 0 || target >= robot_count) throw Error("BadScenario", "unknown target robot");
    auto round = std::make_shared<long>(0);
    AdversaryPolicy p;
    p.description = "starve-then-release";
    p.frame = unit_normalizing_frames();
    p.plan = [round, target, x, robot_count](const PlanContext& ctx) {
        if (ctx.total_activations >= ctx.horizon) return std::vector<ActivationPlan>{};
        long r = (*round)++;
        int robot = r < x ? target : static_cast<int>((target + 1 + (r - x)) % robot_count);
        return std::vector<ActivationPlan>{round_slot(robot, r)};
    };
    return p;
}

AdversaryPolicy rsynch_prefix_switch(int robot_count, int prefix_rounds, int target) {
    if (target < 0 || target >= robot_count) throw Error("BadScenario", "unknown target robot");
    auto round = std::make_shared<long>(0);
    AdversaryPolicy p;
    p.description = "rsynch-prefix-switch";
    p.rsynch_prefix = prefix_rounds;
    auto unit = unit_normalizing_frames();
    p.frame = [unit, prefix_rounds](int sim_id, const Vec2& pos, const Configuration& cfg) {
        // identity during the synchronous prefix, unit-normalizing afterwards
        if (cfg.time < prefix_rounds) return Frame::at(pos);
        return unit(sim_id, pos, cfg);
    };
    p.plan = [round, prefix_rounds, target, robot_count](const PlanContext& ctx) {
        long r = (*round)++;
        if (r < prefix_rounds) {
            if (ctx.total_activations + robot_count > ctx.horizon)
                return std::vector<ActivationPlan>{};
            std::vector<ActivationPlan> out;
            for (int i = 0; i < robot_count; ++i) out.push_back(round_slot(i, r));
            return out;
        }
        if (ctx.total_activations >= ctx.horizon) return std::vector<ActivationPlan>{};
        long k = r - prefix_rounds;
        int robot = k % 2 == 0 ? target
                               : static_cast<int>((target + 1 + (k / 2) % (robot_count - 1)) %
                                                  robot_count);
        return std::vector<ActivationPlan>{round_slot(robot, r)};
    };
    return p;
}

EteScenarioPair ete_scenario_pair(const std::vector<long>& c, const Rat& epsilon) {
    const std::size_t n = c.size();
    if (n < 3) throw Error("BadScenario", "need at least three robots");
    if (!(epsilon > 0 && epsilon < 1)) throw Error("BadScenario", "epsilon must lie in (0, 1)");
    long sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (c[i] >= 0) throw Error("BadScenario", "c_1..c_{n-1} must be negative integers");
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            if (c[i] == c[j]) throw Error("BadScenario", "c_1..c_{n-1} must be distinct");
        sum += c[i];
    }
    if (c.back() < 0) throw Error("BadScenario", "c_n must be a natural number");
    sum += c.back();
    if (sum != 0) throw Error("BadScenario", "the c_i must sum to zero");

    EteScenarioPair pair;
    pair.epsilon = epsilon;
    for (long v : c) pair.c.push_back(Rat(v));
    pair.scenario_a.time = pair.scenario_b.time = Rat(0);
    for (std::size_t i = 0; i < n; ++i) {
        RobotState ra, rb;
        ra.sim_id = rb.sim_id = static_cast<int>(i);
        ra.position = Vec2{Scalar(Rat(c[i])), Scalar(0)};
        rb.position = i + 1 < n ? Vec2{Scalar(Rat(c[i]) + epsilon), Scalar(0)}
                                : Vec2{Scalar(Rat(c[i])), Scalar(0)};
        pair.scenario_a.robots.push_back(std::move(ra));
        pair.scenario_b.robots.push_back(std::move(rb));
    }
    return pair;
}

EtePairOutcome ete_pair_outcome(const EteScenarioPair& pair, const Rat& d) {
    const std::size_t n = pair.c.size();
    auto centroid_x = [&](const Configuration& cfg) {
        Rat g(0);
        for (const auto& r : cfg.robots) g += r.position.x.a;
        return g / Rat(n);
    };
    Rat ga = centroid_x(pair.scenario_a);
    Rat gb = centroid_x(pair.scenario_b);

    EtePairOutcome out;
    out.after_a = pair.scenario_a;
    out.after_b = pair.scenario_b;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.after_a.robots[i].position.x =
            Scalar(Rat(ete_scale_target(pair.scenario_a.robots[i].position.x.a, ga, d)));
        out.after_b.robots[i].position.x =
            Scalar(Rat(ete_scale_target(pair.scenario_b.robots[i].position.x.a, gb, d)));
    }
    out.target_a = Vec2{Scalar(Rat(ete_scale_target(pair.c.back(), ga, d))), Scalar(0)};
    out.target_b = Vec2{Scalar(Rat(ete_scale_target(pair.c.back(), gb, d))), Scalar(0)};

    out.post_configs_identical = true;
    for (std::size_t i = 0; i < n; ++i)
        out.post_configs_identical = out.post_configs_identical &&
                                     out.after_a.robots[i].position == out.after_b.robots[i].position;

    auto unit = unit_normalizing_frames();
    int last = static_cast<int>(n) - 1;
    Snapshot sa = take_snapshot(Capability::LUMI, out.after_a, last,
                                unit(last, out.after_a.robots[last].position, out.after_a));
    Snapshot sb = take_snapshot(Capability::LUMI, out.after_b, last,
                                unit(last, out.after_b.robots[last].position, out.after_b));
    out.snapshots_identical = sa.others.size() == sb.others.size();
    for (std::size_t i = 0; out.snapshots_identical && i < sa.others.size(); ++i)
        out.snapshots_identical = sa.others[i] == sb.others[i];
    return out;
}

}  // namespace lcmsep
