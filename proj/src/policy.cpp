#include "lcmsep/policy.hpp"

#include "lcmsep/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcmsep {

FrameFn identity_frames() {
    return [](int, const Vec2& pos, const Configuration&) { return Frame::at(pos); };
}

FrameFn fixed_frames(std::vector<std::pair<Rat, Scalar>> per_robot) {
    return [per_robot = std::move(per_robot)](int sim_id, const Vec2& pos, const Configuration&) {
        if (sim_id < 0 || sim_id >= static_cast<int>(per_robot.size())) return Frame::at(pos);
        const auto& [t, scale] = per_robot[sim_id];
        return Frame::from_tan_half(pos, t, scale);
    };
}

ActivationPlan round_slot(int sim_id, long round) {
    ActivationPlan p;
    p.sim_id = sim_id;
    p.t_look = Rat(round);
    p.t_compute = Rat(round) + Rat(1, 4);
    p.t_move_begin = Rat(round) + Rat(1, 2);
    p.t_move_end = Rat(round) + Rat(3, 4);
    return p;
}

namespace {

std::vector<ActivationPlan> round_plans(const std::vector<int>& robots, long round) {
    std::vector<ActivationPlan> out;
    for (int r : robots) out.push_back(round_slot(r, round));
    return out;
}

}  // namespace

AdversaryPolicy fsynch_policy(int robot_count) {
    auto round = std::make_shared<long>(0);
    AdversaryPolicy p;
    p.description = "fsynch";
    p.frame = identity_frames();
    p.plan = [robot_count, round](const PlanContext& ctx) {
        if (ctx.total_activations + robot_count > ctx.horizon) return std::vector<ActivationPlan>{};
        std::vector<int> all(robot_count);
        for (int i = 0; i < robot_count; ++i) all[i] = i;
        return round_plans(all, (*round)++);
    };
    return p;
}

AdversaryPolicy round_robin_policy(int robot_count) {
    auto round = std::make_shared<long>(0);
    AdversaryPolicy p;
    p.description = "round-robin";
    p.frame = identity_frames();
    p.plan = [robot_count, round](const PlanContext& ctx) {
        if (ctx.total_activations >= ctx.horizon) return std::vector<ActivationPlan>{};
        long r = (*round)++;
        return round_plans({static_cast<int>(r % robot_count)}, r);
    };
    return p;
}

AdversaryPolicy scripted_rounds_policy(std::vector<std::vector<int>> rounds, bool repeat) {
    auto idx = std::make_shared<std::size_t>(0);
    AdversaryPolicy p;
    p.description = "scripted";
    p.frame = identity_frames();
    p.plan = [rounds = std::move(rounds), repeat, idx](const PlanContext& ctx) {
        if (rounds.empty()) return std::vector<ActivationPlan>{};
        std::size_t i = *idx;
        if (i >= rounds.size() && !repeat) return std::vector<ActivationPlan>{};
        const auto& members = rounds[i % rounds.size()];
        if (ctx.total_activations + static_cast<int>(members.size()) > ctx.horizon)
            return std::vector<ActivationPlan>{};
        ++*idx;
        return round_plans(members, static_cast<long>(i));
    };
    return p;
}

AdversaryPolicy random_ssynch_policy(int robot_count, std::uint64_t seed, int fairness_window) {
    struct State {
        Prng rng;
        long round = 0;
        std::vector<long> last_round;
        explicit State(std::uint64_t s, int n) : rng(s), last_round(n, -1) {}
    };
    auto st = std::make_shared<State>(seed, robot_count);
    AdversaryPolicy p;
    p.description = "random-ssynch";
    p.frame = identity_frames();
    p.plan = [st, robot_count, fairness_window](const PlanContext& ctx) {
        std::vector<int> members;
        for (int r = 0; r < robot_count; ++r) {
            // Force robots close to the fairness bound, otherwise coin-flip.
            if (st->round - st->last_round[r] >= fairness_window - 1)
                members.push_back(r);
            else if (st->rng.chance(0.5))
                members.push_back(r);
        }
        if (members.empty()) members.push_back(static_cast<int>(st->rng.below(robot_count)));
        if (ctx.total_activations + static_cast<int>(members.size()) > ctx.horizon)
            return std::vector<ActivationPlan>{};
        for (int r : members) st->last_round[r] = st->round;
        return round_plans(members, st->round++);
    };
    return p;
}

AdversaryPolicy random_rsynch_policy(int robot_count, std::uint64_t seed, int prefix,
                                     int fairness_window) {
    struct State {
        Prng rng;
        long round = 0;
        std::set<int> prev;
        std::vector<long> last_round;
        explicit State(std::uint64_t s, int n) : rng(s), last_round(n, -1) {}
    };
    auto st = std::make_shared<State>(seed, robot_count);
    AdversaryPolicy p;
    p.description = "random-rsynch";
    p.frame = identity_frames();
    p.rsynch_prefix = prefix;
    p.plan = [st, robot_count, prefix, fairness_window](const PlanContext& ctx) {
        std::vector<int> members;
        if (st->round < prefix) {
            for (int r = 0; r < robot_count; ++r) members.push_back(r);
        } else {
            // any non-empty subset of the complement of the previous round
            std::vector<int> allowed;
            for (int r = 0; r < robot_count; ++r)
                if (!st->prev.count(r)) allowed.push_back(r);
            if (allowed.empty())  // previous round was full (end of prefix)
                allowed.push_back(static_cast<int>(st->rng.below(robot_count)));
            for (int r : allowed) {
                if (st->round - st->last_round[r] >= fairness_window - 1)
                    members.push_back(r);
                else if (st->rng.chance(0.5))
                    members.push_back(r);
            }
            if (members.empty()) members.push_back(allowed[st->rng.below(allowed.size())]);
            // A full post-prefix round would leave no disjoint successor.
            if (members.size() == static_cast<std::size_t>(robot_count))
                members.erase(members.begin() + st->rng.below(members.size()));
        }
        if (ctx.total_activations + static_cast<int>(members.size()) > ctx.horizon)
            return std::vector<ActivationPlan>{};
        st->prev = std::set<int>(members.begin(), members.end());
        for (int r : members) st->last_round[r] = st->round;
        return round_plans(members, st->round++);
    };
    return p;
}

AdversaryPolicy random_async_policy(SchedulerKind kind, int robot_count, std::uint64_t seed,
                                    int fairness_window) {
    struct State {
        Prng rng;
        bool emitted = false;
        explicit State(std::uint64_t s) : rng(s) {}
    };
    auto st = std::make_shared<State>(seed);
    AdversaryPolicy p;
    p.description = "random-" + kind_name(kind);
    p.frame = identity_frames();
    p.plan = [st, kind, robot_count, fairness_window](const PlanContext& ctx) {
        std::vector<ActivationPlan> out;
        if (st->emitted) return out;
        st->emitted = true;
        // Whole timeline up front. Looks sit on the 1/8 grid while Compute and
        // the move window sit strictly off-grid, so LC-atomicity holds by
        // construction and M/CM windows can be clipped just short of the next
        // on-grid Look.
        Prng& rng = st->rng;
        const Rat grid(1, 8);
        const Rat off_c(3, 32), off_b(7, 32), clip(1, 64);
        std::vector<Rat> next_free(robot_count, -off_b);
        std::vector<ActivationPlan> all;
        bool window_limited = kind == SchedulerKind::ASYNC_M || kind == SchedulerKind::ASYNC_CM;
        auto look_conflicts = [&](const Rat& t, int self) {
            if (!window_limited) return false;
            for (const auto& a : all) {
                if (a.sim_id == self) continue;
                const Rat& lo = kind == SchedulerKind::ASYNC_M ? a.t_move_begin : a.t_compute;
                if (t >= lo && t <= a.t_move_end) return true;
            }
            return false;
        };
        (void)fairness_window;
        for (int s = 0; s < ctx.horizon; ++s) {
            // Keep per-robot clocks within a bounded slack of the slowest
            // robot; this forces fair interleaving in time order, not just in
            // planning order.
            Rat min_nf = next_free[0];
            for (int r = 1; r < robot_count; ++r) min_nf = std::min(min_nf, next_free[r]);
            std::vector<int> candidates;
            for (int r = 0; r < robot_count; ++r)
                if (next_free[r] <= min_nf + 2) candidates.push_back(r);
            int robot = candidates[rng.below(candidates.size())];

            Rat t = next_free[robot] + off_b + grid * Rat(rng.range(0, 3));
            Int steps = floor_rat(t / grid);
            t = grid * Rat(steps);
            // Under CM-atomicity the fixed [t_C, t_B] part of the window must
            // not cover an existing Look; the only grid point inside it is
            // t + 1/8, so veto that placement as well.
            auto other_look_at = [&](const Rat& x) {
                for (const auto& b : all)
                    if (b.sim_id != robot && b.t_look == x) return true;
                return false;
            };
            while (look_conflicts(t, robot) || !(t > next_free[robot]) ||
                   (kind == SchedulerKind::ASYNC_CM && other_look_at(t + grid)))
                t += grid;

            ActivationPlan a;
            a.sim_id = robot;
            a.t_look = t;
            a.t_compute = t + off_c;
            a.t_move_begin = t + off_b;
            a.t_move_end = a.t_move_begin + grid * Rat(1 + rng.range(0, 5));
            if (window_limited) {
                const Rat lo = kind == SchedulerKind::ASYNC_M ? a.t_move_begin : a.t_compute;
                for (const auto& b : all)
                    if (b.sim_id != robot && b.t_look >= lo && b.t_look <= a.t_move_end &&
                        b.t_look - clip < a.t_move_end)
                        a.t_move_end = b.t_look - clip;
            }
            next_free[robot] = a.t_move_end;
            all.push_back(a);
        }
        return all;
    };
    return p;
}

}  // namespace lcmsep
