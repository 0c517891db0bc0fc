#pragma once

#include "lcmsep/prng.hpp"
#include "lcmsep/schedule.hpp"
#include "lcmsep/world.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lcmsep {

struct ActivationPlan {
    int sim_id = 0;
    Rat t_look, t_compute, t_move_begin, t_move_end;
    SpeedProfile profile;
};

struct PlanContext {
    const Configuration& config;
    const std::vector<int>& activation_counts;
    int total_activations;
    int horizon;
    Rat now;  // latest processed event time; plans must lie strictly after
};

using PlanFn = std::function<std::vector<ActivationPlan>(const PlanContext&)>;
using FrameFn = std::function<Frame(int sim_id, const Vec2& pos, const Configuration&)>;

/// Scheduling plus disorientation control for one execution. Policies carry
/// per-execution mutable state; construct a fresh one per run.
struct AdversaryPolicy {
    PlanFn plan;
    FrameFn frame;  // default: identity orientation at the robot
    int rsynch_prefix = 0;
    std::string description;
};

FrameFn identity_frames();
/// Static disorientation: one fixed frame per robot for the whole execution
/// (rotation given as tan(theta/2), exact unit).
FrameFn fixed_frames(std::vector<std::pair<Rat, Scalar>> per_robot_rot_scale);

/// All robots, every integer round.
AdversaryPolicy fsynch_policy(int robot_count);
/// SSYNCH singletons in cyclic order.
AdversaryPolicy round_robin_policy(int robot_count);
/// Scripted SSYNCH rounds (subsets per round, repeated cyclically if repeat).
AdversaryPolicy scripted_rounds_policy(std::vector<std::vector<int>> rounds, bool repeat);
/// Random non-empty subsets per round, fairness-forced. SSYNCH.
AdversaryPolicy random_ssynch_policy(int robot_count, std::uint64_t seed, int fairness_window);
/// Random RSYNCH: optional full prefix then random disjoint consecutive subsets.
AdversaryPolicy random_rsynch_policy(int robot_count, std::uint64_t seed, int prefix,
                                     int fairness_window);
/// Random valid timeline for ASYNC / ASYNC_M / ASYNC_CM / ASYNC_LC, with
/// overlapping cycles where the kind allows them.
AdversaryPolicy random_async_policy(SchedulerKind kind, int robot_count, std::uint64_t seed,
                                    int fairness_window);

/// Round times k, k+1/4, k+1/2, k+3/4 for a synchronous round at integer k.
ActivationPlan round_slot(int sim_id, long round);

}  // namespace lcmsep
