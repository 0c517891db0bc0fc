#include "lcmsep/schedule.hpp"

#include "lcmsep/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcmsep {

std::string kind_name(SchedulerKind k) {
    switch (k) {
        case SchedulerKind::FSYNCH: return "FSYNCH";
        case SchedulerKind::RSYNCH: return "RSYNCH";
        case SchedulerKind::SSYNCH: return "SSYNCH";
        case SchedulerKind::ASYNC: return "ASYNC";
        case SchedulerKind::ASYNC_M: return "ASYNC_M";
        case SchedulerKind::ASYNC_CM: return "ASYNC_CM";
        case SchedulerKind::ASYNC_LC: return "ASYNC_LC";
    }
    return "?";
}

SchedulerKind parse_kind(const std::string& s) {
    for (auto k : {SchedulerKind::FSYNCH, SchedulerKind::RSYNCH, SchedulerKind::SSYNCH,
                   SchedulerKind::ASYNC, SchedulerKind::ASYNC_M, SchedulerKind::ASYNC_CM,
                   SchedulerKind::ASYNC_LC})
        if (kind_name(k) == s) return k;
    throw Error("BadScenario", "unknown scheduler kind " + s);
}

namespace {

using VR = ViolationReport;

std::optional<VR> check_rounds(SchedulerKind kind, const std::vector<Activation>& acts,
                               int robot_count, int rsynch_prefix) {
    // Group by t_look; each group is one round.
    std::map<Rat, std::vector<int>> rounds;
    for (std::size_t i = 0; i < acts.size(); ++i) rounds[acts[i].t_look].push_back(static_cast<int>(i));

    std::set<int> prev_set;
    bool have_prev = false;
    int round_no = 0;
    for (const auto& [t, members] : rounds) {
        if (rat_den(t) != 1 || t < 0)
            return VR{"round-time-not-integer", "t_look = " + rat_str(t), members.front(), -1};
        const Activation& a0 = acts[members.front()];
        std::set<int> ids;
        for (int idx : members) {
            const Activation& a = acts[idx];
            if (a.t_compute != a0.t_compute || a.t_move_begin != a0.t_move_begin ||
                a.t_move_end != a0.t_move_end)
                return VR{"round-not-atomic", "event instants differ within round at t=" + rat_str(t),
                          members.front(), idx};
            if (!ids.insert(a.sim_id).second)
                return VR{"duplicate-activation", "robot activated twice in one round", idx, -1};
        }
        if (a0.t_move_end - a0.t_look >= 1)
            return VR{"round-overruns", "cycle does not fit inside its round", members.front(), -1};
        if (kind == SchedulerKind::FSYNCH && static_cast<int>(ids.size()) != robot_count)
            return VR{"fsynch-missing-robot", "round at t=" + rat_str(t) + " does not activate all robots",
                      members.front(), -1};
        if (kind == SchedulerKind::RSYNCH) {
            if (round_no < rsynch_prefix) {
                if (static_cast<int>(ids.size()) != robot_count)
                    return VR{"rsynch-prefix-not-full", "declared prefix round not fully synchronous",
                              members.front(), -1};
            } else if (have_prev && round_no > rsynch_prefix) {
                std::vector<int> inter;
                std::set_intersection(prev_set.begin(), prev_set.end(), ids.begin(), ids.end(),
                                      std::back_inserter(inter));
                if (!inter.empty())
                    return VR{"rsynch-consecutive-not-disjoint",
                              "robot " + std::to_string(inter.front()) + " in consecutive rounds",
                              members.front(), -1};
            }
        }
        prev_set = std::move(ids);
        have_prev = true;
        ++round_no;
    }
    return std::nullopt;
}

}  // namespace

std::optional<ViolationReport> validate_timeline(SchedulerKind kind, const EventTimeline& tl,
                                                 int robot_count) {
    kind = canonicalize_kind(kind);
    std::vector<Activation> acts = tl.activations;
    std::stable_sort(acts.begin(), acts.end(), [](const Activation& a, const Activation& b) {
        if (a.t_look != b.t_look) return a.t_look < b.t_look;
        return a.sim_id < b.sim_id;
    });

    // Event calculus: t_L < t_C < t_B < t_E per activation.
    for (std::size_t i = 0; i < acts.size(); ++i) {
        const Activation& a = acts[i];
        if (!(a.t_look < a.t_compute && a.t_compute < a.t_move_begin && a.t_move_begin < a.t_move_end))
            return VR{"event-order", "t_L < t_C < t_B < t_E violated", static_cast<int>(i), -1};
        if (a.t_look < 0) return VR{"negative-time", "timestamps must be non-negative", static_cast<int>(i), -1};
    }

    // Per-robot: contiguous cycle indices, t_E(i) < t_L(i+1).
    std::map<int, std::vector<int>> by_robot;
    for (std::size_t i = 0; i < acts.size(); ++i) by_robot[acts[i].sim_id].push_back(static_cast<int>(i));
    for (auto& [id, idxs] : by_robot) {
        for (std::size_t j = 0; j < idxs.size(); ++j) {
            const Activation& a = acts[idxs[j]];
            if (a.index != static_cast<int>(j) + 1)
                return VR{"cycle-index", "cycle indices must be 1,2,... per robot", idxs[j], -1};
            if (j > 0 && !(acts[idxs[j - 1]].t_move_end < a.t_look))
                return VR{"cycle-overlap", "robot's next Look precedes its previous Move-end",
                          idxs[j - 1], idxs[j]};
        }
    }

    switch (kind) {
        case SchedulerKind::FSYNCH:
        case SchedulerKind::SSYNCH:
        case SchedulerKind::RSYNCH:
            if (auto v = check_rounds(kind, acts, robot_count, tl.rsynch_prefix)) return v;
            break;
        case SchedulerKind::ASYNC_M:
        case SchedulerKind::ASYNC_CM:
            for (std::size_t i = 0; i < acts.size(); ++i)
                for (std::size_t j = 0; j < acts.size(); ++j) {
                    if (acts[i].sim_id == acts[j].sim_id) continue;
                    const Rat& lo = kind == SchedulerKind::ASYNC_M ? acts[j].t_move_begin
                                                                   : acts[j].t_compute;
                    if (acts[i].t_look >= lo && acts[i].t_look <= acts[j].t_move_end)
                        return VR{"M-atomicity", "Look inside another robot's atomic window",
                                  static_cast<int>(i), static_cast<int>(j)};
                }
            break;
        case SchedulerKind::ASYNC_LC:
            for (std::size_t i = 0; i < acts.size(); ++i)
                for (std::size_t j = 0; j < acts.size(); ++j) {
                    if (acts[i].sim_id == acts[j].sim_id) continue;
                    // left-open: simultaneous Looks are allowed
                    if (acts[i].t_look > acts[j].t_look && acts[i].t_look <= acts[j].t_compute)
                        return VR{"LC-atomicity", "Look inside another robot's Look-Compute window",
                                  static_cast<int>(i), static_cast<int>(j)};
                }
            break;
        case SchedulerKind::ASYNC:
            break;
    }

    // Bounded fairness: every window of W*n consecutive activations hits every robot.
    const int window = tl.fairness_window * std::max(robot_count, 1);
    if (robot_count > 0 && static_cast<int>(acts.size()) >= window) {
        for (std::size_t start = 0; start + window <= acts.size(); ++start) {
            std::set<int> seen;
            for (int j = 0; j < window; ++j) seen.insert(acts[start + j].sim_id);
            if (static_cast<int>(seen.size()) < robot_count)
                return VR{"unfair", "a robot is starved beyond the fairness window",
                          static_cast<int>(start), static_cast<int>(start + window - 1)};
        }
    }
    return std::nullopt;
}

}  // namespace lcmsep
