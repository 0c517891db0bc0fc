#pragma once

#include "lcmsep/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcmsep {

enum class SchedulerKind { FSYNCH, RSYNCH, SSYNCH, ASYNC, ASYNC_M, ASYNC_CM, ASYNC_LC };

std::string kind_name(SchedulerKind k);
SchedulerKind parse_kind(const std::string& s);

/// CM-atomic has no distinct runtime; it executes as M-atomic.
inline SchedulerKind canonicalize_kind(SchedulerKind k) {
    return k == SchedulerKind::ASYNC_CM ? SchedulerKind::ASYNC_M : k;
}

struct Activation {
    int sim_id = 0;
    int index = 0;  // the robot's i-th cycle, 1-based
    Rat t_look, t_compute, t_move_begin, t_move_end;
};

struct EventTimeline {
    std::vector<Activation> activations;  // ordered by (t_look, sim_id)
    int fairness_window = 8;              // W: bounded-fairness parameter
    int rsynch_prefix = 0;                // declared FSYNCH prefix (RSYNCH)
};

struct ViolationReport {
    std::string constraint;  // first violated constraint
    std::string detail;
    int first = -1;   // offending activation index (into sorted order)
    int second = -1;  // second offender, when a pair is involved
};

/// nullopt = Valid.
std::optional<ViolationReport> validate_timeline(SchedulerKind kind, const EventTimeline& tl,
                                                 int robot_count);

}  // namespace lcmsep
