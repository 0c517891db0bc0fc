#pragma once

#include "lcmsep/algorithms.hpp"
#include "lcmsep/schedule.hpp"
#include "lcmsep/world.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lcmsep {

struct TraceEvent {
    enum class Kind { Look, Compute, MoveBegin, MoveEnd, LightChange, PatternFormed };
    Kind kind{};
    Rat t;
    int sim_id = -1;
    std::optional<Snapshot> snapshot;     // Look
    std::optional<Frame> frame;           // Look
    std::optional<Vec2> destination;      // Compute (global coordinates)
    std::optional<std::string> note;      // Compute deviation flag
    std::optional<Vec2> src, dst;         // MoveBegin (both) / MoveEnd (dst)
    std::optional<int> reg;               // LightChange
    std::optional<std::string> old_color, new_color;
    std::optional<long> pattern_index;    // PatternFormed annotation
};

struct MoveRecord {
    int sim_id;
    Rat t_begin, t_end;
    Vec2 src, dst;
    SpeedProfile profile;
};

struct LightRecord {
    int sim_id;
    Rat t;
    int reg;
    std::string old_color, new_color;
};

/// Complete timed record of one execution; the input to every checker.
struct Trace {
    std::string algorithm_id;
    Capability model{};
    SchedulerKind declared_kind{}, kind{};
    int robot_count = 0;
    std::vector<LightSpec> light_spec;
    Configuration initial;
    EventTimeline timeline;
    std::vector<TraceEvent> events;
    std::vector<MoveRecord> moves;       // ordered by t_begin
    std::vector<LightRecord> light_log;  // ordered by t
    std::vector<std::string> notes;

    Vec2 position_at(int sim_id, const Rat& t) const;
    /// Values at t; a change at exactly t is already visible.
    LightBank lights_at(int sim_id, const Rat& t) const;
    Configuration config_at(const Rat& t) const;
    /// Sorted unique times of all recorded events.
    std::vector<Rat> event_times() const;
    Rat end_time() const;
};

/// Colors of `target` as delivered to a Look at `t_look`.
std::vector<std::string> light_read_at(const Trace& trace, const Rat& t_look, int target);

void write_trace(std::ostream& os, const Trace& trace);
Trace read_trace(std::istream& is);

}  // namespace lcmsep
