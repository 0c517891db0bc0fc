#pragma once

#include "lcmsep/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcmsep {

enum class Capability { OBLOT, FSTA, FCOM, LUMI };

std::string capability_name(Capability m);
Capability parse_capability(const std::string& s);

/// True iff the model lets a robot read its own lights.
inline bool sees_own_lights(Capability m) { return m == Capability::FSTA || m == Capability::LUMI; }
/// True iff the model lets a robot read other robots' lights.
inline bool sees_other_lights(Capability m) { return m == Capability::FCOM || m == Capability::LUMI; }

/// Values of a robot's light registers. Register names and palettes are
/// declared by the algorithm; a bank is just the current color per register.
struct LightBank {
    std::vector<std::string> values;

    friend bool operator==(const LightBank& a, const LightBank& b) { return a.values == b.values; }
    friend bool operator!=(const LightBank& a, const LightBank& b) { return !(a == b); }
};

/// Strictly monotone progress profile for a move, piecewise linear through
/// (0,0), breakpoints, (1,1). Empty breakpoints = constant speed.
struct SpeedProfile {
    std::vector<std::pair<Rat, Rat>> breakpoints;

    Rat progress(const Rat& u) const;
    bool valid() const;
};

struct PendingMove {
    Vec2 source;
    Vec2 destination;
    Rat begin;
    Rat end;
    SpeedProfile profile;
};

struct RobotState {
    int sim_id = 0;  // internal only; never reaches an algorithm
    Vec2 position;
    LightBank lights;
    std::optional<PendingMove> pending;
};

struct Configuration {
    Rat time;
    std::vector<RobotState> robots;

    const RobotState* find(int sim_id) const;
};

/// Position during a pending move. Requires begin <= t <= end.
Vec2 interpolate_move(const RobotState& state, const Rat& t);

/// Position at time t given the robot's current state (pending move or not).
Vec2 robot_position_at(const RobotState& state, const Rat& t);

struct SnapshotEntry {
    Vec2 pos;                         // observer-local coordinates
    std::vector<std::string> colors;  // visible light values; empty under OBLOT/FSTA

    friend bool operator==(const SnapshotEntry& a, const SnapshotEntry& b) {
        return a.pos == b.pos && a.colors == b.colors;
    }
};

/// One robot's filtered, locally-framed, deduplicated view. Entries are
/// sorted canonically, so identical views compare equal regardless of the
/// internal robot order (anonymity).
struct Snapshot {
    std::vector<SnapshotEntry> others;
    std::optional<LightBank> own_lights;
};

/// Total order on exact points (lexicographic); used for canonical sorting.
bool lex_less(const Vec2& u, const Vec2& v);

Snapshot take_snapshot(Capability model, const Configuration& config, int observer_id,
                       const Frame& frame);

}  // namespace lcmsep
