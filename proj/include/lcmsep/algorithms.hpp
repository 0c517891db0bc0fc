#pragma once

#include "lcmsep/schedule.hpp"
#include "lcmsep/world.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lcmsep {

/// One light register: name, palette, initial color.
struct LightSpec {
    std::string name;
    std::vector<std::string> colors;
    std::string initial;
};

/// Per-register write issued by a Compute. Increment steps cyclically through
/// the palette without the algorithm ever reading the current value, which
/// keeps self-increments legal for robots that cannot see their own lights.
struct LightOp {
    enum class Kind { Keep, Set, Increment };
    Kind kind = Kind::Keep;
    std::string color;

    static LightOp keep() { return {}; }
    static LightOp set(std::string c) { return {Kind::Set, std::move(c)}; }
    static LightOp increment() { return {Kind::Increment, {}}; }
};

struct Decision {
    Vec2 destination{Scalar(0), Scalar(0)};  // local coordinates; origin = stay
    std::vector<LightOp> lights;             // empty = keep everything
    std::optional<std::string> note;         // deviation flags (zero-distance etc.)
};

/// Static, shared or per-robot constants declared in the scenario. These are
/// problem constants ("a value known to the robots"), not runtime state.
struct StaticParams {
    Scalar chord_d{0};                             // TAR(d)*
    std::vector<Rat> expansion;                    // ETE d(i) table, read cyclically
    std::optional<std::array<Vec2, 6>> itinerary;  // hexagon waypoints, init-frame local
    int home_vertex = 0;                           // index of the robot's own vertex
};

struct ComputeInput {
    const Snapshot& snapshot;
    const StaticParams& params;
};

class RobotAlgorithm {
public:
    virtual ~RobotAlgorithm() = default;
    virtual std::string id() const = 0;
    virtual Capability home_model() const = 0;
    virtual SchedulerKind home_scheduler() const = 0;
    virtual std::vector<LightSpec> lights() const = 0;
    virtual Decision compute(const ComputeInput& in) const = 0;
};

const RobotAlgorithm* find_algorithm(const std::string& id);
std::vector<std::string> algorithm_ids();

/// floor(b + d*(a - b)), the scale-and-floor target map.
Int ete_scale_target(const Rat& a, const Rat& b, const Rat& d);

/// Floor margins of the target map over a point set: per-axis minimal
/// distance-to-next-integer delta, and a shift bound epsilon < min(delta)
/// under which uniformly translating the set leaves every target unchanged.
struct FloorMargin {
    std::vector<Int> targets_x, targets_y;
    Rat delta_x, delta_y;  // each in (0, 1]
    Rat epsilon;           // 0 < epsilon < min(delta_x, delta_y)
};
FloorMargin floor_margin(const std::vector<Vec2>& points, const Rat& d);

/// Role assignment for circle-plus-center patterns: the center robot is the
/// unique one strictly inside the circumcircle of the others (for three
/// robots: strictly between the other two); circle indices ascend clockwise
/// starting at the clockwise end of the largest angular gap.
struct EteRoles {
    int center;
    std::vector<int> circle;  // indices into the input list, clockwise from the gap
};
std::optional<EteRoles> derive_ete_roles(const std::vector<Vec2>& points);

/// d(i) read cyclically from the declared table.
Rat expansion_factor(const std::vector<Rat>& table, long index);

}  // namespace lcmsep
