#pragma once

#include "lcmsep/checkers.hpp"
#include "lcmsep/engine.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace lcmsep {

/// A parsed scenario document: model, scheduler, algorithm, placement,
/// schedule policy, horizon, and the predicate to check.
struct Scenario {
    std::string name;
    Capability model{};
    SchedulerKind scheduler{};
    std::string algorithm;
    bool cross_model = false;  // allow model/scheduler away from the algorithm's home

    // placement: explicit coordinates or a named pattern
    std::vector<Vec2> points;
    std::string pattern;  // hexagon-opposite | circle+center | collinear-2:1 |
                          // triangle-on-circle | pair
    std::optional<Hexagon> hexagon;
    std::vector<int> vertex_assignment;
    int robots = 0;
    Scalar pair_gap{4};
    Scalar unit{1};
    bool jitter = false;  // triangle-on-circle: seed-random angles

    StaticParams params;

    // schedule policy and adversary knobs
    std::string policy = "fsynch";  // fsynch | round-robin | random |
                                    // rdv-adversary | starve-then-release |
                                    // rsynch-prefix-switch
    std::string frames = "default";  // default | identity | unit | fixed
    std::vector<std::pair<Rat, Scalar>> fixed_frames;  // static disorientation
    int rsynch_prefix = 0;
    int target = 0;
    int starve_rounds = 0;

    std::uint64_t seed = 1;
    int horizon = 100;
    int fairness_window = 8;

    std::optional<Problem> predicate;
    double epsilon = 1e-6;
    long min_cycles = 2;
};

Scenario parse_scenario(std::istream& is, const std::string& name_hint);

struct PreparedRun {
    ExecutionRequest request;
    CheckOptions opts;
    std::optional<Problem> predicate;
};

/// Expands placements, builds the policy, and assembles the execution
/// request. Overridable knobs (seed, horizon, epsilon, min_cycles) are taken
/// from the scenario passed in; mutate it before calling.
PreparedRun prepare_run(const Scenario& sc);

/// Structural validation without running: placement/algorithm/kind coherence.
/// Returns a list of problems; empty = lint-clean.
std::vector<std::string> lint_scenario(const Scenario& sc);

}  // namespace lcmsep
