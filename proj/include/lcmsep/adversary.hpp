#pragma once

#include "lcmsep/algorithms.hpp"
#include "lcmsep/policy.hpp"

namespace lcmsep {

/// Frames whose scale equals the observed nearest-neighbor distance, so every
/// snapshot arrives unit-normalized (scale 1 fallback when robots collide).
FrameFn unit_normalizing_frames();

/// Three-case strategy against the built-in rendezvous decision shapes:
/// swap shape - simultaneous activation (positions exchange forever);
/// midpoint shape - one robot at a time (distance halves, never zero);
/// anything else - simultaneous activation with point-symmetric frames.
AdversaryPolicy rdv_adversary(const RobotAlgorithm& algorithm, int robot_count);

/// Activates only `target` for x rounds under unit-normalizing frames, then
/// resumes round-robin. x must respect the bounded-fairness window.
AdversaryPolicy starve_then_release(int robot_count, int target, int x, int fairness_window);

/// FSYNCH prefix, then singleton activations alternating between the target
/// and the other robots (consecutive sets stay disjoint); unit-normalizing
/// frames after the prefix.
AdversaryPolicy rsynch_prefix_switch(int robot_count, int prefix_rounds, int target);

/// The two-scenario construction behind the ETE indistinguishability
/// argument: scenario A at integer coordinates c_i with zero sum, scenario B
/// with every robot but the last shifted by epsilon in (0, 1).
struct EteScenarioPair {
    Configuration scenario_a, scenario_b;
    std::vector<Rat> c;
    Rat epsilon;
};
EteScenarioPair ete_scenario_pair(const std::vector<long>& c, const Rat& epsilon);

struct EtePairOutcome {
    Configuration after_a, after_b;  // after r_1..r_{n-1} execute the target map
    Vec2 target_a, target_b;         // r_n's correct destination in each scenario
    bool post_configs_identical;
    bool snapshots_identical;  // r_n's unit-normalized views of the two outcomes
};
EtePairOutcome ete_pair_outcome(const EteScenarioPair& pair, const Rat& d);

}  // namespace lcmsep
