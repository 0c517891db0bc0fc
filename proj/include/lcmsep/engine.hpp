#pragma once

#include "lcmsep/algorithms.hpp"
#include "lcmsep/policy.hpp"
#include "lcmsep/trace.hpp"

namespace lcmsep {

struct ExecutionRequest {
    Capability model{};
    const RobotAlgorithm* algorithm = nullptr;
    std::vector<StaticParams> params;  // one per robot, or a single shared entry
    Configuration initial;             // empty light banks are filled from the spec
    SchedulerKind kind{};
    AdversaryPolicy policy;
    int horizon = 100;  // max activations
    int fairness_window = 8;
};

/// Deterministic discrete-event execution of one scenario. Rejects policy
/// choices that violate the scheduler kind with InvalidAdversaryChoice.
Trace run_execution(ExecutionRequest req);

}  // namespace lcmsep
