#pragma once

#include "lcmsep/checkers.hpp"
#include "lcmsep/scenario.hpp"

#include <iosfwd>
#include <string>

namespace lcmsep {

/// One scenario execution's outcome; serializes byte-reproducibly for a
/// fixed (scenario, seed) pair. Timing fields are simulated quantities.
struct Report {
    std::string scenario;
    std::string digest;  // FNV-1a of the scenario file bytes
    std::string algorithm;
    std::string model, scheduler;
    std::uint64_t seed = 0;
    int activations = 0;
    std::string sim_end;  // last event time, exact
    std::string predicate;
    std::string verdict;  // Satisfied | Violated | Inconclusive | none
    std::string clause;
    long cycles = 0;
    std::string witness_time;
    std::vector<std::string> deviations;

    int exit_code() const;  // 0 Satisfied / 1 Violated / 2 Inconclusive
};

std::string fnv1a_hex(const std::string& bytes);

Report make_report(const Scenario& sc, const std::string& digest, const Trace& trace,
                   const std::optional<CheckResult>& result);

void write_report(std::ostream& os, const Report& r);
Report read_report(std::istream& is);

}  // namespace lcmsep
