#pragma once

#include "lcmsep/trace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcmsep {

enum class Problem { LP_MLCV, LP_CV, ZCC, HET, VTR, ETE, TAR_STAR, VEC, LCM_M };

std::string problem_name(Problem p);
Problem parse_problem(const std::string& s);

struct CheckOptions {
    double epsilon = 1e-6;  // convergence gap bound
    long min_cycles = 2;    // cyclic predicates below this are Inconclusive
    std::optional<Hexagon> hexagon;
    std::vector<int> vertex_assignment;  // robot sim_id -> home vertex
    std::vector<Rat> expansion;          // ETE d(i) table
    Scalar chord_d{0};                   // TAR(d)* step length
};

/// Verdict of a predicate checker. Violated results carry a witness that can
/// be re-evaluated in isolation via recheck_witness.
struct CheckResult {
    enum class Verdict { Satisfied, Violated, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    long cycles = 0;     // completed cycles / patterns / rotations
    std::string clause;  // violated clause, or the inconclusive reason
    std::optional<Rat> witness_time;
    std::optional<int> witness_robot;
    std::vector<std::pair<std::string, std::string>> witness;  // clause-specific values
    std::string details;
};

CheckResult check_convergence_family(Problem p, const Trace& tr, const CheckOptions& opts);
CheckResult check_traversal_family(Problem p, const Trace& tr, const CheckOptions& opts);
CheckResult check_expansion_family(Problem p, const Trace& tr, const CheckOptions& opts);
CheckResult check_lcm_m(const Trace& tr, const CheckOptions& opts);

CheckResult check_problem(Problem p, const Trace& tr, const CheckOptions& opts);

/// Re-evaluates a Violated verdict's witness clause against the trace.
bool recheck_witness(const Trace& tr, const CheckResult& res, const CheckOptions& opts);

/// ETE formation instants (time, pattern index), index 0 = the initial pattern.
std::vector<std::pair<Rat, long>> ete_formations(const Trace& tr, const CheckOptions& opts);

/// Lemma-style two-activations-ago bound for ZCC traces: at each of a robot's
/// move ends, its distance to the other robot must not exceed the distance at
/// the move end two of its own activations earlier.
std::optional<CheckResult> zcc_two_step_violation(const Trace& tr);

}  // namespace lcmsep
