#pragma once

#include "lcmsep/schedule.hpp"
#include "lcmsep/world.hpp"

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace lcmsep {

/// A capability/scheduler pair. Canonical form is one of the 14 classes the
/// equivalence theorems leave distinct.
struct ModelId {
    Capability cap{};
    SchedulerKind sched{};

    friend bool operator==(const ModelId& a, const ModelId& b) {
        return a.cap == b.cap && a.sched == b.sched;
    }
    friend bool operator<(const ModelId& a, const ModelId& b) {
        if (a.cap != b.cap) return static_cast<int>(a.cap) < static_cast<int>(b.cap);
        return static_cast<int>(a.sched) < static_cast<int>(b.sched);
    }
};

std::string model_str(const ModelId& m);          // e.g. "FSTA^R"
ModelId parse_model(const std::string& s);

ModelId canonicalize_model(const ModelId& m);
/// The 14 canonical classes, strongest capabilities first.
std::vector<ModelId> canonical_models();
/// Inclusion between canonical classes: every problem solvable in `weaker` is
/// solvable in `stronger` (definitional chains plus the equivalence classes).
bool model_includes(const ModelId& stronger, const ModelId& weaker);

struct Evidence {
    std::string problem;
    ModelId model;
    bool solvable = true;
    std::string source;           // lemma/theorem citation or run id
    std::string tier = "curated";  // "curated" | "demonstrated"
};

struct RelationVerdict {
    enum class Kind { MorePowerful, LessPowerful, Equivalent, Orthogonal, NotLessPowerful, Unknown };
    Kind kind = Kind::Unknown;
    std::vector<std::string> left_witnesses;   // solvable left, unsolvable right
    std::vector<std::string> right_witnesses;  // solvable right, unsolvable left
};

std::string verdict_symbol(RelationVerdict::Kind k);

/// Curated-tier evidence closed under inclusion; throws InconsistentLedger on a
/// problem recorded both solvable and unsolvable for one class.
class SolvabilityLedger {
public:
    explicit SolvabilityLedger(const std::vector<Evidence>& entries);

    /// +1 solvable, -1 unsolvable, 0 unknown (canonical class, after closure).
    int status(const std::string& problem, const ModelId& model) const;
    std::vector<std::string> problems() const;
    const std::vector<Evidence>& demonstrated() const { return demonstrated_; }

private:
    std::map<std::string, std::map<ModelId, int>> closed_;
    std::vector<Evidence> demonstrated_;
};

RelationVerdict classify_relation(const ModelId& m1, const ModelId& m2,
                                  const SolvabilityLedger& ledger);

struct Landscape {
    std::vector<ModelId> models;
    std::vector<std::vector<RelationVerdict>> matrix;  // matrix[i][j] relates models[i] vs [j]
    std::map<std::string, std::vector<ModelId>> frontier;  // problem -> minimal solvable classes
};

Landscape landscape_report(const SolvabilityLedger& ledger, std::vector<ModelId> models);

struct LedgerFile {
    std::vector<Evidence> evidence;
    std::vector<std::string> notes;
};
LedgerFile load_ledger_file(std::istream& is);

}  // namespace lcmsep
