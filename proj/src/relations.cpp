#include "lcmsep/relations.hpp"

#include "lcmsep/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>

namespace lcmsep {

namespace {

const char* sched_symbol(SchedulerKind k) {
    switch (k) {
        case SchedulerKind::FSYNCH: return "F";
        case SchedulerKind::RSYNCH: return "R";
        case SchedulerKind::SSYNCH: return "S";
        case SchedulerKind::ASYNC: return "A";
        case SchedulerKind::ASYNC_M: return "A_M";
        case SchedulerKind::ASYNC_CM: return "A_CM";
        case SchedulerKind::ASYNC_LC: return "A_LC";
    }
    return "?";
}

bool cap_geq(Capability a, Capability b) {
    if (a == b) return true;
    if (a == Capability::LUMI) return true;
    if (b == Capability::OBLOT) return true;
    return false;  // FSTA and FCOM are incomparable
}

bool sched_geq(SchedulerKind a, SchedulerKind b) {
    auto rank = [](SchedulerKind k) {
        switch (k) {
            case SchedulerKind::FSYNCH: return 0;
            case SchedulerKind::RSYNCH: return 1;
            case SchedulerKind::SSYNCH: return 2;
            default: return 3;
        }
    };
    if (a == b) return true;
    int ra = rank(a), rb = rank(b);
    if (ra < 3 && rb < 3) return ra <= rb;
    if (ra < 3) return true;   // any synchronous class covers every asynchronous one
    if (rb < 3) return false;
    // within the asynchronous fan: A_LC >= A; A_CM >= A_M >= A
    if (b == SchedulerKind::ASYNC) return true;
    if (a == SchedulerKind::ASYNC_CM && b == SchedulerKind::ASYNC_M) return true;
    return false;
}

/// All raw pairs that canonicalize into the class of m.
std::vector<ModelId> class_members(const ModelId& canon) {
    std::vector<ModelId> out;
    for (Capability c : {Capability::LUMI, Capability::FCOM, Capability::FSTA, Capability::OBLOT})
        for (SchedulerKind k :
             {SchedulerKind::FSYNCH, SchedulerKind::RSYNCH, SchedulerKind::SSYNCH,
              SchedulerKind::ASYNC_LC, SchedulerKind::ASYNC_CM, SchedulerKind::ASYNC_M,
              SchedulerKind::ASYNC}) {
            ModelId raw{c, k};
            if (canonicalize_model(raw) == canon) out.push_back(raw);
        }
    return out;
}

}  // namespace

std::string model_str(const ModelId& m) {
    return capability_name(m.cap) + "^" + sched_symbol(m.sched);
}

ModelId parse_model(const std::string& s) {
    auto caret = s.find('^');
    if (caret == std::string::npos) throw Error("BadScenario", "model must look like FSTA^R");
    ModelId m;
    m.cap = parse_capability(s.substr(0, caret));
    std::string k = s.substr(caret + 1);
    for (SchedulerKind kk : {SchedulerKind::FSYNCH, SchedulerKind::RSYNCH, SchedulerKind::SSYNCH,
                             SchedulerKind::ASYNC_LC, SchedulerKind::ASYNC_CM, SchedulerKind::ASYNC_M,
                             SchedulerKind::ASYNC})
        if (k == sched_symbol(kk)) return ModelId{m.cap, kk};
    throw Error("BadScenario", "unknown scheduler symbol " + k);
}

ModelId canonicalize_model(const ModelId& m) {
    Capability c = m.cap;
    SchedulerKind k = m.sched;
    if (c == Capability::LUMI)
        return {c, k == SchedulerKind::FSYNCH ? SchedulerKind::FSYNCH : SchedulerKind::RSYNCH};
    if (c == Capability::FCOM) {
        if (k == SchedulerKind::FSYNCH) return {Capability::LUMI, SchedulerKind::FSYNCH};
        if (k == SchedulerKind::RSYNCH) return {Capability::LUMI, SchedulerKind::RSYNCH};
        if (k == SchedulerKind::SSYNCH || k == SchedulerKind::ASYNC_LC)
            return {c, SchedulerKind::SSYNCH};
        return {c, SchedulerKind::ASYNC_M};  // A_CM = A_M = A for communication-only robots
    }
    // FSTA and OBLOT: colors of others are invisible, so CM = M and LC = A
    if (k == SchedulerKind::ASYNC_CM) return {c, SchedulerKind::ASYNC_M};
    if (k == SchedulerKind::ASYNC_LC) return {c, SchedulerKind::ASYNC};
    return {c, k};
}

std::vector<ModelId> canonical_models() {
    std::vector<ModelId> out;
    out.push_back({Capability::LUMI, SchedulerKind::FSYNCH});
    out.push_back({Capability::LUMI, SchedulerKind::RSYNCH});
    for (SchedulerKind k : {SchedulerKind::SSYNCH, SchedulerKind::ASYNC_M})
        out.push_back({Capability::FCOM, k});
    for (Capability c : {Capability::FSTA, Capability::OBLOT})
        for (SchedulerKind k : {SchedulerKind::FSYNCH, SchedulerKind::RSYNCH, SchedulerKind::SSYNCH,
                                SchedulerKind::ASYNC_M, SchedulerKind::ASYNC})
            out.push_back({c, k});
    return out;
}

bool model_includes(const ModelId& stronger, const ModelId& weaker) {
    ModelId cs = canonicalize_model(stronger), cw = canonicalize_model(weaker);
    if (cs == cw) return true;
    for (const ModelId& a : class_members(cs))
        for (const ModelId& b : class_members(cw))
            if (cap_geq(a.cap, b.cap) && sched_geq(a.sched, b.sched)) return true;
    return false;
}

std::string verdict_symbol(RelationVerdict::Kind k) {
    switch (k) {
        case RelationVerdict::Kind::MorePowerful: return ">";
        case RelationVerdict::Kind::LessPowerful: return "<";
        case RelationVerdict::Kind::Equivalent: return "=";
        case RelationVerdict::Kind::Orthogonal: return "perp";
        case RelationVerdict::Kind::NotLessPowerful: return ">=";
        case RelationVerdict::Kind::Unknown: return "?";
    }
    return "?";
}

SolvabilityLedger::SolvabilityLedger(const std::vector<Evidence>& entries) {
    const std::vector<ModelId> all = canonical_models();
    std::map<std::string, std::map<ModelId, int>> direct;
    for (const Evidence& e : entries) {
        if (e.tier != "curated") {
            demonstrated_.push_back(e);
            continue;
        }
        ModelId m = canonicalize_model(e.model);
        int want = e.solvable ? 1 : -1;
        int& slot = direct[e.problem][m];
        if (slot != 0 && slot != want)
            throw Error("InconsistentLedger",
                        e.problem + " recorded both solvable and unsolvable in " + model_str(m));
        slot = want;
    }
    // closure: solvable propagates to stronger classes, unsolvable to weaker
    for (auto& [prob, statuses] : direct) {
        std::map<ModelId, int> closed;
        for (const ModelId& m : all) {
            int v = 0;
            for (const auto& [src, s] : statuses) {
                if (s == 1 && model_includes(m, src)) {
                    if (v == -1)
                        throw Error("InconsistentLedger", prob + " inconsistent at " + model_str(m));
                    v = 1;
                }
                if (s == -1 && model_includes(src, m)) {
                    if (v == 1)
                        throw Error("InconsistentLedger", prob + " inconsistent at " + model_str(m));
                    v = -1;
                }
            }
            if (v != 0) closed[m] = v;
        }
        closed_[prob] = std::move(closed);
    }
}

int SolvabilityLedger::status(const std::string& problem, const ModelId& model) const {
    auto it = closed_.find(problem);
    if (it == closed_.end()) return 0;
    auto jt = it->second.find(canonicalize_model(model));
    return jt == it->second.end() ? 0 : jt->second;
}

std::vector<std::string> SolvabilityLedger::problems() const {
    std::vector<std::string> out;
    for (const auto& [p, _] : closed_) out.push_back(p);
    return out;
}

RelationVerdict classify_relation(const ModelId& m1, const ModelId& m2,
                                  const SolvabilityLedger& ledger) {
    ModelId c1 = canonicalize_model(m1), c2 = canonicalize_model(m2);
    RelationVerdict v;
    if (c1 == c2) {
        v.kind = RelationVerdict::Kind::Equivalent;
        return v;
    }
    bool identical_evidence = true;
    for (const std::string& p : ledger.problems()) {
        int s1 = ledger.status(p, c1), s2 = ledger.status(p, c2);
        if (s1 != s2) identical_evidence = false;
        if (s1 == 1 && s2 == -1) v.left_witnesses.push_back(p);
        if (s2 == 1 && s1 == -1) v.right_witnesses.push_back(p);
    }
    bool inc12 = model_includes(c1, c2), inc21 = model_includes(c2, c1);
    if (inc12 && !v.right_witnesses.empty())
        throw Error("InconsistentLedger", "witness against a definitional inclusion: " +
                                              model_str(c1) + " vs " + model_str(c2));
    if (inc21 && !v.left_witnesses.empty())
        throw Error("InconsistentLedger", "witness against a definitional inclusion: " +
                                              model_str(c2) + " vs " + model_str(c1));
    if (!v.left_witnesses.empty() && !v.right_witnesses.empty()) {
        v.kind = RelationVerdict::Kind::Orthogonal;
    } else if (inc12 && !v.left_witnesses.empty()) {
        v.kind = RelationVerdict::Kind::MorePowerful;
    } else if (inc21 && !v.right_witnesses.empty()) {
        v.kind = RelationVerdict::Kind::LessPowerful;
    } else if (inc12) {
        v.kind = RelationVerdict::Kind::NotLessPowerful;
    } else if (identical_evidence && !ledger.problems().empty()) {
        v.kind = RelationVerdict::Kind::Equivalent;
    } else {
        v.kind = RelationVerdict::Kind::Unknown;
    }
    return v;
}

Landscape landscape_report(const SolvabilityLedger& ledger, std::vector<ModelId> models) {
    Landscape out;
    for (ModelId& m : models) m = canonicalize_model(m);
    std::sort(models.begin(), models.end());
    models.erase(std::unique(models.begin(), models.end()), models.end());
    out.models = models;
    out.matrix.resize(models.size());
    for (std::size_t i = 0; i < models.size(); ++i) {
        out.matrix[i].resize(models.size());
        for (std::size_t j = 0; j < models.size(); ++j)
            if (i != j) out.matrix[i][j] = classify_relation(models[i], models[j], ledger);
    }
    for (const std::string& p : ledger.problems()) {
        std::vector<ModelId> solvable;
        for (const ModelId& m : canonical_models())
            if (ledger.status(p, m) == 1) solvable.push_back(m);
        std::vector<ModelId> minimal;
        for (const ModelId& m : solvable) {
            bool is_min = true;
            for (const ModelId& o : solvable)
                if (!(o == m) && model_includes(m, o)) is_min = false;
            if (is_min) minimal.push_back(m);
        }
        out.frontier[p] = minimal;
    }
    return out;
}

LedgerFile load_ledger_file(std::istream& is) {
    nlohmann::json j = nlohmann::json::parse(is);
    LedgerFile out;
    if (j.contains("notes")) out.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& e : j.at("evidence")) {
        Evidence ev;
        ev.problem = e.at("problem").get<std::string>();
        ev.model = parse_model(e.at("model").get<std::string>());
        ev.solvable = e.at("solvable").get<bool>();
        ev.source = e.value("source", std::string{});
        ev.tier = e.value("tier", std::string{"curated"});
        out.evidence.push_back(std::move(ev));
    }
    return out;
}

}  // namespace lcmsep
