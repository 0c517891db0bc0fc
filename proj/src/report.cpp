#include "lcmsep/report.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>

namespace lcmsep {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int Report::exit_code() const {
    if (verdict == "Satisfied" || verdict == "none") return 0;
    if (verdict == "Violated") return 1;
    return 2;
}

Report make_report(const Scenario& sc, const std::string& digest, const Trace& trace,
                   const std::optional<CheckResult>& result) {
    Report r;
    r.scenario = sc.name;
    r.digest = digest;
    r.algorithm = sc.algorithm;
    r.model = capability_name(sc.model);
    r.scheduler = kind_name(sc.scheduler);
    r.seed = sc.seed;
    r.activations = static_cast<int>(trace.timeline.activations.size());
    r.sim_end = rat_str(trace.end_time());
    r.predicate = sc.predicate ? problem_name(*sc.predicate) : "none";
    if (result) {
        switch (result->verdict) {
            case CheckResult::Verdict::Satisfied: r.verdict = "Satisfied"; break;
            case CheckResult::Verdict::Violated: r.verdict = "Violated"; break;
            case CheckResult::Verdict::Inconclusive: r.verdict = "Inconclusive"; break;
        }
        r.clause = result->clause;
        r.cycles = result->cycles;
        if (result->witness_time) r.witness_time = rat_str(*result->witness_time);
    } else {
        r.verdict = "none";
    }
    r.deviations = trace.notes;
    return r;
}

void write_report(std::ostream& os, const Report& r) {
    json j{{"scenario", r.scenario},
           {"digest", r.digest},
           {"algorithm", r.algorithm},
           {"model", r.model},
           {"scheduler", r.scheduler},
           {"seed", r.seed},
           {"activations", r.activations},
           {"sim_end", r.sim_end},
           {"predicate", r.predicate},
           {"verdict", r.verdict},
           {"clause", r.clause},
           {"cycles", r.cycles},
           {"witness_time", r.witness_time},
           {"deviations", r.deviations}};
    os << j.dump(2) << "\n";
}

Report read_report(std::istream& is) {
    json j = json::parse(is);
    Report r;
    r.scenario = j.at("scenario").get<std::string>();
    r.digest = j.at("digest").get<std::string>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.scheduler = j.at("scheduler").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.activations = j.at("activations").get<int>();
    r.sim_end = j.at("sim_end").get<std::string>();
    r.predicate = j.at("predicate").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.clause = j.at("clause").get<std::string>();
    r.cycles = j.at("cycles").get<long>();
    r.witness_time = j.at("witness_time").get<std::string>();
    r.deviations = j.at("deviations").get<std::vector<std::string>>();
    return r;
}

}  // namespace lcmsep
