#include <doctest.h>

#include "lcmsep/relations.hpp"

#include "table1_data.hpp"

#include <fstream>

using namespace lcmsep;

namespace {
using Kind = RelationVerdict::Kind;

ModelId M(const char* s) { return parse_model(s); }

SolvabilityLedger shipped_ledger() {
    std::ifstream f(std::string(LCMSEP_DATA_DIR) + "/ledger/paper_ledger.json");
    REQUIRE(f.good());
    LedgerFile lf = load_ledger_file(f);
    return SolvabilityLedger(lf.evidence);
}
}  // namespace

TEST_CASE("canonicalization examples and idempotence") {
    CHECK(canonicalize_model(M("LUMI^S")) == M("LUMI^R"));
    CHECK(canonicalize_model(M("LUMI^A")) == M("LUMI^R"));
    CHECK(canonicalize_model(M("FCOM^F")) == M("LUMI^F"));
    CHECK(canonicalize_model(M("FCOM^R")) == M("LUMI^R"));
    CHECK(canonicalize_model(M("FCOM^A_CM")) == M("FCOM^A_M"));
    CHECK(canonicalize_model(M("FCOM^A")) == M("FCOM^A_M"));
    CHECK(canonicalize_model(M("FCOM^A_LC")) == M("FCOM^S"));
    CHECK(canonicalize_model(M("FSTA^A_LC")) == M("FSTA^A"));
    CHECK(canonicalize_model(M("OBLOT^A_CM")) == M("OBLOT^A_M"));
    CHECK(canonicalize_model(M("OBLOT^F")) == M("OBLOT^F"));

    int canonical_count = 0;
    for (Capability c : {Capability::LUMI, Capability::FCOM, Capability::FSTA, Capability::OBLOT})
        for (SchedulerKind k : {SchedulerKind::FSYNCH, SchedulerKind::RSYNCH, SchedulerKind::SSYNCH,
                                SchedulerKind::ASYNC_LC, SchedulerKind::ASYNC_CM,
                                SchedulerKind::ASYNC_M, SchedulerKind::ASYNC}) {
            ModelId m{c, k};
            ModelId once = canonicalize_model(m);
            CHECK(canonicalize_model(once) == once);
            if (once == m) ++canonical_count;
        }
    CHECK(canonical_count == 14);
    CHECK(canonical_models().size() == 14);
}

TEST_CASE("inclusion respects the capability and scheduler chains") {
    // the full-lights fully-synchronous class includes everything
    for (const ModelId& m : canonical_models()) CHECK(model_includes(M("LUMI^F"), m));
    CHECK(model_includes(M("FSTA^F"), M("FSTA^A")));
    CHECK(model_includes(M("FSTA^R"), M("FSTA^S")));
    CHECK(model_includes(M("LUMI^R"), M("FCOM^S")));     // via the communication member
    CHECK(model_includes(M("FCOM^S"), M("OBLOT^S")));
    CHECK(!model_includes(M("FSTA^F"), M("LUMI^R")));
    CHECK(!model_includes(M("LUMI^R"), M("FSTA^F")));
    CHECK(!model_includes(M("FSTA^S"), M("FCOM^S")));
    CHECK(!model_includes(M("OBLOT^F"), M("OBLOT^R")) == false);  // F covers R
}

TEST_CASE("classify_relation basics") {
    SolvabilityLedger ledger = shipped_ledger();

    RelationVerdict v1 = classify_relation(M("LUMI^F"), M("FSTA^F"), ledger);
    CHECK(v1.kind == Kind::MorePowerful);
    CHECK(std::find(v1.left_witnesses.begin(), v1.left_witnesses.end(), "CYC") !=
          v1.left_witnesses.end());

    RelationVerdict v2 = classify_relation(M("FSTA^F"), M("LUMI^R"), ledger);
    CHECK(v2.kind == Kind::Orthogonal);

    // same canonical class
    CHECK(classify_relation(M("LUMI^S"), M("LUMI^A"), ledger).kind == Kind::Equivalent);

    // reversed arguments flip the strict direction
    CHECK(classify_relation(M("FSTA^F"), M("LUMI^F"), ledger).kind == Kind::LessPowerful);
}

TEST_CASE("inconsistent ledger is rejected") {
    std::vector<Evidence> bad{{"P", M("FSTA^S"), true, "", "curated"},
                              {"P", M("FSTA^S"), false, "", "curated"}};
    CHECK_THROWS_WITH_AS((SolvabilityLedger(bad)), doctest::Contains("InconsistentLedger"), Error);

    // solvable below an unsolvable class contradicts through the closure
    std::vector<Evidence> bad2{{"P", M("FSTA^F"), false, "", "curated"},
                               {"P", M("FSTA^S"), true, "", "curated"}};
    CHECK_THROWS_WITH_AS((SolvabilityLedger(bad2)), doctest::Contains("InconsistentLedger"), Error);
}

TEST_CASE("shipped ledger reproduces both relation tables") {
    SolvabilityLedger ledger = shipped_ledger();
    auto check_block = [&](const std::vector<table1::Cell>& cells) {
        for (const auto& cell : cells) {
            RelationVerdict v = classify_relation(M(cell.row), M(cell.col), ledger);
            INFO(cell.row << " vs " << cell.col << ": expected " << cell.symbol << ", got "
                          << verdict_symbol(v.kind));
            CHECK(verdict_symbol(v.kind) == cell.symbol);
            for (const std::string& p : cell.problems) {
                bool found =
                    std::find(v.left_witnesses.begin(), v.left_witnesses.end(), p) !=
                        v.left_witnesses.end() ||
                    std::find(v.right_witnesses.begin(), v.right_witnesses.end(), p) !=
                        v.right_witnesses.end();
                INFO("missing witness " << p << " for " << cell.row << " vs " << cell.col);
                CHECK(found);
            }
        }
    };
    check_block(table1::sync_cells());
    check_block(table1::async_cells());
}

TEST_CASE("removing a witness downgrades the affected cell") {
    std::ifstream f(std::string(LCMSEP_DATA_DIR) + "/ledger/paper_ledger.json");
    LedgerFile lf = load_ledger_file(f);
    std::vector<Evidence> reduced;
    for (const Evidence& e : lf.evidence)
        if (e.problem != "TF") reduced.push_back(e);
    SolvabilityLedger ledger(reduced);
    // OBLOT^A_M vs OBLOT^A was strict via TF alone; only inclusion remains
    CHECK(classify_relation(M("OBLOT^A_M"), M("OBLOT^A"), ledger).kind == Kind::NotLessPowerful);
    // OBLOT^A_M vs FSTA^A loses its left witness, so orthogonality degrades
    RelationVerdict v = classify_relation(M("OBLOT^A_M"), M("FSTA^A"), ledger);
    CHECK(v.kind != Kind::Orthogonal);
}

TEST_CASE("landscape report: frontier lists minimal solvable classes") {
    SolvabilityLedger ledger = shipped_ledger();
    Landscape land = landscape_report(ledger, canonical_models());
    CHECK(land.models.size() == 14);

    auto frontier_of = [&](const std::string& p) {
        std::vector<std::string> out;
        for (const ModelId& m : land.frontier.at(p)) out.push_back(model_str(m));
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(frontier_of("LCM_M") ==
          std::vector<std::string>{"FCOM^A_M", "FSTA^A", "OBLOT^F"});
    CHECK(frontier_of("ETE") == std::vector<std::string>{"LUMI^F"});
    CHECK(frontier_of("HET") == std::vector<std::string>{"FSTA^F", "LUMI^R"});
    CHECK(frontier_of("TAR_STAR") == std::vector<std::string>{"LUMI^R", "OBLOT^F"});
    CHECK(frontier_of("VEC") == std::vector<std::string>{"FSTA^A_M"});
    CHECK(frontier_of("ZCC") == std::vector<std::string>{"FSTA^S"});

    // empty ledger: empty matrix and frontier
    Landscape empty = landscape_report(SolvabilityLedger({}), {});
    CHECK(empty.models.empty());
    CHECK(empty.frontier.empty());
}
