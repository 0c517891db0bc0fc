#include "lcmsep/adversary.hpp"
#include "lcmsep/relations.hpp"
#include "lcmsep/report.hpp"
#include "lcmsep/scenario.hpp"
#include "lcmsep/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <atomic>
#include <future>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace lcmsep;

namespace {

constexpr int kExitConfig = 3;

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f.good()) throw Error("BadScenario", "cannot open " + p.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> horizon;
    std::optional<double> epsilon;
    std::optional<long> min_cycles;
};

void env_default(Overrides& o) {
    if (const char* v = std::getenv("LCMSEP_SEED"); v && !o.seed) o.seed = std::stoull(v);
    if (const char* v = std::getenv("LCMSEP_HORIZON"); v && !o.horizon) o.horizon = std::stoi(v);
    if (const char* v = std::getenv("LCMSEP_EPSILON"); v && !o.epsilon) o.epsilon = std::stod(v);
    if (const char* v = std::getenv("LCMSEP_MIN_CYCLES"); v && !o.min_cycles)
        o.min_cycles = std::stol(v);
}

struct RunOutcome {
    Report report;
    int exit_code = kExitConfig;
    std::string error;
};

RunOutcome run_one(const fs::path& path, const Overrides& ov, const fs::path& outdir,
                   bool write_files) {
    RunOutcome out;
    try {
        std::string bytes = slurp(path);
        std::istringstream is(bytes);
        Scenario sc = parse_scenario(is, path.stem().string());
        if (ov.seed) sc.seed = *ov.seed;
        if (ov.horizon) sc.horizon = *ov.horizon;
        if (ov.epsilon) sc.epsilon = *ov.epsilon;
        if (ov.min_cycles) sc.min_cycles = *ov.min_cycles;

        PreparedRun run = prepare_run(sc);
        Trace trace = run_execution(std::move(run.request));
        std::optional<CheckResult> result;
        if (run.predicate) {
            result = check_problem(*run.predicate, trace, run.opts);
            if (*run.predicate == Problem::ETE) {
                for (const auto& [t, idx] : ete_formations(trace, run.opts)) {
                    TraceEvent ev;
                    ev.kind = TraceEvent::Kind::PatternFormed;
                    ev.t = t;
                    ev.pattern_index = idx;
                    trace.events.push_back(std::move(ev));
                }
            }
        }
        out.report = make_report(sc, fnv1a_hex(bytes), trace, result);
        if (write_files) {
            fs::create_directories(outdir);
            std::string stem = sc.name + "_seed" + std::to_string(sc.seed);
            std::ofstream tf(outdir / (stem + ".trace.jsonl"));
            write_trace(tf, trace);
            std::ofstream rf(outdir / (stem + ".report.json"));
            write_report(rf, out.report);
        }
        out.exit_code = out.report.exit_code();
    } catch (const Error& e) {
        out.error = e.what();
        out.exit_code = kExitConfig;
    } catch (const std::exception& e) {
        out.error = e.what();
        out.exit_code = kExitConfig;
    }
    return out;
}

void print_outcome(const fs::path& path, const RunOutcome& out) {
    if (!out.error.empty()) {
        std::cout << path.filename().string() << ": error: " << out.error << "\n";
        return;
    }
    const Report& r = out.report;
    std::cout << r.scenario << " seed=" << r.seed << " verdict=" << r.verdict;
    if (!r.clause.empty()) std::cout << " clause=" << r.clause;
    std::cout << " cycles=" << r.cycles << " activations=" << r.activations << "\n";
    for (const auto& d : r.deviations) std::cout << "  note: " << d << "\n";
}

SvgOptions guides_for(const Trace& trace) {
    SvgOptions opts;
    const std::string& alg = trace.algorithm_id;
    try {
        if (alg.rfind("tar_star", 0) == 0 && trace.initial.robots.size() == 3) {
            opts.circle = circumcircle(trace.initial.robots[0].position,
                                       trace.initial.robots[1].position,
                                       trace.initial.robots[2].position);
        } else if ((alg.rfind("het", 0) == 0 || alg.rfind("vtr", 0) == 0) &&
                   trace.initial.robots.size() >= 2) {
            // reconstruct the hexagon: center from the symmetric placement,
            // phase snapped to the nearest 30-degree step
            Vec2 center{Scalar(0), Scalar(0)};
            Scalar r2(0);
            if (alg.rfind("het", 0) == 0) {
                center = (trace.initial.robots[0].position + trace.initial.robots[1].position) /
                         Scalar(2);
                r2 = dist2(trace.initial.robots[0].position, center);
            } else {
                Circle c = circumcircle(trace.initial.robots[0].position,
                                        trace.initial.robots[1].position,
                                        trace.initial.robots[2].position);
                center = c.center;
                r2 = c.radius_sq;
            }
            Vec2 v = trace.initial.robots[0].position - center;
            double ang = std::atan2(to_double(v.y), to_double(v.x));
            int phase = static_cast<int>(std::lround(ang / (M_PI / 6)));
            Hexagon h;
            h.center = center;
            h.phase_30 = phase;
            if (auto s = sqrt_scalar(r2))
                h.circumradius = *s;
            else
                h.circumradius = scalar_from_double(std::sqrt(to_double(r2)));
            opts.hexagon = h;
        }
    } catch (const Error&) {
        // no guides
    }
    return opts;
}

int cmd_batch(const fs::path& dir, int seeds, int parallelism, const fs::path& outdir) {
    std::vector<fs::path> files;
    if (fs::exists(dir))
        for (const auto& e : fs::directory_iterator(dir))
            if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    struct Job {
        fs::path file;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const auto& f : files)
        for (int s = 1; s <= seeds; ++s) jobs.push_back({f, static_cast<std::uint64_t>(s)});

    std::vector<RunOutcome> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            Overrides ov;
            ov.seed = jobs[i].seed;
            results[i] = run_one(jobs[i].file, ov, outdir, true);
        }
    };
    std::vector<std::future<void>> pool;
    for (int t = 0; t < std::max(1, parallelism); ++t)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();

    std::map<std::string, int> counts;
    bool config_error = false;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        print_outcome(jobs[i].file, results[i]);
        if (!results[i].error.empty()) {
            config_error = true;
            ++counts["error"];
        } else {
            ++counts[results[i].report.verdict];
        }
    }
    std::cout << "batch:";
    for (const auto& [k, v] : counts) std::cout << " " << k << "=" << v;
    std::cout << " total=" << jobs.size() << "\n";
    return config_error ? kExitConfig : 0;
}

int cmd_ledger(const fs::path& path, const fs::path& out) {
    std::ifstream f(path);
    if (!f.good()) {
        std::cerr << "cannot open " << path << "\n";
        return kExitConfig;
    }
    LedgerFile lf;
    std::ostringstream doc;
    try {
        lf = load_ledger_file(f);
        SolvabilityLedger ledger(lf.evidence);
        auto render_block = [&](const std::vector<std::string>& names, const std::string& title) {
            doc << title << "\n";
            std::vector<ModelId> models;
            for (const auto& n : names) models.push_back(parse_model(n));
            doc << "          ";
            for (const auto& n : names) doc << n << "\t";
            doc << "\n";
            for (std::size_t i = 0; i < models.size(); ++i) {
                doc << names[i] << "\t";
                for (std::size_t j = 0; j < models.size(); ++j) {
                    if (j <= i) {
                        doc << "-\t";
                        continue;
                    }
                    RelationVerdict v = classify_relation(models[i], models[j], ledger);
                    doc << verdict_symbol(v.kind);
                    if (!v.left_witnesses.empty() || !v.right_witnesses.empty()) {
                        doc << "(";
                        bool first = true;
                        for (const auto& w : v.left_witnesses) {
                            doc << (first ? "" : ",") << w;
                            first = false;
                        }
                        for (const auto& w : v.right_witnesses) {
                            doc << (first ? "" : ",") << w;
                            first = false;
                        }
                        doc << ")";
                    }
                    doc << "\t";
                }
                doc << "\n";
            }
            doc << "\n";
        };
        render_block({"LUMI^F", "FSTA^F", "OBLOT^F", "LUMI^R", "FSTA^R", "OBLOT^R", "FCOM^S",
                      "FSTA^S", "OBLOT^S"},
                     "# synchronous block");
        render_block({"LUMI^S", "FCOM^S", "FSTA^S", "OBLOT^S", "FCOM^A_M", "FSTA^A_M",
                      "OBLOT^A_M", "FSTA^A", "OBLOT^A"},
                     "# asynchronous block");

        Landscape land = landscape_report(ledger, canonical_models());
        doc << "# frontier (minimal solvable classes per problem)\n";
        for (const auto& [p, ms] : land.frontier) {
            doc << p << ":";
            for (const auto& m : ms) doc << " " << model_str(m);
            doc << "\n";
        }
        if (!ledger.demonstrated().empty()) {
            doc << "\n# demonstrated tier (testbench runs; annotations only)\n";
            for (const auto& e : ledger.demonstrated())
                doc << e.problem << " @ " << model_str(e.model) << " "
                    << (e.solvable ? "satisfied-run" : "counterexample") << ": " << e.source
                    << "\n";
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }
    if (out.empty()) {
        std::cout << doc.str();
    } else {
        std::ofstream of(out);
        of << doc.str();
        std::cout << "wrote " << out.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"look-compute-move robot testbench"};
    app.require_subcommand(1);

    std::string path, outdir = ".", outfile;
    Overrides ov;
    std::uint64_t seed_flag = 0;
    int horizon_flag = 0, seeds = 1, parallelism = 1;
    double epsilon_flag = 0;
    long min_cycles_flag = -1;

    auto* run = app.add_subcommand("run", "run one scenario, write trace and report");
    run->add_option("scenario", path)->required();
    run->add_option("--seed", seed_flag);
    run->add_option("--horizon", horizon_flag);
    run->add_option("--epsilon", epsilon_flag);
    run->add_option("--min-cycles", min_cycles_flag);
    run->add_option("--out", outdir);

    auto* batch = app.add_subcommand("batch", "run every scenario in a directory across seeds");
    batch->add_option("dir", path)->required();
    batch->add_option("--seeds", seeds);
    batch->add_option("--parallel", parallelism);
    batch->add_option("--out", outdir);

    auto* render = app.add_subcommand("render", "render a trace file to SVG");
    render->add_option("trace", path)->required();
    render->add_option("--out", outfile);

    auto* ledger = app.add_subcommand("ledger", "render the relation matrices from a ledger");
    ledger->add_option("ledger_file", path)->required();
    ledger->add_option("--out", outfile);

    auto* validate = app.add_subcommand("validate", "lint a scenario or validate a trace timeline");
    validate->add_option("file", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (run->parsed()) {
            if (seed_flag) ov.seed = seed_flag;
            if (horizon_flag) ov.horizon = horizon_flag;
            if (epsilon_flag > 0) ov.epsilon = epsilon_flag;
            if (min_cycles_flag >= 0) ov.min_cycles = min_cycles_flag;
            env_default(ov);
            if (const char* v = std::getenv("LCMSEP_OUT"); v && outdir == ".") outdir = v;
            RunOutcome out = run_one(path, ov, outdir, true);
            print_outcome(path, out);
            return out.exit_code;
        }
        if (batch->parsed()) {
            if (const char* v = std::getenv("LCMSEP_OUT"); v && outdir == ".") outdir = v;
            return cmd_batch(path, seeds, parallelism, outdir);
        }
        if (render->parsed()) {
            std::ifstream f(path);
            if (!f.good()) {
                std::cerr << "cannot open " << path << "\n";
                return kExitConfig;
            }
            Trace trace;
            try {
                trace = read_trace(f);
            } catch (const std::exception& e) {
                std::cerr << "corrupt trace: " << e.what() << "\n";
                return kExitConfig;
            }
            std::string out = outfile.empty() ? path + ".svg" : outfile;
            std::ofstream of(out);
            render_svg(of, trace, guides_for(trace));
            std::cout << "wrote " << out << "\n";
            return 0;
        }
        if (ledger->parsed()) return cmd_ledger(path, outfile);
        if (validate->parsed()) {
            if (fs::path(path).extension() == ".jsonl") {
                std::ifstream f(path);
                Trace trace = read_trace(f);
                auto v = validate_timeline(trace.kind, trace.timeline, trace.robot_count);
                if (v) {
                    std::cout << "invalid: " << v->constraint << " (" << v->detail << ")\n";
                    return 1;
                }
                std::cout << "valid " << kind_name(trace.kind) << " timeline, "
                          << trace.timeline.activations.size() << " activations\n";
                return 0;
            }
            std::string bytes = slurp(path);
            std::istringstream is(bytes);
            Scenario sc = parse_scenario(is, fs::path(path).stem().string());
            auto issues = lint_scenario(sc);
            for (const auto& i : issues) std::cout << "lint: " << i << "\n";
            if (issues.empty()) std::cout << "scenario ok: " << sc.name << "\n";
            return issues.empty() ? 0 : kExitConfig;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
