#include "lcmsep/trace.hpp"

#include "lcmsep/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>

namespace lcmsep {

using nlohmann::json;

Vec2 Trace::position_at(int sim_id, const Rat& t) const {
    Vec2 pos = initial.find(sim_id)->position;
    for (const auto& m : moves) {
        if (m.sim_id != sim_id) continue;
        if (m.t_end <= t) {
            pos = m.dst;
        } else if (m.t_begin <= t) {
            RobotState tmp;
            tmp.position = m.src;
            tmp.pending = PendingMove{m.src, m.dst, m.t_begin, m.t_end, m.profile};
            return interpolate_move(tmp, t);
        } else {
            break;  // moves are ordered by t_begin
        }
    }
    return pos;
}

LightBank Trace::lights_at(int sim_id, const Rat& t) const {
    LightBank bank = initial.find(sim_id)->lights;
    for (const auto& rec : light_log) {
        if (rec.t > t) break;
        if (rec.sim_id == sim_id) bank.values[rec.reg] = rec.new_color;
    }
    return bank;
}

Configuration Trace::config_at(const Rat& t) const {
    Configuration c;
    c.time = t;
    for (const auto& r : initial.robots) {
        RobotState s;
        s.sim_id = r.sim_id;
        s.position = position_at(r.sim_id, t);
        s.lights = lights_at(r.sim_id, t);
        c.robots.push_back(std::move(s));
    }
    return c;
}

std::vector<Rat> Trace::event_times() const {
    std::vector<Rat> times;
    times.push_back(Rat(0));
    for (const auto& e : events) times.push_back(e.t);
    // hand-built or mutated traces may carry moves without event lines
    for (const auto& m : moves) {
        times.push_back(m.t_begin);
        times.push_back(m.t_end);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

Rat Trace::end_time() const {
    Rat t(0);
    for (const auto& e : events) t = std::max(t, e.t);
    return t;
}

std::vector<std::string> light_read_at(const Trace& trace, const Rat& t_look, int target) {
    return trace.lights_at(target, t_look).values;
}

// ---- JSON-lines serialization ---------------------------------------------------

namespace {

json scalar_json(const Scalar& s) { return json(scalar_str(s)); }
Scalar scalar_from_json(const json& j) { return parse_scalar(j.get<std::string>()); }

json vec_json(const Vec2& v) { return json::array({scalar_json(v.x), scalar_json(v.y)}); }
Vec2 vec_from_json(const json& j) { return {scalar_from_json(j.at(0)), scalar_from_json(j.at(1))}; }

json rat_json(const Rat& r) { return json(rat_str(r)); }
Rat rat_from_json(const json& j) { return parse_rat(j.get<std::string>()); }

json profile_json(const SpeedProfile& p) {
    json arr = json::array();
    for (const auto& [u, f] : p.breakpoints) arr.push_back(json::array({rat_json(u), rat_json(f)}));
    return arr;
}
SpeedProfile profile_from_json(const json& j) {
    SpeedProfile p;
    for (const auto& e : j) p.breakpoints.emplace_back(rat_from_json(e.at(0)), rat_from_json(e.at(1)));
    return p;
}

json frame_json(const Frame& f) {
    return json{{"origin", vec_json(f.origin)}, {"dir", vec_json(f.dir)}, {"scale", scalar_json(f.scale)}};
}
Frame frame_from_json(const json& j) {
    return Frame::at(vec_from_json(j.at("origin")), vec_from_json(j.at("dir")),
                     scalar_from_json(j.at("scale")));
}

json snapshot_json(const Snapshot& s) {
    json others = json::array();
    for (const auto& e : s.others) others.push_back(json{{"pos", vec_json(e.pos)}, {"colors", e.colors}});
    json out{{"others", others}};
    if (s.own_lights) out["own"] = s.own_lights->values;
    return out;
}
Snapshot snapshot_from_json(const json& j) {
    Snapshot s;
    for (const auto& e : j.at("others"))
        s.others.push_back(SnapshotEntry{vec_from_json(e.at("pos")),
                                         e.at("colors").get<std::vector<std::string>>()});
    if (j.contains("own")) s.own_lights = LightBank{j.at("own").get<std::vector<std::string>>()};
    return s;
}

const char* event_kind_name(TraceEvent::Kind k) {
    switch (k) {
        case TraceEvent::Kind::Look: return "look";
        case TraceEvent::Kind::Compute: return "compute";
        case TraceEvent::Kind::MoveBegin: return "move_begin";
        case TraceEvent::Kind::MoveEnd: return "move_end";
        case TraceEvent::Kind::LightChange: return "light_change";
        case TraceEvent::Kind::PatternFormed: return "pattern_formed";
    }
    return "?";
}

TraceEvent::Kind event_kind_parse(const std::string& s) {
    if (s == "look") return TraceEvent::Kind::Look;
    if (s == "compute") return TraceEvent::Kind::Compute;
    if (s == "move_begin") return TraceEvent::Kind::MoveBegin;
    if (s == "move_end") return TraceEvent::Kind::MoveEnd;
    if (s == "light_change") return TraceEvent::Kind::LightChange;
    if (s == "pattern_formed") return TraceEvent::Kind::PatternFormed;
    throw Error("BadTrace", "unknown event kind " + s);
}

}  // namespace

void write_trace(std::ostream& os, const Trace& tr) {
    json header{{"kind", "header"},
                {"algorithm", tr.algorithm_id},
                {"model", capability_name(tr.model)},
                {"scheduler", kind_name(tr.kind)},
                {"declared_scheduler", kind_name(tr.declared_kind)},
                {"robots", tr.robot_count},
                {"fairness_window", tr.timeline.fairness_window},
                {"rsynch_prefix", tr.timeline.rsynch_prefix},
                {"notes", tr.notes}};
    json lights = json::array();
    for (const auto& s : tr.light_spec)
        lights.push_back(json{{"name", s.name}, {"colors", s.colors}, {"initial", s.initial}});
    header["lights"] = lights;
    json init = json::array();
    for (const auto& r : tr.initial.robots)
        init.push_back(json{{"id", r.sim_id}, {"pos", vec_json(r.position)}, {"lights", r.lights.values}});
    header["initial"] = init;
    os << header.dump() << "\n";

    for (const auto& e : tr.events) {
        json line{{"kind", event_kind_name(e.kind)}, {"t", rat_json(e.t)}, {"robot", e.sim_id}};
        if (e.snapshot) line["snapshot"] = snapshot_json(*e.snapshot);
        if (e.frame) line["frame"] = frame_json(*e.frame);
        if (e.destination) line["destination"] = vec_json(*e.destination);
        if (e.note) line["note"] = *e.note;
        if (e.src) line["src"] = vec_json(*e.src);
        if (e.dst) line["dst"] = vec_json(*e.dst);
        if (e.reg) line["reg"] = *e.reg;
        if (e.old_color) line["old"] = *e.old_color;
        if (e.new_color) line["new"] = *e.new_color;
        if (e.pattern_index) line["index"] = *e.pattern_index;
        os << line.dump() << "\n";
    }

    // Activation timeline and move profiles travel as dedicated lines so a
    // trace file round-trips into an equivalent Trace value.
    for (const auto& a : tr.timeline.activations) {
        json line{{"kind", "activation"}, {"robot", a.sim_id},    {"index", a.index},
                  {"t_L", rat_json(a.t_look)}, {"t_C", rat_json(a.t_compute)},
                  {"t_B", rat_json(a.t_move_begin)}, {"t_E", rat_json(a.t_move_end)}};
        os << line.dump() << "\n";
    }
    for (const auto& m : tr.moves) {
        json line{{"kind", "move"},
                  {"robot", m.sim_id},
                  {"t_B", rat_json(m.t_begin)},
                  {"t_E", rat_json(m.t_end)},
                  {"src", vec_json(m.src)},
                  {"dst", vec_json(m.dst)},
                  {"profile", profile_json(m.profile)}};
        os << line.dump() << "\n";
    }
}

Trace read_trace(std::istream& is) {
    Trace tr;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "header") {
            tr.algorithm_id = j.at("algorithm").get<std::string>();
            tr.model = parse_capability(j.at("model").get<std::string>());
            tr.kind = parse_kind(j.at("scheduler").get<std::string>());
            tr.declared_kind = parse_kind(j.at("declared_scheduler").get<std::string>());
            tr.robot_count = j.at("robots").get<int>();
            tr.timeline.fairness_window = j.at("fairness_window").get<int>();
            tr.timeline.rsynch_prefix = j.at("rsynch_prefix").get<int>();
            tr.notes = j.at("notes").get<std::vector<std::string>>();
            for (const auto& s : j.at("lights"))
                tr.light_spec.push_back(LightSpec{s.at("name").get<std::string>(),
                                                  s.at("colors").get<std::vector<std::string>>(),
                                                  s.at("initial").get<std::string>()});
            tr.initial.time = Rat(0);
            for (const auto& r : j.at("initial")) {
                RobotState s;
                s.sim_id = r.at("id").get<int>();
                s.position = vec_from_json(r.at("pos"));
                s.lights.values = r.at("lights").get<std::vector<std::string>>();
                tr.initial.robots.push_back(std::move(s));
            }
            have_header = true;
            continue;
        }
        if (!have_header) throw Error("BadTrace", "missing header line");
        if (kind == "activation") {
            tr.timeline.activations.push_back(Activation{
                j.at("robot").get<int>(), j.at("index").get<int>(), rat_from_json(j.at("t_L")),
                rat_from_json(j.at("t_C")), rat_from_json(j.at("t_B")), rat_from_json(j.at("t_E"))});
            continue;
        }
        if (kind == "move") {
            tr.moves.push_back(MoveRecord{j.at("robot").get<int>(), rat_from_json(j.at("t_B")),
                                          rat_from_json(j.at("t_E")), vec_from_json(j.at("src")),
                                          vec_from_json(j.at("dst")), profile_from_json(j.at("profile"))});
            continue;
        }
        TraceEvent e;
        e.kind = event_kind_parse(kind);
        e.t = rat_from_json(j.at("t"));
        e.sim_id = j.at("robot").get<int>();
        if (j.contains("snapshot")) e.snapshot = snapshot_from_json(j.at("snapshot"));
        if (j.contains("frame")) e.frame = frame_from_json(j.at("frame"));
        if (j.contains("destination")) e.destination = vec_from_json(j.at("destination"));
        if (j.contains("note")) e.note = j.at("note").get<std::string>();
        if (j.contains("src")) e.src = vec_from_json(j.at("src"));
        if (j.contains("dst")) e.dst = vec_from_json(j.at("dst"));
        if (j.contains("reg")) e.reg = j.at("reg").get<int>();
        if (j.contains("old")) e.old_color = j.at("old").get<std::string>();
        if (j.contains("new")) e.new_color = j.at("new").get<std::string>();
        if (j.contains("index")) e.pattern_index = j.at("index").get<long>();
        if (e.kind == TraceEvent::Kind::LightChange)
            tr.light_log.push_back(LightRecord{e.sim_id, e.t, *e.reg, *e.old_color, *e.new_color});
        tr.events.push_back(std::move(e));
    }
    return tr;
}

}  // namespace lcmsep
