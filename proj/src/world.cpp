#include "lcmsep/world.hpp"

#include <algorithm>

namespace lcmsep {

std::string capability_name(Capability m) {
    switch (m) {
        case Capability::OBLOT: return "OBLOT";
        case Capability::FSTA: return "FSTA";
        case Capability::FCOM: return "FCOM";
        case Capability::LUMI: return "LUMI";
    }
    return "?";
}

Capability parse_capability(const std::string& s) {
    if (s == "OBLOT") return Capability::OBLOT;
    if (s == "FSTA") return Capability::FSTA;
    if (s == "FCOM") return Capability::FCOM;
    if (s == "LUMI") return Capability::LUMI;
    throw Error("BadScenario", "unknown capability model " + s);
}

bool SpeedProfile::valid() const {
    Rat u(0), f(0);
    for (const auto& [bu, bf] : breakpoints) {
        if (!(bu > u) || !(bf > f)) return false;
        if (!(bu < 1) || !(bf < 1)) return false;
        u = bu;
        f = bf;
    }
    return true;
}

Rat SpeedProfile::progress(const Rat& u) const {
    Rat pu(0), pf(0);
    for (const auto& [bu, bf] : breakpoints) {
        if (u <= bu) return pf + (bf - pf) * (u - pu) / (bu - pu);
        pu = bu;
        pf = bf;
    }
    return pf + (Rat(1) - pf) * (u - pu) / (Rat(1) - pu);
}

const RobotState* Configuration::find(int sim_id) const {
    for (const auto& r : robots)
        if (r.sim_id == sim_id) return &r;
    return nullptr;
}

Vec2 interpolate_move(const RobotState& state, const Rat& t) {
    if (!state.pending) throw Error("OutOfWindow", "no pending move");
    const PendingMove& m = *state.pending;
    if (t < m.begin || t > m.end) throw Error("OutOfWindow", "time outside move window");
    if (m.source == m.destination) return m.source;
    Rat u = (t - m.begin) / (m.end - m.begin);
    Scalar f{m.profile.progress(u)};
    return m.source + f * (m.destination - m.source);
}

Vec2 robot_position_at(const RobotState& state, const Rat& t) {
    if (state.pending && t >= state.pending->begin && t <= state.pending->end)
        return interpolate_move(state, t);
    if (state.pending && t > state.pending->end) return state.pending->destination;
    return state.position;
}

bool lex_less(const Vec2& u, const Vec2& v) {
    if (u.x.a != v.x.a) return u.x.a < v.x.a;
    if (u.x.b != v.x.b) return u.x.b < v.x.b;
    if (u.y.a != v.y.a) return u.y.a < v.y.a;
    return u.y.b < v.y.b;
}

Snapshot take_snapshot(Capability model, const Configuration& config, int observer_id,
                       const Frame& frame) {
    const RobotState* self = config.find(observer_id);
    if (!self) throw Error("NoSuchRobot", "observer not in configuration");
    if (frame.origin != self->position)
        throw Error("BadFrame", "frame origin must be the observer's position");

    Snapshot snap;
    for (const auto& r : config.robots) {
        if (r.sim_id == observer_id) continue;
        SnapshotEntry e;
        e.pos = to_local(frame, r.position);
        if (sees_other_lights(model)) e.colors = r.lights.values;
        snap.others.push_back(std::move(e));
    }
    std::sort(snap.others.begin(), snap.others.end(), [](const SnapshotEntry& a, const SnapshotEntry& b) {
        if (a.pos != b.pos) return lex_less(a.pos, b.pos);
        return a.colors < b.colors;
    });
    snap.others.erase(std::unique(snap.others.begin(), snap.others.end()), snap.others.end());
    if (sees_own_lights(model)) snap.own_lights = self->lights;
    return snap;
}

}  // namespace lcmsep
