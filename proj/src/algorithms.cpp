#include "lcmsep/algorithms.hpp"

#include "lcmsep/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lcmsep {

namespace {

const Vec2 kOrigin{Scalar(0), Scalar(0)};

Decision stay(std::optional<std::string> note = std::nullopt) {
    Decision d;
    d.note = std::move(note);
    return d;
}

std::vector<LightOp> keep_ops(std::size_t n) { return std::vector<LightOp>(n, LightOp::keep()); }

/// The single other robot of a two-robot snapshot.
const SnapshotEntry& sole_other(const Snapshot& snap) {
    if (snap.others.size() != 1) throw Error("Arity", "expected exactly one other robot");
    return snap.others.front();
}

std::string own_color(const ComputeInput& in, std::size_t reg = 0) {
    if (!in.snapshot.own_lights) throw Error("BadModel", "own lights not visible");
    return in.snapshot.own_lights->values.at(reg);
}

// ---- LP / Cv / ZCC family -------------------------------------------------

class LpFstaRsynch final : public RobotAlgorithm {
public:
    std::string id() const override { return id_; }
    Capability home_model() const override { return Capability::FSTA; }
    SchedulerKind home_scheduler() const override { return sched_; }
    std::vector<LightSpec> lights() const override { return {{"color", {"A", "B"}, "A"}}; }
    Decision compute(const ComputeInput& in) const override {
        const Vec2& p = sole_other(in.snapshot).pos;
        if (p == kOrigin) return stay("zero-distance: collocated robots, staying");
        Decision d;
        if (own_color(in) == "A") {
            d.lights = {LightOp::set("B")};
            d.destination = -(p / Scalar(2));
        } else {
            d.destination = p / Scalar(2);
        }
        return d;
    }
    LpFstaRsynch(std::string id, SchedulerKind s) : id_(std::move(id)), sched_(s) {}

private:
    std::string id_;
    SchedulerKind sched_;
};

class LpFcom final : public RobotAlgorithm {
public:
    std::string id() const override { return id_; }
    Capability home_model() const override { return Capability::FCOM; }
    SchedulerKind home_scheduler() const override { return sched_; }
    std::vector<LightSpec> lights() const override { return {{"color", {"A", "B", "C"}, "A"}}; }
    Decision compute(const ComputeInput& in) const override {
        const SnapshotEntry& other = sole_other(in.snapshot);
        if (other.pos == kOrigin) return stay("zero-distance: collocated robots, staying");
        const std::string& oc = other.colors.at(0);
        Decision d;
        if (oc == "A") {
            d.lights = {LightOp::set("B")};
            d.destination = -(other.pos / Scalar(2));
        } else if (oc == "B") {
            d.lights = {LightOp::set("C")};
            d.destination = -(other.pos / Scalar(2));
        } else {
            d.lights = {LightOp::set("C")};
            d.destination = other.pos / Scalar(2);
        }
        return d;
    }
    LpFcom(std::string id, SchedulerKind s) : id_(std::move(id)), sched_(s) {}

private:
    std::string id_;
    SchedulerKind sched_;
};

class ZccFstaS final : public RobotAlgorithm {
public:
    std::string id() const override { return "zcc.fsta.ssynch"; }
    Capability home_model() const override { return Capability::FSTA; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::SSYNCH; }
    std::vector<LightSpec> lights() const override { return {{"color", {"A", "B"}, "A"}}; }
    Decision compute(const ComputeInput& in) const override {
        const Vec2& p = sole_other(in.snapshot).pos;
        if (p == kOrigin) return stay("zero-distance: collocated robots, staying");
        Decision d;
        if (own_color(in) == "A") {
            d.lights = {LightOp::set("B")};
            d.destination = p / Scalar(2);
        } else {
            d.lights = {LightOp::set("A")};
            d.destination = -(p / Scalar(4));
        }
        return d;
    }
};

class VecFstaAm final : public RobotAlgorithm {
public:
    std::string id() const override { return "vec.fsta.async_m"; }
    Capability home_model() const override { return Capability::FSTA; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::ASYNC_M; }
    std::vector<LightSpec> lights() const override { return {{"state", {"1", "2"}, "1"}}; }
    Decision compute(const ComputeInput& in) const override {
        const Vec2& p = sole_other(in.snapshot).pos;
        if (p == kOrigin) throw Error("DegenerateSegment", "coincident robots");
        if (own_color(in) == "2") return stay();
        Vec2 mid = p / Scalar(2);
        Decision d;
        d.lights = {LightOp::set("2")};
        d.destination = mid + rotate_30(kOrigin - mid, -3);  // 90 degrees clockwise
        return d;
    }
};

// ---- TAR(d)* ----------------------------------------------------------------

class TarStarLumiR final : public RobotAlgorithm {
public:
    std::string id() const override { return "tar_star.lumi.rsynch"; }
    Capability home_model() const override { return Capability::LUMI; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::RSYNCH; }
    std::vector<LightSpec> lights() const override { return {{"status", {"0", "1", "2"}, "0"}}; }
    Decision compute(const ComputeInput& in) const override {
        if (in.snapshot.others.size() != 2) throw Error("Arity", "TAR(d)* needs three robots");
        int s = std::stoi(own_color(in));
        int next = (s + 1) % 3;
        bool all_same = true, any_next = false;
        for (const auto& e : in.snapshot.others) {
            int os = std::stoi(e.colors.at(0));
            all_same = all_same && os == s;
            any_next = any_next || os == next;
        }
        if (!all_same && !any_next) return stay();
        Circle c = circumcircle(kOrigin, in.snapshot.others[0].pos, in.snapshot.others[1].pos);
        Decision d;
        d.lights = {LightOp::set(std::to_string(next))};
        d.destination = chord_step(c, kOrigin, in.params.chord_d);
        return d;
    }
};

// ---- HET family --------------------------------------------------------------

/// Stage step vectors out of the stored itinerary. The itinerary is constant
/// per-robot data in the robot's initialization frame, so only differences of
/// waypoints are used; they are correct whenever the activation frame matches
/// the initialization frame.
Vec2 het_step(const StaticParams& params, int status) {
    if (!params.itinerary) throw Error("BadScenario", "hexagon itinerary required");
    const auto& v = *params.itinerary;
    int i = params.home_vertex;
    auto at = [&](int k) { return v[((k % 6) + 6) % 6]; };
    switch (status) {
        case 0: return at(i - 1) - at(i);
        case 1: return at(i) - at(i - 1);
        case 2: return at(i + 1) - at(i);
        default: return at(i) - at(i + 1);
    }
}

class HetFstaF final : public RobotAlgorithm {
public:
    std::string id() const override { return "het.fsta.fsynch"; }
    Capability home_model() const override { return Capability::FSTA; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::FSYNCH; }
    std::vector<LightSpec> lights() const override {
        return {{"status", {"0", "1", "2", "3"}, "0"}};
    }
    Decision compute(const ComputeInput& in) const override {
        int s = std::stoi(own_color(in));
        Decision d;
        d.lights = {LightOp::set(std::to_string((s + 1) % 4))};
        d.destination = het_step(in.params, s);
        return d;
    }
};

class HetLumiR final : public RobotAlgorithm {
public:
    std::string id() const override { return "het.lumi.rsynch"; }
    Capability home_model() const override { return Capability::LUMI; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::RSYNCH; }
    std::vector<LightSpec> lights() const override {
        return {{"status", {"0", "1", "2", "3"}, "0"}};
    }
    Decision compute(const ComputeInput& in) const override {
        int s = std::stoi(own_color(in));
        int next = (s + 1) % 4;
        for (const auto& e : in.snapshot.others) {
            int os = std::stoi(e.colors.at(0));
            if (os != s && os != next) return stay();
        }
        Decision d;
        d.lights = {LightOp::set(std::to_string(next))};
        d.destination = het_step(in.params, s);
        return d;
    }
};

// ---- VTR family ---------------------------------------------------------------

/// Hexagon-angle separation: k in 0..5 with rotate(u, 60k) == v, if any.
std::optional<int> hex_sep(const Vec2& u, const Vec2& v) {
    for (int k = 0; k < 6; ++k)
        if (rotate_30(u, 2 * k) == v) return k;
    return std::nullopt;
}

struct VtrView {
    Vec2 center;          // circumcenter, local coords
    bool equilateral;     // C_1 vs C_2
    Vec2 q_pos, s_pos;    // clockwise / counterclockwise neighbor positions
    int q_idx, s_idx;     // indices into snapshot.others
};

VtrView vtr_view(const Snapshot& snap) {
    if (snap.others.size() != 2) throw Error("Arity", "VTR needs three robots");
    const Vec2 &p1 = snap.others[0].pos, &p2 = snap.others[1].pos;
    Circle c = circumcircle(kOrigin, p1, p2);
    Vec2 u0 = kOrigin - c.center, u1 = p1 - c.center, u2 = p2 - c.center;
    auto k01 = hex_sep(u0, u1), k02 = hex_sep(u0, u2);
    if (!k01 || !k02 || *k01 == 3 || *k02 == 3 || *k01 == *k02)
        throw Error("BadPattern", "robots not on hexagon vertices with free diagonals");
    VtrView v;
    v.center = c.center;
    // counterclockwise order starting at self is (0, k) ascending in k
    bool p1_first_ccw = *k01 < *k02;
    v.s_idx = p1_first_ccw ? 0 : 1;  // next counterclockwise
    v.q_idx = p1_first_ccw ? 1 : 0;  // next clockwise = previous counterclockwise
    v.s_pos = snap.others[v.s_idx].pos;
    v.q_pos = snap.others[v.q_idx].pos;
    std::optional<int> sep12 = hex_sep(u1, u2);
    v.equilateral = *k01 % 2 == 0 && *k02 % 2 == 0 && sep12 && *sep12 % 2 == 0;
    return v;
}

class VtrFstaAm final : public RobotAlgorithm {
public:
    std::string id() const override { return "vtr.fsta.async_m"; }
    Capability home_model() const override { return Capability::FSTA; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::ASYNC_M; }
    std::vector<LightSpec> lights() const override { return {{"state", {"A", "B", "C"}, "A"}}; }
    Decision compute(const ComputeInput& in) const override {
        VtrView v = vtr_view(in.snapshot);
        std::string s = own_color(in);
        if (s == "C") return stay();
        Decision d;
        d.lights = {LightOp::set(s == "A" ? "B" : "C")};
        d.destination = Scalar(2) * v.center;  // antipodal vertex
        return d;
    }
};

class VtrFcomS final : public RobotAlgorithm {
public:
    std::string id() const override { return "vtr.fcom.ssynch"; }
    Capability home_model() const override { return Capability::FCOM; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::SSYNCH; }
    std::vector<LightSpec> lights() const override {
        return {{"state", {"0", "1", "2"}, "0"},
                {"mirror_cw", {"0", "1", "2"}, "0"},
                {"mirror_ccw", {"0", "1", "2"}, "0"}};
    }
    Decision compute(const ComputeInput& in) const override {
        VtrView v = vtr_view(in.snapshot);
        const auto& qc = in.snapshot.others[v.q_idx].colors;
        const auto& sc = in.snapshot.others[v.s_idx].colors;
        int q_state = std::stoi(qc.at(0)), s_state = std::stoi(sc.at(0));
        // q sees this robot as its counterclockwise neighbor; s as its clockwise one.
        int q_of_r = std::stoi(qc.at(2)), s_of_r = std::stoi(sc.at(1));

        bool advance = false;
        if (v.equilateral) {
            advance = q_state != 2 || s_state != 2;
        } else {
            Scalar rq = norm2(v.q_pos), rs = norm2(v.s_pos);
            if (sign(rq - rs) > 0) {
                advance = q_state != 2 || s_state != 1 || (q_of_r != 2 && q_of_r == s_of_r);
            } else if (rq == rs) {
                advance = q_state == 2 && s_state == 2 && q_of_r != 2 && s_of_r != 2;
            }
        }
        Decision d;
        d.lights = {advance ? LightOp::increment() : LightOp::keep(),
                    LightOp::set(std::to_string(q_state)), LightOp::set(std::to_string(s_state))};
        if (advance) d.destination = Scalar(2) * v.center;
        return d;
    }
};

// ---- ETE ---------------------------------------------------------------------

constexpr int kEteStatus = 0, kEteSst = 1, kEteB = 2, kEteC = 3, kEteS = 4;

std::string bit_xor(const std::string& a, const std::string& b) { return a == b ? "0" : "1"; }
std::string bit_and(const std::string& a, const std::string& b) {
    return a == "1" && b == "1" ? "1" : "0";
}

class EteFcomF final : public RobotAlgorithm {
public:
    std::string id() const override { return "ete.fcom.fsynch"; }
    Capability home_model() const override { return Capability::FCOM; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::FSYNCH; }
    std::vector<LightSpec> lights() const override {
        return {{"status", {"initial", "final"}, "initial"},
                {"suc_status", {"initial", "final"}, "initial"},
                {"b", {"0", "1"}, "0"},
                {"c", {"0", "1"}, "0"},
                {"suc_b", {"0", "1"}, "0"}};
    }

    Decision compute(const ComputeInput& in) const override {
        const auto& others = in.snapshot.others;
        int n = static_cast<int>(others.size()) + 1;
        if (n < 3) throw Error("BadPattern", "ETE needs at least three robots");
        std::vector<Vec2> pts;
        pts.push_back(kOrigin);
        for (const auto& e : others) pts.push_back(e.pos);
        auto roles = derive_ete_roles(pts);
        if (!roles) throw Error("BadPattern", "configuration is not circle plus center");

        // role -> point index; role 0 is the center, 1..n-1 the circle order.
        std::vector<int> role_pt(n);
        role_pt[0] = roles->center;
        for (int j = 0; j < n - 1; ++j) role_pt[j + 1] = roles->circle[j];
        int self_role = -1;
        for (int r = 0; r < n; ++r)
            if (role_pt[r] == 0) self_role = r;

        auto color = [&](int role, int reg) -> std::string {
            int pt = role_pt[role];
            if (pt == 0) throw Error("BadModel", "own light read under FCOM");
            return others[pt - 1].colors.at(reg);
        };
        auto status_is = [&](int role, const char* v) { return color(role, kEteStatus) == v; };
        auto suc_role = [&](int role) { return (role + 1) % n; };
        auto pred_role = [&](int role) { return (role + n - 1) % n; };

        Decision d;
        d.lights = keep_ops(5);
        // Every Compute refreshes the successor-status mirror.
        d.lights[kEteSst] = LightOp::set(color(suc_role(self_role), kEteStatus));

        if (self_role == 0) {
            bool all_final = true, all_initial = true;
            for (int r = 1; r < n; ++r) {
                all_final = all_final && status_is(r, "final");
                all_initial = all_initial && status_is(r, "initial");
            }
            if (all_final) {
                d.lights[kEteStatus] = LightOp::set("initial");
            } else if (all_initial && color(n - 1, kEteSst) == "initial") {
                d.lights[kEteB] = LightOp::set("0");
                d.lights[kEteC] = LightOp::set("1");
                d.lights[kEteS] = LightOp::set(color(1, kEteB));
                d.lights[kEteStatus] = LightOp::set("final");
            }
            return d;  // the center robot never moves
        }

        int i = self_role;
        bool others_final = status_is(0, "initial");  // r_0 reset acts as the move trigger
        for (int r = 1; r < n && others_final; ++r)
            if (r != i) others_final = status_is(r, "final");
        if (others_final) {
            // B value: direct reads for the other circle robots, the adder
            // recomputation pred.c xor pred.suc_b for this robot's own bit.
            long value = 0;
            for (int r = 1; r < n; ++r) {
                std::string bit = r == i
                                      ? bit_xor(color(pred_role(i), kEteC), color(pred_role(i), kEteS))
                                      : color(r, kEteB);
                if (bit == "1") value += 1L << (r - 1);
            }
            Rat dfac = expansion_factor(in.params.expansion, value);
            std::vector<Vec2> circle_pts;
            for (int r = 1; r < n; ++r) circle_pts.push_back(pts[role_pt[r]]);
            Vec2 g = centroid(circle_pts);
            Vec2 dest{Scalar(Rat(floor_scalar(g.x + Scalar(dfac) * (Scalar(0) - g.x)))),
                      Scalar(Rat(floor_scalar(g.y + Scalar(dfac) * (Scalar(0) - g.y))))};
            d.destination = dest;
            d.lights[kEteStatus] = LightOp::set("initial");
            return d;
        }

        bool preds_final = true, succs_initial = true;
        for (int r = 0; r < i; ++r) preds_final = preds_final && status_is(r, "final");
        for (int r = i + 1; r < n; ++r) succs_initial = succs_initial && status_is(r, "initial");
        if (preds_final && succs_initial && color(pred_role(i), kEteSst) == "initial") {
            std::string cin = color(pred_role(i), kEteC);
            std::string own = color(pred_role(i), kEteS);
            d.lights[kEteB] = LightOp::set(bit_xor(cin, own));
            d.lights[kEteC] = LightOp::set(bit_and(cin, own));
            d.lights[kEteS] = LightOp::set(color(suc_role(i), kEteB));
            d.lights[kEteStatus] = LightOp::set("final");
        }
        return d;
    }
};

// ---- LCM-M family --------------------------------------------------------------

struct LcmView {
    Vec2 farthest, nearest;
    std::vector<std::string> nearest_colors;
};

/// Farthest / nearest robots of a three-robot line view; nullopt when the
/// view is degenerate (collapsed entries or a collocated other).
std::optional<LcmView> lcm_view(const Snapshot& snap, bool require_collinear_throw) {
    if (snap.others.size() != 2) return std::nullopt;
    const auto &e0 = snap.others[0], &e1 = snap.others[1];
    if (sign(cross(e0.pos, e1.pos)) != 0) {
        if (require_collinear_throw) throw Error("BadPattern", "robots not collinear");
        return std::nullopt;
    }
    Scalar d0 = norm2(e0.pos), d1 = norm2(e1.pos);
    const SnapshotEntry* far = &e0;
    const SnapshotEntry* near = &e1;
    if (sign(d0 - d1) < 0 || (d0 == d1 && lex_less(e1.pos, e0.pos))) std::swap(far, near);
    if (near->pos == kOrigin || far->pos == near->pos) return std::nullopt;
    return LcmView{far->pos, near->pos, near->colors};
}

class LcmMOblotF final : public RobotAlgorithm {
public:
    std::string id() const override { return "lcm_m.oblot.fsynch"; }
    Capability home_model() const override { return Capability::OBLOT; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::FSYNCH; }
    std::vector<LightSpec> lights() const override { return {}; }
    Decision compute(const ComputeInput& in) const override {
        auto v = lcm_view(in.snapshot, /*require_collinear_throw=*/true);
        if (!v) return stay();
        const Vec2 &A = v->farthest, &other = v->nearest;
        Decision d;
        if (ratio_between_is(A, kOrigin, other, 2, 1)) {
            d.destination = -A;  // away from A by |Ar|
        } else if (ratio_between_is(A, other, kOrigin, 3, 1)) {
            d.destination = -(A / Scalar(2));  // away from A by |Ar|/2
        } else if (ratio_between_is(A, kOrigin, other, 3, 1)) {
            d.destination = -A;
        }
        return d;
    }
};

class LcmMFstaAlc final : public RobotAlgorithm {
public:
    std::string id() const override { return "lcm_m.fsta.async_lc"; }
    Capability home_model() const override { return Capability::FSTA; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::ASYNC_LC; }
    std::vector<LightSpec> lights() const override { return {{"state", {"0", "1"}, "0"}}; }
    Decision compute(const ComputeInput& in) const override {
        auto v = lcm_view(in.snapshot, false);
        if (!v) return stay();
        const Vec2& A = v->farthest;
        std::string st = own_color(in);
        Decision d;
        if (ratio_between_is(A, kOrigin, v->nearest, 2, 1) && st == "0") {
            d.lights = {LightOp::set("1")};
            d.destination = -A;
        } else if (ratio_between_is(A, kOrigin, v->nearest, 2, 1) && st == "1") {
            d.destination = -(A / Scalar(2));
        } else if (ratio_between_is(A, kOrigin, v->nearest, 3, 1) && st == "0") {
            d.destination = -A;  // as printed: no state write on this guard
        }
        return d;
    }
};

class LcmMFcomAm final : public RobotAlgorithm {
public:
    std::string id() const override { return "lcm_m.fcom.async_m"; }
    Capability home_model() const override { return Capability::FCOM; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::ASYNC_M; }
    std::vector<LightSpec> lights() const override { return {{"state", {"0", "1"}, "0"}}; }
    Decision compute(const ComputeInput& in) const override {
        auto v = lcm_view(in.snapshot, false);
        if (!v) return stay();
        const Vec2& A = v->farthest;
        const std::string& os = v->nearest_colors.at(0);
        Decision d;
        if (ratio_between_is(A, kOrigin, v->nearest, 2, 1) && os == "0") {
            d.lights = {LightOp::set("1")};
            d.destination = -A;
        } else if (ratio_between_is(A, kOrigin, v->nearest, 2, 1) && os == "1") {
            d.destination = -(A / Scalar(2));
        } else if (ratio_between_is(A, kOrigin, v->nearest, 3, 1) && os == "1") {
            d.destination = -A;
        }
        return d;
    }
};

// ---- Rendezvous decision shapes (adversary targets) ----------------------------

/// The built-in shapes the rendezvous adversary defeats. The tick light
/// flips on every activation, so a singly-activated robot always changes
/// state (finite-state, not oblivious).
class RdvShape final : public RobotAlgorithm {
public:
    enum class Shape { Swap, Midpoint, Stay };
    RdvShape(Shape s, std::string id) : shape_(s), id_(std::move(id)) {}
    std::string id() const override { return id_; }
    Capability home_model() const override { return Capability::FSTA; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::SSYNCH; }
    std::vector<LightSpec> lights() const override { return {{"tick", {"0", "1"}, "0"}}; }
    Decision compute(const ComputeInput& in) const override {
        const Vec2& p = sole_other(in.snapshot).pos;
        Decision d;
        d.lights = {LightOp::increment()};
        switch (shape_) {
            case Shape::Swap: d.destination = p; break;
            case Shape::Midpoint: d.destination = p / Scalar(2); break;
            case Shape::Stay: break;
        }
        return d;
    }

private:
    Shape shape_;
    std::string id_;
};

/// Demonstration variants that key the ZCC / VEC recipes off the OTHER
/// robot's light instead of their own. Distinct identifiers on purpose: they
/// exist as the starvation-adversary's targets (a starved robot keeps seeing
/// the same partner color and repeats the same move), not as solutions.
class ZccFcomStyle final : public RobotAlgorithm {
public:
    std::string id() const override { return "zcc.fcom_style.ssynch"; }
    Capability home_model() const override { return Capability::FCOM; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::SSYNCH; }
    std::vector<LightSpec> lights() const override { return {{"color", {"A", "B"}, "A"}}; }
    Decision compute(const ComputeInput& in) const override {
        const SnapshotEntry& other = sole_other(in.snapshot);
        if (other.pos == kOrigin) return stay("zero-distance: collocated robots, staying");
        Decision d;
        if (other.colors.at(0) == "A") {
            d.lights = {LightOp::set("B")};
            d.destination = other.pos / Scalar(2);
        } else {
            d.lights = {LightOp::set("A")};
            d.destination = -(other.pos / Scalar(4));
        }
        return d;
    }
};

class VecFcomStyle final : public RobotAlgorithm {
public:
    std::string id() const override { return "vec.fcom_style.ssynch"; }
    Capability home_model() const override { return Capability::FCOM; }
    SchedulerKind home_scheduler() const override { return SchedulerKind::SSYNCH; }
    std::vector<LightSpec> lights() const override { return {{"state", {"1", "2"}, "1"}}; }
    Decision compute(const ComputeInput& in) const override {
        const SnapshotEntry& other = sole_other(in.snapshot);
        if (other.pos == kOrigin) throw Error("DegenerateSegment", "coincident robots");
        if (other.colors.at(0) == "2") return stay();
        Vec2 mid = other.pos / Scalar(2);
        Decision d;
        d.lights = {LightOp::set("2")};
        d.destination = mid + rotate_30(kOrigin - mid, -3);
        return d;
    }
};

const std::vector<std::unique_ptr<RobotAlgorithm>>& registry() {
    static const auto algorithms = [] {
        std::vector<std::unique_ptr<RobotAlgorithm>> v;
        v.push_back(std::make_unique<EteFcomF>());
        v.push_back(std::make_unique<HetFstaF>());
        v.push_back(std::make_unique<HetLumiR>());
        v.push_back(std::make_unique<TarStarLumiR>());
        v.push_back(std::make_unique<LpFstaRsynch>("lp_mlcv.fsta.rsynch", SchedulerKind::RSYNCH));
        v.push_back(std::make_unique<LpFcom>("lp_mlcv.fcom.ssynch", SchedulerKind::SSYNCH));
        v.push_back(std::make_unique<VecFstaAm>());
        v.push_back(std::make_unique<ZccFstaS>());
        v.push_back(std::make_unique<LpFstaRsynch>("lp_cv.fsta.rsynch", SchedulerKind::RSYNCH));
        v.push_back(std::make_unique<LpFcom>("lp_cv.fcom.async_m", SchedulerKind::ASYNC_M));
        v.push_back(std::make_unique<VtrFstaAm>());
        v.push_back(std::make_unique<VtrFcomS>());
        v.push_back(std::make_unique<LcmMOblotF>());
        v.push_back(std::make_unique<LcmMFstaAlc>());
        v.push_back(std::make_unique<LcmMFcomAm>());
        v.push_back(std::make_unique<ZccFcomStyle>());
        v.push_back(std::make_unique<VecFcomStyle>());
        v.push_back(std::make_unique<RdvShape>(RdvShape::Shape::Swap, "rdv.shape_swap"));
        v.push_back(std::make_unique<RdvShape>(RdvShape::Shape::Midpoint, "rdv.shape_midpoint"));
        v.push_back(std::make_unique<RdvShape>(RdvShape::Shape::Stay, "rdv.shape_stay"));
        return v;
    }();
    return algorithms;
}

}  // namespace

const RobotAlgorithm* find_algorithm(const std::string& id) {
    for (const auto& a : registry())
        if (a->id() == id) return a.get();
    return nullptr;
}

std::vector<std::string> algorithm_ids() {
    std::vector<std::string> ids;
    for (const auto& a : registry()) ids.push_back(a->id());
    return ids;
}

Int ete_scale_target(const Rat& a, const Rat& b, const Rat& d) { return floor_rat(b + d * (a - b)); }

FloorMargin floor_margin(const std::vector<Vec2>& points, const Rat& d) {
    if (points.empty()) throw Error("EmptyInput", "floor_margin of empty set");
    std::vector<Rat> xs, ys;
    for (const auto& p : points) {
        if (!p.x.is_rational() || !p.y.is_rational())
            throw Error("BadScenario", "floor_margin expects rational points");
        xs.push_back(p.x.a);
        ys.push_back(p.y.a);
    }
    auto axis = [&](const std::vector<Rat>& vals, std::vector<Int>& targets) {
        Rat g(0);
        for (const auto& v : vals) g += v;
        g /= Rat(vals.size());
        Rat delta(1);
        for (const auto& v : vals) {
            Rat inside = g + d * (v - g);
            Int fl = floor_rat(inside);
            targets.push_back(fl);
            Rat dd = Rat(fl) + 1 - inside;  // distance up to the next integer, in (0, 1]
            if (dd < delta) delta = dd;
        }
        return delta;
    };
    FloorMargin m;
    m.delta_x = axis(xs, m.targets_x);
    m.delta_y = axis(ys, m.targets_y);
    Rat dmin = std::min(m.delta_x, m.delta_y);
    m.epsilon = dmin * Rat(1, 2);
    return m;
}

Rat expansion_factor(const std::vector<Rat>& table, long index) {
    if (table.empty()) throw Error("BadScenario", "empty expansion schedule");
    long n = static_cast<long>(table.size());
    return table[static_cast<std::size_t>(((index % n) + n) % n)];
}

std::optional<EteRoles> derive_ete_roles(const std::vector<Vec2>& points) {
    int n = static_cast<int>(points.size());
    if (n < 3) return std::nullopt;

    EteRoles roles;
    roles.center = -1;
    Vec2 ccenter;
    if (n == 3) {
        Vec2 v = points[1] - points[0], w = points[2] - points[0];
        if (sign(cross(v, w)) != 0) return std::nullopt;
        for (int q = 0; q < 3; ++q) {
            int a = (q + 1) % 3, b = (q + 2) % 3;
            if (points[a] == points[b]) return std::nullopt;
            auto r = collinear_ratio(points[a], points[q], points[b]);
            if (r.kind == CollinearRatio::Kind::Between) {
                if (roles.center >= 0) return std::nullopt;
                roles.center = q;
                ccenter = points[q];
            }
        }
        if (roles.center < 0) return std::nullopt;
    } else {
        for (int q = 0; q < n; ++q) {
            std::vector<Vec2> rest;
            for (int i = 0; i < n; ++i)
                if (i != q) rest.push_back(points[i]);
            Circle c;
            bool ok = false;
            for (std::size_t k = 2; k < rest.size() && !ok; ++k) {
                try {
                    c = circumcircle(rest[0], rest[1], rest[k]);
                    ok = true;
                } catch (const Error&) {
                }
            }
            if (!ok) continue;
            bool all_on = true;
            for (const auto& p : rest) all_on = all_on && dist2(p, c.center) == c.radius_sq;
            if (!all_on) continue;
            if (sign(dist2(points[q], c.center) - c.radius_sq) >= 0) continue;  // strictly inside
            if (roles.center >= 0) return std::nullopt;                         // must be unique
            roles.center = q;
            ccenter = c.center;
        }
        if (roles.center < 0) return std::nullopt;
    }

    // Order circle robots counterclockwise, then walk clockwise from the
    // clockwise end of the largest angular gap.
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if (i != roles.center) idx.push_back(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const Vec2 ua = points[a] - ccenter, ub = points[b] - ccenter;
        if (ua == ub) return a < b;
        return angle_less_ccw(ua, ub);
    });
    int m = static_cast<int>(idx.size());
    auto ang = [&](int i) {
        Vec2 u = points[idx[i]] - ccenter;
        return std::atan2(to_double(u.y), to_double(u.x));
    };
    int best = 0;
    double best_gap = -1;
    for (int i = 0; i < m; ++i) {
        double gap = ang((i + 1) % m) - ang(i);
        if (i + 1 == m) gap += 2 * M_PI;
        if (gap > best_gap + 1e-12) {
            best_gap = gap;
            best = i;
        }
    }
    for (int j = 0; j < m; ++j) roles.circle.push_back(idx[((best - j) % m + m) % m]);
    return roles;
}

}  // namespace lcmsep
