#include "lcmsep/engine.hpp"

#include "lcmsep/error.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace lcmsep {

namespace {

struct ActRecord {
    ActivationPlan plan;
    int cycle = 0;
    Snapshot snapshot;
    Frame frame = Frame::identity();
    Vec2 dest_global{Scalar(0), Scalar(0)};
    bool computed = false;
};

// MoveEnd < MoveBegin < Compute < Look at equal times: light writes at t are
// visible to Looks at t, and positions are time-functions either way.
enum class Ev { MoveEnd = 0, MoveBegin = 1, Compute = 2, Look = 3 };

struct EngineEvent {
    Rat t;
    Ev ev;
    int sim_id;
    int act;
};

struct EventAfter {
    bool operator()(const EngineEvent& a, const EngineEvent& b) const {
        if (a.t != b.t) return a.t > b.t;
        if (a.ev != b.ev) return a.ev > b.ev;
        if (a.sim_id != b.sim_id) return a.sim_id > b.sim_id;
        return a.act > b.act;
    }
};

class Engine {
public:
    explicit Engine(ExecutionRequest req) : req_(std::move(req)) {
        if (!req_.algorithm) throw Error("BadScenario", "no algorithm");
        exec_kind_ = canonicalize_kind(req_.kind);
        spec_ = req_.algorithm->lights();
        robots_ = req_.initial.robots;
        for (std::size_t i = 0; i < robots_.size(); ++i) {
            robots_[i].sim_id = static_cast<int>(i);
            if (robots_[i].lights.values.empty())
                for (const auto& s : spec_) robots_[i].lights.values.push_back(s.initial);
            if (robots_[i].lights.values.size() != spec_.size())
                throw Error("BadScenario", "light bank does not match the algorithm's registers");
        }
        counts_.assign(robots_.size(), 0);
        last_end_.assign(robots_.size(), Rat(-1));
    }

    Trace run() {
        Trace& tr = trace_;
        tr.algorithm_id = req_.algorithm->id();
        tr.model = req_.model;
        tr.declared_kind = req_.kind;
        tr.kind = exec_kind_;
        tr.robot_count = static_cast<int>(robots_.size());
        tr.light_spec = spec_;
        tr.initial = Configuration{Rat(0), robots_};
        tr.timeline.fairness_window = req_.fairness_window;
        tr.timeline.rsynch_prefix = req_.policy.rsynch_prefix;
        if (req_.kind != exec_kind_)
            tr.notes.push_back("scheduler " + kind_name(req_.kind) + " canonicalized to " +
                               kind_name(exec_kind_));

        while (true) {
            if (queue_.empty()) {
                if (scheduled_ >= req_.horizon) break;
                PlanContext ctx{materialize(frontier_), counts_, scheduled_, req_.horizon, frontier_};
                auto batch = req_.policy.plan(ctx);
                if (batch.empty()) break;
                accept_batch(batch);
                continue;
            }
            EngineEvent e = queue_.top();
            queue_.pop();
            frontier_ = e.t;
            dispatch(e);
        }

        std::stable_sort(tr.timeline.activations.begin(), tr.timeline.activations.end(),
                         [](const Activation& a, const Activation& b) {
                             if (a.t_look != b.t_look) return a.t_look < b.t_look;
                             return a.sim_id < b.sim_id;
                         });
        return std::move(trace_);
    }

private:
    Configuration materialize(const Rat& t) const {
        Configuration c;
        c.time = t;
        c.robots = robots_;
        for (auto& r : c.robots) r.position = robot_position_at(r, t);
        return c;
    }

    void accept_batch(const std::vector<ActivationPlan>& batch) {
        if (scheduled_ + static_cast<int>(batch.size()) > req_.horizon)
            throw Error("InvalidAdversaryChoice", "batch exceeds the activation horizon");
        switch (exec_kind_) {
            case SchedulerKind::FSYNCH:
            case SchedulerKind::SSYNCH:
            case SchedulerKind::RSYNCH: check_round(batch); break;
            default: check_async(batch); break;
        }
        for (const auto& p : batch) {
            int id = p.sim_id;
            if (id < 0 || id >= static_cast<int>(robots_.size()))
                throw Error("InvalidAdversaryChoice", "unknown robot in plan");
            if (!(p.t_look < p.t_compute && p.t_compute < p.t_move_begin &&
                  p.t_move_begin < p.t_move_end))
                throw Error("InvalidAdversaryChoice", "event order within activation");
            if (counts_[id] > 0 && !(p.t_look > last_end_[id]))
                throw Error("InvalidAdversaryChoice", "Look before previous Move-end");
            if (processed_any_ ? !(p.t_look > frontier_) : p.t_look < 0)
                throw Error("InvalidAdversaryChoice", "plan not in the future");
            if (!p.profile.valid()) throw Error("InvalidAdversaryChoice", "speed profile not monotone");

            int idx = static_cast<int>(acts_.size());
            ActRecord rec;
            rec.plan = p;
            rec.cycle = ++counts_[id];
            acts_.push_back(rec);
            last_end_[id] = p.t_move_end;
            accepted_.push_back(p);
            ++scheduled_;
            queue_.push({p.t_look, Ev::Look, id, idx});
            queue_.push({p.t_compute, Ev::Compute, id, idx});
            queue_.push({p.t_move_begin, Ev::MoveBegin, id, idx});
            queue_.push({p.t_move_end, Ev::MoveEnd, id, idx});
            trace_.timeline.activations.push_back(
                Activation{id, rec.cycle, p.t_look, p.t_compute, p.t_move_begin, p.t_move_end});
        }
    }

    void check_round(const std::vector<ActivationPlan>& batch) {
        if (batch.empty()) return;
        const ActivationPlan& a0 = batch.front();
        if (rat_den(a0.t_look) != 1 || a0.t_look < 0)
            throw Error("InvalidAdversaryChoice", "round must start at an integer time");
        std::set<int> ids;
        for (const auto& p : batch) {
            if (p.t_look != a0.t_look || p.t_compute != a0.t_compute ||
                p.t_move_begin != a0.t_move_begin || p.t_move_end != a0.t_move_end)
                throw Error("InvalidAdversaryChoice", "round instants differ across robots");
            if (!ids.insert(p.sim_id).second)
                throw Error("InvalidAdversaryChoice", "robot twice in one round");
        }
        if (!(a0.t_move_end - a0.t_look < 1))
            throw Error("InvalidAdversaryChoice", "cycle does not fit inside the round");
        if (exec_kind_ == SchedulerKind::FSYNCH && ids.size() != robots_.size())
            throw Error("InvalidAdversaryChoice", "FSYNCH round must activate every robot");
        if (exec_kind_ == SchedulerKind::RSYNCH) {
            if (round_no_ < req_.policy.rsynch_prefix) {
                if (ids.size() != robots_.size())
                    throw Error("InvalidAdversaryChoice", "RSYNCH prefix round must be full");
            } else if (round_no_ > req_.policy.rsynch_prefix) {
                // post-prefix rounds: consecutive activation sets are disjoint
                for (int id : ids)
                    if (prev_round_.count(id))
                        throw Error("InvalidAdversaryChoice",
                                    "RSYNCH consecutive rounds must be disjoint");
            }
        }
        prev_round_ = std::move(ids);
        ++round_no_;
    }

    void check_async(const std::vector<ActivationPlan>& batch) {
        if (exec_kind_ == SchedulerKind::ASYNC) return;
        auto window_lo = [&](const ActivationPlan& p) {
            return exec_kind_ == SchedulerKind::ASYNC_M ? p.t_move_begin : p.t_compute;
        };
        auto check_pair = [&](const ActivationPlan& x, const ActivationPlan& y) {
            if (x.sim_id == y.sim_id) return;
            if (exec_kind_ == SchedulerKind::ASYNC_M || exec_kind_ == SchedulerKind::ASYNC_CM) {
                if (x.t_look >= window_lo(y) && x.t_look <= y.t_move_end)
                    throw Error("InvalidAdversaryChoice", "Look inside another robot's atomic window");
            } else if (exec_kind_ == SchedulerKind::ASYNC_LC) {
                if (x.t_look > y.t_look && x.t_look <= y.t_compute)
                    throw Error("InvalidAdversaryChoice", "Look inside another robot's Look-Compute");
            }
        };
        for (const auto& p : batch) {
            for (const auto& q : accepted_) {
                check_pair(p, q);
                check_pair(q, p);
            }
            for (const auto& q : batch) {
                if (&p == &q) continue;
                check_pair(p, q);
            }
        }
    }

    void dispatch(const EngineEvent& e) {
        processed_any_ = true;
        ActRecord& rec = acts_[e.act];
        RobotState& robot = robots_[e.sim_id];
        switch (e.ev) {
            case Ev::Look: {
                Configuration now = materialize(e.t);
                const RobotState* self = now.find(e.sim_id);
                rec.frame = req_.policy.frame ? req_.policy.frame(e.sim_id, self->position, now)
                                              : Frame::at(self->position);
                rec.snapshot = take_snapshot(req_.model, now, e.sim_id, rec.frame);
                TraceEvent ev;
                ev.kind = TraceEvent::Kind::Look;
                ev.t = e.t;
                ev.sim_id = e.sim_id;
                ev.snapshot = rec.snapshot;
                ev.frame = rec.frame;
                trace_.events.push_back(std::move(ev));
                break;
            }
            case Ev::Compute: {
                const StaticParams& par =
                    req_.params.size() == 1 ? req_.params.front() : req_.params.at(e.sim_id);
                Decision d = req_.algorithm->compute(ComputeInput{rec.snapshot, par});
                apply_lights(e, robot, d.lights);
                rec.dest_global = from_local(rec.frame, d.destination);
                rec.computed = true;
                TraceEvent ev;
                ev.kind = TraceEvent::Kind::Compute;
                ev.t = e.t;
                ev.sim_id = e.sim_id;
                ev.destination = rec.dest_global;
                ev.note = d.note;
                trace_.events.push_back(std::move(ev));
                if (d.note)
                    trace_.notes.push_back("t=" + rat_str(e.t) + " robot " + std::to_string(e.sim_id) +
                                           ": " + *d.note);
                break;
            }
            case Ev::MoveBegin: {
                robot.pending = PendingMove{robot.position, rec.dest_global, rec.plan.t_move_begin,
                                            rec.plan.t_move_end, rec.plan.profile};
                trace_.moves.push_back(MoveRecord{e.sim_id, rec.plan.t_move_begin,
                                                  rec.plan.t_move_end, robot.position,
                                                  rec.dest_global, rec.plan.profile});
                TraceEvent ev;
                ev.kind = TraceEvent::Kind::MoveBegin;
                ev.t = e.t;
                ev.sim_id = e.sim_id;
                ev.src = robot.position;
                ev.dst = rec.dest_global;
                trace_.events.push_back(std::move(ev));
                break;
            }
            case Ev::MoveEnd: {
                robot.position = rec.dest_global;
                robot.pending.reset();
                TraceEvent ev;
                ev.kind = TraceEvent::Kind::MoveEnd;
                ev.t = e.t;
                ev.sim_id = e.sim_id;
                ev.dst = robot.position;
                trace_.events.push_back(std::move(ev));
                break;
            }
        }
    }

    void apply_lights(const EngineEvent& e, RobotState& robot, const std::vector<LightOp>& ops) {
        if (ops.empty()) return;
        if (ops.size() != spec_.size()) throw Error("BadLights", "light op count mismatch");
        for (std::size_t i = 0; i < ops.size(); ++i) {
            const LightOp& op = ops[i];
            if (op.kind == LightOp::Kind::Keep) continue;
            std::string& cur = robot.lights.values[i];
            std::string next;
            if (op.kind == LightOp::Kind::Set) {
                const auto& pal = spec_[i].colors;
                if (std::find(pal.begin(), pal.end(), op.color) == pal.end())
                    throw Error("BadLights", "color outside palette: " + op.color);
                next = op.color;
            } else {
                const auto& pal = spec_[i].colors;
                auto it = std::find(pal.begin(), pal.end(), cur);
                next = pal[(static_cast<std::size_t>(it - pal.begin()) + 1) % pal.size()];
            }
            if (next == cur) continue;
            trace_.light_log.push_back(LightRecord{e.sim_id, e.t, static_cast<int>(i), cur, next});
            TraceEvent ev;
            ev.kind = TraceEvent::Kind::LightChange;
            ev.t = e.t;
            ev.sim_id = e.sim_id;
            ev.reg = static_cast<int>(i);
            ev.old_color = cur;
            ev.new_color = next;
            trace_.events.push_back(std::move(ev));
            cur = next;
        }
    }

    ExecutionRequest req_;
    SchedulerKind exec_kind_{};
    std::vector<LightSpec> spec_;
    std::vector<RobotState> robots_;
    std::vector<int> counts_;
    std::vector<Rat> last_end_;
    std::vector<ActRecord> acts_;
    std::vector<ActivationPlan> accepted_;
    std::priority_queue<EngineEvent, std::vector<EngineEvent>, EventAfter> queue_;
    Trace trace_;
    Rat frontier_{-1};
    bool processed_any_ = false;
    int scheduled_ = 0;
    long round_no_ = 0;
    std::set<int> prev_round_;
};

}  // namespace

Trace run_execution(ExecutionRequest req) { return Engine(std::move(req)).run(); }

}  // namespace lcmsep
