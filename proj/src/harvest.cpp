#include "avogrip/harvest.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <thread>
#include <tuple>

#include "avogrip/errors.hpp"
#include "avogrip/units.hpp"

namespace avogrip {

std::string_view to_string(HarvestPhase p) {
  switch (p) {
    case HarvestPhase::Home: return "Home";
    case HarvestPhase::Staging: return "Staging";
    case HarvestPhase::Attaching: return "Attaching";
    case HarvestPhase::Grasping: return "Grasping";
    case HarvestPhase::Detaching: return "Detaching";
    case HarvestPhase::Retrieved: return "Retrieved";
    case HarvestPhase::Fault: return "Fault";
  }
  return "?";
}

std::string_view to_string(HarvestEvent e) {
  switch (e) {
    case HarvestEvent::BeginStage: return "BeginStage";
    case HarvestEvent::StagePoseReached: return "StagePoseReached";
    case HarvestEvent::FruitEnclosed: return "FruitEnclosed";
    case HarvestEvent::ClosureReached: return "ClosureReached";
    case HarvestEvent::DetachConfirmed: return "DetachConfirmed";
    case HarvestEvent::Abort: return "Abort";
  }
  return "?";
}

std::string to_string(const HarvestState& s) {
  if (s.phase == HarvestPhase::Fault) return "Fault(" + s.fault_reason + ")";
  return std::string(to_string(s.phase));
}

std::optional<HarvestState> try_step(const HarvestState& state, HarvestEvent event,
                                     std::string abort_reason) {
  if (event == HarvestEvent::Abort) return HarvestState::fault(std::move(abort_reason));

  using P = HarvestPhase;
  using E = HarvestEvent;
  static constexpr std::tuple<P, E, P> kEdges[] = {
      {P::Home, E::BeginStage, P::Staging},
      {P::Staging, E::StagePoseReached, P::Attaching},
      {P::Attaching, E::FruitEnclosed, P::Grasping},
      {P::Grasping, E::ClosureReached, P::Detaching},
      {P::Detaching, E::DetachConfirmed, P::Retrieved},
  };
  for (const auto& [from, on, to] : kEdges)
    if (state.phase == from && event == on) return HarvestState{to, {}};
  return std::nullopt;
}

HarvestState step(const HarvestState& state, HarvestEvent event, std::string abort_reason) {
  if (auto next = try_step(state, event, std::move(abort_reason))) return *std::move(next);
  throw InvalidTransition("no transition from " + to_string(state) + " on " +
                          std::string(to_string(event)));
}

void Pose6D::validate() const {
  for (double a : orientation)
    if (!(a > -180.0 && a <= 180.0))
      throw DomainError("orientation", "Euler angles must lie in (-180, 180] deg");
}

Pose6D default_staging_pose() { return Pose6D{{-0.09, -0.53, 0.84}, {90.1, 5.4, 0.0}}; }

void HarvestConfig::validate() const {
  if (!(wrist_speed > 0.0)) throw DomainError("wrist_speed", "must be positive");
  if (!(holding_force >= 0.0)) throw DomainError("holding_force", "must be non-negative");
  if (!(angular_accel >= 0.0)) throw DomainError("angular_accel", "must be non-negative");
  if (holding_threshold && !(*holding_threshold >= 0.0))
    throw DomainError("holding_threshold", "must be non-negative");
  if (!(staging_latency > 0.0)) throw DomainError("staging_latency", "must be positive");
  if (!(attach_latency > 0.0)) throw DomainError("attach_latency", "must be positive");
  if (!(closure_latency > 0.0)) throw DomainError("closure_latency", "must be positive");
  if (!(max_wrist_rotation > 0.0)) throw DomainError("max_wrist_rotation", "must be positive");
  staging_pose.validate();
}

RotationModel replay_rotation(double rotation_deg) {
  return [rotation_deg](const CylinderFruit&, Viewpoint) { return rotation_deg; };
}

RotationModel predictive_rotation(std::span<const GraspTrial> trials) {
  return [data = std::vector<GraspTrial>(trials.begin(), trials.end())](const CylinderFruit& fruit,
                                                                        Viewpoint v) {
    return required_rotation(data, units::m_to_mm(fruit.width()), units::m_to_mm(fruit.height), v);
  };
}

namespace {

struct Scheduled {
  double time;
  std::uint64_t seq;
  HarvestEvent event;
  std::string reason;

  bool operator>(const Scheduled& o) const { return std::tie(time, seq) > std::tie(o.time, o.seq); }
};

// Minimal discrete-event queue; ties resolve in scheduling order.
class EventQueue {
 public:
  void schedule(double time, HarvestEvent e, std::string reason = {}) {
    queue_.push(Scheduled{time, next_seq_++, e, std::move(reason)});
  }
  bool empty() const { return queue_.empty(); }
  Scheduled pop() {
    Scheduled s = queue_.top();
    queue_.pop();
    return s;
  }

 private:
  std::priority_queue<Scheduled, std::vector<Scheduled>, std::greater<>> queue_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace

HarvestOutcome simulate_harvest(const GripperGeometry& geom, const MotorSpec& motor,
                                const CylinderFruit& fruit, Viewpoint viewpoint,
                                const RotationModel& rotation_model, const HarvestConfig& config) {
  if (viewpoint == Viewpoint::BV) throw DomainError("viewpoint", "harvesting uses FV or CV grasps");
  config.validate();

  HarvestOutcome out;
  out.holding_threshold =
      config.holding_threshold.value_or(
          detach_budget(fruit, config.holding_force, config.angular_accel).total);

  HarvestState state;
  EventQueue queue;
  queue.schedule(0.0, HarvestEvent::BeginStage);

  while (!queue.empty()) {
    Scheduled ev = queue.pop();
    state = step(state, ev.event, ev.reason);
    out.elapsed = ev.time;
    out.event_log.push_back(LogEntry{state, ev.time});

    switch (state.phase) {
      case HarvestPhase::Staging:
        queue.schedule(ev.time + config.staging_latency, HarvestEvent::StagePoseReached);
        break;
      case HarvestPhase::Attaching:
        queue.schedule(ev.time + config.attach_latency, HarvestEvent::FruitEnclosed);
        break;
      case HarvestPhase::Grasping: {
        const double closed_at = ev.time + config.closure_latency;
        try {
          out.closure_alpha = alpha_for_aperture(geom, fruit.width());
        } catch (const UnreachableAperture&) {
          queue.schedule(closed_at, HarvestEvent::Abort, "aperture");
          break;
        }
        out.applied_moment = total_grasp_moment(geom, motor.rated_torque, *out.closure_alpha);
        if (out.applied_moment >= out.holding_threshold)
          queue.schedule(closed_at, HarvestEvent::ClosureReached);
        else
          queue.schedule(closed_at, HarvestEvent::Abort, "holding moment");
        break;
      }
      case HarvestPhase::Detaching: {
        const double required = rotation_model(fruit, viewpoint);
        if (!(required > 0.0)) throw DomainError("rotation", "required rotation must be positive");
        if (required > config.max_wrist_rotation) {
          out.wrist_rotation = config.max_wrist_rotation;
          out.detach_duration = detach_time(config.max_wrist_rotation, config.wrist_speed);
          queue.schedule(ev.time + out.detach_duration, HarvestEvent::Abort, "wrist rotation");
        } else {
          out.wrist_rotation = required;
          out.detach_duration = detach_time(required, config.wrist_speed);
          queue.schedule(ev.time + out.detach_duration, HarvestEvent::DetachConfirmed);
        }
        break;
      }
      case HarvestPhase::Home:
      case HarvestPhase::Retrieved:
      case HarvestPhase::Fault:
        break;
    }
  }

  out.final_state = state;
  out.success = state.phase == HarvestPhase::Retrieved;
  return out;
}

const CellTiming* CampaignReport::find(SizeGroup g, Viewpoint v) const {
  for (const auto& c : timing)
    if (c.group == g && c.viewpoint == v) return &c;
  return nullptr;
}

namespace {

int viewpoint_rank(Viewpoint v) { return v == Viewpoint::FV ? 0 : v == Viewpoint::CV ? 1 : 2; }

bool trial_less(const GraspTrial& a, const GraspTrial& b) {
  return std::make_tuple(viewpoint_rank(a.viewpoint), static_cast<int>(a.group), a.sample_no) <
         std::make_tuple(viewpoint_rank(b.viewpoint), static_cast<int>(b.group), b.sample_no);
}

double sorted_mean(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace

CampaignReport run_campaign(std::span<const GraspTrial> trials, const GripperGeometry& geom,
                            const MotorSpec& motor, const CampaignOptions& options) {
  if (trials.empty()) throw DomainError("trials", "campaign needs at least one trial");
  options.harvest.validate();

  std::vector<GraspTrial> ordered(trials.begin(), trials.end());
  std::sort(ordered.begin(), ordered.end(), trial_less);

  const RotationModel predictor =
      options.mode == RotationMode::Predictive ? predictive_rotation(trials) : RotationModel{};

  CampaignReport report;
  report.trials.resize(ordered.size());
  auto run_one = [&](std::size_t i) {
    const GraspTrial& t = ordered[i];
    const CylinderFruit fruit =
        cylinder_from_fruit(units::mm_to_m(t.width), units::mm_to_m(t.height), options.fruit_mass,
                            std::string(to_string(t.viewpoint)) + "-" + std::to_string(t.sample_no));
    const RotationModel model =
        options.mode == RotationMode::Replay ? replay_rotation(t.rotation) : predictor;
    report.trials[i] = TrialOutcome{t, simulate_harvest(geom, motor, fruit, t.viewpoint, model,
                                                        options.harvest)};
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, ordered.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < ordered.size(); ++i) run_one(i);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < ordered.size(); i += threads) run_one(i);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (const auto& t : report.trials)
    if (t.outcome.success) ++report.successes;
  report.success_rate =
      static_cast<double>(report.successes) / static_cast<double>(report.trials.size());

  for (SizeGroup g : kSizeGroups)
    for (Viewpoint v : {Viewpoint::FV, Viewpoint::CV}) {
      std::vector<double> detach, elapsed;
      for (const auto& t : report.trials) {
        if (t.trial.group != g || t.trial.viewpoint != v) continue;
        detach.push_back(t.outcome.detach_duration);
        elapsed.push_back(t.outcome.elapsed);
      }
      if (detach.empty()) continue;
      report.timing.push_back(
          CellTiming{g, v, detach.size(), sorted_mean(detach), sorted_mean(elapsed)});
    }
  return report;
}

}  // namespace avogrip
