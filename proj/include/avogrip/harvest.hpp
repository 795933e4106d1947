#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avogrip/datasets.hpp"
#include "avogrip/fruit.hpp"
#include "avogrip/mechanism.hpp"
#include "avogrip/sizing.hpp"

namespace avogrip {

// Workflow: Home -> Staging -> Attaching -> Grasping -> Detaching -> Retrieved,
// with Abort leading to Fault from anywhere.

enum class HarvestPhase { Home, Staging, Attaching, Grasping, Detaching, Retrieved, Fault };

struct HarvestState {
  HarvestPhase phase = HarvestPhase::Home;
  std::string fault_reason;  // set only when phase == Fault

  static HarvestState fault(std::string reason) { return {HarvestPhase::Fault, std::move(reason)}; }
  friend bool operator==(const HarvestState&, const HarvestState&) = default;
};

enum class HarvestEvent { BeginStage, StagePoseReached, FruitEnclosed, ClosureReached, DetachConfirmed, Abort };

inline constexpr std::array<HarvestEvent, 6> kHarvestEvents{
    HarvestEvent::BeginStage,    HarvestEvent::StagePoseReached, HarvestEvent::FruitEnclosed,
    HarvestEvent::ClosureReached, HarvestEvent::DetachConfirmed, HarvestEvent::Abort};

std::string_view to_string(HarvestPhase p);
std::string_view to_string(HarvestEvent e);
std::string to_string(const HarvestState& s);

/// Applies one event, or returns nullopt if the pair is not in the graph.
std::optional<HarvestState> try_step(const HarvestState& state, HarvestEvent event,
                                     std::string abort_reason = "abort");

/// Applies one event. Throws InvalidTransition for pairs outside the graph.
/// `abort_reason` becomes the Fault reason when `event` is Abort.
HarvestState step(const HarvestState& state, HarvestEvent event, std::string abort_reason = "abort");

/// End-effector pose relative to the arm base: position [m], Euler-XYZ [deg].
struct Pose6D {
  std::array<double, 3> position{};
  std::array<double, 3> orientation{};

  /// Throws DomainError unless every orientation component lies in (-180, 180].
  void validate() const;
};

/// Pre-grasp staging pose used in the in-lab trials.
Pose6D default_staging_pose();

struct HarvestConfig {
  double wrist_speed = units::kDefaultWristSpeed;  // [rad/s]
  /// Pull force whose moment the grasp must hold. Defaults to the mean CV bench force.
  double holding_force = 9.6;  // [N]
  double angular_accel = 0.0;  // [rad/s^2]
  /// Overrides the per-fruit detach budget when set.
  std::optional<double> holding_threshold;  // [N*m]
  double staging_latency = 4.0;             // [s]
  double attach_latency = 2.0;              // [s]
  double closure_latency = 1.5;             // [s]
  double max_wrist_rotation = 180.0;        // [deg]
  Pose6D staging_pose = default_staging_pose();

  void validate() const;
};

/// Maps a fruit and viewpoint to the wrist rotation [deg] needed to detach it.
using RotationModel = std::function<double(const CylinderFruit&, Viewpoint)>;

/// Always returns the recorded rotation.
RotationModel replay_rotation(double rotation_deg);
/// Nearest-group-centroid prediction over the given trials (copied).
RotationModel predictive_rotation(std::span<const GraspTrial> trials);

struct LogEntry {
  HarvestState state;
  double time = 0.0;  // [s], state entry time
};

struct HarvestOutcome {
  bool success = false;
  HarvestState final_state;
  std::optional<double> closure_alpha;  // [rad]
  double wrist_rotation = 0.0;          // [deg]
  double elapsed = 0.0;                 // [s]
  double detach_duration = 0.0;         // [s]
  double applied_moment = 0.0;          // [N*m]
  double holding_threshold = 0.0;       // [N*m]
  std::vector<LogEntry> event_log;
};

/// Runs one fruit through the workflow. Gate failures end in Fault("aperture"),
/// Fault("holding moment") or Fault("wrist rotation") rather than exceptions.
HarvestOutcome simulate_harvest(const GripperGeometry& geom, const MotorSpec& motor,
                                const CylinderFruit& fruit, Viewpoint viewpoint,
                                const RotationModel& rotation_model, const HarvestConfig& config = {});

enum class RotationMode { Replay, Predictive };

struct TrialOutcome {
  GraspTrial trial;
  HarvestOutcome outcome;
};

struct CellTiming {
  SizeGroup group = SizeGroup::Small;
  Viewpoint viewpoint = Viewpoint::FV;
  std::size_t count = 0;
  double mean_detach = 0.0;   // [s]
  double mean_elapsed = 0.0;  // [s]
};

struct CampaignReport {
  std::vector<TrialOutcome> trials;  // sorted FV before CV, then group, then sample_no
  std::size_t successes = 0;
  double success_rate = 0.0;
  std::vector<CellTiming> timing;  // sorted by group, then FV before CV

  const CellTiming* find(SizeGroup g, Viewpoint v) const;
};

struct CampaignOptions {
  HarvestConfig harvest;
  double fruit_mass = 0.25;  // [kg], trials carry no mass
  RotationMode mode = RotationMode::Replay;
  unsigned threads = 1;
};

/// Simulates every trial. The report is canonical: input order and thread count
/// do not change it. Throws DomainError on an empty trial list.
CampaignReport run_campaign(std::span<const GraspTrial> trials, const GripperGeometry& geom,
                            const MotorSpec& motor, const CampaignOptions& options = {});

}  // namespace avogrip
