#pragma once

#include <span>
#include <string>
#include <vector>

#include "avogrip/datasets.hpp"
#include "avogrip/harvest.hpp"
#include "avogrip/io.hpp"
#include "avogrip/mechanism.hpp"
#include "avogrip/sizing.hpp"
#include "avogrip/svg_plot.hpp"

// Report documents emitted by the command-line tool. Keys keep insertion
// order and every floating value passes through sig6(), so identical inputs
// give byte-identical output.
namespace avogrip::report {

Json mechanism(const GripperGeometry& geom, double motor_torque, double alpha);

struct SweepRow {
  double alpha_deg = 0.0;
  double d_m = 0.0;
  double theta_deg = 0.0;
  double aperture_m = 0.0;
  double moment_nm = 0.0;
};

/// alpha_min + k * step for every k that stays within the range, plus alpha_max.
std::vector<SweepRow> sweep(const GripperGeometry& geom, double motor_torque, double step_deg);
std::string sweep_csv(std::span<const SweepRow> rows);
LineChart sweep_chart(std::span<const SweepRow> rows, double motor_torque);

Json stats(std::span<const DetachmentRecord> records, std::span<const GraspTrial> trials);

Json motor(const MotorSpec& spec, const GripperGeometry& geom, const SizeEnvelope& envelope,
           double detach_force, double angular_accel);

Json campaign(const CampaignReport& report, const CampaignOptions& options);
std::string campaign_csv(const CampaignReport& report);

struct SuctionInputs {
  double vacuum_pressure = 5.0;                       // [Pa]
  double diameter = 0.0168;                           // [m]
  double atmospheric = units::kStandardAtmosphere;    // [Pa]
  double reference_force = 28.60;                     // [N], figure quoted for the setup
  double fruit_mass = 0.3;                            // [kg]
};

/// Computed suction force next to the quoted reference figure, the diameter
/// that would reproduce it, and a matches_reference flag (1% tolerance).
Json suction(const SuctionInputs& in);

/// Flattens nested objects into "path,value" CSV lines (arrays indexed).
std::string flatten_csv(const Json& doc);

}  // namespace avogrip::report
