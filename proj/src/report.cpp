#include "avogrip/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "avogrip/errors.hpp"
#include "avogrip/units.hpp"

namespace avogrip::report {

using units::rad_to_deg;

Json mechanism(const GripperGeometry& geom, double motor_torque, double alpha) {
  const FingerLoad load = finger_drive_force(geom, motor_torque);
  const FingerConfiguration c = finger_configuration(geom, alpha);
  Json doc;
  doc["inputs"] = {{"motor_torque_nm", sig6(motor_torque)}, {"alpha_deg", sig6(rad_to_deg(alpha))}};
  doc["finger_load"] = {{"tangent_force_n", sig6(load.tangent_force)},
                        {"pinion_torque_nm", sig6(load.pinion_torque)},
                        {"finger_force_n", sig6(load.finger_force)},
                        {"radial_force_carries_moment", FingerLoad::radial_force_carries_moment}};
  doc["configuration"] = {{"alpha_deg", sig6(rad_to_deg(c.alpha))},
                          {"d_m", sig6(c.d)},
                          {"angle_abo_deg", sig6(rad_to_deg(c.angle_abo))},
                          {"gamma_deg", sig6(rad_to_deg(c.gamma))},
                          {"theta_deg", sig6(rad_to_deg(c.theta))}};
  doc["aperture_m"] = sig6(aperture(geom, alpha));
  doc["total_moment_nm"] = sig6(total_grasp_moment(geom, motor_torque, alpha));
  return doc;
}

std::vector<SweepRow> sweep(const GripperGeometry& geom, double motor_torque, double step_deg) {
  if (!(step_deg > 0.0)) throw DomainError("step", "must be positive");
  finger_drive_force(geom, motor_torque);  // validates torque up front
  // Snap away the deg->rad->deg round-off so grid points land on whole steps.
  const double lo = std::round(rad_to_deg(geom.alpha_range.min) * 1e9) / 1e9;
  const double hi = std::round(rad_to_deg(geom.alpha_range.max) * 1e9) / 1e9;
  std::vector<double> degs;
  for (std::size_t k = 0;; ++k) {
    const double a = lo + static_cast<double>(k) * step_deg;
    if (a > hi + 1e-9) break;
    degs.push_back(std::min(a, hi));
  }
  if (degs.back() < hi - 1e-9) degs.push_back(hi);

  std::vector<SweepRow> rows;
  for (double deg : degs) {
    const double alpha = std::clamp(units::deg_to_rad(deg), geom.alpha_range.min, geom.alpha_range.max);
    const FingerConfiguration c = finger_configuration(geom, alpha);
    rows.push_back(SweepRow{deg, c.d, rad_to_deg(c.theta), aperture(geom, alpha),
                            total_grasp_moment(geom, motor_torque, alpha)});
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::ostringstream os;
  os << "alpha_deg,d_m,theta_deg,aperture_m,moment_nm\n";
  for (const auto& r : rows)
    os << format_sig6(r.alpha_deg) << ',' << format_sig6(r.d_m) << ',' << format_sig6(r.theta_deg)
       << ',' << format_sig6(r.aperture_m) << ',' << format_sig6(r.moment_nm) << '\n';
  return os.str();
}

LineChart sweep_chart(std::span<const SweepRow> rows, double motor_torque) {
  LineChart chart;
  chart.title = "Grasp moment and aperture at motor torque " + format_sig6(motor_torque) + " N*m";
  chart.x_label = "alpha [deg]";
  chart.y_label = "moment [N*m] / aperture [m]";
  PlotSeries moment{"moment [N*m]", "#1f77b4", {}};
  PlotSeries open{"aperture [m]", "#d62728", {}};
  for (const auto& r : rows) {
    chart.x.push_back(r.alpha_deg);
    moment.y.push_back(r.moment_nm);
    open.y.push_back(r.aperture_m);
  }
  chart.series = {moment, open};
  return chart;
}

Json stats(std::span<const DetachmentRecord> records, std::span<const GraspTrial> trials) {
  Json doc = Json::object();
  if (!records.empty()) {
    Json forces = Json::array();
    for (const auto& s : viewpoint_stats(records))
      forces.push_back({{"viewpoint", to_string(s.viewpoint)},
                        {"count", s.count},
                        {"mean_force_n", sig6(s.mean)},
                        {"min_force_n", sig6(s.min)},
                        {"max_force_n", sig6(s.max)}});
    doc["detachment_forces"] = forces;
  }
  if (!trials.empty()) {
    const RotationStats rs = group_rotation_stats(trials);
    Json cells = Json::array();
    for (const auto& c : rs.cells)
      cells.push_back({{"group", to_string(c.group)},
                       {"viewpoint", to_string(c.viewpoint)},
                       {"count", c.count},
                       {"mean_rotation_deg", sig6(c.mean_rotation)},
                       {"mean_b_mm", sig6(c.mean_width)},
                       {"mean_h_mm", sig6(c.mean_height)}});
    Json ratios = Json::array();
    for (const auto& r : rs.ratios) {
      Json entry{{"group", to_string(r.group)}};
      entry["cv_over_fv"] = r.cv_over_fv ? Json(*r.cv_over_fv) : Json(nullptr);
      ratios.push_back(entry);
    }
    doc["rotation"] = {{"cells", cells}, {"ratios", ratios}};
  }
  return doc;
}

Json motor(const MotorSpec& spec, const GripperGeometry& geom, const SizeEnvelope& envelope,
           double detach_force, double angular_accel) {
  Json doc = motor_to_json(spec);
  const Interval band = closure_band(geom, envelope);
  doc["search"] = {{"detach_force_n", sig6(detach_force)},
                   {"angular_accel_rad_s2", sig6(angular_accel)},
                   {"closure_band_deg", {sig6(rad_to_deg(band.min)), sig6(rad_to_deg(band.max))}},
                   {"envelope",
                    {{"height_mm", {sig6(units::m_to_mm(envelope.height.min)), sig6(units::m_to_mm(envelope.height.max))}},
                     {"width_mm", {sig6(units::m_to_mm(envelope.width.min)), sig6(units::m_to_mm(envelope.width.max))}},
                     {"mass_kg", {sig6(envelope.mass.min), sig6(envelope.mass.max)}}}}};
  doc["geometry"] = geometry_to_json(geom);
  return doc;
}

namespace {

Json log_json(const std::vector<LogEntry>& log) {
  Json out = Json::array();
  for (const auto& e : log) out.push_back({{"state", to_string(e.state)}, {"t_s", sig6(e.time)}});
  return out;
}

}  // namespace

Json campaign(const CampaignReport& report, const CampaignOptions& options) {
  Json doc;
  const Pose6D& pose = options.harvest.staging_pose;
  doc["metadata"] = {
      {"mode", options.mode == RotationMode::Replay ? "replay" : "predictive"},
      {"wrist_speed_rad_s", sig6(options.harvest.wrist_speed)},
      {"fruit_mass_kg", sig6(options.fruit_mass)},
      {"holding_force_n", sig6(options.harvest.holding_force)},
      {"staging_pose", {sig6(pose.position[0]), sig6(pose.position[1]), sig6(pose.position[2]),
                        sig6(pose.orientation[0]), sig6(pose.orientation[1]), sig6(pose.orientation[2])}}};
  Json trials = Json::array();
  for (const auto& t : report.trials) {
    const HarvestOutcome& o = t.outcome;
    Json row{{"sample_no", t.trial.sample_no},
             {"group", to_string(t.trial.group)},
             {"viewpoint", to_string(t.trial.viewpoint)},
             {"success", o.success},
             {"final_state", to_string(o.final_state)}};
    row["closure_alpha_deg"] = o.closure_alpha ? Json(sig6(rad_to_deg(*o.closure_alpha))) : Json(nullptr);
    row["applied_moment_nm"] = sig6(o.applied_moment);
    row["holding_threshold_nm"] = sig6(o.holding_threshold);
    row["wrist_rotation_deg"] = sig6(o.wrist_rotation);
    row["detach_s"] = sig6(o.detach_duration);
    row["elapsed_s"] = sig6(o.elapsed);
    row["events"] = log_json(o.event_log);
    trials.push_back(row);
  }
  doc["trials"] = trials;
  Json timing = Json::array();
  for (const auto& c : report.timing)
    timing.push_back({{"group", to_string(c.group)},
                      {"viewpoint", to_string(c.viewpoint)},
                      {"count", c.count},
                      {"mean_detach_s", sig6(c.mean_detach)},
                      {"mean_elapsed_s", sig6(c.mean_elapsed)}});
  doc["summary"] = {{"total", report.trials.size()},
                    {"successes", report.successes},
                    {"success_rate", sig6(report.success_rate)},
                    {"timing", timing}};
  return doc;
}

std::string campaign_csv(const CampaignReport& report) {
  std::ostringstream os;
  os << "sample_no,group,viewpoint,success,final_state,closure_alpha_deg,applied_moment_nm,"
        "wrist_rotation_deg,detach_s,elapsed_s\n";
  for (const auto& t : report.trials) {
    const HarvestOutcome& o = t.outcome;
    os << t.trial.sample_no << ',' << to_string(t.trial.group) << ','
       << to_string(t.trial.viewpoint) << ',' << (o.success ? "true" : "false") << ','
       << to_string(o.final_state) << ','
       << (o.closure_alpha ? format_sig6(rad_to_deg(*o.closure_alpha)) : std::string()) << ','
       << format_sig6(o.applied_moment) << ',' << format_sig6(o.wrist_rotation) << ','
       << format_sig6(o.detach_duration) << ',' << format_sig6(o.elapsed) << '\n';
  }
  return os.str();
}

Json suction(const SuctionInputs& in) {
  const double force = suction_force(in.vacuum_pressure, in.diameter, in.atmospheric);
  const double back_solved =
      suction_effective_diameter(in.reference_force, in.vacuum_pressure, in.atmospheric);
  const double discrepancy = (in.reference_force - force) / force;
  Json doc;
  doc["inputs"] = {{"vacuum_pa", sig6(in.vacuum_pressure)},
                   {"atmospheric_pa", sig6(in.atmospheric)},
                   {"diameter_mm", sig6(units::m_to_mm(in.diameter))}};
  doc["pressure_difference_pa"] = sig6(in.atmospheric - in.vacuum_pressure);
  doc["suction_force_n"] = sig6(force);
  doc["reference_force_n"] = sig6(in.reference_force);
  doc["reference_effective_diameter_mm"] = sig6(units::m_to_mm(back_solved));
  doc["relative_discrepancy"] = sig6(discrepancy);
  doc["matches_reference"] = std::abs(discrepancy) <= 0.01;
  doc["fruits_liftable"] = sig6(force / (in.fruit_mass * 9.80665));
  return doc;
}

namespace {

void flatten(const Json& v, const std::string& path, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(child, path.empty() ? k : path + "." + k, os);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", os);
  } else if (v.is_string()) {
    os << path << ',' << v.get<std::string>() << '\n';
  } else if (v.is_number_float()) {
    os << path << ',' << format_sig6(v.get<double>()) << '\n';
  } else {
    os << path << ',' << v.dump() << '\n';
  }
}

}  // namespace

std::string flatten_csv(const Json& doc) {
  std::ostringstream os;
  os << "field,value\n";
  flatten(doc, "", os);
  return os.str();
}

}  // namespace avogrip::report
