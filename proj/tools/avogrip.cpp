// avogrip: batch front end for the gripper mechanism, sizing, dataset and
// harvest simulation library.
//
// Exit codes: 0 success, 2 domain/data error, 64 usage error, 66 missing input,
// 73 output not writable.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "avogrip/datasets.hpp"
#include "avogrip/errors.hpp"
#include "avogrip/harvest.hpp"
#include "avogrip/io.hpp"
#include "avogrip/report.hpp"
#include "avogrip/sizing.hpp"
#include "avogrip/svg_plot.hpp"
#include "avogrip/units.hpp"

#ifndef AVOGRIP_DATA_DIR_DEFAULT
#define AVOGRIP_DATA_DIR_DEFAULT "data"
#endif

namespace fs = std::filesystem;
using namespace avogrip;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;
constexpr int kExitCantCreate = 73;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fs::path data_dir() {
  if (const char* env = std::getenv("AVOGRIP_DATA_DIR"); env && *env) return env;
  return AVOGRIP_DATA_DIR_DEFAULT;
}

// "reference" and "harvest" name the bundled geometries; anything else is a path.
fs::path resolve_geometry(const std::string& arg) {
  if (arg == "reference" || arg == "harvest") return data_dir() / "geometry" / (arg + ".json");
  return arg;
}

fs::path resolve_dataset(const std::string& arg, const char* bundled_name) {
  if (arg == "bundled") return data_dir() / bundled_name;
  return arg;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputNotFound("cannot open " + path.string());
  return in;
}

std::vector<DetachmentRecord> read_forces(const fs::path& path) {
  auto in = open_input(path);
  return load_detachment_records(in);
}

std::vector<GraspTrial> read_trials(const fs::path& path) {
  auto in = open_input(path);
  return load_grasp_trials(in);
}

Interval parse_range(const std::vector<double>& v, const char* flag, double scale) {
  if (v.size() != 2) throw UsageError(std::string(flag) + " expects two values: min,max");
  return Interval{v[0] * scale, v[1] * scale};
}

struct Common {
  std::string output;
  std::string format = "json";
};

void write_text(const Common& common, const std::string& text) {
  if (common.output.empty() || common.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output, std::ios::binary);
  if (!out) throw OutputError("cannot write " + common.output);
  out << text;
}

void emit(const Common& common, const Json& doc) {
  write_text(common, common.format == "csv" ? report::flatten_csv(doc) : doc.dump(2) + "\n");
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("-o,--output", common.output, "Write the report here instead of stdout");
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Five-finger rotary gripper analysis and harvest simulation"};
  app.require_subcommand(1);

  // mech
  Common mech_common;
  std::string mech_geom = "reference";
  double mech_torque = 0.0;
  double mech_alpha = 0.0;
  auto* mech = app.add_subcommand("mech", "Finger load, configuration and total grasp moment");
  add_common(mech, mech_common);
  mech->add_option("--geom", mech_geom, "Geometry JSON (or 'reference'/'harvest')")->capture_default_str();
  mech->add_option("--torque", mech_torque, "Motor torque [N*m]")->required();
  mech->add_option("--alpha-deg", mech_alpha, "Encoder angle alpha [deg]")->required();

  // sweep
  Common sweep_common;
  sweep_common.format = "csv";
  std::string sweep_geom = "reference";
  double sweep_torque = 1.0;
  double sweep_step = 0.5;
  std::string sweep_plot;
  auto* sweep = app.add_subcommand("sweep", "Tabulate d, theta, aperture and moment over alpha");
  add_common(sweep, sweep_common);
  sweep->add_option("--geom", sweep_geom, "Geometry JSON (or 'reference'/'harvest')")->capture_default_str();
  sweep->add_option("--torque", sweep_torque, "Motor torque [N*m]")->capture_default_str();
  sweep->add_option("--step-deg", sweep_step, "Alpha step [deg]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--plot", sweep_plot, "Also write an SVG line chart here");

  // stats
  Common stats_common;
  std::string stats_forces = "bundled";
  std::string stats_trials = "bundled";
  auto* stats = app.add_subcommand("stats", "Detachment-force and wrist-rotation statistics");
  add_common(stats, stats_common);
  stats->add_option("--forces", stats_forces, "Detachment CSV (or 'bundled', or 'none')")->capture_default_str();
  stats->add_option("--trials", stats_trials, "Grasp trial CSV (or 'bundled', or 'none')")->capture_default_str();

  // size-motor
  Common size_common;
  std::string size_geom = "harvest";
  double size_force = 9.6;
  double size_accel = 0.0;
  double size_safety = 1.5;
  std::vector<double> size_height, size_width, size_mass;
  auto* size = app.add_subcommand("size-motor", "Worst-case motor torque over a fruit size envelope");
  add_common(size, size_common);
  size->add_option("--geom", size_geom, "Geometry JSON (or 'reference'/'harvest')")->capture_default_str();
  size->add_option("--detach-force", size_force, "Detachment force [N]")->capture_default_str();
  size->add_option("--accel", size_accel, "Angular acceleration [rad/s^2]")->capture_default_str();
  size->add_option("--safety", size_safety, "Safety factor (>= 1)")->capture_default_str();
  size->add_option("--height-mm", size_height, "Envelope height min,max [mm]")->delimiter(',');
  size->add_option("--width-mm", size_width, "Envelope width min,max [mm]")->delimiter(',');
  size->add_option("--mass-kg", size_mass, "Envelope mass min,max [kg]")->delimiter(',');

  // simulate
  Common sim_common;
  std::string sim_trials = "bundled";
  std::string sim_geom = "harvest";
  std::string sim_motor;
  std::string sim_mode = "replay";
  double sim_speed = units::kDefaultWristSpeed;
  double sim_mass = 0.25;
  double sim_hold = 9.6;
  unsigned sim_threads = 1;
  auto* sim = app.add_subcommand("simulate", "Replay a grasp trial campaign through the workflow");
  add_common(sim, sim_common);
  sim->add_option("--trials", sim_trials, "Grasp trial CSV (or 'bundled')")->capture_default_str();
  sim->add_option("--geom", sim_geom, "Geometry JSON (or 'reference'/'harvest')")->capture_default_str();
  sim->add_option("--motor", sim_motor, "Motor JSON; sized for the default envelope when omitted");
  sim->add_option("--mode", sim_mode, "Rotation source")
      ->check(CLI::IsMember({"replay", "predictive"}))
      ->capture_default_str();
  sim->add_option("--wrist-speed", sim_speed, "Wrist speed [rad/s]")->capture_default_str();
  sim->add_option("--fruit-mass", sim_mass, "Mass assigned to each fruit [kg]")->capture_default_str();
  sim->add_option("--holding-force", sim_hold, "Pull force the grasp must hold [N]")->capture_default_str();
  sim->add_option("--threads", sim_threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  // suction
  Common suc_common;
  report::SuctionInputs suc;
  double suc_diameter_mm = 16.8;
  auto* suction = app.add_subcommand("suction", "Vacuum suction force for a given tube diameter");
  add_common(suction, suc_common);
  suction->add_option("--diameter-mm", suc_diameter_mm, "Effective diameter [mm]")->capture_default_str();
  suction->add_option("--vacuum-pa", suc.vacuum_pressure, "Absolute vacuum pressure [Pa]")->capture_default_str();
  suction->add_option("--atmospheric-pa", suc.atmospheric, "Ambient pressure [Pa]")->capture_default_str();
  suction->add_option("--reference-force-n", suc.reference_force, "Quoted force to compare against [N]")
      ->capture_default_str();
  suction->add_option("--fruit-mass", suc.fruit_mass, "Fruit mass for the lift count [kg]")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*mech) {
      const GripperGeometry geom = load_geometry(resolve_geometry(mech_geom));
      emit(mech_common, report::mechanism(geom, mech_torque, units::deg_to_rad(mech_alpha)));
    } else if (*sweep) {
      const GripperGeometry geom = load_geometry(resolve_geometry(sweep_geom));
      const auto rows = report::sweep(geom, sweep_torque, sweep_step);
      if (sweep_common.format == "json") {
        Json doc = Json::array();
        for (const auto& r : rows)
          doc.push_back({{"alpha_deg", sig6(r.alpha_deg)}, {"d_m", sig6(r.d_m)},
                         {"theta_deg", sig6(r.theta_deg)}, {"aperture_m", sig6(r.aperture_m)},
                         {"moment_nm", sig6(r.moment_nm)}});
        write_text(sweep_common, doc.dump(2) + "\n");
      } else {
        write_text(sweep_common, report::sweep_csv(rows));
      }
      if (!sweep_plot.empty()) {
        std::ofstream out(sweep_plot, std::ios::binary);
        if (!out) throw OutputError("cannot write " + sweep_plot);
        out << render_svg(report::sweep_chart(rows, sweep_torque));
      }
    } else if (*stats) {
      std::vector<DetachmentRecord> records;
      std::vector<GraspTrial> trials;
      if (stats_forces != "none") records = read_forces(resolve_dataset(stats_forces, "detachment_forces.csv"));
      if (stats_trials != "none") trials = read_trials(resolve_dataset(stats_trials, "grasp_trials.csv"));
      emit(stats_common, report::stats(records, trials));
    } else if (*size) {
      const GripperGeometry geom = load_geometry(resolve_geometry(size_geom));
      SizeEnvelope env = default_size_envelope();
      if (!size_height.empty()) env.height = parse_range(size_height, "--height-mm", 1e-3);
      if (!size_width.empty()) env.width = parse_range(size_width, "--width-mm", 1e-3);
      if (!size_mass.empty()) env.mass = parse_range(size_mass, "--mass-kg", 1.0);
      const MotorSpec spec = size_motor(geom, env, size_force, size_accel, size_safety);
      emit(size_common, report::motor(spec, geom, env, size_force, size_accel));
    } else if (*sim) {
      const GripperGeometry geom = load_geometry(resolve_geometry(sim_geom));
      const auto trials = read_trials(resolve_dataset(sim_trials, "grasp_trials.csv"));
      const MotorSpec motor = sim_motor.empty()
                                  ? size_motor(geom, default_size_envelope(), sim_hold, 0.0, 1.5)
                                  : load_motor(sim_motor);
      CampaignOptions opts;
      opts.harvest.wrist_speed = sim_speed;
      opts.harvest.holding_force = sim_hold;
      opts.fruit_mass = sim_mass;
      opts.mode = sim_mode == "replay" ? RotationMode::Replay : RotationMode::Predictive;
      opts.threads = sim_threads;
      const CampaignReport rep = run_campaign(trials, geom, motor, opts);
      if (sim_common.format == "csv")
        write_text(sim_common, report::campaign_csv(rep));
      else
        write_text(sim_common, report::campaign(rep, opts).dump(2) + "\n");
    } else if (*suction) {
      suc.diameter = units::mm_to_m(suc_diameter_mm);
      emit(suc_common, report::suction(suc));
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputNotFound& e) {
    std::cerr << "missing input: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const OutputError& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return kExitCantCreate;
  } catch (const avogrip::Error& e) {
    Json err{{"error", {{"kind", "domain"}, {"message", e.what()}}}};
    if (const auto* d = dynamic_cast<const DomainError*>(&e)) err["error"]["field"] = d->field();
    std::cerr << err.dump() << '\n';
    return kExitDomain;
  }
  return 0;
}
