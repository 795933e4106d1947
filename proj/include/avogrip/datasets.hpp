#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avogrip/fruit.hpp"

namespace avogrip {

/// One bench pull test: force needed to detach a fruit along a viewpoint axis.
struct DetachmentRecord {
  int sample_no = 0;
  Viewpoint viewpoint = Viewpoint::FV;
  double force = 0.0;   // [N]
  double width = 0.0;   // b [mm]
  double height = 0.0;  // h [mm]
};

enum class SizeGroup { Small, Medium, Large };
inline constexpr std::array<SizeGroup, 3> kSizeGroups{SizeGroup::Small, SizeGroup::Medium,
                                                     SizeGroup::Large};

std::string_view to_string(SizeGroup g);
SizeGroup parse_size_group(std::string_view text);

/// One grasp-and-rotate trial: wrist rotation needed to detach.
struct GraspTrial {
  int sample_no = 0;
  SizeGroup group = SizeGroup::Small;
  Viewpoint viewpoint = Viewpoint::FV;  // FV or CV
  double width = 0.0;                   // b [mm]
  double height = 0.0;                  // h [mm]
  double rotation = 0.0;                // [deg]
};

struct ViewpointStats {
  Viewpoint viewpoint = Viewpoint::FV;
  std::size_t count = 0;
  double mean = 0.0;  // [N]
  double min = 0.0;
  double max = 0.0;
};

/// Mean wrist rotation of one (group, viewpoint) cell.
struct RotationCell {
  SizeGroup group = SizeGroup::Small;
  Viewpoint viewpoint = Viewpoint::FV;
  std::size_t count = 0;
  double mean_rotation = 0.0;  // [deg]
  double mean_width = 0.0;     // [mm]
  double mean_height = 0.0;    // [mm]
};

struct GroupRatio {
  SizeGroup group = SizeGroup::Small;
  std::optional<double> cv_over_fv;  // empty when either viewpoint is missing
};

struct RotationStats {
  std::vector<RotationCell> cells;  // sorted by (group, viewpoint FV before CV)
  std::vector<GroupRatio> ratios;   // one per group present

  const RotationCell* find(SizeGroup g, Viewpoint v) const;
  std::optional<double> ratio(SizeGroup g) const;
};

// CSV ingestion. UTF-8, comma separated, '#' comment lines and blank lines skipped.
// Header rows are fixed:
//   sample_no,viewpoint,force_n,b_mm,h_mm
//   sample_no,group,viewpoint,b_mm,h_mm,rotation_deg
std::vector<DetachmentRecord> load_detachment_records(std::istream& in);
std::vector<GraspTrial> load_grasp_trials(std::istream& in);

void write_detachment_records(std::ostream& out, std::span<const DetachmentRecord> records);
void write_grasp_trials(std::ostream& out, std::span<const GraspTrial> trials);

/// Per-viewpoint force statistics ordered FV, CV, BV; viewpoints without rows are omitted.
std::vector<ViewpointStats> viewpoint_stats(std::span<const DetachmentRecord> records);

/// Mean rotation per (group, viewpoint) and CV/FV ratio per group. Throws on empty input.
RotationStats group_rotation_stats(std::span<const GraspTrial> trials);

/// Rounds to `places` decimals, used for reported ratios.
double round_to(double value, int places);

/// Predicts required wrist rotation [deg] from the nearest (b, h) group centroid
/// for the viewpoint. Ties go to the larger group. Throws UnavailableModel when
/// no trials exist for the viewpoint.
double required_rotation(std::span<const GraspTrial> trials, double width_mm, double height_mm,
                         Viewpoint viewpoint);

}  // namespace avogrip
