#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "avogrip/datasets.hpp"
#include "avogrip/errors.hpp"

#ifndef AVOGRIP_TEST_DATA_DIR
#error "AVOGRIP_TEST_DATA_DIR must be defined"
#endif

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(AVOGRIP_TEST_DATA_DIR) + "/" + name; }

inline std::vector<avogrip::DetachmentRecord> bundled_forces() {
  std::ifstream in(data_path("detachment_forces.csv"));
  if (!in) throw avogrip::InputNotFound("bundled detachment_forces.csv");
  return avogrip::load_detachment_records(in);
}

inline std::vector<avogrip::GraspTrial> bundled_trials() {
  std::ifstream in(data_path("grasp_trials.csv"));
  if (!in) throw avogrip::InputNotFound("bundled grasp_trials.csv");
  return avogrip::load_grasp_trials(in);
}

}  // namespace fixtures
