#pragma once

#include <string>

#include "trotterlab/common.hpp"

namespace trotterlab::config {

// Flat key=value experiment description with '#' comments. Lists are
// comma-separated. `state` is either "hydrogen:n:l:m" or a path to a state
// CSV file.
struct ExperimentConfig {
  std::string scheme = "strang";
  std::string state = "hydrogen:1:0:0";
  int ell_condition = 0;
  double c = 2.0;
  int sign = -1;
  std::vector<int> grid_n = {1000, 2000};
  double r_max = 60.0;
  double T = 1.0;
  std::vector<int> L = {16, 32, 64, 128, 256};
  std::string out = "trotterlab_out";
  std::uint64_t seed = 1;
  double tol = 0.15;
  int window = 4;
  double jump_threshold = 0.35;
  // monitor-specific lattice
  std::vector<double> times;
  std::vector<double> free_times;
};

// Parse failures throw config_error with a line-numbered message.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin = "config");

}  // namespace trotterlab::config
