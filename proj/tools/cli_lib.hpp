#pragma once

#include <string>
#include <vector>

namespace attenuant_cli {

// Exit codes: 0 success, 1 falsified mathematical claim, 2 operational error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitOperational = 2;

struct RunConfig {
  std::string command;
  std::string figure_id;
  std::vector<std::size_t> ns;
  std::size_t resolution = 1000;
  std::size_t n_max = 200;
  std::size_t grid_points = 50;
  std::size_t work_cutoff = 30;
  double eps = 0.05;
  double lambda = -1.0;  // single-point floor when >= 0
  double lambda_min = 1.0 / 201.0;
  double lambda_max = 1.0;
  std::size_t floor_points = 120;
  std::string suite = "all";
  std::string out_path;
  std::string format = "json";  // verify/floor reports; figures always CSV
  std::size_t threads = 0;
};

int run_cli(const std::vector<std::string>& args);

}  // namespace attenuant_cli
