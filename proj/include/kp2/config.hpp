#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kp2/initial_data.hpp"
#include "kp2/propagator.hpp"
#include "kp2/utils.hpp"

namespace kp2 {

struct NormConfig {
  double s1 = 0.0, s2 = 0.0;
  double b = 0.6, sigma = 0.0;
};

struct ProbeConfig {
  std::vector<std::string> kernels;  // empty = all
  std::vector<double> boxes = {10.0, 20.0, 40.0, 80.0};
  long n_samples = 1000000;
  std::uint64_t seed = kDefaultSeed;
  double alpha = 2.0;
  double s = -0.4;
  bool falsify = false;  // run the deliberately inadmissible k10 demonstration
};

struct ScalingConfig {
  double lambda = 2.0;
  double alpha = 2.0;
  double s1 = 0.0, s2 = 0.0;
  double t_end = 0.1;
};

struct VerifyConfig {
  std::vector<double> bounds_alphas = {1.5, 2.0, 4.0, 6.0};
  std::vector<double> identity_alphas = {2.0, 4.0};
  long n_samples = 1000000;
  long probe_samples = 200000;
  std::vector<double> probe_boxes = {10.0, 20.0, 40.0, 80.0};
  std::uint64_t seed = kDefaultSeed;
  double max_growth_ratio = 1.1;
};

struct ConvergeConfig {
  double t_end = 0.4;
  double dt = 0.0125;
  int grid_n = 64;
};

struct ExperimentConfig {
  std::string command;  // set by the CLI subcommand
  SimConfig sim;
  InitialProfile initial;
  NormConfig norms;
  ProbeConfig probe;
  ScalingConfig scaling;
  VerifyConfig verify;
  ConvergeConfig converge;
  std::string output_dir = "out";
  std::string format = "csv";
  int checkpoint_stride = 0;
  std::uint64_t seed = kDefaultSeed;

  ExperimentConfig();  // fills the default 64^2 grid on the 32*pi torus
};

// Parses a single JSON document; unknown keys are rejected (ConfigError).
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

}  // namespace kp2
