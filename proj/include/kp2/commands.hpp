#pragma once

#include <string>

#include "kp2/config.hpp"
#include "kp2/propagator.hpp"

namespace kp2 {

// Exit codes: 0 success, 2 config error, 3 verification failure,
// 4 numerical-instability abort.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitInstability = 4;

int cmd_simulate(const ExperimentConfig& cfg);
int cmd_scaling(const ExperimentConfig& cfg);
int cmd_verify(const ExperimentConfig& cfg);
int cmd_converge(const ExperimentConfig& cfg);
int cmd_probe(const ExperimentConfig& cfg);

// Rescaled field lam^alpha u(lam x, lam^(alpha/2+1) y) on the shrunken torus
// (exact at grid points: the value array is reused, only scaled).
SpectralField rescale_field(const SpectralField& u, double lam, double alpha);

void write_trajectory_csv(const std::string& path, const Trajectory& traj);

// Full CLI entry: kp2 <command> [--config FILE] [--seed N] [--out DIR].
int run_cli(int argc, const char* const* argv);

}  // namespace kp2
