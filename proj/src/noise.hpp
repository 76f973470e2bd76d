// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcore.hpp"
#include "rng.hpp"
#include "source.hpp"

namespace prqc {

enum class NoiseKind { none, coherent, depolarizing, dephasing };

/// Parsed noise descriptor: `none`, `coherent:DELTA`, `depolarizing:P`,
/// `dephasing:GAMMA`.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::none;
  double param = 0.0;

  static NoiseSpec parse(const std::string& descriptor);
  std::string descriptor() const;
};

/// Materialized noise channel for a D-dimensional register.
///  - none: identity.
///  - coherent: V = exp(-i * delta * H), H Hermitian with unit spectral norm;
///    unitary, so pure-state simulation is admitted.
///  - depolarizing: rho -> (1-p) rho + p I/D (density-matrix mode only).
///  - dephasing: per-qubit Kraus pair {sqrt(1-gamma) I, sqrt(gamma) Z},
///    applied independently on each qubit (density-matrix mode only).
struct NoiseModel {
  NoiseKind kind = NoiseKind::none;
  double param = 0.0;
  int n_q = 0;
  Eigen::MatrixXcd hamiltonian;   // coherent only; Hermitian, ||H||_2 = 1
  Eigen::MatrixXcd perturbation;  // coherent only; V = exp(-i delta H)
  std::string descriptor;
};

/// Builds the channel for an n_q-qubit register. The coherent Hamiltonian is
/// drawn once from the Gaussian Hermitian ensemble (H = (A + A^dag)/2,
/// normalized to unit spectral norm) with `noise_seed`, then held fixed: a
/// static unknown noise generator, seeded separately from the circuit seed.
NoiseModel make_noise_model(const NoiseSpec& spec, int n_q, std::uint64_t noise_seed);

/// Applies the channel once. Non-unitary channels reject pure-state input
/// with a mode error instructing density-matrix mode.
StateVector apply_noise(const StateVector& state, const NoiseModel& model);
DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseModel& model);

enum class SimMode {
  automatic,      // pure state when the channel is unitary, else density matrix
  pure_state,
  density_matrix
};

/// Motion-reversal decay data. Row 0 is the n = 0 baseline (no operations,
/// fidelity = purity = 1).
struct DecayCurve {
  std::vector<int> n_values;
  std::vector<double> fidelity_mean;
  std::vector<double> fidelity_std;
  std::vector<double> purity_mean;   // pure-state mode reports 1
  std::vector<double> purity_std;
  struct Meta {
    std::string noise;
    std::string source;
    int n_q = 0;
    int m = 0;  // circuit source only; 0 otherwise
    int n_trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t initial_basis = 0;
    std::string mode;  // "pure" | "density"
  } meta;
};

/// The motion-reversal protocol: per trial, draw U, start from |initial>,
/// apply (noise after U) n times then (noise after U^dag) n times, and record
/// fidelity to the initial state and purity of the final state; fold over
/// trials in index order. Noise fires after every one of the 2n unitary
/// applications, so the noiseless protocol is exactly reversible.
DecayCurve motion_reversal_curve(const UnitarySource& source, const NoiseModel& noise, int n_max,
                                 std::uint64_t initial_basis, int n_trials, std::uint64_t seed,
                                 SimMode mode = SimMode::automatic);

/// As motion_reversal_curve, scanned over several initial basis states; the
/// same per-trial unitaries are reused across initial states so the curves
/// are directly comparable.
std::vector<DecayCurve> average_fidelity_decay(const UnitarySource& source,
                                               const NoiseModel& noise, int n_max,
                                               std::span<const std::uint64_t> initial_basis_list,
                                               int n_trials, std::uint64_t seed,
                                               SimMode mode = SimMode::automatic);

}  // namespace prqc
