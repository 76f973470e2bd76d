// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "errors.hpp"

namespace prqc {

using Complex = std::complex<double>;

// Dense-simulation size guards ("desk-scale" memory budgets).
inline constexpr int kMaxStateQubits = 12;    // state-vector paths
inline constexpr int kMaxDensityQubits = 7;   // density-matrix paths
inline constexpr int kMaxMatrixQubits = 10;   // full-circuit matrix assembly

// Contract tolerances.
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kGateUnitaryTol = 1e-12;

/// Pure state of an n_q-qubit register. Amplitudes are basis-ordered so that
/// qubit 0 is the most significant bit of the index; every module shares this
/// convention. n_q = 0 (a single amplitude) is allowed as a degenerate case
/// for dimension-1 sampling; all qubit-indexed operations require n_q >= 1.
struct StateVector {
  int n_q = 0;
  Eigen::VectorXcd amps;

  std::int64_t dim() const { return amps.size(); }

  /// Computational basis state |index>.
  static StateVector basis(int n_q, std::uint64_t index);

  /// Wraps raw amplitudes; validates the length and unit norm.
  static StateVector from_amplitudes(int n_q, Eigen::VectorXcd amplitudes);

  double norm() const { return amps.norm(); }
};

/// Mixed state: D x D Hermitian, positive, trace-one matrix.
struct DensityMatrix {
  int n_q = 0;
  Eigen::MatrixXcd rho;

  std::int64_t dim() const { return rho.rows(); }

  static DensityMatrix from_state(const StateVector& psi);
  static DensityMatrix maximally_mixed(int n_q);

  /// Wraps a raw matrix; validates Hermiticity and trace.
  static DensityMatrix from_matrix(int n_q, Eigen::MatrixXcd rho);

  /// Smallest eigenvalue (positivity diagnostic; full diagonalization).
  double min_eigenvalue() const;
};

/// D x D unitary operator.
struct Unitary {
  Eigen::MatrixXcd mat;

  std::int64_t dim() const { return mat.rows(); }

  static Unitary identity(std::int64_t dim);

  /// Wraps a matrix; validates squareness and unitarity within kUnitaryTol.
  static Unitary from_matrix(Eigen::MatrixXcd mat);

  /// max |U^dag U - I| entrywise.
  double unitarity_defect() const;
};

/// 2 x 2 unitary acting on one qubit.
struct SingleQubitGate {
  Eigen::Matrix2cd mat;

  static SingleQubitGate identity();
  static SingleQubitGate pauli_x();
  static SingleQubitGate pauli_z();
  static SingleQubitGate hadamard();
};

/// Default two-body coupling angle (pi/4, the maximally entangling choice).
inline constexpr double kDefaultCouplingAngle = 0.78539816339744830961;  // pi/4

// --- state-vector operations (pure functions; inputs are never mutated) ---

/// Applies `gate` to qubit `target` (I (x) ... (x) gate (x) ... (x) I).
StateVector apply_single_qubit_gate(const StateVector& state, const SingleQubitGate& gate,
                                    int target);

/// Applies the fixed nearest-neighbor coupling layer
/// exp(i * angle * sum_j sigma_z^j sigma_z^(j+1)) over the open 1-D chain.
/// Diagonal in the computational basis; moduli are never changed.
StateVector apply_zz_coupling_layer(const StateVector& state, double angle = kDefaultCouplingAngle);

/// Tr[rho_i^2] for the reduced density operator of qubit i, computed in O(D)
/// without materializing the D x D projector. Result lies in [1/2, 1].
double reduced_qubit_purity(const StateVector& state, int i);

/// Tr[rho^2].
double purity(const DensityMatrix& rho);

/// |<a|b>|^2.
double fidelity_pure(const StateVector& a, const StateVector& b);

/// <a|rho|a>.
double fidelity_pure_mixed(const StateVector& a, const DensityMatrix& rho);

// --- operator plumbing ---

Unitary compose(const Unitary& u, const Unitary& v);  // u * v (apply v first)
Unitary adjoint(const Unitary& u);
StateVector apply_unitary(const StateVector& state, const Unitary& u);
DensityMatrix conjugate_channel(const DensityMatrix& rho, const Unitary& u);  // u rho u^dag

namespace detail {

// In-place kernels used by the circuit applier; public wrappers copy once.
void apply_single_qubit_gate_inplace(Eigen::VectorXcd& amps, int n_q,
                                     const Eigen::Matrix2cd& gate, int target);
void apply_zz_layer_inplace(Eigen::VectorXcd& amps, int n_q, double angle);

bool is_unitary(const Eigen::MatrixXcd& mat, double tol);

}  // namespace detail

}  // namespace prqc
