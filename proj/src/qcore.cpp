// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qcore.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace prqc {

namespace {

void check_state_qubits(int n_q) {
  if (n_q < 0) throw ArgumentError("qubit count must be non-negative, got " + std::to_string(n_q));
  if (n_q > kMaxStateQubits)
    throw CapacityError("state-vector paths support at most " + std::to_string(kMaxStateQubits) +
                        " qubits, got " + std::to_string(n_q));
}

void check_density_qubits(int n_q) {
  if (n_q < 0) throw ArgumentError("qubit count must be non-negative, got " + std::to_string(n_q));
  if (n_q > kMaxDensityQubits)
    throw CapacityError("density-matrix paths support at most " +
                        std::to_string(kMaxDensityQubits) + " qubits, got " + std::to_string(n_q));
}

}  // namespace

namespace detail {

bool is_unitary(const Eigen::MatrixXcd& mat, double tol) {
  if (mat.rows() != mat.cols()) return false;
  Eigen::MatrixXcd gram = mat.adjoint() * mat;
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff() <= tol;
}

void apply_single_qubit_gate_inplace(Eigen::VectorXcd& amps, int n_q,
                                     const Eigen::Matrix2cd& gate, int target) {
  // qubit q lives at bit position (n_q - 1 - q): qubit 0 is the MSB.
  const std::int64_t mask = std::int64_t{1} << (n_q - 1 - target);
  const std::int64_t dim = amps.size();
  const Complex g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
  for (std::int64_t base = 0; base < dim; base += 2 * mask) {
    for (std::int64_t off = 0; off < mask; ++off) {
      const std::int64_t i0 = base + off;
      const std::int64_t i1 = i0 + mask;
      const Complex a0 = amps[i0], a1 = amps[i1];
      amps[i0] = g00 * a0 + g01 * a1;
      amps[i1] = g10 * a0 + g11 * a1;
    }
  }
}

void apply_zz_layer_inplace(Eigen::VectorXcd& amps, int n_q, double angle) {
  // The phase of basis state k is angle * s(k) with
  //   s(k) = sum over adjacent qubit pairs of z_j z_(j+1), z = +/-1.
  // Adjacent qubits occupy adjacent index bits, so s(k) counts agreements
  // minus disagreements of neighbouring bits of k.
  const std::int64_t dim = amps.size();
  const std::uint64_t pair_mask = (std::uint64_t{1} << (n_q - 1)) - 1;
  // Cache the n_q possible phases, indexed by the number of disagreeing pairs.
  Eigen::VectorXcd phase(n_q);
  for (int flips = 0; flips < n_q; ++flips) {
    const int s = (n_q - 1) - 2 * flips;
    phase[flips] = std::polar(1.0, angle * static_cast<double>(s));
  }
  for (std::int64_t k = 0; k < dim; ++k) {
    const auto u = static_cast<std::uint64_t>(k);
    const int flips = std::popcount((u ^ (u >> 1)) & pair_mask);
    amps[k] *= phase[flips];
  }
}

}  // namespace detail

StateVector StateVector::basis(int n_q, std::uint64_t index) {
  check_state_qubits(n_q);
  const std::int64_t dim = std::int64_t{1} << n_q;
  if (index >= static_cast<std::uint64_t>(dim))
    throw ArgumentError("basis index " + std::to_string(index) + " out of range for " +
                        std::to_string(n_q) + " qubits");
  StateVector psi;
  psi.n_q = n_q;
  psi.amps = Eigen::VectorXcd::Zero(dim);
  psi.amps[static_cast<std::int64_t>(index)] = 1.0;
  return psi;
}

StateVector StateVector::from_amplitudes(int n_q, Eigen::VectorXcd amplitudes) {
  check_state_qubits(n_q);
  const std::int64_t dim = std::int64_t{1} << n_q;
  if (amplitudes.size() != dim)
    throw ArgumentError("amplitude vector has length " + std::to_string(amplitudes.size()) +
                        ", expected " + std::to_string(dim));
  if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTol)
    throw ValidationError("amplitudes are not normalized: |norm^2 - 1| = " +
                          std::to_string(std::abs(amplitudes.squaredNorm() - 1.0)));
  StateVector psi;
  psi.n_q = n_q;
  psi.amps = std::move(amplitudes);
  return psi;
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  check_density_qubits(psi.n_q);
  DensityMatrix rho;
  rho.n_q = psi.n_q;
  rho.rho = psi.amps * psi.amps.adjoint();
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(int n_q) {
  check_density_qubits(n_q);
  const std::int64_t dim = std::int64_t{1} << n_q;
  DensityMatrix rho;
  rho.n_q = n_q;
  rho.rho = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return rho;
}

DensityMatrix DensityMatrix::from_matrix(int n_q, Eigen::MatrixXcd mat) {
  check_density_qubits(n_q);
  const std::int64_t dim = std::int64_t{1} << n_q;
  if (mat.rows() != dim || mat.cols() != dim)
    throw ArgumentError("density matrix must be " + std::to_string(dim) + "x" +
                        std::to_string(dim));
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > kUnitaryTol)
    throw ValidationError("matrix is not Hermitian within 1e-10");
  if (std::abs(mat.trace().real() - 1.0) > kNormTol || std::abs(mat.trace().imag()) > kNormTol)
    throw ValidationError("matrix trace is not 1 within 1e-10");
  DensityMatrix rho;
  rho.n_q = n_q;
  rho.rho = std::move(mat);
  return rho;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("density-matrix eigensolver failed");
  return es.eigenvalues().minCoeff();
}

Unitary Unitary::identity(std::int64_t dim) {
  if (dim < 1) throw ArgumentError("unitary dimension must be >= 1");
  Unitary u;
  u.mat = Eigen::MatrixXcd::Identity(dim, dim);
  return u;
}

Unitary Unitary::from_matrix(Eigen::MatrixXcd mat) {
  if (mat.rows() != mat.cols()) throw ArgumentError("unitary matrix must be square");
  if (!detail::is_unitary(mat, kUnitaryTol))
    throw ValidationError("matrix is not unitary within 1e-10");
  Unitary u;
  u.mat = std::move(mat);
  return u;
}

double Unitary::unitarity_defect() const {
  Eigen::MatrixXcd gram = mat.adjoint() * mat;
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff();
}

SingleQubitGate SingleQubitGate::identity() {
  return {Eigen::Matrix2cd::Identity()};
}

SingleQubitGate SingleQubitGate::pauli_x() {
  SingleQubitGate g;
  g.mat << 0, 1, 1, 0;
  return g;
}

SingleQubitGate SingleQubitGate::pauli_z() {
  SingleQubitGate g;
  g.mat << 1, 0, 0, -1;
  return g;
}

SingleQubitGate SingleQubitGate::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  SingleQubitGate g;
  g.mat << s, s, s, -s;
  return g;
}

StateVector apply_single_qubit_gate(const StateVector& state, const SingleQubitGate& gate,
                                    int target) {
  if (target < 0 || target >= state.n_q)
    throw ArgumentError("target qubit " + std::to_string(target) + " out of range for " +
                        std::to_string(state.n_q) + " qubits");
  if (!detail::is_unitary(gate.mat, kUnitaryTol))
    throw ValidationError("single-qubit gate is not unitary within 1e-10");
  StateVector out = state;
  detail::apply_single_qubit_gate_inplace(out.amps, out.n_q, gate.mat, target);
  return out;
}

StateVector apply_zz_coupling_layer(const StateVector& state, double angle) {
  if (state.n_q < 2)
    throw ArgumentError("coupling layer needs at least 2 qubits, got " +
                        std::to_string(state.n_q));
  StateVector out = state;
  detail::apply_zz_layer_inplace(out.amps, out.n_q, angle);
  return out;
}

double reduced_qubit_purity(const StateVector& state, int i) {
  if (i < 0 || i >= state.n_q)
    throw ArgumentError("qubit index " + std::to_string(i) + " out of range for " +
                        std::to_string(state.n_q) + " qubits");
  const std::int64_t mask = std::int64_t{1} << (state.n_q - 1 - i);
  const std::int64_t dim = state.dim();
  double p00 = 0.0, p11 = 0.0;
  Complex p01 = 0.0;
  for (std::int64_t base = 0; base < dim; base += 2 * mask) {
    for (std::int64_t off = 0; off < mask; ++off) {
      const Complex a0 = state.amps[base + off];
      const Complex a1 = state.amps[base + off + mask];
      p00 += std::norm(a0);
      p11 += std::norm(a1);
      p01 += a0 * std::conj(a1);
    }
  }
  return p00 * p00 + p11 * p11 + 2.0 * std::norm(p01);
}

double purity(const DensityMatrix& rho) {
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  return rho.rho.squaredNorm();
}

double fidelity_pure(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    throw ArgumentError("state dimensions differ: " + std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()));
  return std::norm(a.amps.dot(b.amps));
}

double fidelity_pure_mixed(const StateVector& a, const DensityMatrix& rho) {
  if (a.dim() != rho.dim())
    throw ArgumentError("state dimension " + std::to_string(a.dim()) +
                        " does not match density matrix dimension " + std::to_string(rho.dim()));
  const Complex val = a.amps.dot(rho.rho * a.amps);
  return val.real();
}

Unitary compose(const Unitary& u, const Unitary& v) {
  if (u.dim() != v.dim())
    throw ArgumentError("unitary dimensions differ: " + std::to_string(u.dim()) + " vs " +
                        std::to_string(v.dim()));
  Unitary w;
  w.mat = u.mat * v.mat;
  return w;
}

Unitary adjoint(const Unitary& u) {
  Unitary w;
  w.mat = u.mat.adjoint();
  return w;
}

StateVector apply_unitary(const StateVector& state, const Unitary& u) {
  if (u.dim() != state.dim())
    throw ArgumentError("unitary dimension " + std::to_string(u.dim()) +
                        " does not match state dimension " + std::to_string(state.dim()));
  StateVector out;
  out.n_q = state.n_q;
  out.amps = u.mat * state.amps;
  return out;
}

DensityMatrix conjugate_channel(const DensityMatrix& rho, const Unitary& u) {
  if (u.dim() != rho.dim())
    throw ArgumentError("unitary dimension " + std::to_string(u.dim()) +
                        " does not match density matrix dimension " + std::to_string(rho.dim()));
  DensityMatrix out;
  out.n_q = rho.n_q;
  out.rho = u.mat * rho.rho * u.mat.adjoint();
  return out;
}

}  // namespace prqc
