// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "haar.hpp"
#include "qcore.hpp"
#include "rng.hpp"

namespace prqc {

/// One iteration of the constant-depth gate: an independent Haar-random U(2)
/// rotation on every qubit, then the fixed nearest-neighbor ZZ coupling.
struct Layer {
  std::vector<HurwitzAngles> rotations;  // exactly n_q entries
  double coupling_angle = kDefaultCouplingAngle;
};

/// Seedable description of an m-layer pseudo-random circuit. Immutable after
/// sampling; application operations are pure.
struct CircuitSpec {
  int n_q = 0;
  int m = 0;
  std::vector<Layer> layers;
  std::optional<std::uint64_t> seed;  // provenance only
};

/// Samples m layers of n_q fresh Hurwitz draws each; coupling angle pi/4.
CircuitSpec sample_circuit(int n_q, int m, Rng& rng);

/// Per layer, in order: the n_q single-qubit rotations, then the coupling.
StateVector apply_circuit(const StateVector& state, const CircuitSpec& c);

/// Exact inverse from the stored angles: layers in reverse, coupling with
/// negated angle first, then the adjoint rotations.
StateVector apply_inverse_circuit(const StateVector& state, const CircuitSpec& c);

/// Assembles the full D x D matrix, column k = circuit applied to |k>.
/// Capacity-guarded at kMaxMatrixQubits.
Unitary circuit_to_matrix(const CircuitSpec& c);

/// Circuit file format, version 1:
///   {version, n_q, m, coupling_angle, seed?, layers: [[{alpha,psi,chi,xi},...],...]}
/// Angles in radians, emitted with 17 significant digits so that
/// deserialize(serialize(c)) reproduces c bit-exactly.
std::string serialize(const CircuitSpec& c);
CircuitSpec deserialize(const std::string& text);

}  // namespace prqc
