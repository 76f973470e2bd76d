// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>

#include "qcore.hpp"
#include "rng.hpp"

namespace prqc {

inline constexpr std::int64_t kMaxHaarDim = 4096;  // = 2^kMaxStateQubits

/// Hurwitz parametrization of U(2): three phases plus xi = sin^2(phi).
/// With alpha, psi, chi uniform on [0, 2pi) and xi uniform on [0, 1) the
/// resulting gate is exactly Haar-distributed on U(2).
struct HurwitzAngles {
  double alpha = 0.0;  // global phase, [0, 2pi)
  double psi = 0.0;    // [0, 2pi)
  double chi = 0.0;    // [0, 2pi)
  double xi = 0.0;     // [0, 1), polar angle phi = arcsin(sqrt(xi))
};

HurwitzAngles sample_hurwitz_angles(Rng& rng);

/// e^{i alpha} [[ e^{i psi} cos(phi),  e^{i chi} sin(phi)],
///              [-e^{-i chi} sin(phi), e^{-i psi} cos(phi)]]
SingleQubitGate hurwitz_gate(const HurwitzAngles& angles);

/// One Haar draw from U(2).
SingleQubitGate sample_u2(Rng& rng);

/// Haar draw from U(dim) by the Ginibre+QR construction: fill with i.i.d.
/// standard complex Gaussians, QR-factorize, then fix the column phases from
/// the R diagonal. The phase correction is mandatory; plain QR is not Haar.
Unitary sample_haar_unitary(std::int64_t dim, Rng& rng);

/// Haar-random pure state: dim i.i.d. complex Gaussians, normalized.
/// Distributed as the first column of a Haar unitary. dim must be a power of
/// two (dim = 1 gives the degenerate single-amplitude state).
StateVector sample_haar_state(std::int64_t dim, Rng& rng);

}  // namespace prqc
