// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#include "haar.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/QR>

namespace prqc {

HurwitzAngles sample_hurwitz_angles(Rng& rng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  HurwitzAngles a;
  a.alpha = two_pi * rng.uniform();
  a.psi = two_pi * rng.uniform();
  a.chi = two_pi * rng.uniform();
  a.xi = rng.uniform();
  return a;
}

SingleQubitGate hurwitz_gate(const HurwitzAngles& angles) {
  if (angles.xi < 0.0 || angles.xi >= 1.0)
    throw ArgumentError("xi must lie in [0, 1), got " + std::to_string(angles.xi));
  const double phi = std::asin(std::sqrt(angles.xi));
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const Complex global = std::polar(1.0, angles.alpha);
  const Complex ep = std::polar(1.0, angles.psi);
  const Complex ec = std::polar(1.0, angles.chi);
  SingleQubitGate g;
  g.mat << ep * c, ec * s, -std::conj(ec) * s, std::conj(ep) * c;
  g.mat *= global;
  return g;
}

SingleQubitGate sample_u2(Rng& rng) {
  return hurwitz_gate(sample_hurwitz_angles(rng));
}

Unitary sample_haar_unitary(std::int64_t dim, Rng& rng) {
  if (dim < 1) throw ArgumentError("dimension must be >= 1, got " + std::to_string(dim));
  if (dim > kMaxHaarDim)
    throw CapacityError("Haar sampling supports dimensions up to " + std::to_string(kMaxHaarDim) +
                        ", got " + std::to_string(dim));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd ginibre(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i)
    for (std::int64_t j = 0; j < dim; ++j)
      ginibre(i, j) = Complex(rng.normal(), rng.normal()) * inv_sqrt2;

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (std::int64_t j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= std::conj(rjj) / std::abs(rjj);
  }
  Unitary u;
  u.mat = std::move(q);
  return u;
}

StateVector sample_haar_state(std::int64_t dim, Rng& rng) {
  if (dim < 1) throw ArgumentError("dimension must be >= 1, got " + std::to_string(dim));
  if (dim > kMaxHaarDim)
    throw CapacityError("Haar sampling supports dimensions up to " + std::to_string(kMaxHaarDim));
  if (!std::has_single_bit(static_cast<std::uint64_t>(dim)))
    throw ArgumentError("state dimension must be a power of two, got " + std::to_string(dim));
  Eigen::VectorXcd amps(dim);
  for (std::int64_t k = 0; k < dim; ++k) amps[k] = Complex(rng.normal(), rng.normal());
  amps /= amps.norm();
  StateVector psi;
  psi.n_q = std::bit_width(static_cast<std::uint64_t>(dim)) - 1;
  psi.amps = std::move(amps);
  return psi;
}

}  // namespace prqc
