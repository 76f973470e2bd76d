// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#include "noise.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "haar.hpp"

namespace prqc {

namespace {

double parse_param(const std::string& descriptor, std::size_t colon) {
  if (colon == std::string::npos || colon + 1 >= descriptor.size())
    throw ArgumentError("noise descriptor '" + descriptor + "' is missing its parameter");
  const std::string text = descriptor.substr(colon + 1);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ArgumentError("noise parameter '" + text + "' is not a number");
  }
  if (used != text.size())
    throw ArgumentError("noise parameter '" + text + "' is not a number");
  return value;
}

}  // namespace

NoiseSpec NoiseSpec::parse(const std::string& descriptor) {
  const std::size_t colon = descriptor.find(':');
  const std::string kind = descriptor.substr(0, colon);
  NoiseSpec spec;
  if (kind == "none") {
    if (colon != std::string::npos)
      throw ArgumentError("noise descriptor 'none' takes no parameter");
    spec.kind = NoiseKind::none;
    return spec;
  }
  if (kind == "coherent") {
    spec.kind = NoiseKind::coherent;
    spec.param = parse_param(descriptor, colon);
    if (spec.param < 0.0)
      throw ArgumentError("coherent strength must be >= 0, got " + std::to_string(spec.param));
    return spec;
  }
  if (kind == "depolarizing") {
    spec.kind = NoiseKind::depolarizing;
    spec.param = parse_param(descriptor, colon);
    if (spec.param < 0.0 || spec.param > 1.0)
      throw ArgumentError("depolarizing probability must lie in [0, 1], got " +
                          std::to_string(spec.param));
    return spec;
  }
  if (kind == "dephasing") {
    spec.kind = NoiseKind::dephasing;
    spec.param = parse_param(descriptor, colon);
    if (spec.param < 0.0 || spec.param > 1.0)
      throw ArgumentError("dephasing probability must lie in [0, 1], got " +
                          std::to_string(spec.param));
    return spec;
  }
  throw ArgumentError("unknown noise descriptor '" + descriptor +
                      "'; accepted: none, coherent:DELTA, depolarizing:P, dephasing:GAMMA");
}

std::string NoiseSpec::descriptor() const {
  switch (kind) {
    case NoiseKind::none:
      return "none";
    case NoiseKind::coherent:
      return "coherent:" + std::to_string(param);
    case NoiseKind::depolarizing:
      return "depolarizing:" + std::to_string(param);
    case NoiseKind::dephasing:
      return "dephasing:" + std::to_string(param);
  }
  return "?";
}

NoiseModel make_noise_model(const NoiseSpec& spec, int n_q, std::uint64_t noise_seed) {
  if (n_q < 1) throw ArgumentError("noise model needs n_q >= 1");
  if (n_q > kMaxStateQubits)
    throw CapacityError("noise models support at most " + std::to_string(kMaxStateQubits) +
                        " qubits");
  NoiseModel model;
  model.kind = spec.kind;
  model.param = spec.param;
  model.n_q = n_q;
  model.descriptor = spec.descriptor();
  if (spec.kind == NoiseKind::coherent) {
    const std::int64_t dim = std::int64_t{1} << n_q;
    Rng rng(noise_seed);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd a(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i)
      for (std::int64_t j = 0; j < dim; ++j)
        a(i, j) = Complex(rng.normal(), rng.normal()) * inv_sqrt2;
    Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
      throw NumericalError("Hermitian eigensolver failed while building coherent noise");
    const double spectral_norm = es.eigenvalues().cwiseAbs().maxCoeff();
    h /= spectral_norm;
    const Eigen::VectorXd scaled = es.eigenvalues() / spectral_norm;
    Eigen::VectorXcd phases(dim);
    for (std::int64_t k = 0; k < dim; ++k)
      phases[k] = std::polar(1.0, -spec.param * scaled[k]);
    model.hamiltonian = std::move(h);
    model.perturbation =
        es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }
  return model;
}

StateVector apply_noise(const StateVector& state, const NoiseModel& model) {
  switch (model.kind) {
    case NoiseKind::none:
      return state;
    case NoiseKind::coherent: {
      if (model.perturbation.rows() != state.dim())
        throw ArgumentError("noise model dimension does not match state");
      StateVector out;
      out.n_q = state.n_q;
      out.amps = model.perturbation * state.amps;
      return out;
    }
    case NoiseKind::depolarizing:
    case NoiseKind::dephasing:
      throw ModeError("channel '" + model.descriptor +
                      "' is not unitary; run in density-matrix mode");
  }
  throw ArgumentError("unknown noise kind");
}

DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseModel& model) {
  switch (model.kind) {
    case NoiseKind::none:
      return rho;
    case NoiseKind::coherent: {
      if (model.perturbation.rows() != rho.dim())
        throw ArgumentError("noise model dimension does not match density matrix");
      DensityMatrix out;
      out.n_q = rho.n_q;
      out.rho = model.perturbation * rho.rho * model.perturbation.adjoint();
      return out;
    }
    case NoiseKind::depolarizing: {
      DensityMatrix out;
      out.n_q = rho.n_q;
      const double p = model.param;
      out.rho = (1.0 - p) * rho.rho;
      out.rho.diagonal().array() += p / static_cast<double>(rho.dim());
      return out;
    }
    case NoiseKind::dephasing: {
      // Per-qubit channel rho -> (1-g) rho + g Z rho Z multiplies entry (i, j)
      // by (1-2g) whenever the qubit's bits of i and j differ; the composition
      // over all qubits is the factor (1-2g)^hamming(i xor j).
      DensityMatrix out;
      out.n_q = rho.n_q;
      const std::int64_t dim = rho.dim();
      const double factor = 1.0 - 2.0 * model.param;
      Eigen::VectorXd powers(rho.n_q + 1);
      powers[0] = 1.0;
      for (int k = 1; k <= rho.n_q; ++k) powers[k] = powers[k - 1] * factor;
      out.rho.resize(dim, dim);
      for (std::int64_t i = 0; i < dim; ++i)
        for (std::int64_t j = 0; j < dim; ++j) {
          const int distance =
              std::popcount(static_cast<std::uint64_t>(i) ^ static_cast<std::uint64_t>(j));
          out.rho(i, j) = rho.rho(i, j) * powers[distance];
        }
      return out;
    }
  }
  throw ArgumentError("unknown noise kind");
}

namespace {

bool channel_is_unitary(const NoiseModel& model) {
  return model.kind == NoiseKind::none || model.kind == NoiseKind::coherent;
}

struct TrialUnitary {
  // Circuit sources keep the layered form (exact inverse, O(mD) application);
  // other sources hold the dense matrix.
  std::optional<CircuitSpec> circ;
  std::optional<Unitary> matrix;
};

TrialUnitary draw_trial_unitary(const UnitarySource& source, Rng& rng, bool need_matrix) {
  TrialUnitary u;
  if (source.kind == UnitarySource::Kind::circuit) {
    CircuitSpec c = sample_circuit(source.n_q, source.m, rng);
    if (need_matrix) u.matrix = circuit_to_matrix(c);
    u.circ = std::move(c);
  } else {
    u.matrix = sample_source_matrix(source, rng);
  }
  return u;
}

struct Accumulator {
  std::vector<double> sum, sum_sq;
  explicit Accumulator(int points) : sum(points, 0.0), sum_sq(points, 0.0) {}
  void add(int idx, double value) {
    sum[idx] += value;
    sum_sq[idx] += value * value;
  }
  double mean(int idx, int n) const { return sum[idx] / n; }
  double std(int idx, int n) const {
    if (n < 2) return 0.0;
    const double m = mean(idx, n);
    const double var = (sum_sq[idx] - n * m * m) / (n - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

}  // namespace

std::vector<DecayCurve> average_fidelity_decay(const UnitarySource& source,
                                               const NoiseModel& noise, int n_max,
                                               std::span<const std::uint64_t> initial_basis_list,
                                               int n_trials, std::uint64_t seed, SimMode mode) {
  if (n_max < 1) throw ArgumentError("motion reversal needs n_max >= 1");
  if (n_trials < 1) throw ArgumentError("motion reversal needs n_trials >= 1");
  if (initial_basis_list.empty()) throw ArgumentError("need at least one initial basis state");
  if (noise.n_q != source.n_q)
    throw ArgumentError("noise model is sized for " + std::to_string(noise.n_q) +
                        " qubits, source has " + std::to_string(source.n_q));

  const bool unitary_channel = channel_is_unitary(noise);
  if (mode == SimMode::automatic) mode = unitary_channel ? SimMode::pure_state : SimMode::density_matrix;
  if (mode == SimMode::pure_state && !unitary_channel)
    throw ModeError("channel '" + noise.descriptor +
                    "' is not unitary; run in density-matrix mode");
  if (mode == SimMode::density_matrix && source.n_q > kMaxDensityQubits)
    throw CapacityError("density-matrix mode supports at most " +
                        std::to_string(kMaxDensityQubits) + " qubits, got " +
                        std::to_string(source.n_q));

  const int points = n_max + 1;  // row 0 is the n = 0 baseline
  const auto n_initials = initial_basis_list.size();
  std::vector<Accumulator> fid(n_initials, Accumulator(points));
  std::vector<Accumulator> pur(n_initials, Accumulator(points));

  const bool density = mode == SimMode::density_matrix;
  for (int t = 0; t < n_trials; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    const TrialUnitary u = draw_trial_unitary(source, rng, density);
    for (std::size_t s = 0; s < n_initials; ++s) {
      const StateVector psi0 = StateVector::basis(source.n_q, initial_basis_list[s]);
      fid[s].add(0, 1.0);
      pur[s].add(0, 1.0);
      for (int n = 1; n <= n_max; ++n) {
        if (density) {
          const Unitary& mat = *u.matrix;
          DensityMatrix rho = DensityMatrix::from_state(psi0);
          for (int k = 0; k < n; ++k) rho = apply_noise(conjugate_channel(rho, mat), noise);
          const Unitary inv = adjoint(mat);
          for (int k = 0; k < n; ++k) rho = apply_noise(conjugate_channel(rho, inv), noise);
          fid[s].add(n, fidelity_pure_mixed(psi0, rho));
          pur[s].add(n, purity(rho));
        } else {
          StateVector psi = psi0;
          if (u.circ) {
            for (int k = 0; k < n; ++k) psi = apply_noise(apply_circuit(psi, *u.circ), noise);
            for (int k = 0; k < n; ++k)
              psi = apply_noise(apply_inverse_circuit(psi, *u.circ), noise);
          } else {
            const Unitary inv = adjoint(*u.matrix);
            for (int k = 0; k < n; ++k) psi = apply_noise(apply_unitary(psi, *u.matrix), noise);
            for (int k = 0; k < n; ++k) psi = apply_noise(apply_unitary(psi, inv), noise);
          }
          fid[s].add(n, fidelity_pure(psi0, psi));
          pur[s].add(n, 1.0);
        }
      }
    }
  }

  std::vector<DecayCurve> curves(n_initials);
  for (std::size_t s = 0; s < n_initials; ++s) {
    DecayCurve& curve = curves[s];
    curve.n_values.resize(points);
    curve.fidelity_mean.resize(points);
    curve.fidelity_std.resize(points);
    curve.purity_mean.resize(points);
    curve.purity_std.resize(points);
    for (int n = 0; n < points; ++n) {
      curve.n_values[n] = n;
      curve.fidelity_mean[n] = fid[s].mean(n, n_trials);
      curve.fidelity_std[n] = fid[s].std(n, n_trials);
      curve.purity_mean[n] = pur[s].mean(n, n_trials);
      curve.purity_std[n] = pur[s].std(n, n_trials);
    }
    curve.meta.noise = noise.descriptor;
    curve.meta.source = source.name();
    curve.meta.n_q = source.n_q;
    curve.meta.m = source.kind == UnitarySource::Kind::circuit ? source.m : 0;
    curve.meta.n_trials = n_trials;
    curve.meta.seed = seed;
    curve.meta.initial_basis = initial_basis_list[s];
    curve.meta.mode = density ? "density" : "pure";
  }
  return curves;
}

DecayCurve motion_reversal_curve(const UnitarySource& source, const NoiseModel& noise, int n_max,
                                 std::uint64_t initial_basis, int n_trials, std::uint64_t seed,
                                 SimMode mode) {
  const std::uint64_t initials[] = {initial_basis};
  return average_fidelity_decay(source, noise, n_max, initials, n_trials, seed, mode).front();
}

}  // namespace prqc
