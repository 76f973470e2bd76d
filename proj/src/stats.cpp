// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "haar.hpp"

namespace prqc {

namespace {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd mean_and_std(std::span<const double> xs) {
  MeanStd r;
  const auto n = static_cast<double>(xs.size());
  if (xs.empty()) return r;
  r.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.std = std::sqrt(ss / (n - 1.0));
  }
  return r;
}

}  // namespace

double meyer_wallach_q(const StateVector& state) {
  if (state.n_q < 2)
    throw ArgumentError("Q is undefined for fewer than 2 qubits, got " +
                        std::to_string(state.n_q));
  double purity_sum = 0.0;
  for (int i = 0; i < state.n_q; ++i) purity_sum += reduced_qubit_purity(state, i);
  double q = 2.0 - (2.0 / static_cast<double>(state.n_q)) * purity_sum;
  if (q < -1e-9 || q > 1.0 + 1e-9)
    throw NumericalError("Meyer-Wallach Q = " + std::to_string(q) + " outside [0, 1]");
  return std::clamp(q, 0.0, 1.0);
}

double cue_q_mean(std::int64_t dim) {
  if (dim < 4) throw ArgumentError("CUE Q mean needs D = 2^n_q with n_q >= 2");
  return static_cast<double>(dim - 2) / static_cast<double>(dim + 1);
}

double cue_element_cdf(std::int64_t dim, double y) {
  if (dim < 1) throw ArgumentError("dimension must be >= 1");
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  if (dim == 1) return 0.0;  // |U_00|^2 == 1 identically: all mass at y = 1
  return 1.0 - std::pow(1.0 - y, static_cast<double>(dim - 1));
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw ArgumentError("KS statistic needs at least one sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double two_sample_ks(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw ArgumentError("two-sample KS needs nonempty samples");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size()), nb = static_cast<double>(sb.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < sa.size() && ib < sb.size()) {
    const double x = std::min(sa[ia], sb[ib]);
    while (ia < sa.size() && sa[ia] <= x) ++ia;
    while (ib < sb.size() && sb[ib] <= x) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
  }
  return d;
}

Histogram make_histogram(std::span<const double> samples, int bins, double lo, double hi) {
  if (bins < 1) throw ArgumentError("histogram needs at least one bin");
  if (!(hi > lo)) throw ArgumentError("histogram range must satisfy hi > lo");
  Histogram h;
  h.bin_edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b)
    h.bin_edges[b] = lo + (hi - lo) * static_cast<double>(b) / bins;
  h.counts.assign(bins, 0);
  for (double x : samples) {
    if (x < lo || x > hi)
      throw ArgumentError("histogram sample " + std::to_string(x) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    auto b = static_cast<int>((x - lo) / (hi - lo) * bins);
    if (b == bins) b = bins - 1;  // right edge inclusive
    ++h.counts[b];
  }
  return h;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("linear fit needs matching x/y lengths");
  if (x.size() < 2) throw ArgumentError("linear fit needs at least two points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw ArgumentError("linear fit needs non-constant x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

EnsembleReport run_q_ensemble(const UnitarySource& source, int n_trials, std::uint64_t seed,
                              std::uint64_t basis_index, int histogram_bins) {
  if (n_trials < 1) throw ArgumentError("ensemble needs n_trials >= 1");
  EnsembleReport report;
  report.n_trials = n_trials;
  report.q_samples.reserve(n_trials);
  for (int t = 0; t < n_trials; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    report.q_samples.push_back(meyer_wallach_q(sample_source_state(source, basis_index, rng)));
  }
  const MeanStd ms = mean_and_std(report.q_samples);
  report.q_mean = ms.mean;
  report.q_std = ms.std;
  report.histogram = make_histogram(report.q_samples, histogram_bins);

  // Empirical CUE reference of equal size, drawn from a reserved seed stream.
  const std::uint64_t ref_seed = mix_seed(seed, kCueReferenceIndex);
  std::vector<double> reference;
  reference.reserve(n_trials);
  for (int t = 0; t < n_trials; ++t) {
    Rng rng(mix_seed(ref_seed, static_cast<std::uint64_t>(t)));
    reference.push_back(meyer_wallach_q(sample_haar_state(source.dim(), rng)));
  }
  report.ks_to_cue = two_sample_ks(report.q_samples, reference);

  report.meta.statistic = "meyer_wallach_q";
  report.meta.source = source.name();
  report.meta.n_q = source.n_q;
  if (source.kind == UnitarySource::Kind::circuit) report.meta.m = source.m;
  report.meta.seed = seed;
  report.meta.basis_index = basis_index;
  report.meta.notes = "ks_to_cue: two-sample KS vs equal-size haar reference batch";
  return report;
}

std::string report_to_json(const EnsembleReport& report) {
  nlohmann::json j;
  j["n_trials"] = report.n_trials;
  j["q_mean"] = report.q_mean;
  j["q_std"] = report.q_std;
  j["ks_to_cue"] = report.ks_to_cue;
  j["histogram"] = {{"bin_edges", report.histogram.bin_edges},
                    {"counts", report.histogram.counts}};
  j["q_samples"] = report.q_samples;
  nlohmann::json meta;
  meta["statistic"] = report.meta.statistic;
  meta["source"] = report.meta.source;
  meta["n_q"] = report.meta.n_q;
  if (report.meta.m) meta["m"] = *report.meta.m;
  meta["seed"] = report.meta.seed;
  meta["basis_index"] = report.meta.basis_index;
  meta["notes"] = report.meta.notes;
  j["metadata"] = meta;
  return j.dump(2);
}

std::vector<double> matrix_element_samples(const UnitarySource& source, int n_matrices,
                                           std::uint64_t seed) {
  if (n_matrices < 1) throw ArgumentError("need at least one matrix");
  const std::int64_t dim = source.dim();
  std::vector<double> pooled;
  pooled.reserve(static_cast<std::size_t>(n_matrices) * dim * dim);
  for (int t = 0; t < n_matrices; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    const Unitary u = sample_source_matrix(source, rng);
    for (std::int64_t i = 0; i < dim; ++i)
      for (std::int64_t j = 0; j < dim; ++j) pooled.push_back(std::norm(u.mat(i, j)));
  }
  return pooled;
}

EigenvectorSamples eigenvector_component_samples(const UnitarySource& source, int n_matrices,
                                                 std::uint64_t seed) {
  if (n_matrices < 1) throw ArgumentError("need at least one matrix");
  const std::int64_t dim = source.dim();
  EigenvectorSamples out;
  out.values.reserve(static_cast<std::size_t>(n_matrices) * dim * dim);
  for (int t = 0; t < n_matrices; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    const Unitary u = sample_source_matrix(source, rng);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u.mat, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
      throw NumericalError("eigensolver failed on a " + std::to_string(dim) + "x" +
                           std::to_string(dim) + " " + source.name() + " unitary (trial " +
                           std::to_string(t) + ")");
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();
    for (std::int64_t k = 0; k < dim; ++k)
      if (std::abs(std::abs(vals[k]) - 1.0) > 1e-8)
        throw NumericalError("eigenvalue off the unit circle by " +
                             std::to_string(std::abs(std::abs(vals[k]) - 1.0)));
    const double residual = (u.mat * vecs - vecs * vals.asDiagonal()).cwiseAbs().maxCoeff();
    if (residual > 1e-8)
      throw NumericalError("eigendecomposition residual " + std::to_string(residual) +
                           " exceeds 1e-8");
    // Near-degenerate spectra make eigenvectors ill-defined; skip and count.
    double min_spacing = 4.0;
    for (std::int64_t a = 0; a < dim; ++a)
      for (std::int64_t b = a + 1; b < dim; ++b)
        min_spacing = std::min(min_spacing, std::abs(vals[a] - vals[b]));
    if (min_spacing < 1e-10) {
      ++out.skipped;
      continue;
    }
    for (std::int64_t k = 0; k < dim; ++k)
      for (std::int64_t i = 0; i < dim; ++i) out.values.push_back(std::norm(vecs(i, k)));
  }
  return out;
}

std::vector<ConcentrationRow> concentration_scan(std::span<const int> n_q_list, int n_trials,
                                                 std::uint64_t seed) {
  if (n_q_list.empty()) throw ArgumentError("concentration scan needs at least one qubit count");
  std::vector<ConcentrationRow> rows;
  rows.reserve(n_q_list.size());
  for (std::size_t j = 0; j < n_q_list.size(); ++j) {
    const EnsembleReport report = run_q_ensemble(UnitarySource::haar(n_q_list[j]), n_trials,
                                                 mix_seed(seed, static_cast<std::uint64_t>(j)));
    rows.push_back({n_q_list[j], report.q_std});
  }
  return rows;
}

}  // namespace prqc
