// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcore.hpp"
#include "source.hpp"

namespace prqc {

/// Meyer-Wallach entanglement indicator
///   Q = 2 - (2/n_q) * sum_i Tr[rho_i^2],
/// the average bipartite entanglement between each qubit and the rest.
/// 0 for product states, 1 for cat states. Requires n_q >= 2.
double meyer_wallach_q(const StateVector& state);

/// Exact CUE ensemble average of Q: (D - 2) / (D + 1).
double cue_q_mean(std::int64_t dim);

/// CDF of y = |U_ij|^2 for a Haar unitary on U(D): 1 - (1 - y)^(D-1).
double cue_element_cdf(std::int64_t dim, double y);

/// CUE reference values for dimension D.
struct CueReference {
  std::int64_t dim;
  double q_mean_exact;

  explicit CueReference(std::int64_t d) : dim(d), q_mean_exact(cue_q_mean(d)) {}
  double element_cdf(double y) const { return cue_element_cdf(dim, y); }
};

/// Sup-norm distance between the empirical CDF of `samples` and `cdf`,
/// computed by the sorted-sample sweep.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample KS distance between empirical CDFs.
double two_sample_ks(std::span<const double> a, std::span<const double> b);

struct Histogram {
  std::vector<double> bin_edges;        // bins + 1 entries
  std::vector<std::uint64_t> counts;    // bins entries
};

/// Uniform-bin histogram over [lo, hi]; values at hi land in the last bin.
Histogram make_histogram(std::span<const double> samples, int bins, double lo = 0.0,
                         double hi = 1.0);

/// Least-squares line fit y = slope * x + intercept with R^2.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

struct ReportMeta {
  std::string statistic;          // e.g. "meyer_wallach_q"
  std::string source;             // "circuit" | "haar" | "fixed"
  int n_q = 0;
  std::optional<int> m;           // circuit source only
  std::uint64_t seed = 0;
  std::uint64_t basis_index = 0;
  std::string notes;              // free-form caveats (pooling, reference, ...)
};

/// Aggregated statistics over an ensemble of trials.
struct EnsembleReport {
  int n_trials = 0;
  double q_mean = 0.0;
  double q_std = 0.0;             // sample standard deviation (n-1)
  std::vector<double> q_samples;  // raw values in trial order
  Histogram histogram;
  double ks_to_cue = 0.0;
  ReportMeta meta;
};

/// Samples n_trials sources, applies each draw to |basis_index>, and records
/// Q. Trials are seeded mix_seed(seed, trial); ks_to_cue is the two-sample KS
/// distance against an equal-size Haar reference batch drawn from the
/// reserved kCueReferenceIndex seed stream.
EnsembleReport run_q_ensemble(const UnitarySource& source, int n_trials, std::uint64_t seed,
                              std::uint64_t basis_index = 0, int histogram_bins = 50);

/// JSON mirror of EnsembleReport (histogram, samples, metadata).
std::string report_to_json(const EnsembleReport& report);

/// Pools y = |U_ij|^2 over all entries of n_matrices sampled unitaries.
/// Entries within one matrix are correlated; accepted and noted in reports.
std::vector<double> matrix_element_samples(const UnitarySource& source, int n_matrices,
                                           std::uint64_t seed);

struct EigenvectorSamples {
  std::vector<double> values;  // pooled |v_k|^2 over all eigenvectors
  int skipped = 0;             // matrices dropped for near-degenerate spectra
};

/// Pools squared eigenvector components of sampled unitaries. Matrices whose
/// eigenvalue spacing falls below 1e-10 are skipped (eigenvectors of
/// degenerate clusters are ill-defined) and counted.
EigenvectorSamples eigenvector_component_samples(const UnitarySource& source, int n_matrices,
                                                 std::uint64_t seed);

struct ConcentrationRow {
  int n_q = 0;
  double q_std = 0.0;
};

/// Haar-source q_std per register size; row j is seeded mix_seed(seed, j).
std::vector<ConcentrationRow> concentration_scan(std::span<const int> n_q_list, int n_trials,
                                                 std::uint64_t seed);

}  // namespace prqc
