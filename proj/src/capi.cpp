// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#include "prqc.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "circuit.hpp"
#include "noise.hpp"
#include "stats.hpp"

namespace {

thread_local std::string g_last_error;

prqc_status status_from(prqc::ErrorCode code) {
  switch (code) {
    case prqc::ErrorCode::argument:
      return PRQC_ERR_ARGUMENT;
    case prqc::ErrorCode::validation:
      return PRQC_ERR_VALIDATION;
    case prqc::ErrorCode::capacity:
      return PRQC_ERR_CAPACITY;
    case prqc::ErrorCode::parse:
      return PRQC_ERR_PARSE;
    case prqc::ErrorCode::unsupported_version:
      return PRQC_ERR_UNSUPPORTED_VERSION;
    case prqc::ErrorCode::numerical:
      return PRQC_ERR_NUMERICAL;
    case prqc::ErrorCode::mode:
      return PRQC_ERR_MODE;
  }
  return PRQC_ERR_INTERNAL;
}

template <typename Fn>
prqc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PRQC_OK;
  } catch (const prqc::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PRQC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PRQC_ERR_INTERNAL;
  }
}

prqc_status argument_error(const char* message) {
  g_last_error = message;
  return PRQC_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

prqc::UnitarySource make_source(prqc_source_kind kind, uint32_t n_q, uint32_t m) {
  switch (kind) {
    case PRQC_SOURCE_CIRCUIT:
      return prqc::UnitarySource::circuit(static_cast<int>(n_q), static_cast<int>(m));
    case PRQC_SOURCE_HAAR:
      return prqc::UnitarySource::haar(static_cast<int>(n_q));
  }
  throw prqc::ArgumentError("unknown source kind " + std::to_string(static_cast<int>(kind)));
}

double* copy_buffer(const std::vector<double>& values) {
  auto* buf = static_cast<double*>(std::malloc(values.size() * sizeof(double)));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, values.data(), values.size() * sizeof(double));
  return buf;
}

}  // namespace

struct prqc_circuit {
  prqc::CircuitSpec spec;
};

struct prqc_report {
  prqc::EnsembleReport report;
};

struct prqc_decay {
  prqc::DecayCurve curve;
};

extern "C" {

const char* prqc_version(void) { return "1.0.0"; }

const char* prqc_last_error(void) { return g_last_error.c_str(); }

uint64_t prqc_mix_seed(uint64_t seed, uint64_t index) { return prqc::mix_seed(seed, index); }

double prqc_cue_q_mean(uint64_t dim) {
  if (dim < 4) return std::numeric_limits<double>::quiet_NaN();
  return prqc::cue_q_mean(static_cast<std::int64_t>(dim));
}

prqc_status prqc_circuit_sample(uint32_t n_q, uint32_t m, uint64_t seed, prqc_circuit** out) {
  if (!out) return argument_error("out pointer is null");
  return guarded([&] {
    prqc::Rng rng(seed);
    auto* handle = new prqc_circuit{prqc::sample_circuit(static_cast<int>(n_q),
                                                         static_cast<int>(m), rng)};
    *out = handle;
  });
}

void prqc_circuit_free(prqc_circuit* c) { delete c; }

int32_t prqc_circuit_num_qubits(const prqc_circuit* c) { return c ? c->spec.n_q : -1; }

int32_t prqc_circuit_num_layers(const prqc_circuit* c) { return c ? c->spec.m : -1; }

prqc_status prqc_circuit_to_json(const prqc_circuit* c, char** json_out) {
  if (!c || !json_out) return argument_error("null pointer");
  return guarded([&] { *json_out = copy_string(prqc::serialize(c->spec)); });
}

prqc_status prqc_circuit_from_json(const char* json, prqc_circuit** out) {
  if (!json || !out) return argument_error("null pointer");
  return guarded([&] { *out = new prqc_circuit{prqc::deserialize(json)}; });
}

void prqc_string_free(char* s) { std::free(s); }

prqc_status prqc_circuit_apply_basis_q(const prqc_circuit* c, uint64_t basis_index,
                                       double* q_out) {
  if (!c || !q_out) return argument_error("null pointer");
  return guarded([&] {
    const prqc::StateVector out =
        prqc::apply_circuit(prqc::StateVector::basis(c->spec.n_q, basis_index), c->spec);
    *q_out = prqc::meyer_wallach_q(out);
  });
}

prqc_status prqc_q_ensemble_run(prqc_source_kind source, uint32_t n_q, uint32_t m,
                                uint32_t n_trials, uint64_t seed, uint64_t basis_index,
                                uint32_t histogram_bins, prqc_report** out) {
  if (!out) return argument_error("out pointer is null");
  return guarded([&] {
    *out = new prqc_report{prqc::run_q_ensemble(make_source(source, n_q, m),
                                                static_cast<int>(n_trials), seed, basis_index,
                                                static_cast<int>(histogram_bins))};
  });
}

uint32_t prqc_report_num_trials(const prqc_report* r) {
  return r ? static_cast<uint32_t>(r->report.n_trials) : 0;
}

double prqc_report_q_mean(const prqc_report* r) {
  return r ? r->report.q_mean : std::numeric_limits<double>::quiet_NaN();
}

double prqc_report_q_std(const prqc_report* r) {
  return r ? r->report.q_std : std::numeric_limits<double>::quiet_NaN();
}

double prqc_report_ks_to_cue(const prqc_report* r) {
  return r ? r->report.ks_to_cue : std::numeric_limits<double>::quiet_NaN();
}

uint32_t prqc_report_histogram_bins(const prqc_report* r) {
  return r ? static_cast<uint32_t>(r->report.histogram.counts.size()) : 0;
}

prqc_status prqc_report_histogram(const prqc_report* r, double* edges, uint64_t* counts) {
  if (!r || !edges || !counts) return argument_error("null pointer");
  const auto& h = r->report.histogram;
  std::memcpy(edges, h.bin_edges.data(), h.bin_edges.size() * sizeof(double));
  std::memcpy(counts, h.counts.data(), h.counts.size() * sizeof(uint64_t));
  return PRQC_OK;
}

size_t prqc_report_num_samples(const prqc_report* r) {
  return r ? r->report.q_samples.size() : 0;
}

prqc_status prqc_report_samples(const prqc_report* r, double* out, size_t capacity) {
  if (!r || !out) return argument_error("null pointer");
  if (capacity < r->report.q_samples.size())
    return argument_error("sample buffer is too small");
  std::memcpy(out, r->report.q_samples.data(), r->report.q_samples.size() * sizeof(double));
  return PRQC_OK;
}

prqc_status prqc_report_to_json(const prqc_report* r, char** json_out) {
  if (!r || !json_out) return argument_error("null pointer");
  return guarded([&] { *json_out = copy_string(prqc::report_to_json(r->report)); });
}

void prqc_report_free(prqc_report* r) { delete r; }

prqc_status prqc_element_samples(prqc_source_kind source, uint32_t n_q, uint32_t m,
                                 uint32_t n_matrices, uint64_t seed, double** samples_out,
                                 size_t* len_out) {
  if (!samples_out || !len_out) return argument_error("null pointer");
  return guarded([&] {
    const std::vector<double> pooled = prqc::matrix_element_samples(
        make_source(source, n_q, m), static_cast<int>(n_matrices), seed);
    *samples_out = copy_buffer(pooled);
    *len_out = pooled.size();
  });
}

prqc_status prqc_eigvec_samples(prqc_source_kind source, uint32_t n_q, uint32_t m,
                                uint32_t n_matrices, uint64_t seed, double** samples_out,
                                size_t* len_out, uint32_t* skipped_out) {
  if (!samples_out || !len_out || !skipped_out) return argument_error("null pointer");
  return guarded([&] {
    const prqc::EigenvectorSamples pooled = prqc::eigenvector_component_samples(
        make_source(source, n_q, m), static_cast<int>(n_matrices), seed);
    *samples_out = copy_buffer(pooled.values);
    *len_out = pooled.values.size();
    *skipped_out = static_cast<uint32_t>(pooled.skipped);
  });
}

void prqc_buffer_free(double* buf) { std::free(buf); }

prqc_status prqc_ks_to_element_law(const double* samples, size_t len, uint64_t dim,
                                   double* ks_out) {
  if (!samples || !ks_out) return argument_error("null pointer");
  return guarded([&] {
    const auto d = static_cast<std::int64_t>(dim);
    *ks_out = prqc::ks_statistic(std::span<const double>(samples, len),
                                 [d](double y) { return prqc::cue_element_cdf(d, y); });
  });
}

prqc_status prqc_concentration_scan(const uint32_t* n_q_list, size_t count, uint32_t n_trials,
                                    uint64_t seed, double* q_std_out) {
  if (!n_q_list || !q_std_out) return argument_error("null pointer");
  return guarded([&] {
    std::vector<int> sizes(n_q_list, n_q_list + count);
    const auto rows = prqc::concentration_scan(sizes, static_cast<int>(n_trials), seed);
    for (std::size_t j = 0; j < rows.size(); ++j) q_std_out[j] = rows[j].q_std;
  });
}

prqc_status prqc_decay_run(prqc_source_kind source, uint32_t n_q, uint32_t m,
                           const char* noise_descriptor, uint32_t n_max, uint64_t initial_basis,
                           uint32_t n_trials, uint64_t seed, prqc_decay** out) {
  if (!noise_descriptor || !out) return argument_error("null pointer");
  return guarded([&] {
    const prqc::NoiseSpec spec = prqc::NoiseSpec::parse(noise_descriptor);
    const prqc::NoiseModel model =
        prqc::make_noise_model(spec, static_cast<int>(n_q),
                               prqc::mix_seed(seed, prqc::kNoiseSeedIndex));
    *out = new prqc_decay{prqc::motion_reversal_curve(make_source(source, n_q, m), model,
                                                      static_cast<int>(n_max), initial_basis,
                                                      static_cast<int>(n_trials), seed)};
  });
}

uint32_t prqc_decay_num_points(const prqc_decay* d) {
  return d ? static_cast<uint32_t>(d->curve.n_values.size()) : 0;
}

prqc_status prqc_decay_point(const prqc_decay* d, uint32_t index, uint32_t* n_out,
                             double* fidelity_mean, double* fidelity_std, double* purity_mean,
                             double* purity_std) {
  if (!d) return argument_error("null pointer");
  if (index >= d->curve.n_values.size()) return argument_error("decay point index out of range");
  if (n_out) *n_out = static_cast<uint32_t>(d->curve.n_values[index]);
  if (fidelity_mean) *fidelity_mean = d->curve.fidelity_mean[index];
  if (fidelity_std) *fidelity_std = d->curve.fidelity_std[index];
  if (purity_mean) *purity_mean = d->curve.purity_mean[index];
  if (purity_std) *purity_std = d->curve.purity_std[index];
  return PRQC_OK;
}

void prqc_decay_free(prqc_decay* d) { delete d; }

}  // extern "C"
