// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#include "source.hpp"

#include "haar.hpp"

namespace prqc {

UnitarySource UnitarySource::fixed(int n_q, Unitary u) {
  if (u.dim() != (std::int64_t{1} << n_q))
    throw ArgumentError("fixed unitary dimension does not match qubit count");
  UnitarySource s;
  s.kind = Kind::fixed;
  s.n_q = n_q;
  s.fixed_u = std::move(u);
  return s;
}

std::string UnitarySource::name() const {
  switch (kind) {
    case Kind::circuit:
      return "circuit";
    case Kind::haar:
      return "haar";
    case Kind::fixed:
      return "fixed";
  }
  return "?";
}

Unitary sample_source_matrix(const UnitarySource& source, Rng& rng) {
  switch (source.kind) {
    case UnitarySource::Kind::circuit:
      return circuit_to_matrix(sample_circuit(source.n_q, source.m, rng));
    case UnitarySource::Kind::haar:
      return sample_haar_unitary(source.dim(), rng);
    case UnitarySource::Kind::fixed:
      return *source.fixed_u;
  }
  throw ArgumentError("unknown unitary source");
}

StateVector sample_source_state(const UnitarySource& source, std::uint64_t basis_index, Rng& rng) {
  switch (source.kind) {
    case UnitarySource::Kind::circuit:
      return apply_circuit(StateVector::basis(source.n_q, basis_index),
                           sample_circuit(source.n_q, source.m, rng));
    case UnitarySource::Kind::haar:
      return sample_haar_state(source.dim(), rng);
    case UnitarySource::Kind::fixed:
      return apply_unitary(StateVector::basis(source.n_q, basis_index), *source.fixed_u);
  }
  throw ArgumentError("unknown unitary source");
}

}  // namespace prqc
