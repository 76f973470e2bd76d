// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <optional>
#include <string>

#include "circuit.hpp"
#include "qcore.hpp"
#include "rng.hpp"

namespace prqc {

/// Where ensemble runners draw their unitaries from.
struct UnitarySource {
  enum class Kind { circuit, haar, fixed };

  Kind kind = Kind::haar;
  int n_q = 0;
  int m = 0;                      // circuit source only
  std::optional<Unitary> fixed_u;  // fixed source only

  static UnitarySource circuit(int n_q, int m) {
    UnitarySource s;
    s.kind = Kind::circuit;
    s.n_q = n_q;
    s.m = m;
    return s;
  }

  static UnitarySource haar(int n_q) {
    UnitarySource s;
    s.kind = Kind::haar;
    s.n_q = n_q;
    return s;
  }

  static UnitarySource fixed(int n_q, Unitary u);

  std::int64_t dim() const { return std::int64_t{1} << n_q; }
  std::string name() const;
};

/// One draw as a full matrix (circuit sources are assembled; capacity-guarded).
Unitary sample_source_matrix(const UnitarySource& source, Rng& rng);

/// One draw applied to |basis_index>. For the haar source this samples the
/// state directly (distribution-identical to a Haar-unitary column, O(D)).
StateVector sample_source_state(const UnitarySource& source, std::uint64_t basis_index, Rng& rng);

}  // namespace prqc
