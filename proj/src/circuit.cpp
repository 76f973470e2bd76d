// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#include "circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace prqc {

namespace {

void check_circuit_shape(const CircuitSpec& c) {
  if (c.n_q < 2) throw ArgumentError("circuits need at least 2 qubits (coupling layer)");
  if (c.n_q > kMaxStateQubits)
    throw CapacityError("circuits support at most " + std::to_string(kMaxStateQubits) +
                        " qubits, got " + std::to_string(c.n_q));
  if (c.m < 0) throw ArgumentError("layer count must be >= 0");
  if (static_cast<int>(c.layers.size()) != c.m)
    throw ArgumentError("layer list length " + std::to_string(c.layers.size()) +
                        " does not match m = " + std::to_string(c.m));
  for (const Layer& layer : c.layers)
    if (static_cast<int>(layer.rotations.size()) != c.n_q)
      throw ArgumentError("every layer must carry exactly n_q rotation records");
}

std::string format_angle(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double require_number(const nlohmann::json& node, const char* field, const std::string& where) {
  if (!node.contains(field))
    throw ParseError("missing field '" + std::string(field) + "' in " + where);
  const auto& v = node.at(field);
  if (!v.is_number()) throw ParseError("field '" + std::string(field) + "' in " + where +
                                       " must be a number");
  return v.get<double>();
}

}  // namespace

CircuitSpec sample_circuit(int n_q, int m, Rng& rng) {
  if (n_q < 2)
    throw ArgumentError("circuits need at least 2 qubits, got " + std::to_string(n_q));
  if (n_q > kMaxStateQubits)
    throw CapacityError("circuits support at most " + std::to_string(kMaxStateQubits) +
                        " qubits, got " + std::to_string(n_q));
  if (m < 0) throw ArgumentError("layer count must be >= 0, got " + std::to_string(m));
  CircuitSpec c;
  c.n_q = n_q;
  c.m = m;
  c.seed = rng.seed();
  c.layers.resize(m);
  for (Layer& layer : c.layers) {
    layer.coupling_angle = kDefaultCouplingAngle;
    layer.rotations.reserve(n_q);
    for (int q = 0; q < n_q; ++q) layer.rotations.push_back(sample_hurwitz_angles(rng));
  }
  return c;
}

StateVector apply_circuit(const StateVector& state, const CircuitSpec& c) {
  check_circuit_shape(c);
  if (state.n_q != c.n_q)
    throw ArgumentError("state has " + std::to_string(state.n_q) + " qubits, circuit expects " +
                        std::to_string(c.n_q));
  StateVector out = state;
  for (const Layer& layer : c.layers) {
    for (int q = 0; q < c.n_q; ++q)
      detail::apply_single_qubit_gate_inplace(out.amps, c.n_q, hurwitz_gate(layer.rotations[q]).mat,
                                              q);
    detail::apply_zz_layer_inplace(out.amps, c.n_q, layer.coupling_angle);
  }
  return out;
}

StateVector apply_inverse_circuit(const StateVector& state, const CircuitSpec& c) {
  check_circuit_shape(c);
  if (state.n_q != c.n_q)
    throw ArgumentError("state has " + std::to_string(state.n_q) + " qubits, circuit expects " +
                        std::to_string(c.n_q));
  StateVector out = state;
  for (auto it = c.layers.rbegin(); it != c.layers.rend(); ++it) {
    detail::apply_zz_layer_inplace(out.amps, c.n_q, -it->coupling_angle);
    for (int q = 0; q < c.n_q; ++q) {
      const Eigen::Matrix2cd inv = hurwitz_gate(it->rotations[q]).mat.adjoint();
      detail::apply_single_qubit_gate_inplace(out.amps, c.n_q, inv, q);
    }
  }
  return out;
}

Unitary circuit_to_matrix(const CircuitSpec& c) {
  check_circuit_shape(c);
  if (c.n_q > kMaxMatrixQubits)
    throw CapacityError("matrix assembly supports at most " + std::to_string(kMaxMatrixQubits) +
                        " qubits, got " + std::to_string(c.n_q));
  const std::int64_t dim = std::int64_t{1} << c.n_q;
  Unitary u;
  u.mat.resize(dim, dim);
  for (std::int64_t k = 0; k < dim; ++k)
    u.mat.col(k) = apply_circuit(StateVector::basis(c.n_q, static_cast<std::uint64_t>(k)), c).amps;
  return u;
}

std::string serialize(const CircuitSpec& c) {
  check_circuit_shape(c);
  // The v1 format stores one coupling angle for the whole circuit.
  double coupling = c.m > 0 ? c.layers.front().coupling_angle : kDefaultCouplingAngle;
  for (const Layer& layer : c.layers)
    if (layer.coupling_angle != coupling)
      throw ArgumentError("format version 1 cannot store per-layer coupling angles");

  std::ostringstream out;
  out << "{\n";
  out << "  \"version\": 1,\n";
  out << "  \"n_q\": " << c.n_q << ",\n";
  out << "  \"m\": " << c.m << ",\n";
  out << "  \"coupling_angle\": " << format_angle(coupling) << ",\n";
  if (c.seed) out << "  \"seed\": " << *c.seed << ",\n";
  out << "  \"layers\": [";
  for (int l = 0; l < c.m; ++l) {
    out << (l == 0 ? "\n" : ",\n") << "    [";
    const Layer& layer = c.layers[l];
    for (int q = 0; q < c.n_q; ++q) {
      const HurwitzAngles& a = layer.rotations[q];
      out << (q == 0 ? "" : ",") << "\n      {\"alpha\": " << format_angle(a.alpha)
          << ", \"psi\": " << format_angle(a.psi) << ", \"chi\": " << format_angle(a.chi)
          << ", \"xi\": " << format_angle(a.xi) << "}";
    }
    out << "\n    ]";
  }
  out << (c.m > 0 ? "\n  " : "") << "]\n";
  out << "}\n";
  return out.str();
}

CircuitSpec deserialize(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid circuit document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("circuit document must be a JSON object");
  if (!doc.contains("version")) throw ParseError("missing field 'version' in circuit document");
  if (!doc.at("version").is_number_integer() || doc.at("version").get<int>() != 1)
    throw UnsupportedVersionError("unsupported circuit format version " + doc.at("version").dump() +
                                  " (this build reads version 1)");
  for (const char* field : {"n_q", "m", "coupling_angle", "layers"})
    if (!doc.contains(field))
      throw ParseError("missing field '" + std::string(field) + "' in circuit document");

  CircuitSpec c;
  if (!doc.at("n_q").is_number_integer()) throw ParseError("field 'n_q' must be an integer");
  if (!doc.at("m").is_number_integer()) throw ParseError("field 'm' must be an integer");
  c.n_q = doc.at("n_q").get<int>();
  c.m = doc.at("m").get<int>();
  if (c.n_q < 2) throw ArgumentError("circuits need at least 2 qubits, got " +
                                     std::to_string(c.n_q));
  if (c.n_q > kMaxStateQubits)
    throw CapacityError("circuits support at most " + std::to_string(kMaxStateQubits) + " qubits");
  if (c.m < 0) throw ArgumentError("layer count must be >= 0");
  const double coupling = require_number(doc, "coupling_angle", "circuit document");
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned())
      throw ParseError("field 'seed' must be an unsigned integer");
    c.seed = doc.at("seed").get<std::uint64_t>();
  }

  const auto& layers = doc.at("layers");
  if (!layers.is_array()) throw ParseError("field 'layers' must be an array");
  if (static_cast<int>(layers.size()) != c.m)
    throw ParseError("'layers' holds " + std::to_string(layers.size()) + " entries, expected m = " +
                     std::to_string(c.m));
  c.layers.resize(c.m);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (int l = 0; l < c.m; ++l) {
    const auto& layer_node = layers.at(l);
    const std::string layer_where = "layers[" + std::to_string(l) + "]";
    if (!layer_node.is_array()) throw ParseError(layer_where + " must be an array");
    if (static_cast<int>(layer_node.size()) != c.n_q)
      throw ParseError(layer_where + " holds " + std::to_string(layer_node.size()) +
                       " rotations, expected n_q = " + std::to_string(c.n_q));
    Layer& layer = c.layers[l];
    layer.coupling_angle = coupling;
    layer.rotations.resize(c.n_q);
    for (int q = 0; q < c.n_q; ++q) {
      const auto& rot = layer_node.at(q);
      const std::string where = layer_where + "[" + std::to_string(q) + "]";
      if (!rot.is_object()) throw ParseError(where + " must be an object");
      HurwitzAngles& a = layer.rotations[q];
      a.alpha = require_number(rot, "alpha", where);
      a.psi = require_number(rot, "psi", where);
      a.chi = require_number(rot, "chi", where);
      a.xi = require_number(rot, "xi", where);
      for (auto [name, value] : {std::pair{"alpha", a.alpha}, {"psi", a.psi}, {"chi", a.chi}})
        if (value < 0.0 || value >= two_pi)
          throw ParseError("field '" + std::string(name) + "' in " + where +
                           " out of range [0, 2pi)");
      if (a.xi < 0.0 || a.xi >= 1.0)
        throw ParseError("field 'xi' in " + where + " out of range [0, 1)");
    }
  }
  return c;
}

}  // namespace prqc
