#pragma once

#include <string>

#include <json.hpp>

#include "tichain/statevector.hpp"

namespace tichain {

// Insertion-ordered JSON keeps key order, and therefore payload bytes,
// stable across runs.
using Json = nlohmann::ordered_json;

Json complex_to_json(complex z);
complex complex_from_json(const Json& j);

// State file format: {"n": int, "amplitudes": [[re, im], ...]} where the
// amplitude at index i belongs to the configuration with packed value i
// (MSB-first bitstring).  Wrong-length amplitude arrays are rejected.
Json state_to_json(const StateVector& psi);
StateVector state_from_json(const Json& j);

StateVector read_state_file(const std::string& path);
void write_state_file(const std::string& path, const StateVector& psi);

}  // namespace tichain
