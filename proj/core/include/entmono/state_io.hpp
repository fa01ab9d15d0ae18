#pragma once

#include "entmono/states.hpp"

#include <filesystem>
#include <stdexcept>

namespace entmono {

// Raised for unreadable, malformed, or invalid state files; the message names
// the offending field or parse position.
struct StateFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State file schema:
//   {"n_qubits": n, "amplitudes": [[re, im], ...]}
// with 2^n entries, basis-ordered with qubit 0 as the most significant bit.
// Norms within 1e-6 of 1 are accepted and renormalized exactly; anything
// further off is rejected.
StateVector read_state_json(const std::filesystem::path& path);

void write_state_json(const std::filesystem::path& path, const StateVector& psi);

}  // namespace entmono
