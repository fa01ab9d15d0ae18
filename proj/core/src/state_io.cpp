#include "entmono/state_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <string>

namespace entmono {

using nlohmann::json;

StateVector read_state_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw StateFileError("cannot open state file: " + path.string());
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw StateFileError("parse error in " + path.string() + ": " + e.what());
  }

  if (!doc.is_object()) {
    throw StateFileError(path.string() + ": top-level value must be an object");
  }
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
    throw StateFileError(path.string() + ": field \"n_qubits\" missing or not an integer");
  }
  const int n = doc["n_qubits"].get<int>();
  if (n < 1 || n > kMaxQubits) {
    throw StateFileError(path.string() + ": field \"n_qubits\" = " + std::to_string(n) +
                         " outside [1, 8]");
  }
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw StateFileError(path.string() + ": field \"amplitudes\" missing or not an array");
  }
  const auto& arr = doc["amplitudes"];
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (static_cast<Eigen::Index>(arr.size()) != dim) {
    throw StateFileError(path.string() + ": field \"amplitudes\" has " +
                         std::to_string(arr.size()) + " entries, expected " +
                         std::to_string(dim));
  }
  CVector amps(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& entry = arr[static_cast<std::size_t>(i)];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw StateFileError(path.string() + ": amplitudes[" + std::to_string(i) +
                           "] must be a [re, im] number pair");
    }
    amps(i) = {entry[0].get<double>(), entry[1].get<double>()};
  }
  if (!amps.allFinite()) {
    throw StateFileError(path.string() + ": field \"amplitudes\" contains a non-finite value");
  }
  const double norm = amps.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw StateFileError(path.string() + ": state norm " + std::to_string(norm) +
                         " deviates from 1 by more than 1e-6 (field \"amplitudes\")");
  }
  amps /= norm;
  return StateVector(n, std::move(amps));
}

void write_state_json(const std::filesystem::path& path, const StateVector& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    const auto& a = psi.amplitudes()(i);
    amps.push_back(json::array({a.real(), a.imag()}));
  }
  json doc;
  doc["n_qubits"] = psi.n_qubits();
  doc["amplitudes"] = std::move(amps);
  std::ofstream out(path);
  if (!out) {
    throw StateFileError("cannot write state file: " + path.string());
  }
  out << doc.dump() << '\n';
}

}  // namespace entmono
