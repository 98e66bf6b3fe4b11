#pragma once

#include <optional>
#include <string_view>

#include "qsim/matrix.hpp"

namespace qsim {

enum class Gate {
  i, x, y, z, h, s, t, u1, rx, ry, rz,   // one qubit
  cx, cz, cu1, swap,                     // two qubits
  cswap, ccx                             // three qubits
};

// A gate plus its angle, present exactly when the gate is parametric.
struct GateSpec {
  Gate kind;
  std::optional<double> angle;
};

int gate_arity(Gate g);
bool gate_is_parametric(Gate g);

// qasm text ("id", "cu1", ...)
std::string_view gate_mnemonic(Gate g);
// inverse of gate_mnemonic; also accepts the legacy alias "iden" for "id"
std::optional<Gate> gate_from_mnemonic(std::string_view s);

// throws if the angle is missing or superfluous
void validate_gate_spec(const GateSpec& spec);

// Matrix in the conventional control-first layout: the FIRST qubit a gate
// is called with indexes the most significant local bit, so cx reads
// |control target>: basis order |00>,|01>,|10>,|11>.
Matrix gate_matrix(const GateSpec& spec);

}  // namespace qsim
