#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsim/gates.hpp"

namespace qsim {

enum class RegKind { quantum, classical };

struct RegisterDecl {
  std::string name;   // [a-z][a-z0-9_]*
  int size = 0;       // >= 1
  RegKind kind = RegKind::quantum;
};

// A bit reference, register-qualified so circuits can merge without index
// remapping.
struct Ref {
  std::string reg;
  int idx = 0;
  bool operator==(const Ref&) const = default;
};

enum class InstrKind { gate, measure };

struct Instruction {
  InstrKind kind = InstrKind::gate;
  GateSpec spec{Gate::i, {}};     // gate only
  std::vector<Ref> qubits;        // gate: arity refs; measure: one ref
  Ref clbit;                      // measure only
};

// Ordered instruction list over named registers.  Instructions are
// validated when appended or inserted, never re-checked later, so the
// register set may only grow.
struct Circuit {
  std::vector<RegisterDecl> qregs;
  std::vector<RegisterDecl> cregs;
  std::vector<Instruction> instrs;

  // gate shorthands, matching the qasm mnemonics
  void iden(const Ref& q);
  void x(const Ref& q);
  void y(const Ref& q);
  void z(const Ref& q);
  void h(const Ref& q);
  void s(const Ref& q);
  void t(const Ref& q);
  void u1(double theta, const Ref& q);
  void rx(double theta, const Ref& q);
  void ry(double theta, const Ref& q);
  void rz(double theta, const Ref& q);
  void cx(const Ref& ctl, const Ref& tgt);
  void cz(const Ref& ctl, const Ref& tgt);
  void cu1(double theta, const Ref& ctl, const Ref& tgt);
  void swap(const Ref& a, const Ref& b);
  void cswap(const Ref& ctl, const Ref& a, const Ref& b);
  void ccx(const Ref& c1, const Ref& c2, const Ref& tgt);
  void measure(const Ref& q, const Ref& c);
};

Circuit new_circuit(std::vector<RegisterDecl> regs);
void add_register(Circuit& qc, RegisterDecl reg);

void append_gate(Circuit& qc, GateSpec spec, std::vector<Ref> qubits);
void append_measure(Circuit& qc, Ref qubit, Ref clbit);
void insert_at(Circuit& qc, std::size_t pos, Instruction inst);
void delete_at(Circuit& qc, std::size_t pos);

// union of registers (same-named registers must agree in size and kind),
// a's instructions then b's
Circuit concat(const Circuit& a, const Circuit& b);
void extend(Circuit& a, const Circuit& b);

// qasm text: header, qregs, cregs, instructions; one statement per line
std::string emit_qasm(const Circuit& qc);

struct QasmError : std::runtime_error {
  int line;
  QasmError(int line_, const std::string& msg)
      : std::runtime_error("qasm line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

// accepts exactly the statements emit_qasm produces, plus "//" comments,
// flexible whitespace, and the "iden" alias
Circuit parse_qasm(std::string_view text);

}  // namespace qsim
