#include "qsim/circuit.hpp"

namespace qsim {

static bool valid_reg_name(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char ch : s)
    if (!((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_'))
      return false;
  return true;
}

static const RegisterDecl* find_reg(const Circuit& qc, const std::string& name) {
  for (const auto& r : qc.qregs)
    if (r.name == name) return &r;
  for (const auto& r : qc.cregs)
    if (r.name == name) return &r;
  return nullptr;
}

static const RegisterDecl& resolve(const Circuit& qc, const Ref& ref,
                                   RegKind want) {
  const RegisterDecl* r = find_reg(qc, ref.reg);
  if (!r || r->kind != want)
    throw std::invalid_argument("no such " +
                                std::string(want == RegKind::quantum
                                                ? "quantum"
                                                : "classical") +
                                " register '" + ref.reg + "'");
  if (ref.idx < 0 || ref.idx >= r->size)
    throw std::invalid_argument("index " + std::to_string(ref.idx) +
                                " out of range for register '" + ref.reg + "'");
  return *r;
}

static void validate_instruction(const Circuit& qc, const Instruction& inst) {
  if (inst.kind == InstrKind::measure) {
    if (inst.qubits.size() != 1)
      throw std::invalid_argument("measure takes one qubit");
    resolve(qc, inst.qubits[0], RegKind::quantum);
    resolve(qc, inst.clbit, RegKind::classical);
    return;
  }
  validate_gate_spec(inst.spec);
  if (int(inst.qubits.size()) != gate_arity(inst.spec.kind))
    throw std::invalid_argument("gate " +
                                std::string(gate_mnemonic(inst.spec.kind)) +
                                " takes " +
                                std::to_string(gate_arity(inst.spec.kind)) +
                                " qubits");
  for (const Ref& r : inst.qubits) resolve(qc, r, RegKind::quantum);
}

void add_register(Circuit& qc, RegisterDecl reg) {
  if (!valid_reg_name(reg.name))
    throw std::invalid_argument("bad register name '" + reg.name + "'");
  if (reg.size < 1)
    throw std::invalid_argument("register '" + reg.name +
                                "' must hold at least one bit");
  if (find_reg(qc, reg.name))
    throw std::invalid_argument("register '" + reg.name + "' already exists");
  (reg.kind == RegKind::quantum ? qc.qregs : qc.cregs).push_back(std::move(reg));
}

Circuit new_circuit(std::vector<RegisterDecl> regs) {
  Circuit qc;
  for (auto& r : regs) add_register(qc, std::move(r));
  return qc;
}

void append_gate(Circuit& qc, GateSpec spec, std::vector<Ref> qubits) {
  Instruction inst{InstrKind::gate, spec, std::move(qubits), {}};
  validate_instruction(qc, inst);
  qc.instrs.push_back(std::move(inst));
}

void append_measure(Circuit& qc, Ref qubit, Ref clbit) {
  Instruction inst{InstrKind::measure, {Gate::i, {}}, {std::move(qubit)},
                   std::move(clbit)};
  validate_instruction(qc, inst);
  qc.instrs.push_back(std::move(inst));
}

void insert_at(Circuit& qc, std::size_t pos, Instruction inst) {
  if (pos > qc.instrs.size())
    throw std::out_of_range("insert_at: position out of range");
  validate_instruction(qc, inst);
  qc.instrs.insert(qc.instrs.begin() + pos, std::move(inst));
}

void delete_at(Circuit& qc, std::size_t pos) {
  if (pos >= qc.instrs.size())
    throw std::out_of_range("delete_at: position out of range");
  qc.instrs.erase(qc.instrs.begin() + pos);
}

static void merge_registers(Circuit& out, const Circuit& b) {
  for (const auto& regs : {&b.qregs, &b.cregs})
    for (const auto& r : *regs) {
      const RegisterDecl* have = find_reg(out, r.name);
      if (!have) {
        add_register(out, r);
      } else if (have->size != r.size || have->kind != r.kind) {
        throw std::invalid_argument("register '" + r.name +
                                    "' differs between circuits");
      }
    }
}

Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  merge_registers(out, b);
  out.instrs.insert(out.instrs.end(), b.instrs.begin(), b.instrs.end());
  return out;
}

void extend(Circuit& a, const Circuit& b) {
  merge_registers(a, b);
  a.instrs.insert(a.instrs.end(), b.instrs.begin(), b.instrs.end());
}

void Circuit::iden(const Ref& q) { append_gate(*this, {Gate::i, {}}, {q}); }
void Circuit::x(const Ref& q) { append_gate(*this, {Gate::x, {}}, {q}); }
void Circuit::y(const Ref& q) { append_gate(*this, {Gate::y, {}}, {q}); }
void Circuit::z(const Ref& q) { append_gate(*this, {Gate::z, {}}, {q}); }
void Circuit::h(const Ref& q) { append_gate(*this, {Gate::h, {}}, {q}); }
void Circuit::s(const Ref& q) { append_gate(*this, {Gate::s, {}}, {q}); }
void Circuit::t(const Ref& q) { append_gate(*this, {Gate::t, {}}, {q}); }
void Circuit::u1(double theta, const Ref& q) {
  append_gate(*this, {Gate::u1, theta}, {q});
}
void Circuit::rx(double theta, const Ref& q) {
  append_gate(*this, {Gate::rx, theta}, {q});
}
void Circuit::ry(double theta, const Ref& q) {
  append_gate(*this, {Gate::ry, theta}, {q});
}
void Circuit::rz(double theta, const Ref& q) {
  append_gate(*this, {Gate::rz, theta}, {q});
}
void Circuit::cx(const Ref& ctl, const Ref& tgt) {
  append_gate(*this, {Gate::cx, {}}, {ctl, tgt});
}
void Circuit::cz(const Ref& ctl, const Ref& tgt) {
  append_gate(*this, {Gate::cz, {}}, {ctl, tgt});
}
void Circuit::cu1(double theta, const Ref& ctl, const Ref& tgt) {
  append_gate(*this, {Gate::cu1, theta}, {ctl, tgt});
}
void Circuit::swap(const Ref& a, const Ref& b) {
  append_gate(*this, {Gate::swap, {}}, {a, b});
}
void Circuit::cswap(const Ref& ctl, const Ref& a, const Ref& b) {
  append_gate(*this, {Gate::cswap, {}}, {ctl, a, b});
}
void Circuit::ccx(const Ref& c1, const Ref& c2, const Ref& tgt) {
  append_gate(*this, {Gate::ccx, {}}, {c1, c2, tgt});
}
void Circuit::measure(const Ref& q, const Ref& c) {
  append_measure(*this, q, c);
}

}  // namespace qsim
