#pragma once

#include "qsim/bits.hpp"
#include "qsim/circuit.hpp"

namespace qsim {

// X on every qubit whose pattern bit is 0.  Applying it around a gate that
// triggers on all-ones retargets the gate to `pattern`; it is its own
// inverse.
void x_transformation(Circuit& qc, const std::vector<Ref>& qubits,
                      const BitSeq& pattern);

// X on target when all controls are 1, Toffoli-cascaded through borrowed
// ancillas.  Needs max(n-2, 0) ancillas for n controls; they must start
// and end at |0> and are returned clean.
void n_not(Circuit& qc, const std::vector<Ref>& controls, const Ref& target,
           const std::vector<Ref>& ancillas);

// One singly-controlled operation to run under a combined control.
struct ControlledOp {
  enum class Kind { x, z, phase, swap };
  Kind kind;
  Ref t1;
  Ref t2;             // swap only
  double angle = 0;   // phase only
};

ControlledOp cop_x(Ref t);
ControlledOp cop_z(Ref t);
ControlledOp cop_phase(double angle, Ref t);
ControlledOp cop_swap(Ref a, Ref b);

// Applies every op controlled on the AND of all controls: the cascade
// folds the controls into one ancilla, applies the ops singly-controlled
// from it, then uncomputes.  Needs n-1 ancillas for n >= 2 controls.
void n_control_u(Circuit& qc, const std::vector<Ref>& controls,
                 const std::vector<Ref>& ancillas,
                 const std::vector<ControlledOp>& ops);

}  // namespace qsim
