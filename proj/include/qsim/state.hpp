#pragma once

#include "qsim/bits.hpp"
#include "qsim/matrix.hpp"

namespace qsim {

// Dense statevector.  Qubit q is bit q of the amplitude index, so the
// one-qubit-0-set state |100> of a 3 qubit system sits at amps[1].  Kets
// are rendered with qubit 0 leftmost throughout.
struct Statevector {
  int num_qubits = 0;
  std::vector<cplx> amps;
};

// hard cap: 2^24 amplitudes (256 MiB) keeps accidental blowups out
inline constexpr int kMaxQubits = 24;

Statevector zero_state(int num_qubits);

// amplitude index of the basis state where qubit i holds bits[i]
std::size_t basis_index(const BitSeq& bits);

double state_norm(const Statevector& st);

// Applies a 2^k x 2^k unitary to the listed qubits.  targets[0] carries
// the LEAST significant bit of the matrix's local index; callers holding
// control-first matrices (first qubit = most significant) pass the qubit
// list reversed.
void apply_unitary(Statevector& st, const Matrix& m,
                   const std::vector<int>& targets);

// true if a == e^{i phi} b for a single phase, within tol per amplitude
bool global_phase_equiv(const Statevector& a, const Statevector& b,
                        double tol);

}  // namespace qsim
