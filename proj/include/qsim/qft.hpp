#pragma once

#include "qsim/bits.hpp"
#include "qsim/circuit.hpp"
#include "qsim/state.hpp"

namespace qsim {

// Which controlled-phase table the transform uses.
//
// standard:     the textbook transform; the phase between control k and
//               target j is pi / 2^(k-j), so it depends on the distance.
// fixed_angle:  the phase for control k is 2*pi / 2^(k+1) regardless of
//               the target.  The two agree up to 2 qubits and diverge
//               from 3 on.
enum class QftMode { standard, fixed_angle };

void qft(Circuit& qc, const std::vector<Ref>& qubits,
         QftMode mode = QftMode::standard);

// exact reverse gate order with negated phases; inverts qft
void qft_dgr(Circuit& qc, const std::vector<Ref>& qubits,
             QftMode mode = QftMode::standard);

// entry (k, j) = exp(2*pi*i*k*j / size); rows scaled by 1/sqrt(size) when
// normalized.  size must be a power of two >= 2.
//
// The standard-mode circuit equals this matrix composed with the index
// bit-reversal permutation R: applying qft to basis state |e_k> yields
// column R(k) of the normalized matrix.
Matrix dft_matrix(std::size_t size, bool normalized);

// Two-qubit search walkthrough driven by the transform instead of
// Hadamards: prepare with qft, flip `marked`, qft again, flip |00>, then
// invert with qft_dgr.  Returns the final statevector (main pair plus one
// ancilla), which is the marked basis state up to sign.
Statevector qft_grover_demo(const BitSeq& marked);

}  // namespace qsim
