#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qsim/circuit.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace qsim {

// raw counts key: one char per classical bit, classical index 0 rightmost
using Counts = std::map<std::string, long long>;
using Distribution = std::map<std::string, double>;

inline constexpr int kDefaultShots = 1024;

// Runs all gates; rejects circuits containing measurements.  Qubits are
// laid out in quantum-register declaration order, register offset 0 first.
Statevector run_statevector(const Circuit& qc);

// Samples `shots` terminal measurements.  Requires exactly one classical
// register and no gate acting on an already-measured qubit.  Unmeasured
// classical bits read 0.
Counts run_counts(const Circuit& qc, int shots = kDefaultShots,
                  std::uint64_t seed = entropy_seed());

// exact per-key probabilities for the same measurement model
Distribution joint_distribution(const Circuit& qc);

}  // namespace qsim
