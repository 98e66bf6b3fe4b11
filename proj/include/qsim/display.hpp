#pragma once

#include <map>
#include <optional>
#include <string>

#include "qsim/state.hpp"

namespace qsim {

// Rendering options for format_wavefunction.  systems splits the ket into
// chunks of the given sizes ("|00>|1>"); show_systems (0/1 per chunk)
// hides chunks, which may leave duplicate visible kets.
struct DisplayOptions {
  int precision = 5;
  bool column = false;
  std::optional<std::vector<int>> systems;
  std::optional<std::vector<int>> show_systems;
};

// str()-style shortest decimal that round-trips, always with a fractional
// part or exponent ("0.5", "1.0", "1e-05")
std::string py_float_repr(double v);

// decimal rounding of the exact binary value, ties to even; -0 becomes 0
double round_half_even(double v, int decimals);

// "0.5+0.5j" | "-0.70711" | "1.0j" | "" when both parts round to zero
std::string format_amplitude(cplx z, int precision);

// Nonzero terms "<amp> |<ket>>" in ascending amplitude-index order, qubit 0
// leftmost, joined by two spaces (or newlines when column is set).
std::string format_wavefunction(const Statevector& st,
                                const DisplayOptions& opts = {});

// Counts entries "<count>|<ket>>" with the key reversed so classical index
// 0 prints leftmost; count descending, ties by ket ascending.
std::string format_counts(const std::map<std::string, long long>& counts,
                          bool column = false);

}  // namespace qsim
