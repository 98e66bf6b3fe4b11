#include "qsim/qft.hpp"

#include <bit>
#include <numbers>
#include <stdexcept>

#include "qsim/algorithms.hpp"
#include "qsim/executor.hpp"

namespace qsim {

namespace {

double phase_for(QftMode mode, int k, int j) {
  if (mode == QftMode::fixed_angle)
    return 2.0 * std::numbers::pi / double(std::uint64_t(1) << (k + 1));
  return std::numbers::pi / double(std::uint64_t(1) << (k - j));
}

}  // namespace

void qft(Circuit& qc, const std::vector<Ref>& qubits, QftMode mode) {
  int n = int(qubits.size());
  for (int j = 0; j < n; ++j) {
    qc.h(qubits[j]);
    for (int k = j + 1; k < n; ++k)
      qc.cu1(phase_for(mode, k, j), qubits[k], qubits[j]);
  }
}

void qft_dgr(Circuit& qc, const std::vector<Ref>& qubits, QftMode mode) {
  int n = int(qubits.size());
  for (int j = n - 1; j >= 0; --j) {
    for (int k = n - 1; k > j; --k)
      qc.cu1(-phase_for(mode, k, j), qubits[k], qubits[j]);
    qc.h(qubits[j]);
  }
}

namespace {

// e^{2 pi i num/den} with exact values on the axes, so small transforms
// stay integer-valued
cplx unit_root(std::uint64_t num, std::uint64_t den) {
  num %= den;
  if ((4 * num) % den == 0) {
    switch ((4 * num) / den) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * double(num) / double(den));
}

}  // namespace

Matrix dft_matrix(std::size_t size, bool normalized) {
  if (size < 2 || !std::has_single_bit(size))
    throw std::invalid_argument("dft_matrix: size must be a power of two >= 2");
  Matrix m(static_cast<int>(size));
  double scale = normalized ? 1.0 / std::sqrt(double(size)) : 1.0;
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t j = 0; j < size; ++j)
      m.at(int(k), int(j)) = scale * unit_root(k * j, size);
  return m;
}

Statevector qft_grover_demo(const BitSeq& marked) {
  if (marked.size() != 2)
    throw std::invalid_argument("qft_grover_demo: marked pattern must have length 2");
  Circuit qc = new_circuit({{"q", 2, RegKind::quantum},
                            {"an1", 1, RegKind::quantum}});
  std::vector<Ref> q{{"q", 0}, {"q", 1}};
  Ref anc{"an1", 0};

  qc.x(anc);
  qft(qc, q);
  grover_oracle(qc, marked, q, anc, {});
  qft(qc, q);
  grover_oracle(qc, BitSeq{0, 0}, q, anc, {});
  qft_dgr(qc, q);
  return run_statevector(qc);
}

}  // namespace qsim
