#include "qsim/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {

Statevector zero_state(int num_qubits) {
  if (num_qubits < 1)
    throw std::invalid_argument("zero_state: need at least one qubit");
  if (num_qubits > kMaxQubits)
    throw std::invalid_argument("zero_state: exceeds qubit capacity");
  Statevector st;
  st.num_qubits = num_qubits;
  st.amps.assign(std::size_t(1) << num_qubits, cplx{});
  st.amps[0] = 1.0;
  return st;
}

std::size_t basis_index(const BitSeq& bits) {
  if (bits.size() > kMaxQubits)
    throw std::invalid_argument("basis_index: exceeds qubit capacity");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1)
      throw std::invalid_argument("basis_index: entries must be 0 or 1");
    idx |= std::size_t(bits[i]) << i;
  }
  return idx;
}

double state_norm(const Statevector& st) {
  double s = 0;
  for (const cplx& a : st.amps) s += std::norm(a);
  return std::sqrt(s);
}

void apply_unitary(Statevector& st, const Matrix& m,
                   const std::vector<int>& targets) {
  int k = int(targets.size());
  if (k < 1 || k > st.num_qubits)
    throw std::invalid_argument("apply_unitary: bad target count");
  if (m.dim != (1 << k))
    throw std::invalid_argument("apply_unitary: matrix size does not match target count");
  std::size_t tmask = 0;
  for (int t : targets) {
    if (t < 0 || t >= st.num_qubits)
      throw std::invalid_argument("apply_unitary: target out of range");
    std::size_t bit = std::size_t(1) << t;
    if (tmask & bit)
      throw std::invalid_argument("apply_unitary: duplicate target");
    tmask |= bit;
  }
  if (!is_unitary(m, 1e-10))
    throw std::invalid_argument("apply_unitary: matrix is not unitary");

  // scatter offsets for each local index
  int dim = m.dim;
  std::vector<std::size_t> offs(dim);
  for (int l = 0; l < dim; ++l) {
    std::size_t o = 0;
    for (int j = 0; j < k; ++j)
      if ((l >> j) & 1) o |= std::size_t(1) << targets[j];
    offs[l] = o;
  }

  std::vector<cplx> in(dim), out(dim);
  std::size_t n = st.amps.size();
  for (std::size_t base = 0; base < n; ++base) {
    if (base & tmask) continue;
    for (int l = 0; l < dim; ++l) in[l] = st.amps[base | offs[l]];
    for (int r = 0; r < dim; ++r) {
      cplx acc{};
      for (int c = 0; c < dim; ++c) acc += m.at(r, c) * in[c];
      out[r] = acc;
    }
    for (int l = 0; l < dim; ++l) st.amps[base | offs[l]] = out[l];
  }
}

bool global_phase_equiv(const Statevector& a, const Statevector& b,
                        double tol) {
  if (a.num_qubits != b.num_qubits || a.amps.size() != b.amps.size())
    throw std::invalid_argument("global_phase_equiv: dimension mismatch");
  // anchor the phase at b's largest amplitude
  std::size_t anchor = 0;
  double best = -1;
  for (std::size_t i = 0; i < b.amps.size(); ++i) {
    double v = std::abs(b.amps[i]);
    if (v > best) { best = v; anchor = i; }
  }
  if (best <= tol) {
    for (const cplx& v : a.amps)
      if (std::abs(v) > tol) return false;
    return true;
  }
  cplx phase = a.amps[anchor] / b.amps[anchor];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < a.amps.size(); ++i)
    if (std::abs(a.amps[i] - phase * b.amps[i]) > tol) return false;
  return true;
}

}  // namespace qsim
