#include "qsim/executor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsim {

namespace {

int total_qubits(const Circuit& qc) {
  int n = 0;
  for (const auto& r : qc.qregs) n += r.size;
  return n;
}

int qubit_offset(const Circuit& qc, const Ref& ref) {
  int base = 0;
  for (const auto& r : qc.qregs) {
    if (r.name == ref.reg) return base + ref.idx;
    base += r.size;
  }
  throw std::invalid_argument("no such quantum register '" + ref.reg + "'");
}

Statevector run_gates(const Circuit& qc, bool allow_measured,
                      std::vector<std::pair<int, int>>* measures) {
  Statevector st = zero_state(total_qubits(qc));
  std::vector<char> locked(st.amps.size() ? std::size_t(st.num_qubits) : 0, 0);
  for (const auto& inst : qc.instrs) {
    if (inst.kind == InstrKind::measure) {
      if (!allow_measured)
        throw std::invalid_argument(
            "run_statevector: circuit contains a measurement");
      int q = qubit_offset(qc, inst.qubits[0]);
      locked[std::size_t(q)] = 1;
      if (measures) measures->push_back({q, inst.clbit.idx});
      continue;
    }
    // first listed qubit carries the most significant local bit, while
    // apply_unitary wants the least significant first
    std::vector<int> targets;
    targets.reserve(inst.qubits.size());
    for (auto it = inst.qubits.rbegin(); it != inst.qubits.rend(); ++it) {
      int q = qubit_offset(qc, *it);
      if (locked[std::size_t(q)])
        throw std::invalid_argument("gate applied to qubit after measurement");
      targets.push_back(q);
    }
    apply_unitary(st, gate_matrix(inst.spec), targets);
  }
  return st;
}

// per-key probabilities of the terminal measurement
Distribution distribution(const Circuit& qc) {
  if (qc.cregs.size() != 1)
    throw std::invalid_argument(
        "measurement requires exactly one classical register");
  std::vector<std::pair<int, int>> measures;
  Statevector st = run_gates(qc, true, &measures);
  int bits = qc.cregs[0].size;

  Distribution dist;
  for (std::size_t i = 0; i < st.amps.size(); ++i) {
    double p = std::norm(st.amps[i]);
    if (p == 0.0) continue;
    std::string key(std::size_t(bits), '0');
    for (auto [q, c] : measures)
      key[std::size_t(bits - 1 - c)] = char('0' + ((i >> q) & 1));
    dist[key] += p;
  }
  return dist;
}

}  // namespace

Statevector run_statevector(const Circuit& qc) {
  return run_gates(qc, false, nullptr);
}

Counts run_counts(const Circuit& qc, int shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("run_counts: shots must be >= 1");
  Distribution dist = distribution(qc);

  // cumulative walk; the final slot absorbs float drift
  std::vector<std::pair<double, const std::string*>> cum;
  cum.reserve(dist.size());
  double acc = 0;
  for (const auto& [key, p] : dist) {
    acc += p;
    cum.push_back({acc, &key});
  }

  Rng rng(seed);
  Counts counts;
  for (int s = 0; s < shots; ++s) {
    double u = rng.next_double() * acc;
    auto it = std::lower_bound(
        cum.begin(), cum.end(), u,
        [](const auto& e, double v) { return e.first <= v; });
    if (it == cum.end()) --it;
    ++counts[*it->second];
  }
  return counts;
}

Distribution joint_distribution(const Circuit& qc) { return distribution(qc); }

}  // namespace qsim
