#include "qsim/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qsim/executor.hpp"
#include "qsim/multicontrol.hpp"

namespace qsim {

namespace {

std::vector<Ref> reg_refs(const std::string& reg, int n) {
  std::vector<Ref> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(Ref{reg, i});
  return out;
}

void require_q(int Q, const char* who) {
  if (Q < 2) {
    throw std::invalid_argument(std::string(who) + ": Q must be at least 2");
  }
}

// phase-flips |pattern> via the |-> ancilla: X frame, cascaded NOT, undo
void flip_state(Circuit& qc, const BitSeq& pattern,
                const std::vector<Ref>& main, const Ref& anc,
                const std::vector<Ref>& cascade) {
  x_transformation(qc, main, pattern);
  n_not(qc, main, anc, cascade);
  x_transformation(qc, main, pattern);
}

}  // namespace

BlackboxRecord blackbox_g_deutsch(Circuit& qc, const std::string& qreg,
                                  Rng& rng) {
  const Ref q0{qreg, 0};
  const Ref q1{qreg, 1};
  BlackboxRecord rec;
  rec.variant = "deutsch";
  switch (rng.uniform_int(4)) {
    case 0:  // f(x) = x
      qc.cx(q0, q1);
      rec.label = "f(0,1) -> (0,1)";
      rec.one_states = {{1}};
      break;
    case 1:  // f(x) = NOT x
      qc.x(q0);
      qc.cx(q0, q1);
      qc.x(q0);
      rec.label = "f(0,1) -> (1,0)";
      rec.one_states = {{0}};
      break;
    case 2:  // f = 0
      qc.iden(q0);
      qc.iden(q1);
      rec.label = "f(0,1) -> 0";
      rec.constant = true;
      break;
    default:  // f = 1
      qc.x(q1);
      rec.label = "f(0,1) -> 1";
      rec.constant = true;
      rec.one_states = {{0}, {1}};
      break;
  }
  return rec;
}

BlackboxRecord deutsch(Circuit& qc, const std::string& qreg, Rng& rng) {
  const Ref q0{qreg, 0};
  const Ref q1{qreg, 1};
  qc.h(q0);
  qc.h(q1);
  BlackboxRecord rec = blackbox_g_deutsch(qc, qreg, rng);
  qc.h(q0);
  qc.h(q1);
  return rec;
}

BlackboxRecord blackbox_g_dj(int Q, Circuit& qc, const std::string& qreg,
                             const std::string& anc, Rng& rng,
                             bool balance_odds) {
  require_q(Q, "blackbox_g_dj");
  const std::uint64_t total = std::uint64_t{1} << Q;

  // default odds come out of a single draw: 0 and 1 are the constant
  // cases, everything else balanced
  std::uint64_t r;
  if (balance_odds) {
    r = rng.uniform_int(2) == 0 ? rng.uniform_int(2) : 2;
  } else {
    r = rng.uniform_int(total);
  }

  BlackboxRecord rec;
  rec.variant = "dj";
  if (r == 0) {  // f = 0
    rec.label = "constant";
    rec.constant = true;
    for (int i = 0; i < Q; ++i) qc.iden(Ref{qreg, i});
    qc.iden(Ref{anc, 0});
    return rec;
  }
  if (r == 1) {  // f = 1, a global sign once the ancilla sits in |->
    rec.label = "constant";
    rec.constant = true;
    rec.one_states.reserve(total);
    for (std::uint64_t x = 0; x < total; ++x) {
      rec.one_states.push_back(to_binary(x, total));
    }
    qc.x(Ref{anc, 0});
    return rec;
  }

  rec.label = "balanced";
  const std::vector<Ref> main = reg_refs(qreg, Q);
  std::vector<Ref> cascade;
  if (Q > 2) {
    add_register(qc, RegisterDecl{"nn_anc", Q - 2, RegKind::quantum});
    cascade = reg_refs("nn_anc", Q - 2);
  }
  std::vector<char> chosen(total, 0);
  while (rec.one_states.size() < total / 2) {
    const std::uint64_t pick = rng.uniform_int(total);
    if (chosen[pick]) continue;  // rejected duplicates still consume a draw
    chosen[pick] = 1;
    rec.one_states.push_back(to_binary(pick, total));
  }
  for (const BitSeq& pattern : rec.one_states) {
    flip_state(qc, pattern, main, Ref{anc, 0}, cascade);
  }
  return rec;
}

BlackboxRecord deutsch_jozsa(int Q, Circuit& qc, const std::string& qreg,
                             const std::string& anc, Rng& rng,
                             bool balance_odds) {
  require_q(Q, "deutsch_jozsa");
  for (int i = 0; i < Q; ++i) qc.h(Ref{qreg, i});
  qc.h(Ref{anc, 0});
  BlackboxRecord rec = blackbox_g_dj(Q, qc, qreg, anc, rng, balance_odds);
  qc.h(Ref{anc, 0});
  for (int i = 0; i < Q; ++i) qc.h(Ref{qreg, i});
  return rec;
}

BitSeq blackbox_g_bv(int Q, Circuit& qc, const std::string& qreg,
                     const std::string& anc, Rng& rng) {
  require_q(Q, "blackbox_g_bv");
  const std::uint64_t total = std::uint64_t{1} << Q;
  const BitSeq a = to_binary(rng.uniform_int(total), total);

  const std::vector<Ref> main = reg_refs(qreg, Q);
  std::vector<Ref> cascade;
  if (Q > 2) {
    add_register(qc, RegisterDecl{"nn_anc", Q - 2, RegKind::quantum});
    cascade = reg_refs("nn_anc", Q - 2);
  }
  for (std::uint64_t x = 0; x < total; ++x) {
    const BitSeq pattern = to_binary(x, total);
    if (dot_mod2(pattern, a) == 1) {
      flip_state(qc, pattern, main, Ref{anc, 0}, cascade);
    }
  }
  return a;
}

BitSeq bernstein_vazirani(int Q, Circuit& qc, const std::string& qreg,
                          const std::string& anc, Rng& rng) {
  require_q(Q, "bernstein_vazirani");
  for (int i = 0; i < Q; ++i) qc.h(Ref{qreg, i});
  qc.h(Ref{anc, 0});
  const BitSeq a = blackbox_g_bv(Q, qc, qreg, anc, rng);
  qc.h(Ref{anc, 0});
  for (int i = 0; i < Q; ++i) qc.h(Ref{qreg, i});
  return a;
}

void append_simon_oracle(int Q, Circuit& qc,
                         const std::vector<std::uint64_t>& f_table,
                         const std::string& in_reg,
                         const std::string& out_reg) {
  require_q(Q, "append_simon_oracle");
  const std::uint64_t total = std::uint64_t{1} << Q;
  if (f_table.size() != total) {
    throw std::invalid_argument(
        "append_simon_oracle: f_table must have 2^Q entries");
  }
  for (const std::uint64_t v : f_table) {
    if (v >= total) {
      throw std::invalid_argument(
          "append_simon_oracle: f_table entry out of range");
    }
  }

  add_register(qc, RegisterDecl{"nu_anc", Q - 1, RegKind::quantum});
  const std::vector<Ref> in = reg_refs(in_reg, Q);
  const std::vector<Ref> cascade = reg_refs("nu_anc", Q - 1);
  for (std::uint64_t x = 0; x < total; ++x) {
    const BitSeq out_bits = to_binary(f_table[x], total);
    std::vector<ControlledOp> ops;
    for (int j = 0; j < Q; ++j) {
      if (out_bits[j] == 1) ops.push_back(cop_x(Ref{out_reg, j}));
    }
    if (ops.empty()) continue;  // f(x) = 0 writes nothing
    const BitSeq pattern = to_binary(x, total);
    x_transformation(qc, in, pattern);
    n_control_u(qc, in, cascade, ops);
    x_transformation(qc, in, pattern);
  }
}

BlackboxRecord blackbox_g_simon(int Q, Circuit& qc, const std::string& in_reg,
                                const std::string& out_reg, Rng& rng) {
  require_q(Q, "blackbox_g_simon");
  const std::uint64_t total = std::uint64_t{1} << Q;
  const std::uint64_t s_num = rng.uniform_int(total);

  // one output draw per {x, x^s} pair, without replacement; s = 0 pairs
  // every x with itself and degenerates to a random permutation
  std::vector<std::uint64_t> pool(total);
  std::iota(pool.begin(), pool.end(), std::uint64_t{0});
  std::vector<std::uint64_t> f(total, 0);
  std::vector<char> assigned(total, 0);
  for (std::uint64_t x = 0; x < total; ++x) {
    if (assigned[x]) continue;
    const std::uint64_t idx = rng.uniform_int(pool.size());
    const std::uint64_t out = pool[idx];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    f[x] = out;
    assigned[x] = 1;
    f[x ^ s_num] = out;
    assigned[x ^ s_num] = 1;
  }

  append_simon_oracle(Q, qc, f, in_reg, out_reg);

  BlackboxRecord rec;
  rec.variant = "simon";
  rec.s = to_binary(s_num, total);
  rec.f_table = std::move(f);
  return rec;
}

std::vector<BitSeq> simons_solver(const std::vector<BitSeq>& equations,
                                  int n) {
  if (n < 1) {
    throw std::invalid_argument("simons_solver: n must be at least 1");
  }
  for (const BitSeq& e : equations) {
    if (static_cast<int>(e.size()) != n) {
      throw std::invalid_argument("simons_solver: equation length must be n");
    }
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<BitSeq> out;
  for (std::uint64_t sp = 1; sp < total; ++sp) {
    const BitSeq cand = to_binary(sp, total);
    bool ok = true;
    for (const BitSeq& e : equations) {
      if (dot_mod2(cand, e) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

SimonsClassicalResult simons_classical(const Circuit& qc, int Q, Rng& rng,
                                       int max_runs) {
  require_q(Q, "simons_classical");
  if (max_runs <= 0) max_runs = 64 * static_cast<int>(std::uint64_t{1} << Q);

  SimonsClassicalResult res;
  std::vector<BitSeq> equations;
  while (res.runs < max_runs) {
    ++res.runs;
    const Counts counts = run_counts(qc, 1, rng.next_u64());
    std::string key = counts.begin()->first;
    std::reverse(key.begin(), key.end());  // classical order -> qubit order
    if (std::find(res.measured.begin(), res.measured.end(), key) !=
        res.measured.end()) {
      continue;
    }
    res.measured.push_back(key);
    BitSeq e(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) e[i] = key[i] - '0';
    equations.push_back(std::move(e));
    res.candidates = simons_solver(equations, Q);
    if (res.candidates.size() == 1) {
      res.converged = true;
      break;
    }
    if (res.candidates.empty()) break;  // only s = 0 fits, no point sampling on
  }
  return res;
}

void grover_oracle(Circuit& qc, const BitSeq& marked,
                   const std::vector<Ref>& qubits, const Ref& anc,
                   const std::vector<Ref>& cascade_ancillas) {
  if (marked.size() != qubits.size()) {
    throw std::invalid_argument(
        "grover_oracle: marked length must match qubit count");
  }
  qc.h(anc);
  x_transformation(qc, qubits, marked);
  n_not(qc, qubits, anc, cascade_ancillas);
  x_transformation(qc, qubits, marked);
  qc.h(anc);
}

void grover_diffusion(Circuit& qc, const std::vector<Ref>& qubits,
                      const Ref& anc,
                      const std::vector<Ref>& cascade_ancillas) {
  for (const Ref& q : qubits) qc.h(q);
  grover_oracle(qc, BitSeq(qubits.size(), 0), qubits, anc, cascade_ancillas);
  for (const Ref& q : qubits) qc.h(q);
}

namespace {

template <class T>
std::vector<T> reflect_impl(const std::vector<T>& xs) {
  if (xs.empty()) {
    throw std::invalid_argument("reflect_about_average: empty input");
  }
  const T mean =
      std::accumulate(xs.begin(), xs.end(), T{}) / static_cast<double>(xs.size());
  std::vector<T> out;
  out.reserve(xs.size());
  for (const T& x : xs) out.push_back(2.0 * mean - x);
  return out;
}

}  // namespace

std::vector<double> reflect_about_average(const std::vector<double>& xs) {
  return reflect_impl(xs);
}

std::vector<cplx> reflect_about_average(const std::vector<cplx>& xs) {
  return reflect_impl(xs);
}

std::pair<Circuit, GroverPlan> grover(int Q, const BitSeq& marked) {
  require_q(Q, "grover");
  if (static_cast<int>(marked.size()) != Q) {
    throw std::invalid_argument("grover: marked length must match Q");
  }

  std::vector<RegisterDecl> regs;
  regs.push_back(RegisterDecl{"q", Q, RegKind::quantum});
  regs.push_back(RegisterDecl{"an1", 1, RegKind::quantum});
  if (Q > 2) regs.push_back(RegisterDecl{"an2", Q - 2, RegKind::quantum});
  regs.push_back(RegisterDecl{"c", Q, RegKind::classical});
  Circuit qc = new_circuit(std::move(regs));

  const std::vector<Ref> main = reg_refs("q", Q);
  const Ref anc{"an1", 0};
  const std::vector<Ref> cascade =
      Q > 2 ? reg_refs("an2", Q - 2) : std::vector<Ref>{};

  for (const Ref& q : main) qc.h(q);
  qc.x(anc);

  GroverPlan plan;
  plan.Q = Q;
  plan.marked = marked;
  plan.iterations = static_cast<int>(
      std::llround(std::numbers::pi / 4.0 * std::pow(2.0, Q / 2.0)));
  for (int it = 0; it < plan.iterations; ++it) {
    grover_oracle(qc, marked, main, anc, cascade);
    grover_diffusion(qc, main, anc, cascade);
  }
  return {std::move(qc), plan};
}

std::pair<long long, long long> coin_flip(int flips, Rng& rng) {
  if (flips < 1) {
    throw std::invalid_argument("coin_flip: flips must be at least 1");
  }
  Circuit qc = new_circuit({RegisterDecl{"q", 1, RegKind::quantum},
                            RegisterDecl{"c", 1, RegKind::classical}});
  qc.h(Ref{"q", 0});
  qc.measure(Ref{"q", 0}, Ref{"c", 0});
  const Counts counts = run_counts(qc, flips, rng.next_u64());
  const auto it0 = counts.find("0");
  const auto it1 = counts.find("1");
  return {it0 == counts.end() ? 0 : it0->second,
          it1 == counts.end() ? 0 : it1->second};
}

}  // namespace qsim
