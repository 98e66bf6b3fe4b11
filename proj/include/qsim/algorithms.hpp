#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsim/bits.hpp"
#include "qsim/circuit.hpp"
#include "qsim/rng.hpp"

namespace qsim {

// What a randomly drawn oracle actually hides, for checking conclusions
// and for the CLI's reveal flag.  Fields beyond `variant` and `label` are
// filled per variant and left empty otherwise.
struct BlackboxRecord {
  std::string variant;             // "deutsch" | "dj" | "bv" | "simon"
  std::string label;               // deutsch: f description; dj: "constant"/"balanced"
  bool constant = false;           // deutsch/dj convenience flag
  std::vector<BitSeq> one_states;  // inputs f maps to 1, in draw order
  BitSeq a;                        // bv: hidden dot-product string
  BitSeq s;                        // simon: hidden period, possibly all zero
  std::vector<std::uint64_t> f_table;  // simon: f_table[x], numbers read like kets
};

// ---- Deutsch (1 input qubit + 1 ancilla) -------------------------------
// Draws one of the four one-bit functions (uniform, one uniform_int(4))
// and appends a circuit computing |x>|y ^ f(x)>.  qreg[0] is the input,
// qreg[1] the ancilla.
BlackboxRecord blackbox_g_deutsch(Circuit& qc, const std::string& qreg,
                                  Rng& rng);
// Hadamard sandwich around the blackbox.  Call with qreg[1] flipped to |1>;
// measuring qubit 0 afterwards gives 0 for constant f, 1 for balanced f.
BlackboxRecord deutsch(Circuit& qc, const std::string& qreg, Rng& rng);

// ---- Deutsch-Jozsa (Q input qubits + 1 ancilla) ------------------------
// Draws r uniform over [0, 2^Q): r = 0 appends identities (f = 0), r = 1
// appends X on the ancilla line (f = 1), anything else picks 2^(Q-1)
// distinct inputs (rejection draws) and phase-flips each via the ancilla.
// With balance_odds the first draw is a fair constant/balanced coin and
// constant cases split on a second draw.  Balanced oracles cascade through
// a fresh "nn_anc" register (Q-2 qubits, allocated here when Q > 2).
// Expects the ancilla in |-> (X then H applied by the caller).
BlackboxRecord blackbox_g_dj(int Q, Circuit& qc, const std::string& qreg,
                             const std::string& anc, Rng& rng,
                             bool balance_odds = false);
// H on main+ancilla, blackbox, H again.  Afterwards the main register is
// |0..0> exactly when f is constant.  Caller prepares |0..0>|1>.
BlackboxRecord deutsch_jozsa(int Q, Circuit& qc, const std::string& qreg,
                             const std::string& anc, Rng& rng,
                             bool balance_odds = false);

// ---- Bernstein-Vazirani (Q input qubits + 1 ancilla) -------------------
// Draws a uniformly (possibly all zero) and appends f(x) = a.x mod 2 as
// phase flips on every x with odd overlap.  Allocates "nn_anc" (Q-2
// qubits) when Q > 2 whether or not a needs it, so the register layout
// does not leak a.  Same ancilla convention as blackbox_g_dj.
BitSeq blackbox_g_bv(int Q, Circuit& qc, const std::string& qreg,
                     const std::string& anc, Rng& rng);
// Full driver; the main register ends in |a> (up to global phase).
BitSeq bernstein_vazirani(int Q, Circuit& qc, const std::string& qreg,
                          const std::string& anc, Rng& rng);

// ---- Simon (Q input qubits + Q output qubits) --------------------------
// Appends the oracle |x>|0> -> |x>|f(x)> for an explicit table.  f_table
// must have 2^Q entries below 2^Q; bit patterns are read MSB-first like
// kets (to_binary).  Allocates a "nu_anc" register of Q-1 cascade qubits.
void append_simon_oracle(int Q, Circuit& qc,
                         const std::vector<std::uint64_t>& f_table,
                         const std::string& in_reg,
                         const std::string& out_reg);
// Draws s uniform over [0, 2^Q), then assigns each {x, x^s} pair one
// output drawn without replacement (s = 0 degenerates to a random
// permutation), and appends the oracle.  Returns variant "simon" with s
// and f_table set.
BlackboxRecord blackbox_g_simon(int Q, Circuit& qc, const std::string& in_reg,
                                const std::string& out_reg, Rng& rng);

// all nonzero s' (ascending by number) with s'.e = 0 mod 2 for every
// equation; each equation must have length n
std::vector<BitSeq> simons_solver(const std::vector<BitSeq>& equations,
                                  int n);

struct SimonsClassicalResult {
  std::vector<BitSeq> candidates;     // solver output at the last update
  std::vector<std::string> measured;  // distinct keys, qubit order, first seen first
  int runs = 0;
  bool converged = false;             // exactly one candidate survived
};
// Repeated single-shot runs of the measured Simon circuit; every distinct
// result (reversed into qubit order) becomes an equation and the solver
// reruns.  Stops at exactly one candidate, or when the candidate set goes
// empty (only s = 0 fits; converged stays false), or after max_runs
// (default 64 * 2^Q).  Per-run seeds come from rng.next_u64().
SimonsClassicalResult simons_classical(const Circuit& qc, int Q, Rng& rng,
                                       int max_runs = 0);

// ---- Grover -------------------------------------------------------------
// Flips the sign of the marked basis state: Hadamard the phase ancilla,
// X-transform, multi-controlled X onto it, undo.  The ancilla must be |1>
// coming in and returns to |1>.  Needs max(Q-2, 0) cascade ancillas.
void grover_oracle(Circuit& qc, const BitSeq& marked,
                   const std::vector<Ref>& qubits, const Ref& anc,
                   const std::vector<Ref>& cascade_ancillas);
// oracle on the all-zeros pattern inside an H sandwich; acts on the main
// system as minus the reflection about the uniform state, i.e. every
// amplitude maps to -(2*mean - x_i)
void grover_diffusion(Circuit& qc, const std::vector<Ref>& qubits,
                      const Ref& anc, const std::vector<Ref>& cascade_ancillas);

// x_i -> 2*mean - x_i
std::vector<double> reflect_about_average(const std::vector<double>& xs);
std::vector<cplx> reflect_about_average(const std::vector<cplx>& xs);

struct GroverPlan {
  int Q = 0;
  BitSeq marked;
  int iterations = 0;  // round(pi/4 * 2^(Q/2))
};
// Unmeasured search circuit: registers q[Q], an1[1], an2[Q-2] (Q > 2) and
// a classical c[Q] for the caller's measurement; uniform prep plus
// `iterations` oracle+diffusion rounds.
std::pair<Circuit, GroverPlan> grover(int Q, const BitSeq& marked);

// (heads, tails) from `flips` shots of an H + measure circuit, seeded
// from rng.next_u64()
std::pair<long long, long long> coin_flip(int flips, Rng& rng);

}  // namespace qsim
