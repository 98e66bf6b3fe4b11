// Command-line front-end: run/emit qasm files and walk through the bundled
// algorithm demos with deterministic seeds.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qsim/algorithms.hpp"
#include "qsim/display.hpp"
#include "qsim/executor.hpp"
#include "qsim/qft.hpp"

using namespace qsim;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BitSeq parse_bits(const std::string& text) {
  BitSeq out;
  out.reserve(text.size());
  for (const char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("marked must be a string of 0s and 1s");
    }
    out.push_back(c - '0');
  }
  return out;
}

std::string ket_str(const BitSeq& bits) {
  std::string s = "|";
  for (const int b : bits) s += static_cast<char>('0' + b);
  return s + ">";
}

std::string seq_list_str(const std::vector<BitSeq>& seqs) {
  std::string s = "[";
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (i) s += ", ";
    s += bitseq_str(seqs[i]);
  }
  return s + "]";
}

std::string quoted_list_str(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ", ";
    s += "'" + items[i] + "'";
  }
  return s + "]";
}

std::vector<Ref> reg_refs(const std::string& reg, int n) {
  std::vector<Ref> out;
  for (int i = 0; i < n; ++i) out.push_back(Ref{reg, i});
  return out;
}

int total_qubits(const Circuit& qc) {
  int total = 0;
  for (const RegisterDecl& r : qc.qregs) total += r.size;
  return total;
}

struct DemoOpts {
  std::string name;
  int qubits = 3;
  std::string marked;
  int shots = kDefaultShots;
  int flips = 100;
  std::optional<std::uint64_t> seed;
  int precision = 5;
  bool column = false;
  bool reveal = false;
  bool fixed_angle = false;
  bool balance_odds = false;
};

void show_state(const Circuit& qc, const DemoOpts& o,
                std::optional<std::vector<int>> systems = std::nullopt,
                std::optional<std::vector<int>> show = std::nullopt,
                bool force_column = false) {
  DisplayOptions opts;
  opts.precision = o.precision;
  opts.column = o.column || force_column;
  opts.systems = std::move(systems);
  opts.show_systems = std::move(show);
  std::cout << format_wavefunction(run_statevector(qc), opts) << "\n";
}

int demo_coin(const DemoOpts& o, Rng& rng) {
  const auto [heads, tails] = coin_flip(o.flips, rng);
  std::cout << "Alice calls heads, Bob calls tails, " << o.flips
            << " flips\n";
  std::cout << "Final Score -- Alice: " << heads << " Bob: " << tails
            << "\n";
  return 0;
}

int demo_deutsch(const DemoOpts& o, Rng& rng) {
  Circuit qc = new_circuit({RegisterDecl{"q", 2, RegKind::quantum},
                            RegisterDecl{"c", 2, RegKind::classical}});
  qc.iden(Ref{"q", 0});
  qc.x(Ref{"q", 1});
  const BlackboxRecord rec = deutsch(qc, "q", rng);
  qc.measure(Ref{"q", 0}, Ref{"c", 0});
  qc.measure(Ref{"q", 1}, Ref{"c", 1});

  const Counts m = run_counts(qc, 1, rng.next_u64());
  const std::string& key = m.begin()->first;  // classical index 0 rightmost
  if (key[1] == '0') {
    std::cout << "Measured state |0> therefore f is constant!\n";
  } else {
    std::cout << "Measured state |1> therefore f is balanced!\n";
  }
  if (o.reveal) std::cout << "\nhidden f: " << rec.label << "\n";
  return 0;
}

int demo_dj(const DemoOpts& o, Rng& rng) {
  const int Q = o.qubits;
  Circuit qc = new_circuit({RegisterDecl{"q", Q, RegKind::quantum},
                            RegisterDecl{"anc", 1, RegKind::quantum},
                            RegisterDecl{"c", Q, RegKind::classical}});
  for (int i = 0; i < Q; ++i) qc.h(Ref{"q", i});
  qc.x(Ref{"anc", 0});

  std::cout << "___ Before g ___\n";
  show_state(qc, o, {{Q, 1}}, {{1, 0}});

  qc.h(Ref{"anc", 0});
  const BlackboxRecord rec =
      blackbox_g_dj(Q, qc, "q", "anc", rng, o.balance_odds);
  qc.h(Ref{"anc", 0});

  std::cout << "\n___ After g      f type: " << rec.label << " ___\n";
  show_state(qc, o, {{Q, total_qubits(qc) - Q}}, {{1, 0}});

  for (int i = 0; i < Q; ++i) qc.h(Ref{"q", i});
  std::cout << "\n___ After H^" << Q << " ___\n";
  show_state(qc, o, {{Q, total_qubits(qc) - Q}}, {{1, 0}});

  for (int i = 0; i < Q; ++i) qc.measure(Ref{"q", i}, Ref{"c", i});
  const Counts m = run_counts(qc, 1, rng.next_u64());
  std::cout << "\n___ Measured State ___\n" << format_counts(m) << "\n";

  const bool all_zero =
      m.begin()->first.find('1') == std::string::npos;
  std::cout << "\nConclusion: f is a "
            << (all_zero ? "constant" : "balanced") << " function\n";
  if (o.reveal) {
    std::cout << "\nsneak peak: f is " << rec.label << "\n";
    if (rec.label == "balanced") {
      std::vector<std::string> kets;
      for (const BitSeq& b : rec.one_states) kets.push_back(ket_str(b));
      std::cout << "states mapped to 1: " << quoted_list_str(kets) << "\n";
    }
  }
  return 0;
}

int demo_bv(const DemoOpts& o, Rng& rng) {
  const int Q = o.qubits;
  Circuit qc = new_circuit({RegisterDecl{"q", Q, RegKind::quantum},
                            RegisterDecl{"anc", 1, RegKind::quantum},
                            RegisterDecl{"c", Q, RegKind::classical}});
  for (int i = 0; i < Q; ++i) qc.h(Ref{"q", i});

  std::cout << "____ Before g ____\n";
  show_state(qc, o, {{Q, 1}}, {{1, 0}});

  qc.x(Ref{"anc", 0});
  qc.h(Ref{"anc", 0});
  const BitSeq a = blackbox_g_bv(Q, qc, "q", "anc", rng);
  qc.h(Ref{"anc", 0});

  std::cout << "\n____ After g ____\n";
  show_state(qc, o, {{Q, total_qubits(qc) - Q}}, {{1, 0}});

  for (int i = 0; i < Q; ++i) qc.h(Ref{"q", i});
  std::cout << "\n____ After H^" << Q << " ____\n";
  show_state(qc, o, {{Q, total_qubits(qc) - Q}}, {{1, 0}});

  for (int i = 0; i < Q; ++i) qc.measure(Ref{"q", i}, Ref{"c", i});
  const Counts m = run_counts(qc, 1, rng.next_u64());
  std::cout << "\n____ Measured State ____\n" << format_counts(m) << "\n";

  if (o.reveal) std::cout << "\nsneak peak: a = " << bitseq_str(a) << "\n";
  return 0;
}

int demo_simon(const DemoOpts& o, Rng& rng) {
  const int Q = o.qubits;
  Circuit qc = new_circuit({RegisterDecl{"q", Q, RegKind::quantum},
                            RegisterDecl{"anc", Q, RegKind::quantum},
                            RegisterDecl{"c", Q, RegKind::classical}});
  for (int i = 0; i < Q; ++i) qc.h(Ref{"q", i});
  for (int i = 0; i < Q; ++i) qc.iden(Ref{"anc", i});

  std::cout << "____ Initial State ____\n";
  show_state(qc, o, {{Q, Q}}, std::nullopt);

  const BlackboxRecord rec = blackbox_g_simon(Q, qc, "q", "anc", rng);

  std::cout << "\n____ After g ____\n";
  show_state(qc, o, {{Q, Q, Q - 1}}, {{1, 1, 0}});

  for (int i = 0; i < Q; ++i) qc.h(Ref{"q", i});
  std::cout << "\n____ After H^" << Q << " ____\n";
  show_state(qc, o, {{Q, Q, Q - 1}}, {{1, 1, 0}});

  for (int i = 0; i < Q; ++i) qc.measure(Ref{"q", i}, Ref{"c", i});
  const SimonsClassicalResult res = simons_classical(qc, Q, rng);

  std::cout << "\n          candidate: " << seq_list_str(res.candidates)
            << "\n";
  std::cout << "unique measurements: " << quoted_list_str(res.measured)
            << "\n";
  std::cout << "       quantum runs: " << res.runs << "\n";
  if (res.candidates.empty()) {
    std::cout << "no nonzero candidate fits; s must be all 0s\n";
  } else if (res.candidates.size() == 1) {
    // two classical oracle queries settle the s = 0 ambiguity
    const std::uint64_t sp = from_binary(res.candidates[0]);
    if (rec.f_table[sp] == rec.f_table[0]) {
      std::cout << "f(0..0) = f(s') therefore s = "
                << bitseq_str(res.candidates[0]) << "\n";
    } else {
      std::cout << "f(0..0) != f(s') therefore s = " << bitseq_str(BitSeq(Q, 0))
                << "\n";
    }
  }
  if (o.reveal) std::cout << "\n           hidden s: " << bitseq_str(rec.s)
                          << "\n";
  return 0;
}

int demo_grover(const DemoOpts& o, Rng& rng) {
  const int Q = o.qubits;
  const std::uint64_t total = std::uint64_t{1} << Q;
  const BitSeq marked = o.marked.empty()
                            ? to_binary(rng.uniform_int(total), total)
                            : parse_bits(o.marked);
  if (static_cast<int>(marked.size()) != Q) {
    throw std::invalid_argument("marked length must equal --qubits");
  }

  auto [qc, plan] = grover(Q, marked);
  std::cout << "Grover search: Q = " << Q << ", marked " << ket_str(marked)
            << ", " << plan.iterations << " iterations\n\n";
  show_state(qc, o, {{Q, total_qubits(qc) - Q}}, {{1, 0}}, true);

  for (int i = 0; i < Q; ++i) qc.measure(Ref{"q", i}, Ref{"c", i});
  const Counts m = run_counts(qc, o.shots, rng.next_u64());
  std::cout << "\n" << format_counts(m) << "\n";
  return 0;
}

int demo_qft(const DemoOpts& o) {
  const int n = o.qubits;
  if (n < 1) throw std::invalid_argument("qft demo needs --qubits >= 1");
  Circuit qc = new_circuit({RegisterDecl{"q", n, RegKind::quantum}});
  qc.x(Ref{"q", n - 1});

  std::cout << "___ Initial State ___\n";
  show_state(qc, o);

  qft(qc, reg_refs("q", n),
      o.fixed_angle ? QftMode::fixed_angle : QftMode::standard);
  std::cout << "\n___ After QFT ___\n";
  show_state(qc, o);
  return 0;
}

int cmd_demo(const DemoOpts& o) {
  Rng rng(o.seed ? *o.seed : entropy_seed());
  if (o.name == "coin") return demo_coin(o, rng);
  if (o.name == "deutsch") return demo_deutsch(o, rng);
  if (o.name == "dj") return demo_dj(o, rng);
  if (o.name == "bv") return demo_bv(o, rng);
  if (o.name == "simon") return demo_simon(o, rng);
  if (o.name == "grover") return demo_grover(o, rng);
  return demo_qft(o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statevector circuit simulator"};
  app.require_subcommand(1);

  std::string run_file;
  bool run_sv = false;
  int run_shots = kDefaultShots;
  std::optional<std::uint64_t> run_seed;
  int run_prec = 5;
  bool run_col = false;
  CLI::App* run = app.add_subcommand("run", "execute a qasm file");
  run->add_option("file", run_file, "qasm file")->required();
  run->add_flag("--statevector", run_sv,
                "print the wavefunction instead of sampling");
  run->add_option("--shots", run_shots, "measurement shots")
      ->capture_default_str();
  run->add_option("--seed", run_seed, "PRNG seed (default: from entropy)");
  run->add_option("--precision", run_prec, "display decimals")
      ->capture_default_str();
  run->add_flag("--column", run_col, "one term per line");

  std::string emit_file;
  CLI::App* emit = app.add_subcommand(
      "emit", "parse a qasm file and print it back canonically");
  emit->add_option("file", emit_file, "qasm file")->required();

  DemoOpts d;
  CLI::App* demo = app.add_subcommand("demo", "run an algorithm walkthrough");
  demo->add_option("name", d.name, "deutsch|dj|bv|simon|grover|qft|coin")
      ->required()
      ->check(CLI::IsMember(
          {"deutsch", "dj", "bv", "simon", "grover", "qft", "coin"}));
  demo->add_option("--qubits", d.qubits, "main register size")
      ->capture_default_str();
  demo->add_option("--marked", d.marked, "grover target bits, e.g. 0110");
  demo->add_option("--shots", d.shots, "measurement shots")
      ->capture_default_str();
  demo->add_option("--flips", d.flips, "coin flips")->capture_default_str();
  demo->add_option("--seed", d.seed, "PRNG seed (default: from entropy)");
  demo->add_option("--precision", d.precision, "display decimals")
      ->capture_default_str();
  demo->add_flag("--column", d.column, "one term per line");
  demo->add_flag("--reveal", d.reveal, "print the hidden structure");
  demo->add_flag("--fixed-angle", d.fixed_angle,
                 "control-indexed qft phases");
  demo->add_flag("--balance-odds", d.balance_odds,
                 "fair constant/balanced coin for dj");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*run) {
      const Circuit qc = parse_qasm(read_file(run_file));
      if (run_sv) {
        DisplayOptions opts;
        opts.precision = run_prec;
        opts.column = run_col;
        std::cout << format_wavefunction(run_statevector(qc), opts) << "\n";
      } else {
        const Counts counts = run_counts(
            qc, run_shots, run_seed ? *run_seed : entropy_seed());
        std::cout << format_counts(counts, run_col) << "\n";
      }
      return 0;
    }
    if (*emit) {
      std::cout << emit_qasm(parse_qasm(read_file(emit_file)));
      return 0;
    }
    return cmd_demo(d);
  } catch (const QasmError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
