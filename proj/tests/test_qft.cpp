#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsim/display.hpp"
#include "qsim/executor.hpp"
#include "qsim/qft.hpp"
#include "qsim/rng.hpp"
#include "test_util.hpp"

using namespace qsim;
using testutil::refs;

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t bit_reverse(std::size_t v, int n) {
  std::size_t out = 0;
  for (int b = 0; b < n; ++b)
    if ((v >> b) & 1) out |= std::size_t(1) << (n - 1 - b);
  return out;
}

// scrambles the state so round-trip checks start from something generic
void random_prep(Circuit& qc, int n, Rng& rng) {
  for (int g = 0; g < 3 * n; ++g) {
    int q = int(rng.uniform_int(std::uint64_t(n)));
    switch (rng.uniform_int(3)) {
      case 0: qc.h({"q", q}); break;
      case 1: qc.ry(rng.next_double() * 2 * kPi, {"q", q}); break;
      default: qc.u1(rng.next_double() * 2 * kPi, {"q", q}); break;
    }
    if (n > 1 && g % 3 == 0) {
      int p = int(rng.uniform_int(std::uint64_t(n - 1)));
      if (p >= q) ++p;
      qc.cx({"q", p}, {"q", q});
    }
  }
}

}  // namespace

TEST_CASE("two-qubit transform matches the reference walkthrough") {
  for (QftMode mode : {QftMode::standard, QftMode::fixed_angle}) {
    Circuit qc = new_circuit({{"q", 2, RegKind::quantum}});
    qc.x({"q", 0});
    qc.h({"q", 0});
    qc.x({"q", 1});
    qc.h({"q", 1});
    CHECK(format_wavefunction(run_statevector(qc)) ==
          "0.5 |00>  -0.5 |10>  -0.5 |01>  0.5 |11>");

    qft(qc, refs("q", 2), mode);
    CHECK(format_wavefunction(run_statevector(qc)) ==
          "0.5-0.5j |10>  0.5+0.5j |11>");

    qft_dgr(qc, refs("q", 2), mode);
    CHECK(format_wavefunction(run_statevector(qc)) ==
          "0.5 |00>  -0.5 |10>  -0.5 |01>  0.5 |11>");
  }
}

TEST_CASE("zero state maps to the uniform positive superposition") {
  for (QftMode mode : {QftMode::standard, QftMode::fixed_angle}) {
    for (int n = 1; n <= 4; ++n) {
      Circuit qc = new_circuit({{"q", n, RegKind::quantum}});
      qft(qc, refs("q", n), mode);
      Statevector st = run_statevector(qc);
      double want = 1.0 / std::sqrt(double(st.amps.size()));
      for (const cplx& a : st.amps) CHECK(std::abs(a - want) < 1e-12);
    }
  }
}

TEST_CASE("fixed-angle-mode three-qubit transform of |001>") {
  Circuit qc = new_circuit({{"q", 3, RegKind::quantum}});
  qc.x({"q", 2});
  CHECK(format_wavefunction(run_statevector(qc)) == "1.0 |001>");

  qft(qc, refs("q", 3), QftMode::fixed_angle);
  CHECK(format_wavefunction(run_statevector(qc)) ==
        "0.35355 |000>  0.25+0.25j |100>  0.25+0.25j |010>  "
        "0.35355j |110>  -0.35355 |001>  -0.25-0.25j |101>  "
        "-0.25-0.25j |011>  -0.35355j |111>");
}

TEST_CASE("modes agree up to two qubits and split at three") {
  Rng rng(5);
  for (int n = 1; n <= 2; ++n) {
    Circuit prep = new_circuit({{"q", n, RegKind::quantum}});
    random_prep(prep, n, rng);
    Circuit std_qc = prep, fa_qc = prep;
    qft(std_qc, refs("q", n), QftMode::standard);
    qft(fa_qc, refs("q", n), QftMode::fixed_angle);
    CHECK(testutil::states_close(run_statevector(std_qc),
                                 run_statevector(fa_qc), 1e-12));
  }

  // first divergence: the control-2 -> target-1 phase
  Circuit std3 = new_circuit({{"q", 3, RegKind::quantum}});
  Circuit fa3 = new_circuit({{"q", 3, RegKind::quantum}});
  qft(std3, refs("q", 3), QftMode::standard);
  qft(fa3, refs("q", 3), QftMode::fixed_angle);
  REQUIRE(std3.instrs.size() == fa3.instrs.size());
  // instruction 4 is cu1(angle, q2, q1)
  const Instruction& si = std3.instrs[4];
  const Instruction& ci = fa3.instrs[4];
  REQUIRE(si.spec.kind == Gate::cu1);
  REQUIRE(si.qubits == std::vector<Ref>{{"q", 2}, {"q", 1}});
  CHECK(*si.spec.angle == doctest::Approx(kPi / 2));
  CHECK(*ci.spec.angle == doctest::Approx(kPi / 4));
}

TEST_CASE("inverse transform undoes the forward one on random states") {
  Rng rng(99);
  for (QftMode mode : {QftMode::standard, QftMode::fixed_angle}) {
    for (int n = 1; n <= 6; ++n) {
      Circuit prep = new_circuit({{"q", n, RegKind::quantum}});
      random_prep(prep, n, rng);
      Statevector before = run_statevector(prep);

      Circuit round = prep;
      qft(round, refs("q", n), mode);
      qft_dgr(round, refs("q", n), mode);
      CHECK(testutil::states_close(run_statevector(round), before, 1e-10));
    }
  }
}

TEST_CASE("applying the transform twice is not the identity") {
  Circuit qc = new_circuit({{"q", 2, RegKind::quantum}});
  qc.x({"q", 0});
  qc.h({"q", 0});
  qc.x({"q", 1});
  qc.h({"q", 1});
  qft(qc, refs("q", 2));
  qft(qc, refs("q", 2));
  CHECK(format_wavefunction(run_statevector(qc)) ==
        "0.5 |00>  -0.5j |01>  -0.5+0.5j |11>");
}

TEST_CASE("dft_matrix rows, errors and the worked product") {
  Matrix f4 = dft_matrix(4, false);
  for (int j = 0; j < 4; ++j) CHECK(f4.at(0, j) == cplx{1, 0});

  // F4 . [1, -1, -1, 1], exact because the roots are exact on the axes
  std::vector<cplx> in{1, -1, -1, 1};
  std::vector<cplx> want{{0, 0}, {2, -2}, {0, 0}, {2, 2}};
  for (int r = 0; r < 4; ++r) {
    cplx acc{};
    for (int c = 0; c < 4; ++c) acc += f4.at(r, c) * in[std::size_t(c)];
    CHECK(acc == want[std::size_t(r)]);
  }

  CHECK(is_unitary(dft_matrix(4, true), 1e-12));
  CHECK(is_unitary(dft_matrix(16, true), 1e-12));

  CHECK_THROWS_AS(dft_matrix(3, false), std::invalid_argument);
  CHECK_THROWS_AS(dft_matrix(1, true), std::invalid_argument);
  CHECK_THROWS_AS(dft_matrix(0, true), std::invalid_argument);
}

// the standard-mode circuit is the DFT matrix composed with index
// bit-reversal: basis |e_k> maps to column reverse(k)
TEST_CASE("standard mode equals the dense transform up to bit reversal") {
  for (int n = 1; n <= 4; ++n) {
    std::size_t dim = std::size_t(1) << n;
    Matrix f = dft_matrix(dim, true);
    for (std::size_t k = 0; k < dim; ++k) {
      Circuit qc = new_circuit({{"q", n, RegKind::quantum}});
      for (int b = 0; b < n; ++b)
        if ((k >> b) & 1) qc.x({"q", b});
      qft(qc, refs("q", n), QftMode::standard);
      Statevector st = run_statevector(qc);
      std::size_t col = bit_reverse(k, n);
      for (std::size_t row = 0; row < dim; ++row)
        CHECK(std::abs(st.amps[row] - f.at(int(row), int(col))) < 1e-10);
    }
  }
}

TEST_CASE("transform-driven two-qubit search lands on the marked state") {
  Statevector st = qft_grover_demo({1, 0});
  DisplayOptions opts;
  opts.systems = std::vector<int>{2, 1};
  opts.show_systems = std::vector<int>{1, 0};
  CHECK(format_wavefunction(st, opts) == "-1.0 |10>");

  for (std::uint64_t m = 0; m < 4; ++m) {
    BitSeq marked = to_binary(m, 4);
    Statevector out = qft_grover_demo(marked);
    // ancilla is back to |1> (global qubit 2); the main pair holds the
    // marked state with probability 1
    std::size_t idx = basis_index(marked) | 4u;
    CHECK(std::abs(std::abs(out.amps[idx]) - 1.0) < 1e-10);
    for (std::size_t i = 0; i < out.amps.size(); ++i)
      if (i != idx) CHECK(std::abs(out.amps[i]) < 1e-10);
  }

  CHECK_THROWS_AS(qft_grover_demo({1, 0, 1}), std::invalid_argument);
}
