#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qsim/bits.hpp"
#include "qsim/gates.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

using namespace qsim;

TEST_CASE("zero_state puts all weight on index 0") {
  Statevector one = zero_state(1);
  REQUIRE(one.amps.size() == 2);
  CHECK(one.amps[0] == cplx{1, 0});
  CHECK(one.amps[1] == cplx{0, 0});

  Statevector two = zero_state(2);
  REQUIRE(two.amps.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(two.amps[i] == cplx{0, 0});
  CHECK(two.amps[0] == cplx{1, 0});

  Statevector three = zero_state(3);
  CHECK(three.amps.size() == 8);
  CHECK(three.amps[0] == cplx{1, 0});
  CHECK(state_norm(three) == doctest::Approx(1.0));

  CHECK_THROWS_AS(zero_state(0), std::invalid_argument);
  CHECK_THROWS_AS(zero_state(kMaxQubits + 1), std::invalid_argument);
}

TEST_CASE("basis_index treats qubit 0 as the least significant bit") {
  CHECK(basis_index({1, 0, 0}) == 1);
  CHECK(basis_index({0, 0, 0}) == 0);
  CHECK(basis_index({0, 0, 1}) == 4);
  CHECK(basis_index({0, 1}) == 2);
  CHECK(basis_index({1, 1}) == 3);
  CHECK_THROWS_AS(basis_index({0, 2}), std::invalid_argument);
}

TEST_CASE("hadamard on qubit 0 splits the zero state evenly") {
  Statevector st = zero_state(1);
  apply_unitary(st, gate_matrix({Gate::h, {}}), {0});
  const double r = 0.7071067811865476;
  CHECK(std::abs(st.amps[0] - r) < 1e-15);
  CHECK(std::abs(st.amps[1] - r) < 1e-15);
}

TEST_CASE("identity embedding leaves any state untouched") {
  Rng rng(11);
  Statevector st = zero_state(3);
  for (int g = 0; g < 10; ++g)
    apply_unitary(st, gate_matrix({Gate::h, {}}), {int(rng.uniform_int(3))});
  Statevector before = st;
  apply_unitary(st, identity_matrix(2), {1});
  for (std::size_t i = 0; i < st.amps.size(); ++i)
    CHECK(std::abs(st.amps[i] - before.amps[i]) < 1e-15);
}

TEST_CASE("X embedded on qubit 1 swaps index pairs 0<->2 and 1<->3") {
  // dense embedding, column by column
  Matrix dense(4);
  for (std::size_t col = 0; col < 4; ++col) {
    Statevector st = zero_state(2);
    st.amps[0] = 0;
    st.amps[col] = 1;
    apply_unitary(st, gate_matrix({Gate::x, {}}), {1});
    for (std::size_t row = 0; row < 4; ++row)
      dense.at(int(row), int(col)) = st.amps[row];
  }
  // equals X (high bit) kron I (low bit): amplitude index = q0 + 2*q1
  Matrix expect = kron(gate_matrix({Gate::x, {}}), identity_matrix(2));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(std::abs(dense.at(r, c) - expect.at(r, c)) < 1e-15);
}

TEST_CASE("apply_unitary rejects bad matrices and targets") {
  Statevector st = zero_state(2);
  Matrix zeros(2);
  CHECK_THROWS_AS(apply_unitary(st, zeros, {0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_unitary(st, gate_matrix({Gate::x, {}}), {2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_unitary(st, gate_matrix({Gate::cx, {}}), {1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_unitary(st, gate_matrix({Gate::x, {}}), {0, 1}),
                  std::invalid_argument);  // size mismatch
}

TEST_CASE("global_phase_equiv accepts exactly unit-phase multiples") {
  Statevector a = zero_state(2);
  apply_unitary(a, gate_matrix({Gate::h, {}}), {0});
  apply_unitary(a, gate_matrix({Gate::t, {}}), {0});

  Statevector minus = a;
  for (auto& v : minus.amps) v = -v;
  Statevector rot = a;
  for (auto& v : rot.amps) v *= cplx{0, 1};

  CHECK(global_phase_equiv(a, a, 1e-12));
  CHECK(global_phase_equiv(a, minus, 1e-12));
  CHECK(global_phase_equiv(a, rot, 1e-12));

  // |+> is X-invariant, so X applied to it is phase-equivalent (phase 1)
  Statevector plus = zero_state(1);
  apply_unitary(plus, gate_matrix({Gate::h, {}}), {0});
  Statevector xplus = plus;
  apply_unitary(xplus, gate_matrix({Gate::x, {}}), {0});
  CHECK(global_phase_equiv(plus, xplus, 1e-12));

  Statevector zero = zero_state(1);
  Statevector onev = zero_state(1);
  onev.amps = {cplx{0, 0}, cplx{1, 0}};
  CHECK_FALSE(global_phase_equiv(zero, onev, 1e-9));

  CHECK_THROWS_AS(global_phase_equiv(zero, a, 1e-9), std::invalid_argument);
}

TEST_CASE("every gate matrix is unitary") {
  for (Gate g : {Gate::i, Gate::x, Gate::y, Gate::z, Gate::h, Gate::s, Gate::t,
                 Gate::cx, Gate::cz, Gate::swap, Gate::cswap, Gate::ccx})
    CHECK(is_unitary(gate_matrix({g, {}}), 1e-12));
  for (double th : {0.3, -1.7, 2.9})
    for (Gate g : {Gate::u1, Gate::rx, Gate::ry, Gate::rz, Gate::cu1})
      CHECK(is_unitary(gate_matrix({g, th}), 1e-12));
}

TEST_CASE("random circuits preserve the norm") {
  Rng rng(20240814);
  for (int trial = 0; trial < 4; ++trial) {
    int n = 5 + int(rng.uniform_int(4));  // 5..8 qubits
    Statevector st = zero_state(n);
    for (int g = 0; g < 50; ++g) {
      int kind = int(rng.uniform_int(4));
      int a = int(rng.uniform_int(std::uint64_t(n)));
      if (kind == 0) {
        apply_unitary(st, gate_matrix({Gate::h, {}}), {a});
      } else if (kind == 1) {
        double th = rng.next_double() * 6.283185307179586;
        apply_unitary(st, gate_matrix({Gate::ry, th}), {a});
      } else if (kind == 2) {
        double th = rng.next_double() * 6.283185307179586;
        apply_unitary(st, gate_matrix({Gate::u1, th}), {a});
      } else {
        int b = int(rng.uniform_int(std::uint64_t(n - 1)));
        if (b >= a) ++b;
        apply_unitary(st, gate_matrix({Gate::cx, {}}), {b, a});
      }
    }
    CHECK(std::abs(state_norm(st) - 1.0) < 1e-10);
  }
}

// H on every qubit of |x> leaves amplitude (-1)^(x.y) / sqrt(2^n) at y
TEST_CASE("hadamard transformation sign law") {
  for (int n = 1; n <= 4; ++n) {
    std::size_t dim = std::size_t(1) << n;
    double mag = 1.0 / std::sqrt(double(dim));
    for (std::size_t x = 0; x < dim; ++x) {
      Statevector st = zero_state(n);
      st.amps[0] = 0;
      st.amps[x] = 1;
      for (int q = 0; q < n; ++q)
        apply_unitary(st, gate_matrix({Gate::h, {}}), {q});
      for (std::size_t y = 0; y < dim; ++y) {
        int parity = std::popcount(x & y) & 1;
        double want = parity ? -mag : mag;
        CHECK(std::abs(st.amps[y] - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("applying M then its adjoint restores the state") {
  Rng rng(7);
  Statevector st = zero_state(4);
  for (int g = 0; g < 12; ++g) {
    double th = rng.next_double() * 6.283185307179586;
    apply_unitary(st, gate_matrix({Gate::ry, th}),
                  {int(rng.uniform_int(4))});
  }
  Statevector before = st;

  Matrix m = gate_matrix({Gate::cu1, 1.234});
  apply_unitary(st, m, {2, 0});
  apply_unitary(st, adjoint(m), {2, 0});
  for (std::size_t i = 0; i < st.amps.size(); ++i)
    CHECK(std::abs(st.amps[i] - before.amps[i]) < 1e-12);
}
