#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "qsim/executor.hpp"
#include "test_util.hpp"

using namespace qsim;

TEST_CASE("run_statevector evolves gates in order") {
  Circuit qc = new_circuit({{"q", 1, RegKind::quantum}});
  qc.h({"q", 0});
  Statevector st = run_statevector(qc);
  const double r = 0.7071067811865476;
  CHECK(std::abs(st.amps[0] - r) < 1e-15);
  CHECK(std::abs(st.amps[1] - r) < 1e-15);

  // amplitude 1 lands where qubit 1 is set (index 2)
  Circuit two = new_circuit({{"q", 2, RegKind::quantum}});
  two.iden({"q", 0});
  two.x({"q", 1});
  CHECK(testutil::is_basis_state(run_statevector(two), 2, 0.0));

  Circuit empty = new_circuit({{"q", 3, RegKind::quantum}});
  Statevector zero = run_statevector(empty);
  CHECK(testutil::is_basis_state(zero, 0, 0.0));
  CHECK(zero.num_qubits == 3);
}

TEST_CASE("run_statevector lays out quantum registers in declaration order") {
  Circuit qc = new_circuit({{"a", 1, RegKind::quantum},
                            {"b", 2, RegKind::quantum}});
  qc.x({"b", 0});  // global qubit 1
  Statevector st = run_statevector(qc);
  CHECK(testutil::is_basis_state(st, 2, 0.0));
}

TEST_CASE("run_statevector rejects measurements") {
  Circuit qc = new_circuit({{"q", 1, RegKind::quantum},
                            {"c", 1, RegKind::classical}});
  qc.h({"q", 0});
  qc.measure({"q", 0}, {"c", 0});
  CHECK_THROWS_WITH(run_statevector(qc),
                    "run_statevector: circuit contains a measurement");
}

TEST_CASE("deterministic circuits measure to a single key") {
  Circuit qc = new_circuit({{"q", 2, RegKind::quantum},
                            {"c", 2, RegKind::classical}});
  qc.iden({"q", 0});
  qc.x({"q", 1});
  qc.measure({"q", 0}, {"c", 0});
  qc.measure({"q", 1}, {"c", 1});

  // classical index 0 is the right-most key character
  Counts counts = run_counts(qc, 1024, 1);
  REQUIRE(counts.size() == 1);
  CHECK(counts.at("10") == 1024);
}

TEST_CASE("partial measurement leaves unmeasured classical bits at 0") {
  Circuit qc = new_circuit({{"q", 2, RegKind::quantum},
                            {"c", 2, RegKind::classical}});
  qc.h({"q", 0});
  qc.h({"q", 1});
  qc.measure({"q", 0}, {"c", 0});

  Counts counts = run_counts(qc, 1024, 7);
  long long total = 0;
  for (const auto& [key, n] : counts) {
    CHECK((key == "00" || key == "01"));
    total += n;
  }
  CHECK(total == 1024);
  // a fair coin at 1024 shots stays within 5 sigma = 80 of the mean
  CHECK(std::llabs(counts.at("01") - 512) <= 80);
}

TEST_CASE("measurement can remap classical indices") {
  Circuit qc = new_circuit({{"q", 3, RegKind::quantum},
                            {"c", 3, RegKind::classical}});
  qc.h({"q", 0});
  qc.measure({"q", 0}, {"c", 1});
  qc.measure({"q", 1}, {"c", 0});
  qc.measure({"q", 2}, {"c", 2});
  Counts counts = run_counts(qc, 100, 5);
  for (const auto& [key, n] : counts) CHECK((key == "000" || key == "010"));
}

TEST_CASE("same circuit, shots and seed give identical counts") {
  Circuit qc = new_circuit({{"q", 2, RegKind::quantum},
                            {"c", 2, RegKind::classical}});
  qc.h({"q", 0});
  qc.h({"q", 1});
  qc.measure({"q", 0}, {"c", 0});
  qc.measure({"q", 1}, {"c", 1});
  CHECK(run_counts(qc, 500, 42) == run_counts(qc, 500, 42));
  CHECK(run_counts(qc, 500, 42) != run_counts(qc, 500, 43));
}

TEST_CASE("run_counts enforces its preconditions") {
  Circuit none = new_circuit({{"q", 1, RegKind::quantum}});
  none.h({"q", 0});
  CHECK_THROWS_WITH(run_counts(none, 16, 1),
                    "measurement requires exactly one classical register");

  Circuit multi = new_circuit({{"q", 1, RegKind::quantum},
                               {"c", 1, RegKind::classical},
                               {"c2", 1, RegKind::classical}});
  multi.h({"q", 0});
  multi.measure({"q", 0}, {"c", 0});
  CHECK_THROWS_WITH(run_counts(multi, 16, 1),
                    "measurement requires exactly one classical register");

  Circuit after = new_circuit({{"q", 1, RegKind::quantum},
                               {"c", 1, RegKind::classical}});
  after.h({"q", 0});
  after.measure({"q", 0}, {"c", 0});
  after.x({"q", 0});
  CHECK_THROWS_WITH(run_counts(after, 16, 1),
                    "gate applied to qubit after measurement");

  Circuit ok = new_circuit({{"q", 1, RegKind::quantum},
                            {"c", 1, RegKind::classical}});
  ok.h({"q", 0});
  ok.measure({"q", 0}, {"c", 0});
  CHECK_THROWS_AS(run_counts(ok, 0, 1), std::invalid_argument);
}

TEST_CASE("joint_distribution returns exact probabilities") {
  Circuit coin = new_circuit({{"q", 1, RegKind::quantum},
                              {"c", 1, RegKind::classical}});
  coin.h({"q", 0});
  coin.measure({"q", 0}, {"c", 0});
  Distribution d = joint_distribution(coin);
  REQUIRE(d.size() == 2);
  CHECK(d.at("0") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d.at("1") == doctest::Approx(0.5).epsilon(1e-12));

  Circuit fixed = new_circuit({{"q", 2, RegKind::quantum},
                               {"c", 2, RegKind::classical}});
  fixed.x({"q", 1});
  fixed.measure({"q", 0}, {"c", 0});
  fixed.measure({"q", 1}, {"c", 1});
  Distribution single = joint_distribution(fixed);
  REQUIRE(single.size() == 1);
  CHECK(single.at("10") == doctest::Approx(1.0).epsilon(1e-12));

  Circuit hh = new_circuit({{"q", 2, RegKind::quantum},
                            {"c", 2, RegKind::classical}});
  hh.h({"q", 0});
  hh.h({"q", 1});
  hh.measure({"q", 0}, {"c", 0});
  hh.measure({"q", 1}, {"c", 1});
  Distribution four = joint_distribution(hh);
  REQUIRE(four.size() == 4);
  double sum = 0;
  for (const auto& [key, p] : four) {
    CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
    sum += p;
  }
  CHECK(std::abs(sum - 1.0) < 1e-12);
}

// 65536 shots stay within 5 sigma of the exact distribution per key
TEST_CASE("sampled frequencies converge to joint_distribution") {
  Circuit qc = new_circuit({{"q", 3, RegKind::quantum},
                            {"c", 3, RegKind::classical}});
  qc.h({"q", 0});
  qc.ry(0.9, {"q", 1});
  qc.cx({"q", 0}, {"q", 2});
  qc.t({"q", 2});
  qc.measure({"q", 0}, {"c", 0});
  qc.measure({"q", 1}, {"c", 1});
  qc.measure({"q", 2}, {"c", 2});

  const int shots = 65536;
  Distribution dist = joint_distribution(qc);
  Counts counts = run_counts(qc, shots, 0xfeedface);
  for (const auto& [key, p] : dist) {
    double sigma = std::sqrt(double(shots) * p * (1 - p));
    double seen = counts.count(key) ? double(counts.at(key)) : 0.0;
    CHECK(std::abs(seen - double(shots) * p) <= 5 * sigma + 1);
  }
  long long total = 0;
  for (const auto& [key, n] : counts) total += n;
  CHECK(total == shots);
}

// measuring a subset gives the exact marginal over those qubits
TEST_CASE("partial measurement marginalizes the full distribution") {
  Circuit full = new_circuit({{"q", 4, RegKind::quantum},
                              {"c", 4, RegKind::classical}});
  full.h({"q", 0});
  full.ry(1.1, {"q", 1});
  full.cx({"q", 0}, {"q", 1});
  full.h({"q", 2});
  full.cu1(0.8, {"q", 2}, {"q", 3});
  full.rx(0.3, {"q", 3});

  Circuit part = full;  // measure only qubits 1 and 3
  part.measure({"q", 1}, {"c", 1});
  part.measure({"q", 3}, {"c", 3});
  for (int q = 0; q < 4; ++q) full.measure({"q", q}, {"c", q});

  Distribution all = joint_distribution(full);
  Distribution sub = joint_distribution(part);

  Distribution expect;
  for (const auto& [key, p] : all) {
    // zero out classical bits 0 and 2 (key index 0 is right-most)
    std::string masked = key;
    masked[3] = '0';
    masked[1] = '0';
    expect[masked] += p;
  }
  REQUIRE(sub.size() == expect.size());
  for (const auto& [key, p] : expect)
    CHECK(sub.at(key) == doctest::Approx(p).epsilon(1e-12));
}
