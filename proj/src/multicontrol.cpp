#include "qsim/multicontrol.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace qsim {

void x_transformation(Circuit& qc, const std::vector<Ref>& qubits,
                      const BitSeq& pattern) {
  if (qubits.size() != pattern.size())
    throw std::invalid_argument(
        "x_transformation: pattern length must match qubit count");
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    if (pattern[j] != 0 && pattern[j] != 1)
      throw std::invalid_argument("x_transformation: pattern bits must be 0 or 1");
    if (pattern[j] == 0) qc.x(qubits[j]);
  }
}

namespace {

void check_disjoint(const std::vector<Ref>& refs, const char* who) {
  for (std::size_t i = 0; i < refs.size(); ++i)
    for (std::size_t j = i + 1; j < refs.size(); ++j)
      if (refs[i] == refs[j])
        throw std::invalid_argument(std::string(who) +
                                    ": controls, target and ancillas overlap");
}

// Toffoli triples that AND the controls pairwise through fresh ancillas.
// `sink`, when given, receives the final AND; otherwise the last triple
// targets a fresh ancilla and that ancilla is reported as the combined
// control.  Matches the scheduling of the reference cascade: control pairs
// first, then the odd control joins the oldest pending ancilla, then
// pending ancillas pair off.
struct Cascade {
  std::vector<std::array<Ref, 3>> steps;
  Ref combined;
};

Cascade build_cascade(const std::vector<Ref>& controls,
                      const std::vector<Ref>& ancillas,
                      const std::optional<Ref>& sink, const char* who) {
  Cascade out;
  std::size_t n = controls.size();
  std::vector<Ref> active;
  std::size_t next_anc = 0;
  auto fresh = [&]() -> const Ref& {
    if (next_anc >= ancillas.size())
      throw std::invalid_argument(std::string(who) + ": not enough ancillas");
    return ancillas[next_anc++];
  };

  std::size_t q = 0;
  while (n - q >= 2) {
    const Ref& a = fresh();
    out.steps.push_back({controls[q], controls[q + 1], a});
    active.push_back(a);
    q += 2;
  }
  std::optional<Ref> leftover;
  if (q < n) leftover = controls[q];

  while (true) {
    if (leftover) {
      if (active.size() == 1 && sink) {
        out.steps.push_back({*leftover, active[0], *sink});
        out.combined = *sink;
        return out;
      }
      const Ref& a = fresh();
      out.steps.push_back({*leftover, active.front(), a});
      active.erase(active.begin());
      active.push_back(a);
      leftover.reset();
      continue;
    }
    if (active.size() == 1) {
      out.combined = active[0];
      return out;
    }
    if (active.size() == 2 && sink) {
      out.steps.push_back({active[0], active[1], *sink});
      out.combined = *sink;
      return out;
    }
    const Ref& a = fresh();
    out.steps.push_back({active[0], active[1], a});
    active.erase(active.begin(), active.begin() + 2);
    active.push_back(a);
  }
}

}  // namespace

void n_not(Circuit& qc, const std::vector<Ref>& controls, const Ref& target,
           const std::vector<Ref>& ancillas) {
  if (controls.empty())
    throw std::invalid_argument("n_not: need at least one control");
  {
    std::vector<Ref> all = controls;
    all.push_back(target);
    all.insert(all.end(), ancillas.begin(), ancillas.end());
    check_disjoint(all, "n_not");
  }
  std::size_t n = controls.size();
  if (n == 1) {
    qc.cx(controls[0], target);
    return;
  }
  if (n == 2) {
    qc.ccx(controls[0], controls[1], target);
    return;
  }
  if (ancillas.size() < n - 2)
    throw std::invalid_argument("n_not: not enough ancillas");

  Cascade plan = build_cascade(controls, ancillas, target, "n_not");
  for (const auto& s : plan.steps) qc.ccx(s[0], s[1], s[2]);
  // undo everything but the target flip, in reverse
  for (std::size_t i = plan.steps.size() - 1; i-- > 0;) {
    const auto& s = plan.steps[i];
    qc.ccx(s[0], s[1], s[2]);
  }
}

ControlledOp cop_x(Ref t) { return {ControlledOp::Kind::x, std::move(t), {}, 0}; }
ControlledOp cop_z(Ref t) { return {ControlledOp::Kind::z, std::move(t), {}, 0}; }
ControlledOp cop_phase(double angle, Ref t) {
  return {ControlledOp::Kind::phase, std::move(t), {}, angle};
}
ControlledOp cop_swap(Ref a, Ref b) {
  return {ControlledOp::Kind::swap, std::move(a), std::move(b), 0};
}

void n_control_u(Circuit& qc, const std::vector<Ref>& controls,
                 const std::vector<Ref>& ancillas,
                 const std::vector<ControlledOp>& ops) {
  if (ops.empty())
    throw std::invalid_argument("n_control_u: ops must not be empty");
  if (controls.empty())
    throw std::invalid_argument("n_control_u: need at least one control");
  {
    // op targets may repeat between ops but not touch controls/ancillas
    std::vector<Ref> wires = controls;
    wires.insert(wires.end(), ancillas.begin(), ancillas.end());
    check_disjoint(wires, "n_control_u");
    for (const auto& op : ops) {
      for (const Ref& w : wires)
        if (w == op.t1 || (op.kind == ControlledOp::Kind::swap && w == op.t2))
          throw std::invalid_argument(
              "n_control_u: controls, target and ancillas overlap");
    }
  }

  std::size_t n = controls.size();
  Ref combined;
  std::vector<std::array<Ref, 3>> steps;
  if (n == 1) {
    combined = controls[0];
  } else {
    if (ancillas.size() < n - 1)
      throw std::invalid_argument("n_control_u: not enough ancillas");
    Cascade plan = build_cascade(controls, ancillas, std::nullopt,
                                 "n_control_u");
    steps = plan.steps;
    combined = plan.combined;
  }

  for (const auto& s : steps) qc.ccx(s[0], s[1], s[2]);
  for (const auto& op : ops) {
    switch (op.kind) {
      case ControlledOp::Kind::x: qc.cx(combined, op.t1); break;
      case ControlledOp::Kind::z: qc.cz(combined, op.t1); break;
      case ControlledOp::Kind::phase: qc.cu1(op.angle, combined, op.t1); break;
      case ControlledOp::Kind::swap: qc.cswap(combined, op.t1, op.t2); break;
    }
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    qc.ccx((*it)[0], (*it)[1], (*it)[2]);
}

}  // namespace qsim
