#include "qsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsim {

int gate_arity(Gate g) {
  switch (g) {
    case Gate::cx: case Gate::cz: case Gate::cu1: case Gate::swap:
      return 2;
    case Gate::cswap: case Gate::ccx:
      return 3;
    default:
      return 1;
  }
}

bool gate_is_parametric(Gate g) {
  switch (g) {
    case Gate::u1: case Gate::rx: case Gate::ry: case Gate::rz: case Gate::cu1:
      return true;
    default:
      return false;
  }
}

std::string_view gate_mnemonic(Gate g) {
  switch (g) {
    case Gate::i: return "id";
    case Gate::x: return "x";
    case Gate::y: return "y";
    case Gate::z: return "z";
    case Gate::h: return "h";
    case Gate::s: return "s";
    case Gate::t: return "t";
    case Gate::u1: return "u1";
    case Gate::rx: return "rx";
    case Gate::ry: return "ry";
    case Gate::rz: return "rz";
    case Gate::cx: return "cx";
    case Gate::cz: return "cz";
    case Gate::cu1: return "cu1";
    case Gate::swap: return "swap";
    case Gate::cswap: return "cswap";
    case Gate::ccx: return "ccx";
  }
  return "?";
}

std::optional<Gate> gate_from_mnemonic(std::string_view s) {
  if (s == "id" || s == "iden") return Gate::i;
  if (s == "x") return Gate::x;
  if (s == "y") return Gate::y;
  if (s == "z") return Gate::z;
  if (s == "h") return Gate::h;
  if (s == "s") return Gate::s;
  if (s == "t") return Gate::t;
  if (s == "u1") return Gate::u1;
  if (s == "rx") return Gate::rx;
  if (s == "ry") return Gate::ry;
  if (s == "rz") return Gate::rz;
  if (s == "cx") return Gate::cx;
  if (s == "cz") return Gate::cz;
  if (s == "cu1") return Gate::cu1;
  if (s == "swap") return Gate::swap;
  if (s == "cswap") return Gate::cswap;
  if (s == "ccx") return Gate::ccx;
  return std::nullopt;
}

void validate_gate_spec(const GateSpec& spec) {
  if (gate_is_parametric(spec.kind) && !spec.angle)
    throw std::invalid_argument("gate " + std::string(gate_mnemonic(spec.kind)) +
                                " requires an angle");
  if (!gate_is_parametric(spec.kind) && spec.angle)
    throw std::invalid_argument("gate " + std::string(gate_mnemonic(spec.kind)) +
                                " takes no angle");
}

static Matrix one_qubit(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2);
  m.at(0, 0) = a; m.at(0, 1) = b;
  m.at(1, 0) = c; m.at(1, 1) = d;
  return m;
}

Matrix gate_matrix(const GateSpec& spec) {
  validate_gate_spec(spec);
  const double inv_rt2 = 1.0 / std::numbers::sqrt2;
  const cplx i1{0.0, 1.0};
  double th = spec.angle.value_or(0.0);
  switch (spec.kind) {
    case Gate::i: return one_qubit(1, 0, 0, 1);
    case Gate::x: return one_qubit(0, 1, 1, 0);
    case Gate::y: return one_qubit(0, -i1, i1, 0);
    case Gate::z: return one_qubit(1, 0, 0, -1);
    case Gate::h: return one_qubit(inv_rt2, inv_rt2, inv_rt2, -inv_rt2);
    case Gate::s: return one_qubit(1, 0, 0, i1);
    case Gate::t: return one_qubit(1, 0, 0, std::polar(1.0, std::numbers::pi / 4));
    case Gate::u1: return one_qubit(1, 0, 0, std::polar(1.0, th));
    case Gate::rx:
      return one_qubit(std::cos(th / 2), -i1 * std::sin(th / 2),
                       -i1 * std::sin(th / 2), std::cos(th / 2));
    case Gate::ry:
      return one_qubit(std::cos(th / 2), -std::sin(th / 2),
                       std::sin(th / 2), std::cos(th / 2));
    case Gate::rz:
      return one_qubit(std::polar(1.0, -th / 2), 0, 0, std::polar(1.0, th / 2));
    case Gate::cx: {
      Matrix m = identity_matrix(4);
      m.at(2, 2) = 0; m.at(2, 3) = 1;
      m.at(3, 3) = 0; m.at(3, 2) = 1;
      return m;
    }
    case Gate::cz: {
      Matrix m = identity_matrix(4);
      m.at(3, 3) = -1;
      return m;
    }
    case Gate::cu1: {
      Matrix m = identity_matrix(4);
      m.at(3, 3) = std::polar(1.0, th);
      return m;
    }
    case Gate::swap: {
      Matrix m = identity_matrix(4);
      m.at(1, 1) = 0; m.at(1, 2) = 1;
      m.at(2, 2) = 0; m.at(2, 1) = 1;
      return m;
    }
    case Gate::cswap: {
      Matrix m = identity_matrix(8);
      m.at(5, 5) = 0; m.at(5, 6) = 1;
      m.at(6, 6) = 0; m.at(6, 5) = 1;
      return m;
    }
    case Gate::ccx: {
      Matrix m = identity_matrix(8);
      m.at(6, 6) = 0; m.at(6, 7) = 1;
      m.at(7, 7) = 0; m.at(7, 6) = 1;
      return m;
    }
  }
  throw std::logic_error("gate_matrix: unreachable");
}

}  // namespace qsim
