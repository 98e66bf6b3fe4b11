#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "qsim/circuit.hpp"
#include "qsim/display.hpp"

namespace qsim {

std::string emit_qasm(const Circuit& qc) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  for (const auto* regs : {&qc.qregs, &qc.cregs})
    for (const auto& r : *regs)
      out += std::string(r.kind == RegKind::quantum ? "qreg " : "creg ") +
             r.name + "[" + std::to_string(r.size) + "];\n";
  for (const auto& inst : qc.instrs) {
    if (inst.kind == InstrKind::measure) {
      out += "measure " + inst.qubits[0].reg + "[" +
             std::to_string(inst.qubits[0].idx) + "] -> " + inst.clbit.reg +
             "[" + std::to_string(inst.clbit.idx) + "];\n";
      continue;
    }
    out += std::string(gate_mnemonic(inst.spec.kind));
    if (inst.spec.angle) out += "(" + py_float_repr(*inst.spec.angle) + ")";
    out += " ";
    for (std::size_t i = 0; i < inst.qubits.size(); ++i) {
      if (i) out += ",";
      out += inst.qubits[i].reg + "[" + std::to_string(inst.qubits[i].idx) + "]";
    }
    out += ";\n";
  }
  return out;
}

namespace {

struct Tok {
  enum Kind { ident, number, str, punct, eof } kind = eof;
  std::string text;
  int line = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Tok next() {
    skip_space();
    Tok t;
    t.line = line_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        t.text += text_[pos_++];
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      t.kind = Tok::number;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.'))
        t.text += text_[pos_++];
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t save = pos_;
        std::string ext(1, text_[pos_++]);
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
          ext += text_[pos_++];
        if (pos_ < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          while (pos_ < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ext += text_[pos_++];
          t.text += ext;
        } else {
          pos_ = save;
        }
      }
      return t;
    }
    if (c == '"') {
      t.kind = Tok::str;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') t.text += text_[pos_++];
      if (pos_ >= text_.size()) throw QasmError(line_, "unterminated string");
      ++pos_;
      return t;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      t.kind = Tok::punct;
      t.text = "->";
      pos_ += 2;
      return t;
    }
    if (std::string("-;,()[]").find(c) != std::string::npos) {
      t.kind = Tok::punct;
      t.text = std::string(1, c);
      ++pos_;
      return t;
    }
    throw QasmError(line_, std::string("unexpected character '") + c + "'");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { advance(); }

  Circuit run() {
    Circuit qc;
    while (cur_.kind != Tok::eof) statement(qc);
    return qc;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect_punct(const std::string& p) {
    if (cur_.kind != Tok::punct || cur_.text != p)
      throw QasmError(cur_.line, "expected '" + p + "'");
    advance();
  }

  int expect_int() {
    if (cur_.kind != Tok::number || cur_.text.find('.') != std::string::npos)
      throw QasmError(cur_.line, "expected integer");
    int v = 0;
    auto res = std::from_chars(cur_.text.data(),
                               cur_.text.data() + cur_.text.size(), v);
    if (res.ec != std::errc{} || res.ptr != cur_.text.data() + cur_.text.size())
      throw QasmError(cur_.line, "expected integer");
    advance();
    return v;
  }

  std::string expect_ident() {
    if (cur_.kind != Tok::ident)
      throw QasmError(cur_.line, "expected identifier");
    std::string s = cur_.text;
    advance();
    return s;
  }

  Ref parse_ref() {
    Ref r;
    r.reg = expect_ident();
    expect_punct("[");
    r.idx = expect_int();
    expect_punct("]");
    return r;
  }

  double parse_angle() {
    bool neg = false;
    if (cur_.kind == Tok::punct && cur_.text == "-") {
      neg = true;
      advance();
    }
    if (cur_.kind != Tok::number)
      throw QasmError(cur_.line, "malformed angle");
    double v = 0;
    auto res = std::from_chars(cur_.text.data(),
                               cur_.text.data() + cur_.text.size(), v);
    if (res.ec != std::errc{} || res.ptr != cur_.text.data() + cur_.text.size())
      throw QasmError(cur_.line, "malformed angle");
    advance();
    return neg ? -v : v;
  }

  void statement(Circuit& qc) {
    int line = cur_.line;
    std::string head = expect_ident();
    try {
      if (head == "OPENQASM") {
        if (cur_.kind != Tok::number || cur_.text != "2.0")
          throw QasmError(cur_.line, "unsupported OPENQASM version");
        advance();
        expect_punct(";");
      } else if (head == "include") {
        if (cur_.kind != Tok::str)
          throw QasmError(cur_.line, "expected include file");
        advance();
        expect_punct(";");
      } else if (head == "qreg" || head == "creg") {
        RegisterDecl reg;
        reg.kind = head == "qreg" ? RegKind::quantum : RegKind::classical;
        reg.name = expect_ident();
        expect_punct("[");
        reg.size = expect_int();
        expect_punct("]");
        expect_punct(";");
        add_register(qc, reg);
      } else if (head == "measure") {
        Ref q = parse_ref();
        expect_punct("->");
        Ref c = parse_ref();
        expect_punct(";");
        append_measure(qc, q, c);
      } else {
        auto gate = gate_from_mnemonic(head);
        if (!gate) throw QasmError(line, "unknown gate '" + head + "'");
        GateSpec spec{*gate, {}};
        if (cur_.kind == Tok::punct && cur_.text == "(") {
          advance();
          spec.angle = parse_angle();
          expect_punct(")");
        }
        std::vector<Ref> refs;
        refs.push_back(parse_ref());
        while (cur_.kind == Tok::punct && cur_.text == ",") {
          advance();
          refs.push_back(parse_ref());
        }
        expect_punct(";");
        append_gate(qc, spec, std::move(refs));
      }
    } catch (const QasmError&) {
      throw;
    } catch (const std::exception& e) {
      // semantic append failures (arity, undeclared register, range)
      throw QasmError(line, e.what());
    }
  }

  Lexer lex_;
  Tok cur_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser(text).run(); }

}  // namespace qsim
