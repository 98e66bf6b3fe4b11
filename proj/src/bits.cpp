#include "qsim/bits.hpp"

#include <bit>
#include <stdexcept>

namespace qsim {

static void check_bit(int v, const char* who) {
  if (v != 0 && v != 1)
    throw std::invalid_argument(std::string(who) + ": entries must be 0 or 1");
}

BitSeq oplus(const BitSeq& a, const BitSeq& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("oplus: sequences must have equal length");
  BitSeq out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    check_bit(a[i], "oplus");
    check_bit(b[i], "oplus");
    out[i] = a[i] ^ b[i];
  }
  return out;
}

BitSeq to_binary(std::uint64_t number, std::uint64_t total) {
  if (total == 0 || !std::has_single_bit(total))
    throw std::invalid_argument("to_binary: total must be a power of two");
  if (number >= total)
    throw std::invalid_argument("to_binary: number out of range");
  int width = std::bit_width(total) - 1;
  BitSeq out(width);
  for (int i = 0; i < width; ++i)
    out[i] = int((number >> (width - 1 - i)) & 1u);
  return out;
}

std::uint64_t from_binary(const BitSeq& bits) {
  if (bits.size() > 64)
    throw std::invalid_argument("from_binary: too many bits");
  std::uint64_t v = 0;
  for (int b : bits) {
    check_bit(b, "from_binary");
    v = (v << 1) | std::uint64_t(b);
  }
  return v;
}

int dot_mod2(const BitSeq& a, const BitSeq& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot_mod2: sequences must have equal length");
  int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    check_bit(a[i], "dot_mod2");
    check_bit(b[i], "dot_mod2");
    acc ^= (a[i] & b[i]);
  }
  return acc;
}

std::string bitseq_str(const BitSeq& bits) {
  std::string s = "[";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(bits[i]);
  }
  return s + "]";
}

}  // namespace qsim
