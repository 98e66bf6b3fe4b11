#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsim {

// Bit sequences are plain 0/1 vectors written most significant bit first,
// e.g. to_binary(6, 8) == {1,1,0}.  When such a sequence labels qubits,
// entry i belongs to qubit i, so the ket |110> and the sequence read the
// same left to right.
using BitSeq = std::vector<int>;

// elementwise xor; lengths must match
BitSeq oplus(const BitSeq& a, const BitSeq& b);

// number written in binary, width log2(total); total must be a power of two
// and number < total
BitSeq to_binary(std::uint64_t number, std::uint64_t total);

// inverse of to_binary for any width
std::uint64_t from_binary(const BitSeq& bits);

// inner product mod 2; lengths must match
int dot_mod2(const BitSeq& a, const BitSeq& b);

// "[1, 0, 1]" rendering used by the CLI
std::string bitseq_str(const BitSeq& bits);

}  // namespace qsim
