#ifndef RELBAT_BITS_HPP
#define RELBAT_BITS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relbat {

// Bit sequence in coordinate order: position 0 carries the most significant
// bit, so enumeration order (ascending numeric value) flips the last
// coordinate fastest.
using BitSeq = std::vector<std::uint8_t>;

// A full-length state vector and a prefix share the representation; the
// length carries the distinction.
using StateVector = BitSeq;
using Prefix = BitSeq;

inline std::uint64_t seq_value(const BitSeq& bits) {
  if (bits.size() > 63)
    throw std::length_error("bit sequence too long for 64-bit value");
  std::uint64_t v = 0;
  for (std::uint8_t b : bits) v = (v << 1) | (b ? 1u : 0u);
  return v;
}

inline std::string seq_to_string(const BitSeq& bits) {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

inline BitSeq seq_from_string(const std::string& s) {
  BitSeq bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bit string may contain only 0 and 1");
    bits.push_back(c == '1');
  }
  return bits;
}

inline BitSeq seq_of_value(std::uint64_t v, std::size_t len) {
  BitSeq bits(len, 0);
  for (std::size_t i = 0; i < len; ++i)
    bits[len - 1 - i] = static_cast<std::uint8_t>((v >> i) & 1u);
  return bits;
}

// In-place binary increment (last coordinate least significant). Returns the
// 1-based position of the 0 -> 1 flip, or nullopt on overflow (input was all
// ones; bits are left all zero).
inline std::optional<std::size_t> seq_increment(BitSeq& bits) {
  for (std::size_t i = bits.size(); i-- > 0;) {
    if (bits[i] == 0) {
      bits[i] = 1;
      return i + 1;
    }
    bits[i] = 0;
  }
  return std::nullopt;
}

}  // namespace relbat

#endif  // RELBAT_BITS_HPP
