#include "cryptsteg/bits.hpp"

#include <algorithm>
#include <string>

#include "cryptsteg/error.hpp"

namespace cryptsteg {

BitSequence BitSequence::from_string(std::string_view text) {
  BitSequence out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidParameter, "bit string may only contain '0' and '1'");
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

BitSequence BitSequence::from_bytes(std::span<const std::uint8_t> bytes) {
  BitSequence out;
  out.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes) {
    for (int shift = 7; shift >= 0; --shift) {
      out.push_back(static_cast<std::uint8_t>((b >> shift) & 1u));
    }
  }
  return out;
}

MessageBytes BitSequence::to_bytes() const {
  if (bits_.size() % 8 != 0) {
    throw Error(ErrorCode::LengthMismatch, "bit length is not a multiple of 8");
  }
  MessageBytes out(bits_.size() / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out[i / 8] = static_cast<std::uint8_t>((out[i / 8] << 1) | bits_[i]);
  }
  return out;
}

std::string BitSequence::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

std::size_t BitSequence::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::size_t hamming_distance(const BitSequence& a, const BitSequence& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "hamming distance needs equal-length sequences");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

}  // namespace cryptsteg
