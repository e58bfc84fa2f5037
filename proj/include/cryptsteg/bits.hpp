#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cryptsteg {

using MessageBytes = std::vector<std::uint8_t>;

/// Ordered sequence of binary symbols. One symbol per element, each 0 or 1.
class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(std::size_t n) : bits_(n, 0) {}

  /// Parses a string of '0'/'1' characters; anything else is InvalidParameter.
  static BitSequence from_string(std::string_view text);

  /// MSB-first unpacking: byte 0x80 becomes 1,0,0,0,0,0,0,0.
  static BitSequence from_bytes(std::span<const std::uint8_t> bytes);

  /// MSB-first packing. Length must be a multiple of 8.
  MessageBytes to_bytes() const;

  std::string to_string() const;

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }

  void push_back(std::uint8_t bit) { bits_.push_back(bit & 1u); }
  void set(std::size_t i, std::uint8_t bit) { bits_.at(i) = bit & 1u; }
  void reserve(std::size_t n) { bits_.reserve(n); }

  std::size_t count_ones() const noexcept;

  auto begin() const noexcept { return bits_.begin(); }
  auto end() const noexcept { return bits_.end(); }

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Number of positions where a and b differ. Sequences must have equal length.
std::size_t hamming_distance(const BitSequence& a, const BitSequence& b);

}  // namespace cryptsteg
