#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cryptsteg {

/// 64-bit seed choosing which byte slots carry the payload. Every value,
/// including 0, is a valid key. Text form is 1 to 16 lowercase hex digits.
class StegoKey {
 public:
  constexpr StegoKey() = default;
  constexpr explicit StegoKey(std::uint64_t seed) : seed_(seed) {}

  /// Accepts 1-16 hex digits. Uppercase digits and a "0x" prefix are rejected
  /// so that the text form stays canonical.
  static StegoKey parse(std::string_view text);

  constexpr std::uint64_t seed() const noexcept { return seed_; }
  std::string to_string() const;

  friend constexpr bool operator==(const StegoKey&, const StegoKey&) = default;

 private:
  std::uint64_t seed_ = 0;
};

/// SplitMix64. State advances by the golden-ratio increment before mixing.
class SplitMix64 {
 public:
  constexpr explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct SlotSequence {
  std::vector<std::uint64_t> indices;
  std::uint64_t total_slots = 0;
};

/// First `count` entries of a partial Fisher-Yates shuffle of [0, total_slots)
/// driven by SplitMix64(key.seed). Step i draws u and swaps positions i and
/// i + u mod (total_slots - i). Output is a prefix-stable function of the
/// arguments. CapacityExceeded when count > total_slots.
SlotSequence slot_sequence(StegoKey key, std::uint64_t total_slots, std::uint64_t count);

namespace detail {
// The two storage strategies behind slot_sequence. Both require
// count <= total_slots and produce identical output.
SlotSequence slot_sequence_dense(StegoKey key, std::uint64_t total_slots, std::uint64_t count);
SlotSequence slot_sequence_sparse(StegoKey key, std::uint64_t total_slots, std::uint64_t count);
}  // namespace detail

}  // namespace cryptsteg
