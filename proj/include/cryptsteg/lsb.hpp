#pragma once

#include <cstdint>
#include <span>

#include "cryptsteg/bits.hpp"
#include "cryptsteg/image.hpp"
#include "cryptsteg/scheduler.hpp"

namespace cryptsteg {

/// Length prefix written ahead of the ciphertext: big-endian byte count.
inline constexpr std::uint64_t kHeaderBits = 32;

/// Bits replaced per scheduled byte slot, k in {1,2,3,4}.
class StegoParams {
 public:
  explicit StegoParams(int k = 1);
  int k() const noexcept { return k_; }
  std::uint8_t low_mask() const noexcept { return static_cast<std::uint8_t>((1u << k_) - 1u); }

 private:
  int k_;
};

/// Largest ciphertext, in bytes, that fits after the header.
std::uint64_t capacity(const ImageBuffer& img, StegoParams params);

/// Number of slots a payload of `payload_bytes` occupies, header included.
std::uint64_t slots_needed(std::uint64_t payload_bytes, StegoParams params);

/// Writes header || ciphertext MSB-first into the k low bits of the slots
/// chosen by slot_sequence(key, sample_count, slots_needed). The last group
/// is zero-padded. CapacityExceeded if the ciphertext does not fit.
ImageBuffer embed(const ImageBuffer& cover, std::span<const std::uint8_t> ciphertext,
                  StegoKey key, StegoParams params);

/// Blind inverse of embed. MalformedHeader when the decoded length exceeds
/// the image's capacity, which is what a wrong key, a wrong k or a clean
/// image usually produce.
MessageBytes extract(const ImageBuffer& stego, StegoKey key, StegoParams params);

}  // namespace cryptsteg
