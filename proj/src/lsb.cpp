#include "cryptsteg/lsb.hpp"

#include <algorithm>
#include <string>

#include "cryptsteg/error.hpp"

namespace cryptsteg {

StegoParams::StegoParams(int k) : k_(k) {
  if (k < 1 || k > 4) {
    throw Error(ErrorCode::InvalidParameter, "k must be 1, 2, 3 or 4");
  }
}

std::uint64_t capacity(const ImageBuffer& img, StegoParams params) {
  const std::uint64_t bits = std::uint64_t{img.sample_count()} * static_cast<std::uint64_t>(params.k());
  if (bits < kHeaderBits) return 0;
  const std::uint64_t bytes = (bits - kHeaderBits) / 8;
  return std::min<std::uint64_t>(bytes, UINT32_MAX);
}

std::uint64_t slots_needed(std::uint64_t payload_bytes, StegoParams params) {
  const std::uint64_t k = static_cast<std::uint64_t>(params.k());
  return (kHeaderBits + 8 * payload_bytes + k - 1) / k;
}

namespace {

// Frame bit i, MSB-first over header || body. Positions past the end are 0.
class FrameReader {
 public:
  FrameReader(std::uint32_t length, std::span<const std::uint8_t> body)
      : header_{static_cast<std::uint8_t>(length >> 24), static_cast<std::uint8_t>(length >> 16),
                static_cast<std::uint8_t>(length >> 8), static_cast<std::uint8_t>(length)},
        body_(body) {}

  std::uint8_t bit(std::uint64_t i) const {
    const std::uint64_t byte = i / 8;
    const int shift = 7 - static_cast<int>(i % 8);
    if (byte < 4) return (header_[byte] >> shift) & 1u;
    if (byte - 4 < body_.size()) return (body_[byte - 4] >> shift) & 1u;
    return 0;
  }

 private:
  std::uint8_t header_[4];
  std::span<const std::uint8_t> body_;
};

std::uint8_t read_bit(std::span<const std::uint8_t> samples, const SlotSequence& slots, int k,
                      std::uint64_t i) {
  const std::uint64_t group = i / static_cast<std::uint64_t>(k);
  const int within = static_cast<int>(i % static_cast<std::uint64_t>(k));
  return (samples[slots.indices[group]] >> (k - 1 - within)) & 1u;
}

}  // namespace

ImageBuffer embed(const ImageBuffer& cover, std::span<const std::uint8_t> ciphertext,
                  StegoKey key, StegoParams params) {
  const std::uint64_t available = capacity(cover, params);
  if (ciphertext.size() > available) {
    throw Error(ErrorCode::CapacityExceeded,
                "message needs " + std::to_string(ciphertext.size()) + " bytes but the cover holds " +
                    std::to_string(available) + " at k=" + std::to_string(params.k()));
  }
  const int k = params.k();
  const std::uint64_t groups = slots_needed(ciphertext.size(), params);
  const SlotSequence slots = slot_sequence(key, cover.sample_count(), groups);
  const FrameReader frame(static_cast<std::uint32_t>(ciphertext.size()), ciphertext);

  ImageBuffer stego = cover;
  auto samples = stego.samples();
  for (std::uint64_t g = 0; g < groups; ++g) {
    std::uint8_t value = 0;
    for (int b = 0; b < k; ++b) {
      value = static_cast<std::uint8_t>((value << 1) | frame.bit(g * k + b));
    }
    std::uint8_t& slot = samples[slots.indices[g]];
    slot = static_cast<std::uint8_t>((slot & ~params.low_mask()) | value);
  }
  return stego;
}

MessageBytes extract(const ImageBuffer& stego, StegoKey key, StegoParams params) {
  const std::uint64_t total = stego.sample_count();
  const std::uint64_t header_slots = slots_needed(0, params);
  if (header_slots > total) {
    throw Error(ErrorCode::MalformedHeader, "image too small to hold a payload header");
  }
  const int k = params.k();
  const auto samples = stego.samples();

  const SlotSequence header_seq = slot_sequence(key, total, header_slots);
  std::uint32_t length = 0;
  for (std::uint64_t i = 0; i < kHeaderBits; ++i) {
    length = (length << 1) | read_bit(samples, header_seq, k, i);
  }
  if (length > capacity(stego, params)) {
    throw Error(ErrorCode::MalformedHeader,
                "decoded payload length exceeds capacity: wrong key, wrong k, or not a stego image");
  }

  const SlotSequence seq = slot_sequence(key, total, slots_needed(length, params));
  MessageBytes body(length, 0);
  for (std::uint64_t i = 0; i < std::uint64_t{length} * 8; ++i) {
    auto& byte = body[i / 8];
    byte = static_cast<std::uint8_t>((byte << 1) | read_bit(samples, seq, k, kHeaderBits + i));
  }
  return body;
}

}  // namespace cryptsteg
