#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "cryptsteg/bits.hpp"
#include "cryptsteg/image.hpp"

namespace cryptsteg {

inline constexpr double kPeakSample = 255.0;

struct DistortionReport {
  std::uint64_t sample_count = 0;
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity for identical images
  std::uint64_t changed_bytes = 0;
  std::array<std::uint64_t, 8> changed_bits_per_plane{};  // index 0 = LSB

  bool identical() const noexcept { return changed_bytes == 0; }
};

/// MSE over every sample, PSNR against a peak of 255, and per-bit-plane
/// counts of flipped bits. ShapeMismatch unless both images share dimensions
/// and channel count.
DistortionReport distortion(const ImageBuffer& cover, const ImageBuffer& stego);

/// z = (ones - n/2) / sqrt(n/4). Needs at least 100 bits.
double monobit_test(const BitSequence& bits);

/// Wald-Wolfowitz runs statistic. Needs at least 100 bits and a ones
/// fraction strictly inside (0.4, 0.6), otherwise PrerequisiteFailed.
double runs_test(const BitSequence& bits);

struct RandomnessReport {
  std::uint64_t n_bits = 0;
  std::uint64_t ones = 0;
  double ones_fraction = 0.0;
  double monobit_z = 0.0;
  std::optional<double> runs_z;  // empty when the balance gate fails
};

RandomnessReport randomness_report(const BitSequence& bits);

/// Line-oriented key=value text, one field per line.
std::string to_key_value(const DistortionReport& report);
std::string to_key_value(const RandomnessReport& report);

/// One JSON object per report. Infinite PSNR is written as the string "inf".
std::string to_json(const DistortionReport& report);
std::string to_json(const RandomnessReport& report);

}  // namespace cryptsteg
