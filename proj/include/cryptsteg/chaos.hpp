#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "cryptsteg/bits.hpp"

namespace cryptsteg {

/// Logistic map parameter. Fixed; the balance of the thresholded orbit
/// depends on it, so it is not exposed as a tunable.
inline constexpr double kLambda = 3.9996;

/// Orbit values at or above this map to bit 1.
inline constexpr double kThreshold = 0.5;

inline constexpr std::size_t kDefaultBurnIn = 1000;

/// Secret initial condition x0 of the logistic map, strictly inside (0,1).
///
/// Text form is "0." followed by 1 to 17 decimal digits, parsed to the
/// nearest double. Strings that round to 0 or 1 are rejected. The unstable
/// fixed point 1 - 1/lambda is accepted: rounding noise pushes the orbit off it.
class CryptoKey {
 public:
  static CryptoKey parse(std::string_view text);

  /// Accepts any x0 in (0,1) whose canonical text fits the key format.
  static CryptoKey from_value(double x0);

  double value() const noexcept { return x0_; }

  /// Shortest fixed-notation decimal that parses back to the same double.
  std::string to_string() const;

  friend bool operator==(const CryptoKey&, const CryptoKey&) = default;

 private:
  explicit CryptoKey(double x0) : x0_(x0) {}
  double x0_;
};

struct LogisticState {
  double x = 0.5;
  std::uint64_t iteration_count = 0;

  static LogisticState from_key(const CryptoKey& key) { return {key.value(), 0}; }

  friend bool operator==(const LogisticState&, const LogisticState&) = default;
};

/// One step x' = lambda * x * (1 - x), evaluated in exactly that order.
/// Throws DegenerateOrbit if x' leaves (0,1) and InvalidParameter if x is
/// not inside (0,1) to begin with.
LogisticState iterate(LogisticState state);

constexpr std::uint8_t threshold_bit(double x) noexcept { return x >= kThreshold ? 1 : 0; }

/// Advances the state by n >= 1 iterations without emitting bits.
LogisticState burn_in(LogisticState state, std::size_t n = kDefaultBurnIn);

/// Incremental bit source: burn-in on construction, then one thresholded
/// iterate per bit.
class KeystreamGenerator {
 public:
  explicit KeystreamGenerator(const CryptoKey& key);

  std::uint8_t next_bit();
  /// Eight consecutive bits, first bit in the MSB.
  std::uint8_t next_byte();

  const LogisticState& state() const noexcept { return state_; }

 private:
  LogisticState state_;
};

/// The first n_bits bits of the key's stream. keystream(k, m) is a prefix of
/// keystream(k, n) for m <= n.
BitSequence keystream(const CryptoKey& key, std::size_t n_bits);

}  // namespace cryptsteg
