#include "cryptsteg/chaos.hpp"

#include <array>
#include <charconv>
#include <system_error>

#include "cryptsteg/error.hpp"

namespace cryptsteg {
namespace {

constexpr std::size_t kMaxKeyDigits = 17;

bool inside_unit_interval(double x) { return x > 0.0 && x < 1.0; }

// Validates the "0.ddd" shape; does not look at the numeric value.
bool well_formed_key_text(std::string_view text) {
  if (text.size() < 3 || text.substr(0, 2) != "0.") return false;
  std::string_view digits = text.substr(2);
  if (digits.size() > kMaxKeyDigits) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

CryptoKey CryptoKey::parse(std::string_view text) {
  if (!well_formed_key_text(text)) {
    throw Error(ErrorCode::InvalidKey,
                "crypto-key must be written as 0. followed by 1 to 17 decimal digits");
  }
  double x0 = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x0,
                                   std::chars_format::fixed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidKey, "crypto-key is not a decimal number");
  }
  if (!inside_unit_interval(x0)) {
    throw Error(ErrorCode::InvalidKey, "crypto-key must lie strictly between 0 and 1");
  }
  return CryptoKey(x0);
}

CryptoKey CryptoKey::from_value(double x0) {
  if (!inside_unit_interval(x0)) {
    throw Error(ErrorCode::InvalidKey, "crypto-key must lie strictly between 0 and 1");
  }
  CryptoKey key(x0);
  if (!well_formed_key_text(key.to_string())) {
    throw Error(ErrorCode::InvalidKey, "crypto-key needs more than 17 decimal digits");
  }
  return key;
}

std::string CryptoKey::to_string() const {
  // (0,1) in fixed notation: "0." plus at most a few hundred digits.
  std::array<char, 400> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x0_,
                                 std::chars_format::fixed);
  if (ec != std::errc()) {
    throw Error(ErrorCode::InvalidKey, "crypto-key cannot be formatted");
  }
  return std::string(buf.data(), ptr);
}

LogisticState iterate(LogisticState state) {
  if (!inside_unit_interval(state.x)) {
    throw Error(ErrorCode::InvalidParameter, "logistic state must lie strictly inside (0,1)");
  }
  // Built with -ffp-contract=off: no FMA, so sender and receiver agree bit for bit.
  const double next = kLambda * state.x * (1.0 - state.x);
  if (!inside_unit_interval(next)) {
    throw Error(ErrorCode::DegenerateOrbit, "logistic orbit left (0,1)");
  }
  return {next, state.iteration_count + 1};
}

LogisticState burn_in(LogisticState state, std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidParameter, "burn-in needs at least one iteration");
  }
  for (std::size_t i = 0; i < n; ++i) state = iterate(state);
  return state;
}

KeystreamGenerator::KeystreamGenerator(const CryptoKey& key)
    : state_(burn_in(LogisticState::from_key(key), kDefaultBurnIn)) {}

std::uint8_t KeystreamGenerator::next_bit() {
  state_ = iterate(state_);
  return threshold_bit(state_.x);
}

std::uint8_t KeystreamGenerator::next_byte() {
  std::uint8_t b = 0;
  for (int i = 0; i < 8; ++i) b = static_cast<std::uint8_t>((b << 1) | next_bit());
  return b;
}

BitSequence keystream(const CryptoKey& key, std::size_t n_bits) {
  BitSequence out;
  if (n_bits == 0) return out;
  out.reserve(n_bits);
  KeystreamGenerator gen(key);
  for (std::size_t i = 0; i < n_bits; ++i) out.push_back(gen.next_bit());
  return out;
}

}  // namespace cryptsteg
