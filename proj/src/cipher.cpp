#include "cryptsteg/cipher.hpp"

#include "cryptsteg/error.hpp"

namespace cryptsteg {

BitSequence xor_transform(const BitSequence& data, const BitSequence& ks) {
  if (data.size() != ks.size()) {
    throw Error(ErrorCode::LengthMismatch, "data and keystream lengths differ");
  }
  BitSequence out;
  out.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out.push_back(static_cast<std::uint8_t>(data[i] ^ ks[i]));
  }
  return out;
}

MessageBytes encrypt(std::span<const std::uint8_t> plaintext, const CryptoKey& key) {
  MessageBytes out(plaintext.begin(), plaintext.end());
  if (out.empty()) return out;
  KeystreamGenerator gen(key);
  for (auto& b : out) b ^= gen.next_byte();
  return out;
}

MessageBytes decrypt(std::span<const std::uint8_t> ciphertext, const CryptoKey& key) {
  return encrypt(ciphertext, key);
}

}  // namespace cryptsteg
