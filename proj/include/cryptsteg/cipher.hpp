#pragma once

#include <span>

#include "cryptsteg/bits.hpp"
#include "cryptsteg/chaos.hpp"

namespace cryptsteg {

/// output[i] = data[i] XOR ks[i]. LengthMismatch unless both are the same length.
BitSequence xor_transform(const BitSequence& data, const BitSequence& ks);

/// Binary-additive stream cipher over the logistic keystream, MSB-first per
/// byte. Each call starts a fresh keystream, so reusing a key across two
/// messages leaks their XOR.
MessageBytes encrypt(std::span<const std::uint8_t> plaintext, const CryptoKey& key);

/// Same transform as encrypt. A wrong key cannot be detected here; it yields
/// noise of the right length.
MessageBytes decrypt(std::span<const std::uint8_t> ciphertext, const CryptoKey& key);

}  // namespace cryptsteg
