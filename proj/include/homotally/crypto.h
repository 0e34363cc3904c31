#ifndef HOMOTALLY_CRYPTO_H_
#define HOMOTALLY_CRYPTO_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "homotally/random.h"

namespace homotally {

using Digest = std::array<uint8_t, 32>;
using Signature = std::array<uint8_t, 64>;

Digest Sha256(std::span<const uint8_t> bytes);
Digest Sha256(std::string_view bytes);

std::string ToHex(std::span<const uint8_t> bytes);
// Strict: lowercase only, exact length. Throws Error(kConfig) otherwise.
template <size_t N>
std::array<uint8_t, N> FromHex(std::string_view hex);

// Ed25519 public key.
class PublicKey {
 public:
  static PublicKey FromHex(std::string_view hex);
  std::string ToHex() const;
  bool Verify(std::span<const uint8_t> message, const Signature& signature) const;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;

 private:
  friend class SigningKey;
  std::array<uint8_t, 32> bytes_{};
};

// Ed25519 key pair derived from a 32-byte seed. Signatures are deterministic.
class SigningKey {
 public:
  static SigningKey FromSeed(const std::array<uint8_t, 32>& seed);
  static SigningKey Generate(RandomSource& rng);
  static SigningKey FromSeedHex(std::string_view hex) { return FromSeed(homotally::FromHex<32>(hex)); }

  std::string SeedHex() const;
  const PublicKey& public_key() const { return public_key_; }
  Signature Sign(std::span<const uint8_t> message) const;

 private:
  std::array<uint8_t, 32> seed_{};
  std::array<uint8_t, 64> secret_{};
  PublicKey public_key_;
};

}  // namespace homotally

#endif  // HOMOTALLY_CRYPTO_H_
