#include "homotally/crypto.h"

#include <sodium.h>

#include "homotally/error.h"

namespace homotally {
namespace {

void EnsureSodium() {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw Error(ErrorCode::kInternal, "libsodium initialization failed");
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

Digest Sha256(std::span<const uint8_t> bytes) {
  EnsureSodium();
  Digest out;
  crypto_hash_sha256(out.data(), bytes.data(), bytes.size());
  return out;
}

Digest Sha256(std::string_view bytes) {
  return Sha256(std::span(reinterpret_cast<const uint8_t*>(bytes.data()), bytes.size()));
}

std::string ToHex(std::span<const uint8_t> bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xf]);
  }
  return out;
}

template <size_t N>
std::array<uint8_t, N> FromHex(std::string_view hex) {
  if (hex.size() != 2 * N) {
    throw Error(ErrorCode::kConfig, "expected " + std::to_string(2 * N) + " hex digits, got " +
                                        std::to_string(hex.size()));
  }
  std::array<uint8_t, N> out{};
  for (size_t i = 0; i < N; ++i) {
    const int hi = HexValue(hex[2 * i]);
    const int lo = HexValue(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::kConfig, "not lowercase hex: " + std::string(hex));
    out[i] = static_cast<uint8_t>(hi << 4 | lo);
  }
  return out;
}

template std::array<uint8_t, 32> FromHex<32>(std::string_view);
template std::array<uint8_t, 64> FromHex<64>(std::string_view);

PublicKey PublicKey::FromHex(std::string_view hex) {
  PublicKey key;
  key.bytes_ = homotally::FromHex<32>(hex);
  return key;
}

std::string PublicKey::ToHex() const { return homotally::ToHex(bytes_); }

bool PublicKey::Verify(std::span<const uint8_t> message, const Signature& signature) const {
  EnsureSodium();
  return crypto_sign_verify_detached(signature.data(), message.data(), message.size(),
                                     bytes_.data()) == 0;
}

SigningKey SigningKey::FromSeed(const std::array<uint8_t, 32>& seed) {
  EnsureSodium();
  SigningKey key;
  key.seed_ = seed;
  crypto_sign_seed_keypair(key.public_key_.bytes_.data(), key.secret_.data(), seed.data());
  return key;
}

SigningKey SigningKey::Generate(RandomSource& rng) {
  std::array<uint8_t, 32> seed;
  rng.Fill(seed);
  return FromSeed(seed);
}

std::string SigningKey::SeedHex() const { return homotally::ToHex(seed_); }

Signature SigningKey::Sign(std::span<const uint8_t> message) const {
  EnsureSodium();
  Signature sig;
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), secret_.data());
  return sig;
}

}  // namespace homotally
