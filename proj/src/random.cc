#include "homotally/random.h"

#include <sodium.h>

#include <limits>

#include "homotally/error.h"

namespace homotally {
namespace {

template <typename Draw>
uint64_t RejectionSample(uint64_t bound, Draw draw) {
  if (bound == 0) throw Error(ErrorCode::kInternal, "UniformBelow(0)");
  // Largest multiple of bound representable in 64 bits; draws at or above it
  // are discarded so every residue is equally likely.
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  const uint64_t limit = kMax - (kMax % bound + 1) % bound;
  for (;;) {
    uint64_t v = draw();
    if (v <= limit) return v % bound;
  }
}

}  // namespace

std::string RandomSource::HexToken(size_t bytes) {
  std::vector<uint8_t> raw(bytes);
  Fill(raw);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes * 2);
  for (uint8_t b : raw) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xf]);
  }
  return out;
}

SecureRandom::SecureRandom() {
  if (sodium_init() < 0) throw Error(ErrorCode::kInternal, "libsodium initialization failed");
}

uint64_t SecureRandom::UniformBelow(uint64_t bound) {
  return RejectionSample(bound, [] {
    uint64_t v;
    randombytes_buf(&v, sizeof(v));
    return v;
  });
}

void SecureRandom::Fill(std::span<uint8_t> out) { randombytes_buf(out.data(), out.size()); }

uint64_t SeededRandom::UniformBelow(uint64_t bound) {
  return RejectionSample(bound, [this] { return engine_(); });
}

void SeededRandom::Fill(std::span<uint8_t> out) {
  for (auto& b : out) b = static_cast<uint8_t>(engine_() >> 56);
}

uint64_t ScriptedRandom::UniformBelow(uint64_t bound) {
  if (values_.empty()) return fallback_.UniformBelow(bound);
  uint64_t v = values_.front();
  values_.pop_front();
  if (v >= bound) {
    throw Error(ErrorCode::kInternal,
                "scripted value " + std::to_string(v) + " out of range " + std::to_string(bound));
  }
  return v;
}

}  // namespace homotally
