#ifndef HOMOTALLY_RANDOM_H_
#define HOMOTALLY_RANDOM_H_

#include <cstdint>
#include <deque>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace homotally {

// Source of randomness for polynomial coefficients, evaluation points, ballot
// ids and key seeds. Injected everywhere so tests can pin exact values.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Uniform in [0, bound). bound must be nonzero.
  virtual uint64_t UniformBelow(uint64_t bound) = 0;
  virtual void Fill(std::span<uint8_t> out) = 0;

  // Lowercase hex of `bytes` random bytes.
  std::string HexToken(size_t bytes);
};

// OS CSPRNG (libsodium randombytes).
class SecureRandom final : public RandomSource {
 public:
  SecureRandom();
  uint64_t UniformBelow(uint64_t bound) override;
  void Fill(std::span<uint8_t> out) override;
};

// Reproducible stream: the same seed yields the same values on every
// platform (no std::uniform_int_distribution involved).
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(uint64_t seed) : engine_(seed) {}
  uint64_t UniformBelow(uint64_t bound) override;
  void Fill(std::span<uint8_t> out) override;

 private:
  std::mt19937_64 engine_;
};

// Replays a fixed list of UniformBelow results, then defers to `fallback`.
// Used to force exact polynomial coefficients in fixtures.
class ScriptedRandom final : public RandomSource {
 public:
  ScriptedRandom(std::vector<uint64_t> values, RandomSource& fallback)
      : values_(values.begin(), values.end()), fallback_(fallback) {}

  uint64_t UniformBelow(uint64_t bound) override;
  void Fill(std::span<uint8_t> out) override { fallback_.Fill(out); }
  size_t remaining() const { return values_.size(); }

 private:
  std::deque<uint64_t> values_;
  RandomSource& fallback_;
};

}  // namespace homotally

#endif  // HOMOTALLY_RANDOM_H_
