#include "homotally/field.h"

#include <array>
#include <limits>

#include "homotally/error.h"

namespace homotally {
namespace {

using u128 = unsigned __int128;

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// These witnesses are sufficient for n < 3.3e24.
constexpr std::array<uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kWitnesses) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime Prime::Certify(uint64_t value) {
  if (!IsPrime(value)) {
    throw Error(ErrorCode::kConfig, std::to_string(value) + " is not prime");
  }
  return Prime(value);
}

Prime SmallestPrimeAbove(uint64_t bound) {
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  for (uint64_t candidate = bound; candidate < kMax;) {
    ++candidate;
    if (IsPrime(candidate)) return Prime::Certify(candidate);
  }
  throw Error(ErrorCode::kUnsupportedScale,
              "no 64-bit prime exceeds " + std::to_string(bound));
}

Prime FieldElement::prime() const { return Prime(modulus_); }

void FieldElement::CheckSameField(const FieldElement& other) const {
  if (modulus_ != other.modulus_) {
    throw Error(ErrorCode::kConfig, "field mismatch: Z_" + std::to_string(modulus_) +
                                        " vs Z_" + std::to_string(other.modulus_));
  }
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  CheckSameField(other);
  // residue < modulus <= 2^64 - 1, so the sum may wrap; compare instead.
  uint64_t gap = modulus_ - residue_;
  uint64_t r = other.residue_ >= gap ? other.residue_ - gap : residue_ + other.residue_;
  return FieldElement(r, modulus_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(residue_ == 0 ? 0 : modulus_ - residue_, modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  CheckSameField(other);
  return *this + (-other);
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  CheckSameField(other);
  return FieldElement(MulMod(residue_, other.residue_, modulus_), modulus_);
}

FieldElement FieldElement::Inverse() const {
  if (residue_ == 0) {
    throw Error(ErrorCode::kDomain, "zero has no inverse in Z_" + std::to_string(modulus_));
  }
  // Invariant: old_s * residue == old_r (mod modulus).
  __int128 old_r = residue_, r = modulus_;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  __int128 m = modulus_;
  __int128 inv = old_s % m;
  if (inv < 0) inv += m;
  return FieldElement(static_cast<uint64_t>(inv), modulus_);
}

uint64_t ParseDecimal(std::string_view text) {
  if (text.empty() || text.size() > 20 || (text.size() > 1 && text[0] == '0')) {
    throw Error(ErrorCode::kConfig, "not a canonical decimal: '" + std::string(text) + "'");
  }
  u128 value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kConfig, "not a canonical decimal: '" + std::string(text) + "'");
    }
    value = value * 10 + static_cast<unsigned>(c - '0');
  }
  if (value > std::numeric_limits<uint64_t>::max()) {
    throw Error(ErrorCode::kConfig, "decimal exceeds 64 bits: " + std::string(text));
  }
  return static_cast<uint64_t>(value);
}

FieldElement ParseFieldElement(std::string_view text, Prime p) {
  uint64_t v = ParseDecimal(text);
  if (v >= p.value()) {
    throw Error(ErrorCode::kConfig,
                std::string(text) + " is not a residue of Z_" + std::to_string(p.value()));
  }
  return FieldElement(v, p);
}

}  // namespace homotally
