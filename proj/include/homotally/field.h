#ifndef HOMOTALLY_FIELD_H_
#define HOMOTALLY_FIELD_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace homotally {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(uint64_t n);

// A primality-certified modulus. Only constructible through Certify, so a
// Prime in hand is always prime.
class Prime {
 public:
  // Throws Error(kConfig) if `value` is not prime.
  static Prime Certify(uint64_t value);

  uint64_t value() const { return value_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  friend class FieldElement;
  explicit Prime(uint64_t value) : value_(value) {}
  uint64_t value_;
};

// Least prime strictly greater than `bound`. Throws kUnsupportedScale when
// no such prime fits in 64 bits.
Prime SmallestPrimeAbove(uint64_t bound);

// A residue modulo a prime. Arithmetic between elements of different fields
// throws Error(kConfig).
class FieldElement {
 public:
  // Reduces `value` modulo p.
  FieldElement(uint64_t value, Prime p) : residue_(value % p.value()), modulus_(p.value()) {}

  static FieldElement Zero(Prime p) { return FieldElement(0, p); }
  static FieldElement One(Prime p) { return FieldElement(1, p); }

  uint64_t residue() const { return residue_; }
  uint64_t modulus() const { return modulus_; }
  Prime prime() const;
  bool IsZero() const { return residue_ == 0; }

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
  FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
  FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

  // Multiplicative inverse via the extended Euclidean algorithm. Throws
  // Error(kDomain) for zero.
  FieldElement Inverse() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  std::string ToDecimal() const { return std::to_string(residue_); }

 private:
  FieldElement(uint64_t residue, uint64_t modulus) : residue_(residue), modulus_(modulus) {}
  void CheckSameField(const FieldElement& other) const;

  uint64_t residue_;
  uint64_t modulus_;
};

// Named forms of the operators above.
inline FieldElement Add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement Sub(const FieldElement& a, const FieldElement& b) { return a - b; }
inline FieldElement Mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement Neg(const FieldElement& a) { return -a; }
inline FieldElement Inv(const FieldElement& a) { return a.Inverse(); }

// Strict canonical decimal: digits only, no sign, no leading zeros, fits in
// 64 bits. Throws Error(kConfig) otherwise.
uint64_t ParseDecimal(std::string_view text);

// Parses a canonical decimal that must already be a reduced residue mod p.
FieldElement ParseFieldElement(std::string_view text, Prime p);

}  // namespace homotally

#endif  // HOMOTALLY_FIELD_H_
