#ifndef HOMOTALLY_SHAMIR_H_
#define HOMOTALLY_SHAMIR_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "homotally/field.h"
#include "homotally/random.h"

namespace homotally {

// A (threshold, center_count) sharing over one prime field. Center j
// (1-based) is assigned eval_points[j - 1].
class SharingPolicy {
 public:
  // Throws Error(kConfig) unless 1 <= threshold <= eval_points.size() < p and
  // the points are pairwise distinct, nonzero and in the same field.
  SharingPolicy(uint32_t threshold, std::vector<FieldElement> eval_points);

  // Draws center_count distinct nonzero points uniformly from the field.
  static SharingPolicy WithRandomPoints(uint32_t threshold, uint32_t center_count, Prime p,
                                        RandomSource& rng);

  uint32_t threshold() const { return threshold_; }
  uint32_t center_count() const { return static_cast<uint32_t>(eval_points_.size()); }
  Prime prime() const { return eval_points_.front().prime(); }
  const std::vector<FieldElement>& eval_points() const { return eval_points_; }
  // Throws Error(kConfig) for an index outside 1..center_count.
  const FieldElement& EvalPoint(uint32_t center_id) const;

 private:
  uint32_t threshold_;
  std::vector<FieldElement> eval_points_;
};

// q(X) = coefficients[0] + coefficients[1] X + ... ; coefficients[0] is the
// secret.
struct Polynomial {
  std::vector<FieldElement> coefficients;

  const FieldElement& secret() const { return coefficients.front(); }
  size_t size() const { return coefficients.size(); }
};

struct Share {
  uint32_t center_id;  // 1..c
  FieldElement value;
};

// One share per center, in center order.
using ShareBatch = std::vector<Share>;

// Higher coefficients are uniform over the whole field, zero included.
Polynomial MakePolynomial(const FieldElement& secret, uint32_t threshold, RandomSource& rng);

// Horner evaluation.
FieldElement Evaluate(const Polynomial& poly, const FieldElement& x);

ShareBatch Split(const FieldElement& secret, const SharingPolicy& policy, RandomSource& rng);

using Point = std::pair<FieldElement, FieldElement>;

// Value at 0 of the unique polynomial of degree < threshold through exactly
// `threshold` points. Fewer points: kInsufficientShares. More points:
// kConfig. Repeated x: kDomain.
FieldElement InterpolateAtZero(std::span<const Point> points, uint32_t threshold);

// Lagrange evaluation at an arbitrary x through all given points (distinct x).
FieldElement InterpolateAt(std::span<const Point> points, const FieldElement& x);

// Running share sum update.
FieldElement Accumulate(const FieldElement& sum, const Share& incoming);

}  // namespace homotally

#endif  // HOMOTALLY_SHAMIR_H_
