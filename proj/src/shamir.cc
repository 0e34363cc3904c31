#include "homotally/shamir.h"

#include <set>
#include <string>

#include "homotally/error.h"

namespace homotally {

SharingPolicy::SharingPolicy(uint32_t threshold, std::vector<FieldElement> eval_points)
    : threshold_(threshold), eval_points_(std::move(eval_points)) {
  if (eval_points_.empty()) throw Error(ErrorCode::kConfig, "no evaluation points");
  if (threshold_ < 1 || threshold_ > eval_points_.size()) {
    throw Error(ErrorCode::kConfig, "threshold " + std::to_string(threshold_) +
                                        " outside 1.." + std::to_string(eval_points_.size()));
  }
  const uint64_t p = eval_points_.front().modulus();
  if (eval_points_.size() >= p) {
    throw Error(ErrorCode::kConfig, "Z_" + std::to_string(p) + " cannot hold " +
                                        std::to_string(eval_points_.size()) +
                                        " distinct nonzero points");
  }
  std::set<uint64_t> seen;
  for (const auto& x : eval_points_) {
    if (x.modulus() != p) throw Error(ErrorCode::kConfig, "evaluation points span fields");
    if (x.IsZero()) throw Error(ErrorCode::kConfig, "evaluation point 0 would expose the secret");
    if (!seen.insert(x.residue()).second) {
      throw Error(ErrorCode::kConfig, "duplicate evaluation point " + x.ToDecimal());
    }
  }
}

SharingPolicy SharingPolicy::WithRandomPoints(uint32_t threshold, uint32_t center_count,
                                              Prime p, RandomSource& rng) {
  if (center_count == 0 || center_count >= p.value()) {
    throw Error(ErrorCode::kConfig, "cannot place " + std::to_string(center_count) +
                                        " points in Z_" + std::to_string(p.value()));
  }
  std::set<uint64_t> seen;
  std::vector<FieldElement> points;
  points.reserve(center_count);
  while (points.size() < center_count) {
    uint64_t x = 1 + rng.UniformBelow(p.value() - 1);
    if (seen.insert(x).second) points.emplace_back(x, p);
  }
  return SharingPolicy(threshold, std::move(points));
}

const FieldElement& SharingPolicy::EvalPoint(uint32_t center_id) const {
  if (center_id < 1 || center_id > eval_points_.size()) {
    throw Error(ErrorCode::kConfig, "no center " + std::to_string(center_id));
  }
  return eval_points_[center_id - 1];
}

Polynomial MakePolynomial(const FieldElement& secret, uint32_t threshold, RandomSource& rng) {
  if (threshold < 1) throw Error(ErrorCode::kConfig, "threshold must be at least 1");
  const Prime p = secret.prime();
  Polynomial poly;
  poly.coefficients.reserve(threshold);
  poly.coefficients.push_back(secret);
  for (uint32_t i = 1; i < threshold; ++i) {
    poly.coefficients.emplace_back(rng.UniformBelow(p.value()), p);
  }
  return poly;
}

FieldElement Evaluate(const Polynomial& poly, const FieldElement& x) {
  FieldElement acc = FieldElement::Zero(x.prime());
  for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

ShareBatch Split(const FieldElement& secret, const SharingPolicy& policy, RandomSource& rng) {
  const Polynomial poly = MakePolynomial(secret, policy.threshold(), rng);
  ShareBatch batch;
  batch.reserve(policy.center_count());
  for (uint32_t j = 1; j <= policy.center_count(); ++j) {
    batch.push_back(Share{j, Evaluate(poly, policy.EvalPoint(j))});
  }
  return batch;
}

FieldElement InterpolateAt(std::span<const Point> points, const FieldElement& x) {
  if (points.empty()) throw Error(ErrorCode::kInsufficientShares, "no points to interpolate");
  const Prime p = x.prime();
  FieldElement result = FieldElement::Zero(p);
  for (size_t i = 0; i < points.size(); ++i) {
    FieldElement num = FieldElement::One(p);
    FieldElement den = FieldElement::One(p);
    for (size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const FieldElement diff = points[j].first - points[i].first;
      if (diff.IsZero()) {
        throw Error(ErrorCode::kDomain,
                    "repeated interpolation point x=" + points[i].first.ToDecimal());
      }
      num *= points[j].first - x;
      den *= diff;
    }
    result += points[i].second * num * den.Inverse();
  }
  return result;
}

FieldElement InterpolateAtZero(std::span<const Point> points, uint32_t threshold) {
  if (points.size() < threshold) {
    throw Error(ErrorCode::kInsufficientShares,
                "need " + std::to_string(threshold) + " shares, have " +
                    std::to_string(points.size()));
  }
  if (points.size() > threshold) {
    throw Error(ErrorCode::kConfig, "expected exactly " + std::to_string(threshold) +
                                        " points, got " + std::to_string(points.size()));
  }
  return InterpolateAt(points, FieldElement::Zero(points.front().first.prime()));
}

FieldElement Accumulate(const FieldElement& sum, const Share& incoming) {
  return sum + incoming.value;
}

}  // namespace homotally
