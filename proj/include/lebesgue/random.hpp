#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lebesgue/measure.hpp"
#include "lebesgue/sigma.hpp"
#include "lebesgue/xreal.hpp"

namespace lebesgue {

/// Random finite measure spaces and objects on them, for property checks.
/// Everything is drawn from one seeded engine, so a seed fixes a case.
class RandomCases {
public:
  explicit RandomCases(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool coin(double p = 0.5);

  /// Points labelled p0, p1, ...
  SpacePtr space(std::size_t n);
  SubsetMask subset(const SpacePtr& space);
  std::vector<SubsetMask> generator(const SpacePtr& space, std::size_t max_sets = 4);
  SigmaAlgebra sigma(const SpacePtr& space);

  /// Nonnegative rational num/den with num <= max_num, den <= max_den.
  Rational rational(long max_num = 12, long max_den = 6);
  Rational dyadic(long max_num = 32, unsigned max_exp = 3);
  /// Nonnegative, +inf with probability p_inf, zero with probability p_zero.
  XReal value(double p_inf = 0.1, double p_zero = 0.2);

  /// Weighted per-atom measure with zero and infinite weights mixed in,
  /// or a counting / Dirac measure when the algebra allows.
  Measure measure(const SigmaAlgebra& sa);
  /// Per-point weights constant on atoms, in the form a spec file stores.
  std::vector<XReal> point_weights(const SigmaAlgebra& sa);

  /// Nonnegative function constant on atoms.
  PointFn measurable_fn(const SigmaAlgebra& sa, double p_inf = 0.1);
  PointFn finite_measurable_fn(const SigmaAlgebra& sa);
  PointFn dyadic_measurable_fn(const SigmaAlgebra& sa, long max_num = 32, unsigned max_exp = 3);
  SubsetMask measurable_set(const SigmaAlgebra& sa);

  /// Pointwise nondecreasing, stabilizing family ending in `top`.
  TaggedSeq<PointFn> nondecreasing_family(const SigmaAlgebra& sa, const PointFn& top, std::size_t max_len = 5);
  TaggedSeq<PointFn> family(const SigmaAlgebra& sa, std::size_t max_len = 5);

  /// Pairwise disjoint measurable family followed by an empty tail.
  TaggedSeq<SubsetMask> disjoint_sets(const SigmaAlgebra& sa);
  TaggedSeq<SubsetMask> nondecreasing_sets(const SigmaAlgebra& sa, std::size_t max_len = 5);
  /// Arbitrary measurable family followed by an empty tail.
  TaggedSeq<SubsetMask> measurable_sets(const SigmaAlgebra& sa, std::size_t max_len = 5);

private:
  std::mt19937_64 rng_;
};

}  // namespace lebesgue
