#include "lebesgue/random.hpp"

#include <algorithm>

namespace lebesgue {

std::size_t RandomCases::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool RandomCases::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

SpacePtr RandomCases::space(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return FiniteSpace::make(std::move(labels));
}

SubsetMask RandomCases::subset(const SpacePtr& space) {
  std::vector<bool> bits(space->size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = coin();
  return SubsetMask(space, std::move(bits));
}

std::vector<SubsetMask> RandomCases::generator(const SpacePtr& space, std::size_t max_sets) {
  std::vector<SubsetMask> gen;
  const auto k = uniform(0, max_sets);
  for (std::size_t i = 0; i < k; ++i) gen.push_back(subset(space));
  return gen;
}

SigmaAlgebra RandomCases::sigma(const SpacePtr& space) {
  if (coin(0.2)) return SigmaAlgebra::discrete(space);
  return SigmaAlgebra::generate(space, generator(space));
}

Rational RandomCases::rational(long max_num, long max_den) {
  Rational q(static_cast<long>(uniform(0, max_num)), static_cast<long>(uniform(1, max_den)));
  q.canonicalize();
  return q;
}

Rational RandomCases::dyadic(long max_num, unsigned max_exp) {
  Integer den = 1;
  den <<= uniform(0, max_exp);
  Rational q(Integer(static_cast<long>(uniform(0, max_num))), den);
  q.canonicalize();
  return q;
}

XReal RandomCases::value(double p_inf, double p_zero) {
  if (coin(p_inf)) return XReal::pos_inf();
  if (coin(p_zero)) return XReal(0);
  return XReal(rational());
}

Measure RandomCases::measure(const SigmaAlgebra& sa) {
  const auto kind = uniform(0, 9);
  if (kind == 0 && sa.is_discrete()) return Measure::counting(sa);
  if (kind == 1) return Measure::dirac(sa, uniform(0, sa.space()->size() - 1));
  std::vector<XReal> w;
  for (std::size_t k = 0; k < sa.atoms().size(); ++k) w.push_back(value(0.15, 0.25));
  return Measure::from_atom_weights(sa, std::move(w));
}

std::vector<XReal> RandomCases::point_weights(const SigmaAlgebra& sa) {
  std::vector<XReal> per_atom;
  for (std::size_t k = 0; k < sa.atoms().size(); ++k) per_atom.push_back(value(0.15, 0.25));
  std::vector<XReal> w;
  for (std::size_t x = 0; x < sa.space()->size(); ++x) w.push_back(per_atom[sa.atom_of(x)]);
  return w;
}

namespace {

PointFn per_atom(const SigmaAlgebra& sa, const std::vector<XReal>& atom_values) {
  std::vector<XReal> v;
  for (std::size_t x = 0; x < sa.space()->size(); ++x) v.push_back(atom_values[sa.atom_of(x)]);
  return PointFn(sa.space(), std::move(v));
}

}  // namespace

PointFn RandomCases::measurable_fn(const SigmaAlgebra& sa, double p_inf) {
  std::vector<XReal> a;
  for (std::size_t k = 0; k < sa.atoms().size(); ++k) a.push_back(value(p_inf, 0.2));
  return per_atom(sa, a);
}

PointFn RandomCases::finite_measurable_fn(const SigmaAlgebra& sa) { return measurable_fn(sa, 0.0); }

PointFn RandomCases::dyadic_measurable_fn(const SigmaAlgebra& sa, long max_num, unsigned max_exp) {
  std::vector<XReal> a;
  for (std::size_t k = 0; k < sa.atoms().size(); ++k) a.emplace_back(dyadic(max_num, max_exp));
  return per_atom(sa, a);
}

SubsetMask RandomCases::measurable_set(const SigmaAlgebra& sa) {
  std::vector<bool> which(sa.atoms().size());
  for (std::size_t k = 0; k < which.size(); ++k) which[k] = coin();
  return sa.union_of_atoms(which);
}

TaggedSeq<PointFn> RandomCases::nondecreasing_family(const SigmaAlgebra& sa, const PointFn& top,
                                                     std::size_t max_len) {
  const auto len = uniform(1, max_len);
  std::vector<PointFn> chain{top};
  for (std::size_t i = 1; i < len; ++i) {
    // Truncations at an integer level walk an unbounded top up from below.
    PointFn below = coin(0.3) ? PointFn::constant(sa.space(), XReal(static_cast<long>(uniform(0, 6))))
                              : measurable_fn(sa, 0.05);
    chain.push_back(fn_min(chain.back(), below));
  }
  std::reverse(chain.begin(), chain.end());
  return TaggedSeq<PointFn>::constant_after(std::move(chain));
}

TaggedSeq<PointFn> RandomCases::family(const SigmaAlgebra& sa, std::size_t max_len) {
  const auto len = uniform(1, max_len);
  std::vector<PointFn> fs;
  for (std::size_t i = 0; i < len; ++i) fs.push_back(measurable_fn(sa));
  return TaggedSeq<PointFn>::constant_after(std::move(fs));
}

TaggedSeq<SubsetMask> RandomCases::disjoint_sets(const SigmaAlgebra& sa) {
  const auto bins = uniform(1, 4);
  std::vector<std::vector<bool>> which(bins, std::vector<bool>(sa.atoms().size(), false));
  for (std::size_t k = 0; k < sa.atoms().size(); ++k) {
    const auto b = uniform(0, bins);  // bins means "left out"
    if (b < bins) which[b][k] = true;
  }
  std::vector<SubsetMask> sets;
  for (const auto& w : which) sets.push_back(sa.union_of_atoms(w));
  sets.push_back(SubsetMask::empty(sa.space()));
  return TaggedSeq<SubsetMask>::constant_after(std::move(sets));
}

TaggedSeq<SubsetMask> RandomCases::nondecreasing_sets(const SigmaAlgebra& sa, std::size_t max_len) {
  const auto len = uniform(1, max_len);
  std::vector<SubsetMask> sets{measurable_set(sa)};
  for (std::size_t i = 1; i < len; ++i) sets.push_back(sets.back() | measurable_set(sa));
  return TaggedSeq<SubsetMask>::constant_after(std::move(sets));
}

TaggedSeq<SubsetMask> RandomCases::measurable_sets(const SigmaAlgebra& sa, std::size_t max_len) {
  const auto len = uniform(1, max_len);
  std::vector<SubsetMask> sets;
  for (std::size_t i = 0; i < len; ++i) sets.push_back(measurable_set(sa));
  sets.push_back(SubsetMask::empty(sa.space()));
  return TaggedSeq<SubsetMask>::constant_after(std::move(sets));
}

}  // namespace lebesgue
