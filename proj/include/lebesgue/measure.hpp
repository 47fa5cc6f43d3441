#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lebesgue/sigma.hpp"
#include "lebesgue/xreal.hpp"

namespace lebesgue {

/// A measure on a finite sigma-algebra, stored as one nonnegative weight per
/// atom. mu(A) is the sum of the weights of the atoms inside A, which gives
/// mu(empty) = 0 and additivity by construction; nonnegativity is checked
/// when the measure is built.
class Measure {
public:
  /// Throws NegativeValue on a weight below zero, SpaceMismatch on a size error.
  static Measure from_atom_weights(SigmaAlgebra sa, std::vector<XReal> weights);

  /// mu(A) = |A|. Requires a discrete sigma-algebra (NotDiscrete otherwise).
  static Measure counting(SigmaAlgebra sa);

  /// Per-point weights that must be constant on every atom (NotConstantOnAtoms).
  /// The atom weight is the sum of its point weights.
  static Measure weighted(SigmaAlgebra sa, const std::vector<XReal>& point_weights);

  /// mu(A) = 1 if `a` is in A else 0. Throws UnknownLabel.
  static Measure dirac(SigmaAlgebra sa, const std::string& a);
  static Measure dirac(SigmaAlgebra sa, std::size_t point);

  const SigmaAlgebra& sa() const { return sa_; }
  const SpacePtr& space() const { return sa_.space(); }
  const std::vector<XReal>& atom_weights() const { return weights_; }
  const XReal& atom_weight(std::size_t atom) const { return weights_.at(atom); }

  /// Throws NotMeasurable for sets that are not unions of atoms.
  XReal operator()(const SubsetMask& a) const;

  /// Largest measurable set of measure zero: the union of zero-weight atoms.
  SubsetMask null_set() const;

  /// Returns a copy whose value on `target` is replaced by `value`. This
  /// breaks the measure axioms on purpose and exists only to feed negative
  /// controls to the property checks.
  Measure corrupted(const SubsetMask& target, XReal value) const;
  bool is_corrupted() const { return override_.has_value(); }

private:
  Measure(SigmaAlgebra sa, std::vector<XReal> weights) : sa_(std::move(sa)), weights_(std::move(weights)) {}

  SigmaAlgebra sa_;
  std::vector<XReal> weights_;
  std::optional<std::pair<SubsetMask, XReal>> override_;
};

inline XReal measure_of(const Measure& m, const SubsetMask& a) { return m(a); }

/// Union of fam[0..n].
SubsetMask partial_union(const TaggedSeq<SubsetMask>& fam, std::size_t n);

/// Union of every member of a stabilizing family.
SubsetMask family_union(const TaggedSeq<SubsetMask>& fam);

/// B0 = A0, B(n+1) = A(n+1) \ A(n). The result ends with an explicit empty
/// set and stays constant after it. For a nondecreasing family the layers are
/// pairwise disjoint with the same partial unions.
TaggedSeq<SubsetMask> layers(const TaggedSeq<SubsetMask>& fam);

/// Sup over n of sum_{m<=n} mu(A_m), exactly. A nonempty tail repeated forever
/// contributes inf * mu(tail).
XReal sup_partial_sums(const Measure& m, const TaggedSeq<SubsetMask>& fam);

/// mu(union) == sup of partial sums for a pairwise disjoint family.
/// Throws NotDisjoint, NotMeasurable.
bool check_sigma_additivity(const Measure& m, const TaggedSeq<SubsetMask>& fam);

/// mu(union) == sup mu(A_n) for a nondecreasing family.
/// Throws NotNondecreasing, NotMeasurable.
bool check_continuity_from_below(const Measure& m, const TaggedSeq<SubsetMask>& fam);

/// mu(union) <= sup of partial sums. Throws NotMeasurable.
bool check_boole(const Measure& m, const TaggedSeq<SubsetMask>& fam);

/// `a` lies inside a measurable set of measure zero. `a` need not be measurable.
bool is_negligible(const Measure& m, const SubsetMask& a);

/// f == g outside a negligible set.
bool ae_eq(const Measure& m, const PointFn& f, const PointFn& g);

}  // namespace lebesgue
