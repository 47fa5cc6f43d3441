#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lebesgue/xreal.hpp"

namespace lebesgue {

class FiniteSpace;
using SpacePtr = std::shared_ptr<const FiniteSpace>;

/// Non-empty finite universe of uniquely labelled points. Point indices are
/// positions in the label list.
class FiniteSpace {
public:
  /// Throws Validation on an empty or duplicated label list.
  static SpacePtr make(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  /// Like index_of but throws UnknownLabel.
  std::size_t at(const std::string& label) const;

private:
  explicit FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {}
  std::vector<std::string> labels_;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* who);

/// A subset of a FiniteSpace as one membership bit per point.
class SubsetMask {
public:
  SubsetMask(SpacePtr space, std::vector<bool> bits);

  static SubsetMask empty(SpacePtr space);
  static SubsetMask full(SpacePtr space);
  static SubsetMask of_labels(SpacePtr space, const std::vector<std::string>& labels);
  static SubsetMask of_indices(SpacePtr space, const std::vector<std::size_t>& indices);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return bits_.size(); }
  bool contains(std::size_t i) const { return bits_.at(i); }
  const std::vector<bool>& bits() const { return bits_; }
  std::size_t count() const;
  bool is_empty() const { return count() == 0; }
  bool subset_of(const SubsetMask& other) const;
  bool disjoint_from(const SubsetMask& other) const;
  std::vector<std::size_t> indices() const;
  std::vector<std::string> labels() const;

  SubsetMask complement() const;
  SubsetMask operator|(const SubsetMask& o) const;
  SubsetMask operator&(const SubsetMask& o) const;
  /// Set difference.
  SubsetMask operator-(const SubsetMask& o) const;

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return same_space(a.space_, b.space_) && a.bits_ == b.bits_;
  }

private:
  SpacePtr space_;
  std::vector<bool> bits_;
};

/// Smallest sigma-algebra containing a generator family, stored as its atom
/// partition: two points share an atom iff no generator separates them, and
/// the measurable sets are exactly the unions of atoms. On a finite universe
/// countable unions are finite unions, so this closure is exact.
class SigmaAlgebra {
public:
  static SigmaAlgebra generate(SpacePtr space, std::vector<SubsetMask> gen);
  static SigmaAlgebra discrete(SpacePtr space);
  static SigmaAlgebra trivial(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::vector<SubsetMask>& generator() const { return generator_; }
  const std::vector<SubsetMask>& atoms() const { return atoms_; }
  std::size_t atom_of(std::size_t point) const { return atom_of_.at(point); }
  /// Points of atom k, ascending.
  const std::vector<std::size_t>& atom_points(std::size_t k) const { return atom_points_.at(k); }

  bool is_measurable(const SubsetMask& a) const;
  bool is_discrete() const { return atoms_.size() == space_->size(); }

  /// Every union of atoms, 2^atoms entries; intended for small spaces.
  std::vector<SubsetMask> members() const;

  /// Union of the atoms selected by `which` (one flag per atom).
  SubsetMask union_of_atoms(const std::vector<bool>& which) const;

private:
  SigmaAlgebra() = default;

  SpacePtr space_;
  std::vector<SubsetMask> generator_;
  std::vector<SubsetMask> atoms_;
  std::vector<std::size_t> atom_of_;
  std::vector<std::vector<std::size_t>> atom_points_;
};

/// Same sigma-algebra, decided twice: by comparing atom partitions and by
/// mutual generator measurability. The two answers are checked to agree.
bool sigma_equal_generated(const SigmaAlgebra& sa1, const SigmaAlgebra& sa2);

struct ProductGenerator {
  SpacePtr space;
  std::vector<SubsetMask> gen;
};

/// Space E x F with labels "(e,f)" in E-major order.
SpacePtr product_space(const SpacePtr& e, const SpacePtr& f);

/// AE x AF as a mask over product_space(AE.space, AF.space) (or `prod` when given).
SubsetMask product_mask(const SubsetMask& ae, const SubsetMask& af, const SpacePtr& prod);

/// All AE x AF with AE in genE + {E} and AF in genF + {F}. Without the full
/// sets, AE x F would not always be measurable.
ProductGenerator product_generator(const SpacePtr& e, const std::vector<SubsetMask>& gen_e, const SpacePtr& f,
                                   const std::vector<SubsetMask>& gen_f);

/// A function E -> extended reals.
class PointFn {
public:
  PointFn(SpacePtr space, std::vector<XReal> values);
  static PointFn constant(SpacePtr space, const XReal& c);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  const XReal& operator()(std::size_t i) const { return values_.at(i); }
  const std::vector<XReal>& values() const { return values_; }

  bool nonnegative() const;
  bool all_finite() const;
  /// Distinct values, sorted.
  std::vector<XReal> range() const;
  SubsetMask preimage(const XReal& y) const;
  /// Points where this and `other` differ.
  SubsetMask differs_from(const PointFn& other) const;
  /// Pointwise order.
  bool le(const PointFn& other) const;

  friend bool operator==(const PointFn& a, const PointFn& b) {
    return same_space(a.space_, b.space_) && a.values_ == b.values_;
  }

private:
  SpacePtr space_;
  std::vector<XReal> values_;
};

/// Indicator function of a subset.
PointFn charac(const SubsetMask& a);

/// Measurability against the discrete algebra on the finite range: every
/// preimage of a single value is measurable.
bool is_measurable_fn(const SigmaAlgebra& sa, const PointFn& f);

struct FnSum {
  PointFn fn;
  /// xadd_legal held at every point.
  bool legal;
};

FnSum fn_add(const PointFn& f, const PointFn& g);
PointFn fn_mul(const PointFn& f, const PointFn& g);
PointFn fn_scale(const XReal& a, const PointFn& f);
PointFn fn_min(const PointFn& f, const PointFn& g);
PointFn fn_max(const PointFn& f, const PointFn& g);

}  // namespace lebesgue
