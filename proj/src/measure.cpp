#include "lebesgue/measure.hpp"

#include <algorithm>

namespace lebesgue {

Measure Measure::from_atom_weights(SigmaAlgebra sa, std::vector<XReal> weights) {
  if (weights.size() != sa.atoms().size())
    throw Error(ErrorKind::SpaceMismatch, "one weight per atom expected");
  for (const auto& w : weights)
    if (w.sign() < 0) throw Error(ErrorKind::NegativeValue, "measure weight " + w.to_string() + " is negative");
  return Measure(std::move(sa), std::move(weights));
}

Measure Measure::counting(SigmaAlgebra sa) {
  if (!sa.is_discrete()) throw Error(ErrorKind::NotDiscrete, "counting measure needs every singleton measurable");
  std::vector<XReal> w(sa.atoms().size(), XReal(1));
  return from_atom_weights(std::move(sa), std::move(w));
}

Measure Measure::weighted(SigmaAlgebra sa, const std::vector<XReal>& point_weights) {
  if (point_weights.size() != sa.space()->size())
    throw Error(ErrorKind::SpaceMismatch, "one weight per point expected");
  std::vector<XReal> w;
  for (std::size_t k = 0; k < sa.atoms().size(); ++k) {
    const auto& members = sa.atom_points(k);
    XReal total(0);
    for (auto i : members) {
      if (point_weights[i] != point_weights[members.front()])
        throw Error(ErrorKind::NotConstantOnAtoms, "weights differ inside the atom of '" + sa.space()->label(i) + "'");
      if (point_weights[i].sign() < 0)
        throw Error(ErrorKind::NegativeValue, "measure weight " + point_weights[i].to_string() + " is negative");
      total = xadd(total, point_weights[i]);
    }
    w.push_back(total);
  }
  return from_atom_weights(std::move(sa), std::move(w));
}

Measure Measure::dirac(SigmaAlgebra sa, const std::string& a) {
  const auto point = sa.space()->at(a);
  return dirac(std::move(sa), point);
}

Measure Measure::dirac(SigmaAlgebra sa, std::size_t point) {
  std::vector<XReal> w(sa.atoms().size(), XReal(0));
  w.at(sa.atom_of(point)) = XReal(1);
  return from_atom_weights(std::move(sa), std::move(w));
}

XReal Measure::operator()(const SubsetMask& a) const {
  require_same_space(space(), a.space(), "measure_of");
  if (!sa_.is_measurable(a)) throw Error(ErrorKind::NotMeasurable, "measure of a non-measurable set");
  if (override_ && override_->first == a) return override_->second;
  std::vector<XReal> inside;
  for (std::size_t k = 0; k < sa_.atoms().size(); ++k)
    if (a.contains(sa_.atom_points(k).front())) inside.push_back(weights_[k]);
  return sum_list(inside);
}

SubsetMask Measure::null_set() const {
  std::vector<bool> which(weights_.size());
  for (std::size_t k = 0; k < weights_.size(); ++k) which[k] = weights_[k].is_zero();
  return sa_.union_of_atoms(which);
}

Measure Measure::corrupted(const SubsetMask& target, XReal value) const {
  Measure copy = *this;
  copy.override_.emplace(target, std::move(value));
  return copy;
}

SubsetMask partial_union(const TaggedSeq<SubsetMask>& fam, std::size_t n) {
  SubsetMask acc = fam.term(0);
  for (std::size_t i = 1; i <= n; ++i) acc = acc | fam.term(i);
  return acc;
}

SubsetMask family_union(const TaggedSeq<SubsetMask>& fam) {
  fam.require_stable("family_union");
  return partial_union(fam, fam.prefix.size() - 1);
}

TaggedSeq<SubsetMask> layers(const TaggedSeq<SubsetMask>& fam) {
  fam.require_stable("layers");
  TaggedSeq<SubsetMask> out;
  out.prefix.push_back(fam.prefix.front());
  for (std::size_t n = 1; n < fam.prefix.size(); ++n) out.prefix.push_back(fam.prefix[n] - fam.prefix[n - 1]);
  out.prefix.push_back(SubsetMask::empty(fam.prefix.front().space()));
  return out;
}

namespace {

void require_measurable(const Measure& m, const TaggedSeq<SubsetMask>& fam) {
  for (const auto& a : fam.prefix)
    if (!m.sa().is_measurable(a)) throw Error(ErrorKind::NotMeasurable, "family member is not measurable");
}

}  // namespace

XReal sup_partial_sums(const Measure& m, const TaggedSeq<SubsetMask>& fam) {
  fam.require_stable("sup_partial_sums");
  TaggedSeq<XReal> sums;
  XReal acc(0);
  for (const auto& a : fam.prefix) {
    acc = xadd(acc, m(a));
    sums.prefix.push_back(acc);
  }
  const XReal tail = m(fam.prefix.back());
  if (tail.sign() > 0) sums.prefix.push_back(XReal::pos_inf());
  return sup_seq(sums);
}

bool check_sigma_additivity(const Measure& m, const TaggedSeq<SubsetMask>& fam) {
  fam.require_stable("check_sigma_additivity");
  require_measurable(m, fam);
  const auto& p = fam.prefix;
  if (!p.back().is_empty()) throw Error(ErrorKind::NotDisjoint, "a nonempty set repeats forever in the tail");
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!p[i].disjoint_from(p[j])) throw Error(ErrorKind::NotDisjoint, "family members overlap");
  return m(family_union(fam)) == sup_partial_sums(m, fam);
}

bool check_continuity_from_below(const Measure& m, const TaggedSeq<SubsetMask>& fam) {
  fam.require_stable("check_continuity_from_below");
  require_measurable(m, fam);
  for (std::size_t n = 1; n < fam.prefix.size(); ++n)
    if (!fam.prefix[n - 1].subset_of(fam.prefix[n]))
      throw Error(ErrorKind::NotNondecreasing, "family is not nondecreasing");
  TaggedSeq<XReal> values;
  for (const auto& a : fam.prefix) values.prefix.push_back(m(a));
  return m(family_union(fam)) == sup_seq(values);
}

bool check_boole(const Measure& m, const TaggedSeq<SubsetMask>& fam) {
  fam.require_stable("check_boole");
  require_measurable(m, fam);
  return m(family_union(fam)) <= sup_partial_sums(m, fam);
}

bool is_negligible(const Measure& m, const SubsetMask& a) { return a.subset_of(m.null_set()); }

bool ae_eq(const Measure& m, const PointFn& f, const PointFn& g) {
  require_same_space(m.space(), f.space(), "ae_eq");
  return is_negligible(m, f.differs_from(g));
}

}  // namespace lebesgue
