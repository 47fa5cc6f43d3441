#pragma once

#include <vector>

#include "lebesgue/measure.hpp"
#include "lebesgue/sigma.hpp"
#include "lebesgue/xreal.hpp"

namespace lebesgue {

/// Subsequence of `l` satisfying `p`, order preserved.
template <typename T, typename P>
std::vector<T> select(P&& p, const std::vector<T>& l) {
  std::vector<T> out;
  for (const auto& x : l)
    if (p(x)) out.push_back(x);
  return out;
}

/// The canonical value list of `f` from any list covering its values:
/// duplicates dropped, then values without a preimage, then sorted.
/// Throws MissingValue if a value of f is absent from `l`, and Validation if
/// f takes an infinite value.
std::vector<Rational> canonize(const PointFn& f, const std::vector<Rational>& l);

/// A rational-valued measurable function with finitely many values, carrying
/// its canonical (strictly increasing, exactly attained) value list.
class SimpleFunction {
public:
  const PointFn& fn() const { return fn_; }
  const std::vector<Rational>& canon() const { return canon_; }
  const SigmaAlgebra& sa() const { return sa_; }
  const SpacePtr& space() const { return fn_.space(); }

  Rational operator()(std::size_t x) const { return fn_(x).value(); }
  SubsetMask preimage(const Rational& y) const { return fn_.preimage(XReal(y)); }
  bool nonnegative() const { return canon_.empty() || sgn(canon_.front()) >= 0; }

  friend SimpleFunction make_sf(const SigmaAlgebra&, const PointFn&, const std::vector<Rational>&);

  friend bool operator==(const SimpleFunction& a, const SimpleFunction& b) {
    return a.fn_ == b.fn_ && a.canon_ == b.canon_;
  }

private:
  SimpleFunction(PointFn fn, std::vector<Rational> canon, SigmaAlgebra sa)
      : fn_(std::move(fn)), canon_(std::move(canon)), sa_(std::move(sa)) {}

  PointFn fn_;
  std::vector<Rational> canon_;
  SigmaAlgebra sa_;
};

/// Throws MissingValue, PreimageNotMeasurable, SpaceMismatch.
SimpleFunction make_sf(const SigmaAlgebra& sa, const PointFn& f, const std::vector<Rational>& hint);
/// Uses the raw value list of f as the hint.
SimpleFunction make_sf(const SigmaAlgebra& sa, const PointFn& f);

/// sum over y in canon of y * charac(preimage(y))(x); always equals s(x).
XReal sf_reconstruct(const SimpleFunction& s, std::size_t x);

/// sum over y in canon of y * mu(preimage(y)), folded in canon order.
/// Throws SpaceMismatch, NegativeValue.
XReal lint_sfp(const Measure& m, const SimpleFunction& s);

/// Pairwise sums of two value lists, the hint for the value list of s + t.
std::vector<Rational> cartesian_plus(const std::vector<Rational>& l1, const std::vector<Rational>& l2);

SimpleFunction sf_add(const SimpleFunction& s, const SimpleFunction& t);

/// Throws NegativeScalar for a < 0.
SimpleFunction sf_scale(const Rational& a, const SimpleFunction& s);

/// Both sides of the change of variable behind additivity, for y in canon(s):
///   sum_{z in canon(t)} (y+z) mu(s=y, t=z)  and
///   sum_{w in canon(s+t)} w mu(s=y, s+t=w).
struct ChangeOfVariable {
  XReal by_t_values;
  XReal by_sum_values;
  bool holds() const { return by_t_values == by_sum_values; }
};

ChangeOfVariable change_of_variable_sides(const Measure& m, const SimpleFunction& s, const SimpleFunction& t,
                                          const Rational& y);

/// Throws ValueNotInCanon if y is not a value of s.
bool check_change_of_variable(const Measure& m, const SimpleFunction& s, const SimpleFunction& t, const Rational& y);

}  // namespace lebesgue
