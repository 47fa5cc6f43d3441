#pragma once

#include <set>
#include <utility>
#include <vector>

#include "lebesgue/xreal.hpp"

namespace lebesgue::borel {

// Perfect bijections between N and N^2, Z, Q and Q^2. Naturals are unbounded
// integers: Calkin-Wilf indices grow exponentially with the continued
// fraction length of the rational.

Integer pair_encode(const Integer& n1, const Integer& n2);
std::pair<Integer, Integer> pair_decode(const Integer& n);

Integer z_to_nat(const Integer& z);
Integer nat_to_z(const Integer& n);

Rational nat_to_q(const Integer& n);
Integer q_to_nat(const Rational& q);

using Q2 = std::pair<Rational, Rational>;

Q2 nat_to_q2(const Integer& n);
Integer q2_to_nat(const Q2& q);

struct RatInterval {
  enum class Kind { Open, Closed, ClosedOpen };

  Rational lo;
  Rational hi;
  Kind kind = Kind::Open;

  static RatInterval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), Kind::Open}; }
  static RatInterval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), Kind::Closed}; }

  bool empty() const { return kind == Kind::Closed ? lo > hi : lo >= hi; }
  bool contains(const Rational& x) const;

  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

/// Finite union of open intervals with rational endpoints.
class OpenSetFU {
public:
  OpenSetFU() = default;
  /// Throws InvalidInterval if a part is not open.
  explicit OpenSetFU(std::vector<RatInterval> parts);

  const std::vector<RatInterval>& parts() const { return parts_; }

  /// Maximal connected components, non-empty, pairwise disjoint, sorted by lo.
  /// Touching parts such as (0,1) and (1,2) stay separate: 1 is not a member.
  OpenSetFU normalized() const;

  bool contains(const Rational& x) const;

  friend bool operator==(const OpenSetFU&, const OpenSetFU&) = default;

private:
  std::vector<RatInterval> parts_;
};

/// The open interval (q1, q2) for (q1, q2) = nat_to_q2(n), possibly empty.
RatInterval topo_basis_r(const Integer& n);

/// Open box of R^2 built from the basis of R along both axes.
std::pair<RatInterval, RatInterval> topo_basis_r2(const Integer& n);

bool box_contains(const std::pair<RatInterval, RatInterval>& box, const Rational& x, const Rational& y);

/// Bounds (glb, lub) of the connected component of `a` around x, or (x, x)
/// when x is not in `a`.
std::pair<XReal, XReal> connected_component(const OpenSetFU& a, const Rational& x);

/// Basis indices whose union is exactly `a`.
std::set<Integer> second_countable_witness(const OpenSetFU& a);

/// Rebuilds the open set denoted by a set of basis indices.
OpenSetFU from_basis(const std::set<Integer>& indices);

/// (a - 1/k, b + 1/k); these decrease to [a, b] as k grows.
RatInterval cc_as_nested_open(const Rational& a, const Rational& b, const Integer& k);

}  // namespace lebesgue::borel
