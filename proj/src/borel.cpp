#include "lebesgue/borel.hpp"

#include <algorithm>

namespace lebesgue::borel {

Integer pair_encode(const Integer& n1, const Integer& n2) {
  const Integer w = n1 + n2;
  return w * (w + 1) / 2 + n2;
}

std::pair<Integer, Integer> pair_decode(const Integer& n) {
  Integer w = (sqrt(Integer(8 * n + 1)) - 1) / 2;
  const Integer t = w * (w + 1) / 2;
  Integer n2 = n - t;
  Integer n1 = w - n2;
  return {n1, n2};
}

Integer z_to_nat(const Integer& z) { return z >= 0 ? Integer(2 * z) : Integer(-2 * z - 1); }

Integer nat_to_z(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return n / 2;
  return -(n + 1) / 2;
}

namespace {

// Calkin-Wilf tree in breadth-first order, root 1/1 at index 1; the children
// of a/b are a/(a+b) (bit 0) and (a+b)/b (bit 1).
Rational calkin_wilf(const Integer& index) {
  Integer a = 1, b = 1;
  const auto bits = mpz_sizeinbase(index.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    if (mpz_tstbit(index.get_mpz_t(), i))
      a += b;
    else
      b += a;
  }
  return Rational(a, b);
}

Integer calkin_wilf_index(const Rational& q) {
  Integer a = q.get_num(), b = q.get_den();
  // Runs of equal bits, collected leaf to root.
  std::vector<std::pair<bool, Integer>> runs;
  while (!(a == 1 && b == 1)) {
    if (a > b) {
      Integer k = (a - 1) / b;
      a -= k * b;
      runs.emplace_back(true, k);
    } else {
      Integer k = (b - 1) / a;
      b -= k * a;
      runs.emplace_back(false, k);
    }
  }
  Integer index = 1;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    const unsigned long k = it->second.get_ui();
    index <<= k;
    if (it->first) index += (Integer(1) << k) - 1;
  }
  return index;
}

}  // namespace

Rational nat_to_q(const Integer& n) {
  if (n == 0) return Rational(0);
  const Integer k = (n + 1) / 2;
  Rational q = calkin_wilf(k);
  if (mpz_even_p(n.get_mpz_t())) q = -q;
  return q;
}

Integer q_to_nat(const Rational& q) {
  if (sgn(q) == 0) return 0;
  const Integer k = calkin_wilf_index(abs(q));
  return sgn(q) > 0 ? Integer(2 * k - 1) : Integer(2 * k);
}

Q2 nat_to_q2(const Integer& n) {
  auto [i, j] = pair_decode(n);
  return {nat_to_q(i), nat_to_q(j)};
}

Integer q2_to_nat(const Q2& q) { return pair_encode(q_to_nat(q.first), q_to_nat(q.second)); }

bool RatInterval::contains(const Rational& x) const {
  switch (kind) {
    case Kind::Open: return lo < x && x < hi;
    case Kind::Closed: return lo <= x && x <= hi;
    case Kind::ClosedOpen: return lo <= x && x < hi;
  }
  return false;
}

OpenSetFU::OpenSetFU(std::vector<RatInterval> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_)
    if (p.kind != RatInterval::Kind::Open) throw Error(ErrorKind::InvalidInterval, "open sets take open parts only");
}

OpenSetFU OpenSetFU::normalized() const {
  std::vector<RatInterval> live;
  for (const auto& p : parts_)
    if (!p.empty()) live.push_back(p);
  std::sort(live.begin(), live.end(), [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
  std::vector<RatInterval> merged;
  for (auto& p : live) {
    if (!merged.empty() && p.lo < merged.back().hi) {
      if (p.hi > merged.back().hi) merged.back().hi = p.hi;
    } else {
      merged.push_back(p);
    }
  }
  return OpenSetFU(std::move(merged));
}

bool OpenSetFU::contains(const Rational& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const RatInterval& p) { return p.contains(x); });
}

RatInterval topo_basis_r(const Integer& n) {
  auto [q1, q2] = nat_to_q2(n);
  return RatInterval::open(q1, q2);
}

std::pair<RatInterval, RatInterval> topo_basis_r2(const Integer& n) {
  auto [i, j] = pair_decode(n);
  return {topo_basis_r(i), topo_basis_r(j)};
}

bool box_contains(const std::pair<RatInterval, RatInterval>& box, const Rational& x, const Rational& y) {
  return box.first.contains(x) && box.second.contains(y);
}

std::pair<XReal, XReal> connected_component(const OpenSetFU& a, const Rational& x) {
  const OpenSetFU n = a.normalized();
  for (const auto& c : n.parts())
    if (c.contains(x)) return {XReal(c.lo), XReal(c.hi)};
  return {XReal(x), XReal(x)};
}

std::set<Integer> second_countable_witness(const OpenSetFU& a) {
  std::set<Integer> out;
  const OpenSetFU n = a.normalized();
  for (const auto& c : n.parts()) out.insert(q2_to_nat({c.lo, c.hi}));
  return out;
}

OpenSetFU from_basis(const std::set<Integer>& indices) {
  std::vector<RatInterval> parts;
  for (const auto& n : indices) parts.push_back(topo_basis_r(n));
  return OpenSetFU(std::move(parts));
}

RatInterval cc_as_nested_open(const Rational& a, const Rational& b, const Integer& k) {
  if (a > b) throw Error(ErrorKind::InvalidInterval, "lower bound above upper bound");
  if (k <= 0) throw Error(ErrorKind::InvalidIndex, "nesting index must be positive");
  const Rational eps(Integer(1), k);
  return RatInterval::open(a - eps, b + eps);
}

}  // namespace lebesgue::borel
