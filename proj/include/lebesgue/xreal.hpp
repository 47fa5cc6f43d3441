#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lebesgue/error.hpp"

namespace lebesgue {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws Error(Parse).
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

/// Extended real number: a rational, +inf or -inf.
///
/// Addition and multiplication are total. The sum of opposite infinities is 0
/// and 0 times an infinity is 0, so neither operation ever fails; the price is
/// that addition stops being associative once both infinities are involved.
class XReal {
public:
  enum class Kind { NegInf, Finite, PosInf };

  XReal() : kind_(Kind::Finite), value_(0) {}
  XReal(const Rational& q) : kind_(Kind::Finite), value_(q) { value_.canonicalize(); }
  XReal(long v) : kind_(Kind::Finite), value_(v) {}
  XReal(int v) : kind_(Kind::Finite), value_(v) {}

  static XReal finite(const Rational& q) { return XReal(q); }
  static XReal pos_inf() { return XReal(Kind::PosInf); }
  static XReal neg_inf() { return XReal(Kind::NegInf); }

  /// Accepts rational literals plus "inf", "+inf", "-inf".
  static XReal parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_zero() const noexcept { return is_finite() && sgn(value_) == 0; }

  /// The rational value; only meaningful when is_finite().
  const Rational& value() const noexcept { return value_; }

  /// -1, 0 or 1.
  int sign() const noexcept;

  XReal operator-() const;

  std::string to_string() const;

  friend bool operator==(const XReal& a, const XReal& b);
  friend std::strong_ordering operator<=>(const XReal& a, const XReal& b);

private:
  explicit XReal(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const XReal& x);

XReal xadd(const XReal& a, const XReal& b);

/// False only for the pair {+inf, -inf}, where xadd falls back to 0.
bool xadd_legal(const XReal& a, const XReal& b);

XReal xmul(const XReal& a, const XReal& b);

const XReal& xmin(const XReal& a, const XReal& b);
const XReal& xmax(const XReal& a, const XReal& b);

/// Right fold of xadd seeded with 0: l0 + (l1 + (... + (ln + 0))).
XReal sum_list(const std::vector<XReal>& l);

template <typename T, typename F>
XReal sum_map(const std::vector<T>& l, F&& f) {
  std::vector<XReal> image;
  image.reserve(l.size());
  for (const auto& x : l) image.push_back(std::invoke(f, x));
  return sum_list(image);
}

/// Finite surrogate for an N-indexed sequence: an explicit prefix followed
/// either by the last prefix element repeated forever, or by an unknown tail.
template <typename T>
struct TaggedSeq {
  enum class Tail { ConstantAfterPrefix, Undefined };

  std::vector<T> prefix;
  Tail tail = Tail::ConstantAfterPrefix;

  static TaggedSeq constant_after(std::vector<T> p) {
    return TaggedSeq{std::move(p), Tail::ConstantAfterPrefix};
  }

  bool stabilizes() const { return tail == Tail::ConstantAfterPrefix && !prefix.empty(); }

  /// Term n, valid for any n when stabilizes().
  const T& term(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    if (!stabilizes()) throw Error(ErrorKind::UndefinedTail, "term beyond an undefined tail");
    return prefix.back();
  }

  void require_stable(std::string_view who) const {
    if (tail != Tail::ConstantAfterPrefix)
      throw Error(ErrorKind::UndefinedTail, std::string(who) + " needs a constant tail");
    if (prefix.empty())
      throw Error(ErrorKind::UndefinedTail, std::string(who) + " needs a non-empty prefix");
  }
};

/// Supremum of an eventually constant sequence, i.e. the prefix maximum.
XReal sup_seq(const TaggedSeq<XReal>& s);

/// sup over m of inf over n >= m, for an eventually constant sequence.
XReal liminf_seq(const TaggedSeq<XReal>& s);

}  // namespace lebesgue
