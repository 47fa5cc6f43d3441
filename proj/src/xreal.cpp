#include "lebesgue/xreal.hpp"

#include <algorithm>
#include <cctype>

namespace lebesgue {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UndefinedTail: return "UndefinedTail";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotMeasurable: return "NotMeasurable";
    case ErrorKind::NotConstantOnAtoms: return "NotConstantOnAtoms";
    case ErrorKind::NotDiscrete: return "NotDiscrete";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotNondecreasing: return "NotNondecreasing";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::PreimageNotMeasurable: return "PreimageNotMeasurable";
    case ErrorKind::NegativeValue: return "NegativeValue";
    case ErrorKind::NegativeScalar: return "NegativeScalar";
    case ErrorKind::ValueNotInCanon: return "ValueNotInCanon";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::Parse, "bad rational literal '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

XReal XReal::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return XReal(parse_rational(text));
}

int XReal::sign() const noexcept {
  switch (kind_) {
    case Kind::NegInf: return -1;
    case Kind::PosInf: return 1;
    case Kind::Finite: return sgn(value_);
  }
  return 0;
}

XReal XReal::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: return XReal(Rational(-value_));
  }
  return *this;
}

std::string XReal::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: return rational_to_string(value_);
  }
  return {};
}

bool operator==(const XReal& a, const XReal& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const XReal& a, const XReal& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  return cmp(a.value_, b.value_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const XReal& x) { return os << x.to_string(); }

XReal xadd(const XReal& a, const XReal& b) {
  if (a.is_finite() && b.is_finite()) return XReal(Rational(a.value() + b.value()));
  if (a.is_finite()) return b;
  if (b.is_finite()) return a;
  if (a.kind() == b.kind()) return a;
  return XReal(0);
}

bool xadd_legal(const XReal& a, const XReal& b) {
  return !((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()));
}

XReal xmul(const XReal& a, const XReal& b) {
  if (a.is_finite() && b.is_finite()) return XReal(Rational(a.value() * b.value()));
  const int s = a.sign() * b.sign();
  if (s == 0) return XReal(0);
  return s > 0 ? XReal::pos_inf() : XReal::neg_inf();
}

const XReal& xmin(const XReal& a, const XReal& b) { return b < a ? b : a; }
const XReal& xmax(const XReal& a, const XReal& b) { return a < b ? b : a; }

XReal sum_list(const std::vector<XReal>& l) {
  XReal acc(0);
  for (auto it = l.rbegin(); it != l.rend(); ++it) acc = xadd(*it, acc);
  return acc;
}

XReal sup_seq(const TaggedSeq<XReal>& s) {
  s.require_stable("sup_seq");
  return *std::max_element(s.prefix.begin(), s.prefix.end());
}

XReal liminf_seq(const TaggedSeq<XReal>& s) {
  s.require_stable("liminf_seq");
  // Suffix infima, scanning from the tail; the tail value closes every suffix.
  XReal inf = s.prefix.back();
  XReal best = inf;
  for (auto it = s.prefix.rbegin(); it != s.prefix.rend(); ++it) {
    inf = xmin(inf, *it);
    best = xmax(best, inf);
  }
  return best;
}

}  // namespace lebesgue
