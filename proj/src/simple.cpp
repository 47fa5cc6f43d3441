#include "lebesgue/simple.hpp"

#include <algorithm>

namespace lebesgue {

namespace {

std::vector<Rational> nodup(const std::vector<Rational>& l) {
  std::vector<Rational> out;
  for (const auto& y : l)
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  return out;
}

void require_rational_valued(const PointFn& f) {
  if (!f.all_finite()) throw Error(ErrorKind::Validation, "simple functions take finite values only");
}

}  // namespace

std::vector<Rational> canonize(const PointFn& f, const std::vector<Rational>& l) {
  require_rational_valued(f);
  for (const auto& v : f.values())
    if (std::find(l.begin(), l.end(), v.value()) == l.end())
      throw Error(ErrorKind::MissingValue, "value " + v.to_string() + " is missing from the list");

  auto attained = [&](const Rational& y) {
    return std::any_of(f.values().begin(), f.values().end(), [&](const XReal& v) { return v.value() == y; });
  };
  auto out = select(attained, nodup(l));
  std::sort(out.begin(), out.end());
  return out;
}

SimpleFunction make_sf(const SigmaAlgebra& sa, const PointFn& f, const std::vector<Rational>& hint) {
  require_same_space(sa.space(), f.space(), "make_sf");
  auto canon = canonize(f, hint);
  for (const auto& y : canon)
    if (!sa.is_measurable(f.preimage(XReal(y))))
      throw Error(ErrorKind::PreimageNotMeasurable, "preimage of " + rational_to_string(y) + " is not measurable");
  return SimpleFunction(f, std::move(canon), sa);
}

SimpleFunction make_sf(const SigmaAlgebra& sa, const PointFn& f) {
  require_rational_valued(f);
  std::vector<Rational> hint;
  for (const auto& v : f.values()) hint.push_back(v.value());
  return make_sf(sa, f, hint);
}

XReal sf_reconstruct(const SimpleFunction& s, std::size_t x) {
  return sum_map(s.canon(), [&](const Rational& y) { return xmul(XReal(y), charac(s.preimage(y))(x)); });
}

XReal lint_sfp(const Measure& m, const SimpleFunction& s) {
  require_same_space(m.space(), s.space(), "lint_sfp");
  if (!s.nonnegative()) throw Error(ErrorKind::NegativeValue, "integrand takes a negative value");
  return sum_map(s.canon(), [&](const Rational& y) { return xmul(XReal(y), m(s.preimage(y))); });
}

std::vector<Rational> cartesian_plus(const std::vector<Rational>& l1, const std::vector<Rational>& l2) {
  std::vector<Rational> out;
  out.reserve(l1.size() * l2.size());
  for (const auto& a : l1)
    for (const auto& b : l2) out.push_back(a + b);
  return out;
}

SimpleFunction sf_add(const SimpleFunction& s, const SimpleFunction& t) {
  require_same_space(s.space(), t.space(), "sf_add");
  const auto sum = fn_add(s.fn(), t.fn()).fn;
  return make_sf(s.sa(), sum, cartesian_plus(s.canon(), t.canon()));
}

SimpleFunction sf_scale(const Rational& a, const SimpleFunction& s) {
  if (sgn(a) < 0) throw Error(ErrorKind::NegativeScalar, "scaling by " + rational_to_string(a));
  std::vector<Rational> hint;
  for (const auto& y : s.canon()) hint.push_back(a * y);
  return make_sf(s.sa(), fn_scale(XReal(a), s.fn()), hint);
}

ChangeOfVariable change_of_variable_sides(const Measure& m, const SimpleFunction& s, const SimpleFunction& t,
                                          const Rational& y) {
  if (std::find(s.canon().begin(), s.canon().end(), y) == s.canon().end())
    throw Error(ErrorKind::ValueNotInCanon, rational_to_string(y) + " is not a value of the function");
  const auto st = sf_add(s, t);
  const auto level = s.preimage(y);
  ChangeOfVariable out;
  out.by_t_values = sum_map(t.canon(), [&](const Rational& z) {
    return xmul(XReal(Rational(y + z)), m(level & t.preimage(z)));
  });
  out.by_sum_values = sum_map(st.canon(), [&](const Rational& w) { return xmul(XReal(w), m(level & st.preimage(w))); });
  return out;
}

bool check_change_of_variable(const Measure& m, const SimpleFunction& s, const SimpleFunction& t, const Rational& y) {
  return change_of_variable_sides(m, s, t, y).holds();
}

}  // namespace lebesgue
