#include "lebesgue/lintp.hpp"

#include <algorithm>

namespace lebesgue {

Rational dyadic_floor(const Rational& q, unsigned n) {
  Integer scaled = q.get_num();
  scaled <<= n;
  Integer floor;
  mpz_fdiv_q(floor.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Integer denom = 1;
  denom <<= n;
  Rational out(floor, denom);
  out.canonicalize();
  return out;
}

std::optional<unsigned> dyadic_exponent(const Rational& q) {
  const auto den = q.get_den_mpz_t();
  if (mpz_popcount(den) != 1) return std::nullopt;
  return static_cast<unsigned>(mpz_scan1(den, 0));
}

namespace {

void require_integrand(const SigmaAlgebra& sa, const PointFn& f) {
  require_same_space(sa.space(), f.space(), "integrand");
  if (!f.nonnegative()) throw Error(ErrorKind::NegativeValue, "integrand takes a negative value");
  if (!is_measurable_fn(sa, f)) throw Error(ErrorKind::NotMeasurable, "integrand is not measurable");
}

// f with its infinite values replaced by 0.
PointFn finite_part(const PointFn& f) {
  std::vector<XReal> v;
  for (const auto& x : f.values()) v.push_back(x.is_finite() ? x : XReal(0));
  return PointFn(f.space(), std::move(v));
}

}  // namespace

SimpleFunction mk_adapted_term(const SigmaAlgebra& sa, const PointFn& f, unsigned n) {
  require_integrand(sa, f);
  const Rational cap(n);
  std::vector<XReal> v;
  v.reserve(f.size());
  for (const auto& x : f.values()) {
    if (x.is_finite() && x.value() < cap)
      v.emplace_back(dyadic_floor(x.value(), n));
    else
      v.emplace_back(cap);
  }
  return make_sf(sa, PointFn(f.space(), std::move(v)));
}

std::optional<unsigned> adapted_exact_depth(const PointFn& f) {
  unsigned depth = 0;
  for (const auto& x : f.values()) {
    if (!x.is_finite()) continue;
    const auto e = dyadic_exponent(x.value());
    if (!e) return std::nullopt;
    Integer above;
    mpz_fdiv_q(above.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
    above += 1;
    depth = std::max({depth, *e, static_cast<unsigned>(above.get_ui())});
  }
  return depth;
}

XReal lint_p(const Measure& m, const PointFn& f) {
  require_integrand(m.sa(), f);
  const XReal infinite_mass = m(f.preimage(XReal::pos_inf()));
  if (const auto depth = adapted_exact_depth(f)) {
    if (infinite_mass.sign() > 0) return XReal::pos_inf();
    return lint_sfp(m, mk_adapted_term(m.sa(), f, *depth));
  }
  const XReal finite = lint_sfp(m, make_sf(m.sa(), finite_part(f)));
  return xadd(finite, xmul(XReal::pos_inf(), infinite_mass));
}

std::vector<AdaptedRow> adapted_table(const Measure& m, const PointFn& f, unsigned n_max) {
  if (n_max == 0) throw Error(ErrorKind::InvalidIndex, "n_max must be at least 1");
  const XReal total = lint_p(m, f);
  std::vector<AdaptedRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    XReal integral = lint_sfp(m, mk_adapted_term(m.sa(), f, n));
    XReal gap = integral == total ? XReal(0) : xadd(total, -integral);
    rows.push_back({n, std::move(integral), std::move(gap)});
  }
  return rows;
}

namespace {

template <typename Reduce>
PointFn pointwise_reduce(const TaggedSeq<PointFn>& fam, const char* who, Reduce reduce) {
  fam.require_stable(who);
  const auto& space = fam.prefix.front().space();
  std::vector<XReal> v;
  for (std::size_t x = 0; x < space->size(); ++x) {
    TaggedSeq<XReal> values;
    for (const auto& f : fam.prefix) {
      require_same_space(space, f.space(), who);
      values.prefix.push_back(f(x));
    }
    v.push_back(reduce(values));
  }
  return PointFn(space, std::move(v));
}

TaggedSeq<XReal> integrals(const Measure& m, const TaggedSeq<PointFn>& fam) {
  TaggedSeq<XReal> out;
  for (const auto& f : fam.prefix) out.prefix.push_back(lint_p(m, f));
  return out;
}

}  // namespace

PointFn pointwise_sup(const TaggedSeq<PointFn>& fam) { return pointwise_reduce(fam, "pointwise_sup", sup_seq); }

PointFn pointwise_liminf(const TaggedSeq<PointFn>& fam) {
  return pointwise_reduce(fam, "pointwise_liminf", liminf_seq);
}

bool check_beppo_levi(const Measure& m, const TaggedSeq<PointFn>& fam) {
  fam.require_stable("check_beppo_levi");
  for (const auto& f : fam.prefix) require_integrand(m.sa(), f);
  for (std::size_t n = 1; n < fam.prefix.size(); ++n)
    if (!fam.prefix[n - 1].le(fam.prefix[n])) throw Error(ErrorKind::NotNondecreasing, "family is not nondecreasing");
  return lint_p(m, pointwise_sup(fam)) == sup_seq(integrals(m, fam));
}

FatouSides fatou_sides(const Measure& m, const TaggedSeq<PointFn>& fam) {
  fam.require_stable("check_fatou");
  for (const auto& f : fam.prefix) require_integrand(m.sa(), f);
  return {lint_p(m, pointwise_liminf(fam)), liminf_seq(integrals(m, fam))};
}

FatouSides fatou_sides_periodic(const Measure& m, const std::vector<PointFn>& cycle) {
  if (cycle.empty()) throw Error(ErrorKind::UndefinedTail, "empty cycle");
  for (const auto& f : cycle) require_integrand(m.sa(), f);
  PointFn lower = cycle.front();
  XReal lowest = lint_p(m, cycle.front());
  for (const auto& f : cycle) {
    lower = fn_min(lower, f);
    lowest = xmin(lowest, lint_p(m, f));
  }
  return {lint_p(m, lower), lowest};
}

bool check_fatou(const Measure& m, const TaggedSeq<PointFn>& fam) { return fatou_sides(m, fam).holds(); }

namespace {

// `inside` where mask holds, `outside` elsewhere.
PointFn splice(const SubsetMask& mask, const PointFn& inside, const PointFn& outside) {
  std::vector<XReal> v;
  for (std::size_t x = 0; x < mask.size(); ++x) v.push_back(mask.contains(x) ? inside(x) : outside(x));
  return PointFn(mask.space(), std::move(v));
}

}  // namespace

LintPReport lint_p_props(const Measure& m, const PointFn& f, const PointFn& g, const XReal& a, const SubsetMask& A) {
  if (a.sign() < 0) throw Error(ErrorKind::NegativeScalar, "scaling by " + a.to_string());
  if (!m.sa().is_measurable(A)) throw Error(ErrorKind::NotMeasurable, "restriction set is not measurable");
  auto I = [&](const PointFn& h) { return lint_p(m, h); };
  const XReal If = I(f);
  const XReal Ig = I(g);
  const PointFn on_A = charac(A);
  const PointFn off_A = charac(A.complement());
  const PointFn zero = PointFn::constant(f.space(), XReal(0));

  LintPReport r;
  r.additivity = I(fn_add(f, g).fn) == xadd(If, Ig);
  r.scaling = I(fn_scale(a, f)) == xmul(a, If);
  r.ae_definite = (If == XReal(0)) == ae_eq(m, f, zero);
  r.decomposition = If == xadd(I(fn_mul(f, on_A)), I(fn_mul(f, off_A)));

  const PointFn f_changed_on_null = splice(m.null_set(), g, f);
  r.ae_eq_compat = (!ae_eq(m, f, g) || If == Ig) && ae_eq(m, f, f_changed_on_null) && If == I(f_changed_on_null);

  const XReal Imin = I(fn_min(f, g));
  r.monotone = (!f.le(g) || If <= Ig) && Imin <= If && Imin <= Ig;

  const PointFn h = splice(A, f, g);
  r.when_charac = I(fn_mul(f, on_A)) == I(fn_mul(h, on_A));
  return r;
}

XReal lint_p_dirac(const SigmaAlgebra& sa, std::size_t a, const PointFn& f) {
  const XReal v = lint_p(Measure::dirac(sa, a), f);
  if (v != f(a)) throw std::logic_error("integral against a Dirac mass differs from the point value");
  return v;
}

XReal lint_p_dirac(const SigmaAlgebra& sa, const std::string& a, const PointFn& f) {
  return lint_p_dirac(sa, sa.space()->at(a), f);
}

}  // namespace lebesgue
