#pragma once

#include <cstdint>
#include <vector>

#include "lebesgue/measure.hpp"
#include "lebesgue/simple.hpp"

namespace lebesgue {

/// floor(2^n q) / 2^n, computed on integers.
Rational dyadic_floor(const Rational& q, unsigned n);

/// Smallest n with 2^n q an integer, or nullopt if q is not dyadic.
std::optional<unsigned> dyadic_exponent(const Rational& q);

/// Term n of the adapted sequence of f:
///   phi_n(x) = floor(2^n f(x)) / 2^n   when f(x) < n,
///   phi_n(x) = n                       otherwise (including f(x) = inf).
/// Throws NegativeValue, NotMeasurable, SpaceMismatch.
SimpleFunction mk_adapted_term(const SigmaAlgebra& sa, const PointFn& f, unsigned n);

/// Integral of a nonnegative measurable function: the supremum of lint_sfp
/// over the nonnegative simple functions below f.
///
/// When every finite value of f is dyadic the adapted sequence becomes exact
/// at a computable depth N and the result is lint_sfp(phi_N), or inf if f is
/// infinite on a set of positive measure. Otherwise the sequence only
/// converges, and the result is its exact limit: the integral of the finite
/// part of f plus inf * mu(f = inf).
/// Throws NegativeValue, NotMeasurable, SpaceMismatch.
XReal lint_p(const Measure& m, const PointFn& f);

/// Depth from which the adapted sequence of f reproduces f on every point
/// with a finite value, if the finite values are all dyadic.
std::optional<unsigned> adapted_exact_depth(const PointFn& f);

struct AdaptedRow {
  unsigned n;
  XReal integral;  // lint_sfp of phi_n
  XReal gap;       // lint_p(f) - integral, 0 when they coincide
};

/// Convergence certificate n = 1..n_max. Throws InvalidIndex for n_max == 0.
std::vector<AdaptedRow> adapted_table(const Measure& m, const PointFn& f, unsigned n_max);

/// Pointwise sup / liminf of a stabilizing family.
PointFn pointwise_sup(const TaggedSeq<PointFn>& fam);
PointFn pointwise_liminf(const TaggedSeq<PointFn>& fam);

/// Integral of the pointwise sup == sup of the integrals, for a nondecreasing
/// family. Throws NotNondecreasing, NegativeValue, NotMeasurable.
bool check_beppo_levi(const Measure& m, const TaggedSeq<PointFn>& fam);

struct FatouSides {
  XReal integral_of_liminf;
  XReal liminf_of_integrals;
  bool holds() const { return integral_of_liminf <= liminf_of_integrals; }
};

FatouSides fatou_sides(const Measure& m, const TaggedSeq<PointFn>& fam);

/// Same for the family that repeats `cycle` forever; liminf over a cycle is
/// its minimum. This is where Fatou's inequality can be strict.
FatouSides fatou_sides_periodic(const Measure& m, const std::vector<PointFn>& cycle);

/// Throws NegativeValue, NotMeasurable.
bool check_fatou(const Measure& m, const TaggedSeq<PointFn>& fam);

/// Outcome of each integral identity for one (f, g, a, A).
struct LintPReport {
  bool additivity = false;        // int(f+g) = int f + int g
  bool scaling = false;           // int(a f) = a int f, a may be inf
  bool ae_definite = false;       // int f = 0 <=> f = 0 a.e.
  bool decomposition = false;     // int f = int f 1_A + int f 1_{A^c}
  bool ae_eq_compat = false;      // f = g a.e. => int f = int g, and f against itself modified on the null set
  bool monotone = false;          // f <= g => int f <= int g, and int min(f,g) <= int f
  bool when_charac = false;       // f = h on A => int f 1_A = int h 1_A

  bool all() const {
    return additivity && scaling && ae_definite && decomposition && ae_eq_compat && monotone && when_charac;
  }
};

/// Throws as lint_p, plus NegativeScalar for a < 0 and NotMeasurable for A.
LintPReport lint_p_props(const Measure& m, const PointFn& f, const PointFn& g, const XReal& a, const SubsetMask& A);

/// Integral against the Dirac mass at `a`; throws std::logic_error if it
/// differs from f(a).
XReal lint_p_dirac(const SigmaAlgebra& sa, std::size_t a, const PointFn& f);
XReal lint_p_dirac(const SigmaAlgebra& sa, const std::string& a, const PointFn& f);

}  // namespace lebesgue
