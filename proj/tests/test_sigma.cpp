#include <doctest.h>

#include "lebesgue/sigma.hpp"

using namespace lebesgue;

namespace {

SpacePtr three() { return FiniteSpace::make({"0", "1", "2"}); }

SubsetMask set(const SpacePtr& e, std::vector<std::size_t> idx) { return SubsetMask::of_indices(e, idx); }

}  // namespace

TEST_CASE("finite space") {
  CHECK_THROWS_AS(FiniteSpace::make({}), Error);
  CHECK_THROWS_AS(FiniteSpace::make({"a", "a"}), Error);
  auto e = FiniteSpace::make({"a", "b"});
  CHECK(e->at("b") == 1);
  CHECK_THROWS_AS(e->at("z"), Error);
}

TEST_CASE("generate from one set") {
  auto e = three();
  auto sa = SigmaAlgebra::generate(e, {set(e, {0})});
  CHECK(sa.atoms().size() == 2);
  CHECK(sa.members().size() == 4);
  CHECK(sa.is_measurable(set(e, {1, 2})));
  CHECK_FALSE(sa.is_measurable(set(e, {1})));
  CHECK(sa.is_measurable(SubsetMask::empty(e)));
  CHECK(sa.is_measurable(SubsetMask::full(e)));
}

TEST_CASE("discrete and trivial") {
  auto e = three();
  CHECK(SigmaAlgebra::discrete(e).is_discrete());
  CHECK(SigmaAlgebra::discrete(e).members().size() == 8);
  CHECK(SigmaAlgebra::trivial(e).members().size() == 2);
}

TEST_CASE("sigma equality of generators") {
  auto e = three();
  auto a = SigmaAlgebra::generate(e, {set(e, {0})});
  auto b = SigmaAlgebra::generate(e, {set(e, {1, 2})});
  auto c = SigmaAlgebra::generate(e, {set(e, {1})});
  CHECK(sigma_equal_generated(a, b));
  CHECK_FALSE(sigma_equal_generated(a, c));
}

TEST_CASE("product generator needs the full sets") {
  auto e = FiniteSpace::make({"0", "1"});
  auto f = FiniteSpace::make({"a", "b"});
  std::vector<SubsetMask> ge{SubsetMask::of_labels(e, {"0"})};
  std::vector<SubsetMask> gf{SubsetMask::of_labels(f, {"a"})};
  auto pg = product_generator(e, ge, f, gf);
  auto prod = pg.space;
  CHECK(prod->size() == 4);
  CHECK(prod->label(1) == "(0,b)");
  auto zero_times_f = product_mask(ge[0], SubsetMask::full(f), prod);
  auto naive = SigmaAlgebra::generate(prod, {product_mask(ge[0], gf[0], prod)});
  CHECK_FALSE(naive.is_measurable(zero_times_f));
  auto full = SigmaAlgebra::generate(prod, pg.gen);
  CHECK(full.is_measurable(zero_times_f));
  CHECK(full.is_discrete());
}

TEST_CASE("measurable functions") {
  auto e = three();
  auto sa = SigmaAlgebra::generate(e, {set(e, {0})});
  CHECK(is_measurable_fn(sa, PointFn(e, {XReal(1), XReal(2), XReal(2)})));
  CHECK_FALSE(is_measurable_fn(sa, PointFn(e, {XReal(1), XReal(2), XReal(3)})));
  CHECK(is_measurable_fn(sa, charac(set(e, {1, 2}))));
  CHECK(is_measurable_fn(sa, PointFn::constant(e, XReal::pos_inf())));
}

TEST_CASE("pointwise arithmetic") {
  auto e = FiniteSpace::make({"a", "b"});
  PointFn f(e, {XReal::pos_inf(), XReal(1)});
  PointFn g(e, {XReal::neg_inf(), XReal(2)});
  auto s = fn_add(f, g);
  CHECK_FALSE(s.legal);
  CHECK(s.fn(0) == XReal(0));
  CHECK(s.fn(1) == XReal(3));
  CHECK(fn_add(f, f).legal);
  CHECK(fn_scale(XReal(0), f)(0) == XReal(0));
  CHECK(fn_min(f, g) == PointFn(e, {XReal::neg_inf(), XReal(1)}));
  CHECK(fn_max(f, g) == PointFn(e, {XReal::pos_inf(), XReal(2)}));
  CHECK(fn_min(f, g).le(f));
  CHECK_FALSE(g.le(f));
  CHECK(fn_mul(f, g)(0) == XReal::neg_inf());
}

TEST_CASE("subset algebra") {
  auto e = three();
  auto a = set(e, {0, 1});
  auto b = set(e, {1, 2});
  CHECK((a & b) == set(e, {1}));
  CHECK((a | b) == SubsetMask::full(e));
  CHECK((a - b) == set(e, {0}));
  CHECK(a.complement() == set(e, {2}));
  CHECK(set(e, {1}).subset_of(a));
  CHECK_FALSE(a.disjoint_from(b));
}
