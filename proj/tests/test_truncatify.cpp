#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "truncatify.hpp"

using namespace operad;

namespace {

std::vector<int> dims_of(const Operad &p) {
  std::vector<int> d;
  for (int n = 0; n <= p.max_arity(); n++) d.push_back(p.dim(n));
  return d;
}

}  // namespace

TEST_CASE("graded replacement of the permutation operad") {
  auto as = build_as(4);
  auto trc = truncatify(*as);
  CHECK(dims_of(*trc) == std::vector<int>{1, 1, 2, 6, 24});
  auto g = trc->grading();
  REQUIRE(g.has_value());
  // block i of arity n has the size of rung i at its own arity, spread
  // over the slot choices
  CHECK((*g)[0] == std::vector<int>{1});
  CHECK((*g)[1] == std::vector<int>{1, 0});
  CHECK((*g)[2] == std::vector<int>{1, 0, 1});
  CHECK((*g)[3] == std::vector<int>{1, 0, 3, 2});
  CHECK((*g)[4] == std::vector<int>{1, 0, 6, 8, 9});
  auto rep = verify_axioms(*trc);
  CHECK(rep.ok);
  auto u2 = find_two_unit(*trc);
  REQUIRE(u2.has_value());
  CHECK(u2->coords == basis_vec(2, 0));
  std::string why;
  CHECK(is_truncatified(*trc, &why));
  CHECK(!is_truncatified(*as, &why));
  CHECK(why == "no grading");
}

TEST_CASE("the graded replacement is a fixed point") {
  auto as = build_as(4);
  auto trc = truncatify(*as);
  auto again = truncatify(*trc);
  std::string why;
  CHECK(operads_identical(*again, *trc, &why));
  CHECK(again->grading() == trc->grading());
}

TEST_CASE("an operad concentrated in degree zero is untouched") {
  auto com = build_com(4);
  auto trc = truncatify(*com);
  std::string why;
  CHECK(operads_identical(*trc, *com, &why));
  auto g = trc->grading();
  REQUIRE(g.has_value());
  for (int n = 0; n <= 4; n++) {
    CHECK((*g)[n][0] == 1);
    for (int i = 1; i <= n; i++) CHECK((*g)[n][i] == 0);
  }
  CHECK(is_truncatified(*trc, &why));
}

TEST_CASE("a flat grading is rejected") {
  auto as = build_as(3);
  auto table = TableOperad::materialize(*as);
  std::vector<std::vector<int>> flat{{1}, {1, 0}, {2, 0, 0}, {6, 0, 0, 0}};
  table->set_grading(flat);
  std::string why;
  CHECK(!is_truncatified(*table, &why));
  CHECK(why ==
        "component 1 at arity 2 is not the span of the degree >= 1 blocks");
}

TEST_CASE("shuffle-Poisson shape of the graded permutation operad") {
  auto as = build_as(4);
  auto trc = truncatify(*as);
  auto rep = poisson_check(*trc);
  // every relation holds, but the two binary lines do not generate:
  // a product of two disjoint brackets lands in degree 3 where its
  // class is zero, so the three bracket-pair dimensions of the top
  // block at arity 4 are unreachable from below
  CHECK(rep.relations_ok);
  CHECK(!rep.ok);
  CHECK(rep.why == "the two lines generate only 21 of 24 at arity 4");
  CHECK(rep.generated_dims == std::vector<long>{1, 1, 2, 6, 21});
  // the top graded blocks shrink to the fixed-point-free counts
  CHECK(rep.top_degree_dims == std::vector<long>{1, 0, 1, 2, 9});
}

TEST_CASE("disjoint brackets collapse in the graded operad") {
  auto as = build_as(4);
  auto trc = truncatify(*as);
  auto u2 = find_two_unit(*as);
  REQUIRE(u2.has_value());

  // a = mu(br, br): both slots sit inside a bracket, so every proper
  // contraction kills it and it lives in the deepest component
  Vec half = compose(*as, 2, 2, 2, u2->coords, phi(2));
  Vec a = compose(*as, 3, 1, 2, half, phi(2));
  CHECK(!is_zero_vec(a));
  CHECK(subspace_member(a, rref(trunc_component(*as, 4, 4))));

  // the same word in the graded operad targets degree 2+2-1 = 3,
  // one rung above where a lives, so its class there is zero
  auto tu2 = find_two_unit(*trc);
  REQUIRE(tu2.has_value());
  Vec tbr = basis_vec(trc->dim(2), 1);
  Vec thalf = compose(*trc, 2, 2, 2, tu2->coords, tbr);
  CHECK(is_zero_vec(compose(*trc, 3, 1, 2, thalf, tbr)));

  // the grading by component depth is finer than the powers of the
  // first component: a sits outside the cube even though it sits in
  // the fourth component
  Ideal rung2 = trunc_ideal(*as, 2);
  Ideal cube = ideal_product(*as, ideal_product(*as, rung2, rung2), rung2);
  CHECK(cube.comp[4].nr == 6);
  CHECK(trunc_component(*as, 4, 4).nr == 9);
  CHECK(!subspace_member(a, rref(cube.comp[4])));
}

TEST_CASE("the exchange law needs the grading") {
  // ungraded, the two sides differ by a tail one rung further down;
  // the graded projection is exactly what removes it
  auto as = build_as(3);
  auto u2 = find_two_unit(*as);
  REQUIRE(u2.has_value());
  Vec mu = u2->coords;
  Vec br = phi(2);
  Perm twist(std::vector<int>{2, 1, 3});
  Vec lhs = compose(*as, 2, 1, 2, br, mu);
  Vec half = compose(*as, 2, 2, 2, mu, br);
  Vec rhs = half;
  axpy(rhs, Rat(1), act(*as, 3, half, twist));
  CHECK(lhs != rhs);
  Vec diff = lhs;
  axpy(diff, Rat(-1), rhs);
  CHECK(subspace_member(diff, rref(trunc_component(*as, 3, 3))));
}

TEST_CASE("closure under units, composition, and the action") {
  auto as = build_as(4);
  std::vector<Mat> seeds(3, Mat(0, 0));
  seeds[2] = Mat::from_rows({phi(2)}, 2);
  auto closure = suboperad_closure(*as, seeds);
  CHECK(closure[0].nr == 1);
  CHECK(closure[1].nr == 1);
  CHECK(closure[2].nr == 1);
  // products of the alternating line land in, and fill, the third rung
  CHECK(subspace_equal(closure[3], trunc_component(*as, 3, 3)));
}

TEST_CASE("graded replacement of a quotient") {
  auto as = build_as(4);
  auto q = quotient_by_trunc(*as, 3, "q");
  auto trc = truncatify(*q);
  CHECK(dims_of(*trc) == std::vector<int>{1, 1, 2, 4, 7});
  auto g = trc->grading();
  REQUIRE(g.has_value());
  CHECK((*g)[3] == std::vector<int>{1, 0, 3, 0});
  CHECK((*g)[4] == std::vector<int>{1, 0, 6, 0, 0});
  std::string why;
  CHECK(is_truncatified(*trc, &why));
  CHECK(verify_axioms(*trc).ok);
}
