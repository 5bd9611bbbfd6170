#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "truncation.hpp"

using namespace operad;

namespace {

std::vector<int> dims_of(const Operad &p) {
  std::vector<int> d;
  for (int n = 0; n <= p.max_arity(); n++) d.push_back(p.dim(n));
  return d;
}

}  // namespace

TEST_CASE("stock dimensions") {
  CHECK(dims_of(*build_as(5)) == std::vector<int>{1, 1, 2, 6, 24, 120});
  CHECK(dims_of(*build_com(5)) == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(dims_of(*build_uni(5)) == std::vector<int>{1, 1, 0, 0, 0, 0});
  CHECK(build_as(3)->label(3, 0) == "123");
  CHECK_THROWS_AS(build_as(9), OperadError);
  CHECK(build_as(9, true)->dim(1) == 1);
  CHECK_THROWS_AS(build_com(0), OperadError);
}

TEST_CASE("alternating sums") {
  CHECK(phi(1) == basis_vec(1, 0));
  Vec p2 = phi(2);
  CHECK(p2[0] == 1);
  CHECK(p2[1] == -1);
  Vec p3 = phi(3);
  for (long a = 0; a < 6; a++) CHECK(p3[a] == perm_sign(perm_unrank(3, a)));
}

TEST_CASE("truncated polynomial algebra and its random conjugates") {
  AugmentedAlgebra a = truncated_polynomial_algebra(3);
  CHECK(a.at(1, 1, 2) == 1);
  CHECK(a.at(1, 2, 3) == 1);
  CHECK(a.at(2, 2, 3) == 0);  // x^2 x^2 = x^4 = 0
  a.validate();
  AugmentedAlgebra r1 = random_associative_algebra(3, 0);
  AugmentedAlgebra r2 = random_associative_algebra(3, 0);
  CHECK(r1.omega == r2.omega);
  AugmentedAlgebra r3 = random_associative_algebra(3, 1);
  CHECK(r1.omega != r3.omega);
  AugmentedAlgebra bad = truncated_polynomial_algebra(2);
  bad.at(1, 2, 1) = 1;  // (xx)x^2 = 0 but x(xx^2) = x^2
  CHECK_THROWS_AS(bad.validate(), OperadError);
}

TEST_CASE("symmetric group modules") {
  SwModule t = trivial_sw_module(3, 2);
  t.validate();
  SwModule s = sign_sw_module(3);
  s.validate();
  Vec v = basis_vec(1, 0);
  CHECK(s.act(v, Perm({2, 1, 3})) == Vec{Rat(-1)});
  CHECK(s.act(v, Perm({3, 1, 2})) == Vec{Rat(1)});
  SwModule broken = trivial_sw_module(3, 2);
  broken.gens[0].at(0, 0) = 2;
  CHECK_THROWS_AS(broken.validate(), OperadError);
}

TEST_CASE("algebra operad structure") {
  auto d = build_d(truncated_polynomial_algebra(2), 4);
  CHECK(dims_of(*d) == std::vector<int>{1, 3, 5, 7, 9});
  // basis at arity 1: unit, then the generator lines
  CHECK(d->label(1, 0) == "1");
  CHECK(d->label(1, 1) == "d(1)1");
  CHECK(d->label(2, 3) == "d(2)1");
  // generator product: x o x = x^2 on the same slot, zero across slots
  CHECK(compose(*d, 1, 1, 1, basis_vec(3, 1), basis_vec(3, 1)) ==
        basis_vec(3, 2));
  CHECK(compose(*d, 2, 2, 1, basis_vec(5, 3), basis_vec(3, 1)) ==
        basis_vec(5, 4));
  CHECK(is_zero_vec(compose(*d, 2, 1, 1, basis_vec(5, 3), basis_vec(3, 1))));
  // unit spreads a generator line over the inserted slots
  CHECK(compose(*d, 2, 1, 1, basis_vec(5, 0), basis_vec(3, 1)) ==
        basis_vec(5, 1));
  Vec spread = compose(*d, 1, 1, 2, basis_vec(3, 1), basis_vec(5, 0));
  Vec expect = zero_vec(5);
  expect[1] = 1;
  expect[3] = 1;
  CHECK(spread == expect);
  // action moves the slot
  CHECK(d->act_basis(2, 1, Perm({2, 1})) == basis_vec(5, 3));
  CHECK(verify_axioms(*d).ok);
  CHECK(is_com_augmented(*d));
  CHECK(d->vanishing_index() == std::optional<int>(2));
  // the zero algebra leaves only the unit tower
  auto d0 = build_d(AugmentedAlgebra{}, 3);
  CHECK(dims_of(*d0) == std::vector<int>{1, 1, 1, 1});
  CHECK(operads_identical(*d0, *build_com(3)));
}

TEST_CASE("algebra operad over a random conjugate stays a valid operad") {
  auto d = build_d(random_associative_algebra(2, 0), 4);
  CHECK(dims_of(*d) == std::vector<int>{1, 3, 5, 7, 9});
  CHECK(verify_axioms(*d).ok);
  CHECK(is_com_augmented(*d));
}

TEST_CASE("chain suboperads of the algebra operad") {
  AugmentedAlgebra a = truncated_polynomial_algebra(2);
  std::vector<std::vector<int>> chain = {{2}, {2}};  // arities 2 and 3
  auto di = build_d(a, 3, false, chain);
  CHECK(dims_of(*di) == std::vector<int>{1, 3, 2, 3});
  CHECK(di->kind() == "d_chain");
  CHECK_FALSE(di->two_unit_coords().has_value());
  CHECK_FALSE(find_two_unit(*di).has_value());
  CHECK(verify_axioms(*di).ok);
  CHECK_FALSE(is_com_augmented(*di));
  // x o x = x^2 must stay inside the chain
  CHECK_THROWS_AS(build_d(a, 3, false, {{std::vector<int>{1}, {1}}}),
                  OperadError);
  // chains must descend
  CHECK_THROWS_AS(build_d(a, 3, false, {{std::vector<int>{2}, {1}}}),
                  OperadError);
  CHECK_THROWS_AS(build_d(a, 3, false, {{std::vector<int>{2}}}), OperadError);
}

TEST_CASE("signature block operad") {
  auto p = build_signature_operad(2, trivial_sw_module(2, 1), 6);
  CHECK(dims_of(*p) == std::vector<int>{1, 1, 2, 4, 7, 11, 16});
  CHECK(p->label(2, 1) == "d1{}");
  CHECK(p->label(3, 2) == "d1{2}");
  CHECK(verify_axioms(*build_signature_operad(2, trivial_sw_module(2, 1), 4))
            .ok);
  CHECK(is_com_augmented(*build_signature_operad(2, trivial_sw_module(2, 2), 3)));
  // module lines multiply to zero
  CHECK(is_zero_vec(compose(*p, 2, 1, 2, basis_vec(2, 1), basis_vec(2, 1))));
  // restriction kills a module line unless the kept slots cover its set
  Mat pi13 = pi_matrix(*p, 3, {1, 3});
  int d1_2 = 2;  // (d1, {2}) at arity 3
  CHECK(pi13.row(d1_2) == basis_vec(2, 1));
  Mat pi12 = pi_matrix(*p, 3, {1, 2});
  CHECK(is_zero_vec(pi12.row(d1_2)));
  CHECK(pi12.row(0) == basis_vec(2, 0));
}

TEST_CASE("signature block with the sign module") {
  auto p = build_signature_operad(2, sign_sw_module(2), 4);
  CHECK(verify_axioms(*p).ok);
  // the module line at its own arity carries the sign character
  Vec expect = zero_vec(p->dim(2));
  expect[1] = -1;
  CHECK(p->act_basis(2, 1, Perm({2, 1})) == expect);
  // swapping the two module slots at arity 3 still picks up the sign
  Vec expect3 = zero_vec(p->dim(3));
  expect3[1 + (int)subset_rank(3, {3})] = -1;
  CHECK(p->act_basis(3, 1 + (int)subset_rank(3, {3}), Perm({2, 1, 3})) ==
        expect3);
  // while moving a spread slot keeps the coefficient
  CHECK(p->act_basis(3, 1 + (int)subset_rank(3, {1}), Perm({2, 1, 3})) ==
        basis_vec(p->dim(3), 1 + (int)subset_rank(3, {2})));
}

TEST_CASE("unit insertion into a module line") {
  auto p = build_signature_operad(2, trivial_sw_module(2, 1), 5);
  // (d1, {2}) at arity 3, slot inside the set: the set absorbs the run
  Vec line = basis_vec(4, 2);
  Vec r = compose(*p, 3, 2, 2, line, basis_vec(2, 0));
  CHECK(r == basis_vec(7, 1 + (int)subset_rank(4, {2, 3})));
  // slot outside the set: sum over which new slot joins the set
  Vec r2 = compose(*p, 3, 1, 2, line, basis_vec(2, 0));
  Vec expect = zero_vec(7);
  expect[1 + (int)subset_rank(4, {2, 3})] += 1;
  expect[1 + (int)subset_rank(4, {1, 3})] += 1;
  CHECK(r2 == expect);
  // composing with the empty-arity unit removes a covered slot
  Vec r3 = compose(*p, 3, 2, 0, line, basis_vec(1, 0));
  CHECK(r3 == basis_vec(2, 1));
  CHECK(is_zero_vec(compose(*p, 3, 1, 0, line, basis_vec(1, 0))));
}

TEST_CASE("direct sums over the one-line operad") {
  std::vector<OperadPtr> blocks = {
      build_signature_operad(1, trivial_sw_module(1, 1), 4),
      build_signature_operad(2, trivial_sw_module(2, 1), 4)};
  auto s = com_augmented_sum(blocks);
  CHECK(dims_of(*s) == std::vector<int>{1, 2, 4, 7, 11});
  CHECK(verify_axioms(*s).ok);
  CHECK(is_com_augmented(*s));
  // cross-block products vanish
  Vec u1 = basis_vec(s->dim(1), 1);       // first block line at arity 1
  Vec u2 = basis_vec(s->dim(2), 3);       // second block line at arity 2
  CHECK(is_zero_vec(compose(*s, 2, 1, 1, u2, u1)));
  CHECK_THROWS_AS(com_augmented_sum({build_uni(4)}), OperadError);
  CHECK_THROWS_AS(com_augmented_sum({build_as(3), build_as(4)}), OperadError);
}

TEST_CASE("assembling an operad from a prescribed signature") {
  auto p = build_from_signature({3, 1, 4}, 4);
  std::vector<int> expect;
  for (int n = 0; n <= 4; n++)
    expect.push_back((int)(binom(n, 0) + 3 * binom(n, 1) + binom(n, 2) +
                           4 * binom(n, 3)));
  CHECK(dims_of(*p) == expect);
  CHECK(p->vanishing_index() == std::optional<int>(4));
  CHECK(build_from_signature({0, 0}, 3)->kind() == "com");
  CHECK_THROWS_AS(build_from_signature({0, -1}, 3), OperadError);
  CHECK_THROWS_AS(build_from_signature({0, 0, 0, 2}, 3), OperadError);
}

TEST_CASE("unitary suboperad of a signature sum") {
  auto b = unitary_from_signature({3}, 3);
  CHECK(dims_of(*b) == std::vector<int>{1, 4, 0, 0});
  CHECK(verify_axioms(*b).ok);
  CHECK_FALSE(find_two_unit(*b).has_value());
  auto b2 = unitary_from_signature({0, 2}, 4);
  CHECK(dims_of(*b2) == std::vector<int>{1, 1, 2, 0, 0});
  CHECK(verify_axioms(*b2).ok);
  CHECK(b2->vanishing_index() == std::optional<int>(3));
}

TEST_CASE("arity-wise tensor squares") {
  auto h = hadamard(build_com(4), build_as(4));
  CHECK(dims_of(*h) == dims_of(*build_as(4)));
  for (int a = 0; a < 2; a++)
    for (int b = 0; b < 2; b++)
      CHECK(h->compose_basis(2, 1, 2, a, b) ==
            build_as(4)->compose_basis(2, 1, 2, a, b));
  auto hh = hadamard(build_as(3), build_as(3));
  CHECK(dims_of(*hh) == std::vector<int>{1, 1, 4, 36});
  CHECK(verify_axioms(*hh).ok);
  CHECK(hh->two_unit_coords().has_value());
  CHECK_THROWS_AS(hadamard(build_as(3), build_as(4)), OperadError);
}

TEST_CASE("unitary operad with a dead module") {
  auto p = build_uni_plus_m(2, trivial_sw_module(2, 2), 4);
  CHECK(dims_of(*p) == std::vector<int>{1, 1, 2, 0, 0});
  CHECK(verify_axioms(*p).ok);
  CHECK_FALSE(find_two_unit(*p).has_value());
  CHECK(p->vanishing_index() == std::optional<int>(3));
  // module lines die against the empty-arity unit and against each other
  CHECK(is_zero_vec(compose(*p, 2, 1, 0, basis_vec(2, 0), basis_vec(1, 0))));
  CHECK(compose(*p, 2, 2, 1, basis_vec(2, 1), basis_vec(1, 0)) ==
        basis_vec(2, 1));
  auto q = build_uni_plus_m(1, trivial_sw_module(1, 1), 3);
  CHECK(dims_of(*q) == std::vector<int>{1, 2, 0, 0});
  CHECK(verify_axioms(*q).ok);
  CHECK(is_zero_vec(compose(*q, 1, 1, 1, basis_vec(2, 1), basis_vec(2, 1))));
  CHECK_THROWS_AS(build_uni_plus_m(5, trivial_sw_module(5, 1), 4),
                  OperadError);
}

TEST_CASE("splitting detector rejects the non-split cases") {
  CHECK(is_com_augmented(*build_com(4)));
  std::string why;
  // the identity line is a 2-unit but not symmetric, so no splitting
  CHECK_FALSE(is_com_augmented(*build_as(4), &why));
  CHECK(why == "1_2 is not fixed by s_1");
  CHECK_FALSE(is_com_augmented(*build_uni(4), &why));
  CHECK(why == "no 2-unit");
  CHECK_FALSE(is_com_augmented(*build_uni_plus_m(2, trivial_sw_module(2, 1), 4),
                               &why));
  CHECK_FALSE(why.empty());
}
