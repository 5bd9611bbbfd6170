#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "operad.hpp"

using namespace operad;

namespace {

int rk(std::vector<int> seq) { return (int)perm_rank(Perm{std::move(seq)}); }

Vec combo(int d, std::initializer_list<std::pair<int, int>> terms) {
  Vec v = zero_vec(d);
  for (auto [idx, c] : terms) v[idx] += c;
  return v;
}

}  // namespace

TEST_CASE("permutation operad composes by block permutation") {
  auto as = build_as(4);
  // identities compose to identities
  CHECK(compose(*as, 2, 1, 2, basis_vec(2, 0), basis_vec(2, 0)) ==
        basis_vec(6, 0));
  // swap o_1 swap lands on (3,2,1)? swap in slot 1 of swap: blocks (2,1)
  Vec sw = basis_vec(2, 1);
  CHECK(compose(*as, 2, 1, 2, sw, sw) == basis_vec(6, rk({3, 2, 1})));
  CHECK(compose(*as, 2, 1, 2, basis_vec(2, 0), sw) ==
        basis_vec(6, rk({2, 1, 3})));
  CHECK(compose(*as, 2, 2, 2, basis_vec(2, 0), sw) ==
        basis_vec(6, rk({1, 3, 2})));
  // swap of two blocks of size 2
  CHECK(full_compose(*as, 2, sw,
                     {{2, basis_vec(2, 0)}, {2, basis_vec(2, 0)}}) ==
        basis_vec(24, rk({3, 4, 1, 2})));
}

TEST_CASE("right action multiplies ranks") {
  auto as = build_as(3);
  Perm s({2, 3, 1});
  for (long a = 0; a < 6; a++) {
    Vec img = as->act_basis(3, (int)a, s);
    CHECK(img == basis_vec(6, (int)perm_rank(perm_compose(perm_unrank(3, a), s))));
  }
  // generic path through adjacent factorizations agrees
  Vec x = combo(6, {{0, 1}, {3, -2}, {5, 7}});
  Vec via_gens = zero_vec(6);
  for (int a = 0; a < 6; a++)
    if (x[a] != 0) axpy(via_gens, x[a], as->act_basis(3, a, s));
  CHECK(act(*as, 3, x, s) == via_gens);
}

TEST_CASE("unit towers are identity permutations") {
  auto as = build_as(5);
  for (int n = 0; n <= 5; n++)
    CHECK(unit_tower(*as, n) == basis_vec(as->dim(n), 0));
  auto uni = build_uni(4);
  CHECK(unit_tower(*uni, 1) == basis_vec(1, 0));
  CHECK_THROWS_AS(unit_tower(*uni, 2), OperadError);
}

TEST_CASE("composition argument checks") {
  auto as = build_as(3);
  CHECK_THROWS_AS(as->compose_basis(0, 1, 2, 0, 0), OperadError);
  CHECK_THROWS_AS(as->compose_basis(2, 3, 1, 0, 0), OperadError);
  CHECK_THROWS_AS(as->compose_basis(3, 1, 3, 0, 0), OperadError);
  try {
    compose(*as, 0, 1, 2, Vec{}, basis_vec(2, 0));
    CHECK(false);
  } catch (const OperadError &e) {
    CHECK(e.code == 2);
  }
}

TEST_CASE("restriction and contraction on a pinned permutation") {
  auto as = build_as(5);
  int sigma = rk({4, 5, 2, 1, 3});
  Mat pi = pi_matrix(*as, 5, {2, 4});
  CHECK(pi.row(sigma) == basis_vec(2, rk({2, 1})));
  Mat ga = gamma_matrix(*as, 5, {2, 4});
  CHECK(ga.row(sigma) == basis_vec(6, rk({3, 1, 2})));
  // restriction to everything is the identity, to nothing the augmentation
  Mat all = pi_matrix(*as, 3, {1, 2, 3});
  CHECK(all == Mat::identity(6));
  Mat none = pi_matrix(*as, 3, {});
  for (int a = 0; a < 6; a++) CHECK(none.row(a) == basis_vec(1, 0));
}

TEST_CASE("slot doubling and unit padding on a pinned permutation") {
  int sigma = rk({4, 5, 2, 1, 3});
  auto as7 = build_as(7);
  Vec img = vec_mat(basis_vec(120, sigma), delta_matrix(*as7, 5, {2, 4}));
  CHECK(img == basis_vec((int)factorial(7), rk({5, 6, 7, 2, 3, 1, 4})));
  auto as8 = build_as(8);
  Vec pad = full_compose(*as8, 3, unit_tower(*as8, 3),
                         {{1, unit_tower(*as8, 1)},
                          {5, basis_vec(120, sigma)},
                          {2, unit_tower(*as8, 2)}});
  CHECK(pad == basis_vec((int)factorial(8), rk({1, 5, 6, 3, 2, 4, 7, 8})));
}

TEST_CASE("padding operators compose") {
  auto as = build_as(6);
  // pad right then left agrees with the single two-sided pad
  Mat two_step = mat_mul(iota_left_matrix(*as, 2, 1),
                         iota_right_matrix(*as, 3, 2));
  CHECK(two_step == iota_matrix(*as, 2, 1, 2));
  Mat other_order = mat_mul(iota_right_matrix(*as, 2, 2),
                            iota_left_matrix(*as, 4, 1));
  CHECK(other_order == iota_matrix(*as, 2, 1, 2));
}

TEST_CASE("two-unit solutions in the permutation operad form a line") {
  auto as = build_as(4);
  auto tu = find_two_unit(*as);
  REQUIRE(tu.has_value());
  CHECK(tu->coords == basis_vec(2, 0));  // designated one wins
  CHECK_FALSE(tu->unique);
  CHECK(check_2a(*as, tu->coords));
  // a(12) + (1-a)(21) solves the unit equations for every a
  Vec half = combo(2, {});
  half[0] = Rat(1, 2);
  half[1] = Rat(1, 2);
  Vec z = *as->zero_unit_coords();
  CHECK(compose(*as, 2, 1, 0, half, z) == as->unit_coords());
  CHECK(compose(*as, 2, 2, 0, half, z) == as->unit_coords());
  CHECK_FALSE(check_2a(*as, half));
  // and something off the line does not
  Vec off = combo(2, {{0, 1}, {1, 1}});
  CHECK(compose(*as, 2, 1, 0, off, z) != as->unit_coords());
}

TEST_CASE("axiom checker accepts the stock constructions") {
  CHECK(verify_axioms(*build_as(4)).ok);
  CHECK(verify_axioms(*build_com(4)).ok);
  CHECK(verify_axioms(*build_uni(4)).ok);
  AxiomReport r = verify_axioms(*build_as(3));
  CHECK(r.ok);
  CHECK(r.checks > 0);
  CHECK(r.violations.empty());
}

TEST_CASE("axiom checker names a corrupted composition") {
  auto table = TableOperad::materialize(*build_as(3));
  CHECK(verify_axioms(*table).ok);
  Mat bad = table->table(2, 1, 2);
  bad.at(0, 0) += 1;
  table->set_table(2, 1, 2, std::move(bad));
  AxiomReport r = verify_axioms(*table);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.violations.empty());
  CHECK_FALSE(r.violations[0].rule.empty());
  CHECK_FALSE(r.violations[0].instance.empty());
}

TEST_CASE("materialized tables reproduce the closed forms") {
  auto as = build_as(3);
  auto table = TableOperad::materialize(*as);
  CHECK(table->max_arity() == 3);
  for (int n = 0; n <= 3; n++) {
    CHECK(table->dim(n) == as->dim(n));
    for (int a = 0; a < as->dim(n); a++)
      CHECK(table->label(n, a) == as->label(n, a));
  }
  for (int m = 1; m <= 3; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= 3; n++)
        for (int a = 0; a < as->dim(m); a++)
          for (int b = 0; b < as->dim(n); b++)
            CHECK(table->compose_basis(m, i, n, a, b) ==
                  as->compose_basis(m, i, n, a, b));
  for (int n = 2; n <= 3; n++)
    for (int j = 1; j < n; j++)
      for (int a = 0; a < as->dim(n); a++)
        CHECK(table->act_gen_basis(n, a, j) == as->act_gen_basis(n, a, j));
  CHECK(table->unit_coords() == as->unit_coords());
  CHECK(table->two_unit_coords() == as->two_unit_coords());
  CHECK(verify_axioms(*table).ok);
}

TEST_CASE("ideal generated by the alternating two-cycle sum") {
  auto as = build_as(4);
  Ideal ideal = generate_ideal(*as, {{2, phi(2)}});
  CHECK(ideal.dims() == std::vector<int>{0, 0, 1, 5, 23});
  std::string why;
  CHECK(is_ideal(*as, ideal, &why));
  CHECK(why.empty());
  // spot membership: swap minus identity at arity 2
  CHECK(subspace_member(phi(2), rref(ideal.comp[2])));

  Ideal z = zero_ideal(*as);
  CHECK(z.dims() == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(is_ideal(*as, z));
  Ideal s = ideal_sum(*as, ideal, z);
  for (int n = 0; n <= 4; n++) CHECK(s.comp[n] == ideal.comp[n]);
  Ideal cap = ideal_intersect(*as, ideal, ideal);
  for (int n = 0; n <= 4; n++) CHECK(cap.comp[n] == ideal.comp[n]);
  Ideal prod = ideal_product(*as, ideal, ideal);
  CHECK(is_ideal(*as, prod));
  for (int n = 0; n <= 4; n++)
    CHECK(subspace_contains(ideal.comp[n], prod.comp[n]));
  CHECK(prod.dims()[2] == 0);  // products start one arity up
}

TEST_CASE("ideal checker names a subspace that fails stability") {
  auto as = build_as(3);
  Ideal bad = zero_ideal(*as);
  Mat one(1, 6);
  one.at(0, 0) = 1;  // the identity line is not an ideal
  bad.comp[3] = one;
  std::string why;
  CHECK_FALSE(is_ideal(*as, bad, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("quotient by the alternating ideal collapses to one line per arity") {
  auto as = build_as(4);
  Ideal ideal = generate_ideal(*as, {{2, phi(2)}});
  auto q = quotient_operad(*as, ideal, "As/(phi)", 2);
  CHECK(q->dim(0) == 1);
  CHECK(q->dim(1) == 1);
  CHECK(q->dim(2) == 1);
  CHECK(q->dim(3) == 1);
  CHECK(q->dim(4) == 1);
  CHECK(verify_axioms(*q).ok);
  CHECK(q->vanishing_index() == std::optional<int>(2));
  // the surviving coordinate composes like the one-line operad
  CHECK(q->compose_basis(2, 1, 2, 0, 0) == basis_vec(1, 0));
}

TEST_CASE("quotient projection uses coset representatives") {
  auto as = build_as(3);
  Ideal ideal = generate_ideal(*as, {{2, phi(2)}});
  Rref base = rref(ideal.comp[2]);
  // phi(2) reduces to zero, the identity line to its representative
  CHECK(is_zero_vec(quotient_project(base, phi(2))));
  Vec rep = quotient_project(base, basis_vec(2, 0));
  CHECK(rep.size() == 1);
  CHECK(rep[0] == 1);
}
