#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "truncation.hpp"

using namespace operad;

namespace {

int rk(std::vector<int> seq) { return (int)perm_rank(Perm{std::move(seq)}); }

}  // namespace

TEST_CASE("kernel ladder on the permutation operad") {
  auto as = build_as(5);
  CHECK(signature_of(*as, 5) == std::vector<int>{0, 1, 2, 9, 44});
  // the first two rungs agree because the arity-1 component is a line
  for (int n = 0; n <= 4; n++)
    CHECK(trunc_component(*as, 1, n) == trunc_component(*as, 2, n));
  // and both equal the ideal generated by the alternating two-cycle sum
  Ideal gen = generate_ideal(*as, {{2, phi(2)}});
  Ideal u2 = trunc_ideal(*as, 2);
  for (int n = 0; n <= 5; n++)
    CHECK(subspace_equal(gen.comp[n], u2.comp[n]));
  std::string why;
  CHECK(is_ideal(*as, u2, &why));
}

TEST_CASE("third rung of the permutation operad at its own arity") {
  auto as = build_as(4);
  Mat u33 = trunc_component(*as, 3, 3);
  CHECK(u33.nr == 2);
  Rref base = rref(u33);
  Vec v1 = zero_vec(6);
  v1[rk({1, 2, 3})] = 1;
  v1[rk({2, 1, 3})] = -1;
  v1[rk({3, 1, 2})] = -1;
  v1[rk({3, 2, 1})] = 1;
  Vec v2 = zero_vec(6);
  v2[rk({1, 3, 2})] = 1;
  v2[rk({2, 1, 3})] = -1;
  v2[rk({3, 1, 2})] = -1;
  v2[rk({2, 3, 1})] = 1;
  CHECK(subspace_member(v1, base));
  CHECK(subspace_member(v2, base));
  CHECK(one_dim_submodules(*as, u33, 3) == std::pair<int, int>(0, 0));
  // the two displayed members arise as compositions of the alternating sums
  CHECK(compose(*as, 2, 1, 2, phi(2), phi(2)) == v1);
  Vec diff = v1;
  axpy(diff, Rat(-1), compose(*as, 2, 2, 2, phi(2), phi(2)));
  CHECK(diff == v2);
}

TEST_CASE("trivial rungs for the one-line and the smallest unitary operad") {
  CHECK(signature_of(*build_com(4), 4) == std::vector<int>{0, 0, 0, 0});
  CHECK(signature_of(*build_uni(4), 4) == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("algebra operad vanishes from the second rung") {
  auto d = build_d(truncated_polynomial_algebra(2), 4);
  CHECK(signature_of(*d, 4) == std::vector<int>{2, 0, 0, 0});
  Ideal u2 = trunc_ideal(*d, 2);
  for (int n = 0; n <= 4; n++) CHECK(u2.comp[n].nr == 0);
  // the first rung is everything without a unit component
  Ideal u1 = trunc_ideal(*d, 1);
  CHECK(u1.dims() == std::vector<int>{0, 2, 4, 6, 8});
}

TEST_CASE("signature blocks report their defining signature") {
  auto p = build_signature_operad(2, trivial_sw_module(2, 3), 4);
  CHECK(signature_of(*p, 4) == std::vector<int>{0, 3, 0, 0});
  auto s = build_from_signature({3, 1, 4}, 5);
  CHECK(signature_of(*s, 5) == std::vector<int>{3, 1, 4, 0, 0});
  auto u = unitary_from_signature({0, 2}, 4);
  CHECK(signature_of(*u, 4) == std::vector<int>{0, 2, 0, 0});
}

TEST_CASE("one-dimensional submodule counts") {
  auto as = build_as(3);
  CHECK(one_dim_submodules(*as, Mat::identity(2), 2) ==
        std::pair<int, int>(1, 1));
  CHECK(one_dim_submodules(*as, Mat::identity(6), 3) ==
        std::pair<int, int>(1, 1));
  Mat line = Mat(1, 6);
  for (long a = 0; a < 6; a++) line.at(0, (int)a) = perm_sign(perm_unrank(3, a));
  CHECK(one_dim_submodules(*as, line, 3) == std::pair<int, int>(0, 1));
  // a subspace that is not stable is refused
  Mat unstable(1, 6);
  unstable.at(0, 0) = 1;
  CHECK_THROWS_AS(one_dim_submodules(*as, unstable, 3), OperadError);
  // the sign module block carries its character to the rung
  auto sg = build_signature_operad(2, sign_sw_module(2), 3);
  CHECK(one_dim_submodules(*sg, trunc_component(*sg, 2, 2), 2) ==
        std::pair<int, int>(0, 1));
}

TEST_CASE("relative rungs interpolate between neighbours") {
  auto as = build_as(4);
  // against the full rung nothing is cut away
  Mat full = trunc_component(*as, 2, 2);
  Ideal rel = trunc_ideal_rel(*as, 2, full);
  Ideal u2 = trunc_ideal(*as, 2);
  for (int n = 0; n <= 4; n++) CHECK(rel.comp[n] == u2.comp[n]);
  // against zero the next rung appears
  Ideal rel0 = trunc_ideal_rel(*as, 2, Mat(0, 2));
  Ideal u3 = trunc_ideal(*as, 3);
  for (int n = 0; n <= 4; n++) CHECK(rel0.comp[n] == u3.comp[n]);
  CHECK_THROWS_AS(trunc_ideal_rel(*as, 2, Mat(0, 5)), OperadError);
}

TEST_CASE("quotients by a rung carry the vanishing index") {
  auto as = build_as(4);
  auto q = quotient_by_trunc(*as, 3, "As mod third rung");
  CHECK(q->dim(0) == 1);
  CHECK(q->dim(1) == 1);
  CHECK(q->dim(2) == 2);
  CHECK(q->dim(3) == 4);
  CHECK(q->dim(4) == 7);
  CHECK(q->vanishing_index() == std::optional<int>(3));
  CHECK(verify_axioms(*q).ok);
  CHECK(signature_of(*q, 4) == std::vector<int>{0, 1, 0, 0});
  auto com = quotient_by_trunc(*as, 1, "As mod first rung");
  CHECK(signature_of(*com, 4) == std::vector<int>{0, 0, 0, 0});
  for (int n = 0; n <= 4; n++) CHECK(com->dim(n) == 1);
}

TEST_CASE("products of rungs sink into deeper rungs") {
  auto as = build_as(4);
  Ideal u2 = trunc_ideal(*as, 2);
  Ideal u3 = trunc_ideal(*as, 3);
  Ideal prod = ideal_product(*as, u2, u2);
  for (int n = 0; n <= 4; n++)
    CHECK(subspace_contains(u3.comp[n], prod.comp[n]));
  // at this horizon the product fills the whole deeper rung
  for (int n = 0; n <= 4; n++) CHECK(prod.comp[n].nr == u3.comp[n].nr);
}
