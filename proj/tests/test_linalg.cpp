#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linalg.hpp"
#include "perm.hpp"

using namespace operad;

namespace {

Mat random_mat(std::mt19937_64 &g, int r, int c, int range = 9) {
  Mat m(r, c);
  for (int i = 0; i < r; i++)
    for (int j = 0; j < c; j++)
      m.at(i, j) = (long)(g() % (2 * range + 1)) - range;
  return m;
}

}  // namespace

TEST_CASE("rref canonical form") {
  Mat m(3, 4);
  // rows: (1,2,0,3), (2,4,1,7), (1,2,1,4); row space has rank 2
  Rat vals[3][4] = {{1, 2, 0, 3}, {2, 4, 1, 7}, {1, 2, 1, 4}};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 4; j++) m.at(i, j) = vals[i][j];
  Rref r = rref(m);
  REQUIRE(r.rank() == 2);
  CHECK(r.pivots == std::vector<int>{0, 2});
  CHECK(r.basis.at(0, 0) == 1);
  CHECK(r.basis.at(0, 1) == 2);
  CHECK(r.basis.at(0, 2) == 0);
  CHECK(r.basis.at(0, 3) == 3);
  CHECK(r.basis.at(1, 0) == 0);
  CHECK(r.basis.at(1, 2) == 1);
  CHECK(r.basis.at(1, 3) == 1);
}

TEST_CASE("rref is basis-invariant") {
  std::mt19937_64 g(0);
  for (int trial = 0; trial < 40; trial++) {
    int n = 2 + (int)(g() % 5), d = 1 + (int)(g() % 4);
    Mat u = random_mat(g, d, n);
    // mix rows by an invertible-ish random combination, plus a shuffle row
    Mat v = vstack(u, u);
    for (int j = 0; j < n; j++)
      v.at(d, j) = u.at(0, j) * 3 - (d > 1 ? u.at(1, j) : Rat(0));
    CHECK(rref(u).basis == rref(v).basis);
  }
}

TEST_CASE("nullspace annihilates and has complementary rank") {
  std::mt19937_64 g(1);
  for (int trial = 0; trial < 40; trial++) {
    int r = 1 + (int)(g() % 4), c = 1 + (int)(g() % 6);
    Mat m = random_mat(g, r, c);
    Mat ns = nullspace(m);
    CHECK(ns.nr == c - rref(m).rank());
    for (int i = 0; i < ns.nr; i++) {
      Vec x = ns.row(i);
      for (int rr = 0; rr < m.nr; rr++) {
        Rat dot = 0;
        for (int j = 0; j < c; j++) dot += m.at(rr, j) * x[j];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("kernel of map") {
  std::mt19937_64 g(2);
  for (int trial = 0; trial < 40; trial++) {
    int r = 1 + (int)(g() % 5), c = 1 + (int)(g() % 5);
    Mat m = random_mat(g, r, c);
    Mat k = kernel_of_map(m);
    CHECK(k.nr == r - rref(mat_transpose(m)).rank());
    for (int i = 0; i < k.nr; i++) CHECK(is_zero_vec(vec_mat(k.row(i), m)));
  }
}

TEST_CASE("sum and intersection dimensions") {
  std::mt19937_64 g(3);
  for (int trial = 0; trial < 40; trial++) {
    int n = 2 + (int)(g() % 5);
    Mat u = rref(random_mat(g, 1 + (int)(g() % 3), n)).basis;
    Mat v = rref(random_mat(g, 1 + (int)(g() % 3), n)).basis;
    Mat s = subspace_sum(u, v), i = subspace_intersect(u, v);
    CHECK(s.nr + i.nr == u.nr + v.nr);
    CHECK(subspace_contains(s, u));
    CHECK(subspace_contains(s, v));
    CHECK(subspace_contains(u, i));
    CHECK(subspace_contains(v, i));
  }
}

TEST_CASE("membership, coordinates, reduction") {
  std::mt19937_64 g(4);
  for (int trial = 0; trial < 40; trial++) {
    int n = 3 + (int)(g() % 4);
    Rref basis = rref(random_mat(g, 2, n));
    Vec v = zero_vec(n);
    Rat c0 = (long)(g() % 7) - 3, c1 = (long)(g() % 7) - 3;
    for (int r = 0; r < basis.rank(); r++)
      axpy(v, r == 0 ? c0 : c1, basis.basis.row(r));
    CHECK(subspace_member(v, basis));
    auto c = coords_in(v, basis);
    REQUIRE(c.has_value());
    Vec back = zero_vec(n);
    for (int r = 0; r < basis.rank(); r++) axpy(back, (*c)[r], basis.basis.row(r));
    CHECK(back == v);
  }
}

TEST_CASE("solve_left") {
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 40; trial++) {
    int r = 1 + (int)(g() % 4), c = 1 + (int)(g() % 4);
    Mat m = random_mat(g, r, c);
    Vec x0((size_t)r);
    for (int i = 0; i < r; i++) x0[i] = (long)(g() % 9) - 4;
    Vec b = vec_mat(x0, m);
    auto x = solve_left(m, b);
    REQUIRE(x.has_value());
    CHECK(vec_mat(*x, m) == b);
    // unsolvable case: append an unreachable coordinate
    Mat m2 = hstack(m, Mat::zero(r, 1));
    Vec b2 = b;
    b2.push_back(1);
    CHECK(!solve_left(m2, b2).has_value());
  }
}

TEST_CASE("invariant closure in the regular representation of S3") {
  // the alternating-sum line is closed under right multiplication; a
  // non-isotypic vector generates everything
  auto s3 = symmetric_group(3);
  int n = (int)s3.size();
  std::vector<Perm> gens;
  gens.push_back(Perm(std::vector<int>{2, 1, 3}));
  gens.push_back(Perm(std::vector<int>{1, 3, 2}));
  auto apply = [&](const Vec &v, int g) {
    Vec w = zero_vec(n);
    for (int j = 0; j < n; j++)
      w[perm_rank(perm_compose(s3[j], gens[g]))] += v[j];
    return w;
  };
  Mat sign_line(1, n);
  for (int j = 0; j < n; j++) sign_line.at(0, j) = perm_sign(s3[j]);
  CHECK(invariant_closure(sign_line, 2, apply).nr == 1);
  Mat generic(1, n);
  generic.at(0, 0) = 1;
  generic.at(0, 3) = 2;
  CHECK(invariant_closure(generic, 2, apply).nr == n);
}
