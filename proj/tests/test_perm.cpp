#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "perm.hpp"

using namespace operad;

namespace {

Perm random_perm(std::mt19937_64 &g, int n) {
  Perm p = perm_identity(n);
  for (int i = n - 1; i > 0; i--)
    std::swap(p.seq[i], p.seq[g() % (i + 1)]);
  return p;
}

}  // namespace

TEST_CASE("one-line convention") {
  Perm s(std::vector<int>{3, 1, 2});
  CHECK(s.valid());
  // seq[k-1] = sigma^{-1}(k): sigma sends 3->1, 1->2, 2->3
  CHECK(s.image(3) == 1);
  CHECK(s.image(1) == 2);
  CHECK(s.image(2) == 3);
  CHECK(perm_inverse(s) == Perm(std::vector<int>{2, 3, 1}));
  CHECK(perm_compose(s, perm_inverse(s)) == perm_identity(3));
  CHECK(perm_compose(perm_inverse(s), s) == perm_identity(3));
}

TEST_CASE("composition convention") {
  std::mt19937_64 g(0);
  for (int trial = 0; trial < 200; trial++) {
    int n = 1 + (int)(g() % 6);
    Perm s = random_perm(g, n), t = random_perm(g, n);
    Perm st = perm_compose(s, t);
    for (int k = 0; k < n; k++) CHECK(st.seq[k] == t.seq[s.seq[k] - 1]);
    // (s*t)(x) = s(t(x))
    for (int x = 1; x <= n; x++) CHECK(st.image(x) == s.image(t.image(x)));
  }
}

TEST_CASE("sign") {
  CHECK(perm_sign(perm_identity(4)) == 1);
  CHECK(perm_sign(Perm(std::vector<int>{2, 1, 3})) == -1);
  CHECK(perm_sign(Perm(std::vector<int>{3, 1, 2})) == 1);
  std::mt19937_64 g(1);
  for (int trial = 0; trial < 200; trial++) {
    int n = 1 + (int)(g() % 6);
    Perm s = random_perm(g, n), t = random_perm(g, n);
    CHECK(perm_sign(perm_compose(s, t)) == perm_sign(s) * perm_sign(t));
  }
}

TEST_CASE("lex order, rank, unrank") {
  auto s3 = symmetric_group(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3[0] == perm_identity(3));
  CHECK(s3[1] == Perm(std::vector<int>{1, 3, 2}));
  CHECK(s3[5] == Perm(std::vector<int>{3, 2, 1}));
  for (int n = 0; n <= 5; n++) {
    auto sn = symmetric_group(n);
    CHECK((long)sn.size() == factorial(n));
    for (long r = 0; r < (long)sn.size(); r++) {
      CHECK(perm_rank(sn[r]) == r);
      CHECK(perm_unrank(n, r) == sn[r]);
    }
  }
}

TEST_CASE("adjacent factorization") {
  std::mt19937_64 g(2);
  for (int trial = 0; trial < 100; trial++) {
    int n = 1 + (int)(g() % 7);
    Perm s = random_perm(g, n);
    Perm acc = perm_identity(n);
    for (int j : adjacent_factorization(s)) {
      Perm sj = perm_identity(n);
      std::swap(sj.seq[j - 1], sj.seq[j]);
      acc = perm_compose(acc, sj);
    }
    CHECK(acc == s);
  }
}

TEST_CASE("block permutation") {
  Perm swap2(std::vector<int>{2, 1});
  std::vector<Perm> ids = {perm_identity(2), perm_identity(2)};
  CHECK(block_permutation(swap2, ids) ==
        Perm(std::vector<int>{3, 4, 1, 2}));
  CHECK(block_at(2, 1, swap2) == Perm(std::vector<int>{2, 1, 3}));
  CHECK(block_at(2, 2, swap2) == Perm(std::vector<int>{1, 3, 2}));
  // empty blocks drop their slot
  std::vector<Perm> with_empty = {perm_identity(0), perm_identity(1)};
  CHECK(block_permutation(swap2, with_empty) == perm_identity(1));
}

TEST_CASE("block permutation is multiplicative") {
  // theta(t*s, t_{s^{-1}(1)}*s_1, ...) =
  //   theta(t; t_{s^{-1}(.)}) * theta(s; s_.)
  std::mt19937_64 g(3);
  for (int trial = 0; trial < 100; trial++) {
    int n = 1 + (int)(g() % 4);
    std::vector<int> sizes(n);
    for (int &k : sizes) k = (int)(g() % 4);
    Perm s = random_perm(g, n), t = random_perm(g, n);
    std::vector<Perm> ss, ts, prod, tperm;
    std::vector<int> perm_sizes;
    for (int i = 0; i < n; i++) {
      ss.push_back(random_perm(g, sizes[i]));
      ts.push_back(random_perm(g, sizes[i]));
      prod.push_back(perm_compose(ts[i], ss[i]));
    }
    for (int j = 0; j < n; j++) {
      int i = s.seq[j];
      tperm.push_back(ts[i - 1]);
      perm_sizes.push_back(sizes[i - 1]);
    }
    Perm lhs = block_permutation(perm_compose(t, s), prod);
    Perm rhs = perm_compose(block_permutation(t, tperm),
                            block_permutation(s, ss));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("restriction") {
  Perm s(std::vector<int>{4, 5, 2, 1, 3});
  CHECK(perm_restrict(s, {2, 4}) == Perm(std::vector<int>{2, 1}));
  CHECK(perm_restrict(s, {1, 2, 3, 4, 5}) == s);
  CHECK(perm_restrict(s, {}) == perm_identity(0));
  std::mt19937_64 g(4);
  for (int trial = 0; trial < 100; trial++) {
    int n = 1 + (int)(g() % 6);
    Perm p = random_perm(g, n);
    std::vector<int> I;
    for (int v = 1; v <= n; v++)
      if (g() % 2) I.push_back(v);
    Perm r = perm_restrict(p, I);
    CHECK(r.n() == (int)I.size());
    CHECK(r.valid());
    // order of I's letters is preserved
    for (size_t a = 0; a + 1 < I.size(); a++)
      CHECK((p.image(I[r.seq[a] - 1]) < p.image(I[r.seq[a + 1] - 1])));
  }
}

TEST_CASE("c_I") {
  CHECK(c_of(5, {2, 4}) == Perm(std::vector<int>{1, 3, 5, 2, 4}));
  CHECK(c_of(3, {}) == perm_identity(3));
  CHECK(c_of(3, {1, 2, 3}) == perm_identity(3));
}

TEST_CASE("image and preimage sets") {
  Perm s(std::vector<int>{4, 5, 2, 1, 3});  // s = (14)(235)
  CHECK(image_set(s, {4, 5}) == std::vector<int>{1, 2});
  CHECK(image_set(s, {1, 4}) == std::vector<int>{1, 4});
  CHECK(preimage_set(s, {1, 2}) == std::vector<int>{4, 5});
  CHECK(preimage_set(s, image_set(s, {2, 3})) == std::vector<int>{2, 3});
}

TEST_CASE("subsets") {
  auto ss = subsets_of_size(4, 2);
  REQUIRE(ss.size() == 6);
  CHECK(ss[0] == std::vector<int>{1, 2});
  CHECK(ss[5] == std::vector<int>{3, 4});
  for (long r = 0; r < (long)ss.size(); r++)
    CHECK(subset_rank(4, ss[r]) == r);
  CHECK(binom(6, 3) == 20);
  CHECK(subsets_of_size(3, 0).size() == 1);
  CHECK(complement_set(5, {2, 4}) == std::vector<int>{1, 3, 5});
}
