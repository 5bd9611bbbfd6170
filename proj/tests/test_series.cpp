#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "builders.hpp"
#include "series.hpp"

using namespace operad;

TEST_CASE("transform of the doubling sequence is constant") {
  std::vector<Rat> a = {1, 2, 4, 8, 16};
  auto b = binomial_transform(a);
  CHECK(b == std::vector<Rat>{1, 1, 1, 1, 1});
  CHECK(binomial_transform_inverse(b) == a);
}

TEST_CASE("transform and inverse are mutually inverse on random data") {
  std::mt19937_64 gen(0);
  for (int t = 0; t < 50; t++) {
    int len = 1 + (int)(gen() % 20);
    std::vector<Rat> a(len);
    for (auto &x : a) x = Rat((long)(gen() % 2000001) - 1000000);
    CHECK(binomial_transform_inverse(binomial_transform(a)) == a);
    CHECK(binomial_transform(binomial_transform_inverse(a)) == a);
  }
}

TEST_CASE("factorial dimensions transform to the diagonal ranks") {
  auto as = build_as(5);
  std::vector<long> dims;
  for (int n = 0; n <= 5; n++) dims.push_back(as->dim(n));
  auto b = binomial_transform(to_rats(dims));
  CHECK(b == to_rats(std::vector<long>{1, 0, 1, 2, 9, 44}));
  auto sig = signature_of(*as, 5);
  for (int k = 1; k <= 5; k++) CHECK(b[k] == Rat(sig[k - 1]));
}

TEST_CASE("closed form expands to the diagonal series") {
  std::vector<Rat> f = {1, 0, 1, 2, 9};
  HilbertForm h = hilbert_form(f);
  CHECK(h.denom_power == 5);
  CHECK(h.expansion(6) == diagonal_expansion(f, 6));
  CHECK(diagonal_expansion(f, 6) == std::vector<Rat>{1, 1, 2, 6, 24, 76});
}

TEST_CASE("removable denominator factors cancel") {
  HilbertForm h = hilbert_form({Rat(1), Rat(0)});
  CHECK(h.denom_power == 1);
  CHECK(h.numerator == std::vector<Rat>{1});
  HilbertForm z = hilbert_form({Rat(0), Rat(0)});
  CHECK(z.denom_power == 0);
  CHECK(z.numerator.empty());
  HilbertForm g = hilbert_form({Rat(1), Rat(3)});
  CHECK(g.denom_power == 2);
  CHECK(g.numerator == std::vector<Rat>{1, 2});
  CHECK(g.expansion(3) == std::vector<Rat>{1, 4, 7});
}

TEST_CASE("growth certificates carry the construction's guarantee") {
  GrowthCertificate c = growth_certificate(*build_com(4));
  CHECK(c.value == 1);
  CHECK(c.status == GrowthStatus::EXACT);
  CHECK(c.dims_match_diagonal);

  auto as = build_as(4);
  c = growth_certificate(*as);
  CHECK(c.value == 5);
  CHECK(c.status == GrowthStatus::LOWER_BOUND);
  CHECK(c.dims_match_diagonal);

  c = growth_certificate(*build_d(random_associative_algebra(2, 0), 5));
  CHECK(c.value == 2);
  CHECK(c.status == GrowthStatus::EXACT);
  CHECK(c.signature == std::vector<int>{2, 0, 0, 0, 0});

  c = growth_certificate(*quotient_by_trunc(*as, 3, "quotient"));
  CHECK(c.value == 3);
  CHECK(c.status == GrowthStatus::EXACT);
  CHECK(c.dims_match_diagonal);
}

TEST_CASE("a module stuck at one arity escapes the diagonal") {
  auto u = build_uni_plus_m(2, trivial_sw_module(2, 1), 4, false);
  GrowthCertificate c = growth_certificate(*u);
  CHECK_FALSE(c.dims_match_diagonal);
  CHECK(c.note.find("diagonal") != std::string::npos);
}

TEST_CASE("ideal transforms stay within the operad's") {
  auto as = build_as(4);
  std::string why;
  Ideal gen = generate_ideal(*as, {{2, phi(2)}});
  CHECK(check_transform_monotone(*as, gen, &why));
  CHECK(check_transform_monotone(*as, trunc_ideal(*as, 3), &why));
  // a line stuck at arity 2: the difference sequence turns negative
  Ideal fake = zero_ideal(*as);
  fake.comp[2] = rref(Mat::from_rows({phi(2)}, 2)).basis;
  CHECK_FALSE(check_transform_monotone(*as, fake, &why));
  CHECK(why.find("negative") != std::string::npos);
}

TEST_CASE("growth exponent impressions and the algebra bound") {
  std::vector<long> dims = {1, 1, 2, 6, 24};
  auto s = exponent_samples(dims);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == doctest::Approx(1.0));
  CHECK(s[2] == doctest::Approx(std::log(24.0) / std::log(4.0)));
  CHECK(algebra_growth_bound(3, 2) == 4);
}
