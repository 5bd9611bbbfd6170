#pragma once

#include <string>
#include <vector>

#include "truncation.hpp"

namespace operad {

// b_i = sum_k a_k (-1)^(i-k) C(i,k), the inverse substitutes C for the
// signed C; the two are mutually inverse on sequences of any length
std::vector<Rat> binomial_transform(const std::vector<Rat> &a);
std::vector<Rat> binomial_transform_inverse(const std::vector<Rat> &b);
std::vector<Rat> to_rats(const std::vector<long> &a);
std::vector<Rat> to_rats(const std::vector<int> &a);

// d(n) = sum_k f(k) C(n, k) for n = 0..terms-1
std::vector<Rat> diagonal_expansion(const std::vector<Rat> &f, int terms);

// sum_k f(k) t^k / (1-t)^(k+1) written over a single power of (1-t),
// with all removable (1-t) factors cancelled
struct HilbertForm {
  std::vector<Rat> numerator;  // coefficient i belongs to t^i
  int denom_power = 0;
  std::vector<Rat> expansion(int terms) const;
};
HilbertForm hilbert_form(const std::vector<Rat> &f);

enum class GrowthStatus { EXACT, LOWER_BOUND };

struct GrowthCertificate {
  // 1 + the largest rung index with support inside the horizon
  int value = 1;
  // EXACT only when the construction certifies that every higher rung
  // vanishes beyond the horizon as well
  GrowthStatus status = GrowthStatus::LOWER_BOUND;
  std::vector<int> signature;  // diagonal rung ranks at 1..horizon
  std::vector<long> dims;      // component dimensions at 0..horizon
  // the dimension series is determined by the diagonal:
  // transform(dims) == (dim at 0, signature)
  bool dims_match_diagonal = false;
  std::string note;
};
GrowthCertificate growth_certificate(const Operad &p);

// log d(n) / log n at each sampled arity with d(n) > 0, n >= 2: an
// impression of the growth exponent at the horizon, not a limit
std::vector<double> exponent_samples(const std::vector<long> &dims);

// growth of an algebra presented over the operad by this many generators
long algebra_growth_bound(long operad_growth, long generators);

// transform of the ideal's dimension sequence is coefficientwise between
// zero and the transform of the operad's
bool check_transform_monotone(const Operad &p, const Ideal &ideal,
                              std::string *why = nullptr);

}  // namespace operad
