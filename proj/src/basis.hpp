#pragma once

#include <string>
#include <vector>

#include "builders.hpp"
#include "truncation.hpp"

namespace operad {

// Section matrix for the slot set I (the slots that contraction by I
// removes): theta in P(k) with k = n - |I| maps to
//   (two_unit o (theta, 1_{n-k})) * c_{I},
// a vector in P(n) whose contraction Gamma^I gives theta back.
// Rows index the basis of P(k), columns the basis of P(n).
// Requires a 2-unit and, when I = [n], a 0-ary unit.
Mat lambda_matrix(const Operad &p, int n, const std::vector<int> &I);

struct BasisReport {
  bool ok = false;
  std::string why;
  // block_sizes[n][k] = (diagonal rank at k) * C(n, k); the blocks for a
  // fixed n partition a basis of P(n).
  std::vector<std::vector<long>> block_sizes;
};

// For each arity n <= max_n, sections of the diagonal rung bases over all
// slot sets must assemble to a basis of P(n), with the blocks for k >= j
// spanning exactly the j-th truncation component.
BasisReport verify_basis_theorem(const Operad &p, int max_n);

// First differences of truncation ranks inside an ideal are determined by
// the diagonal: with g(k, n) = dim(kth component meet J)(n),
//   g(k, n) - g(k+1, n) == g(k, k) * C(n, k)  for all 0 <= k <= n <= max_n.
bool check_rank_recursion(const Operad &p, const Ideal &ideal, int max_n,
                          std::string *why = nullptr);
// Absolute form: J = P.
bool check_rank_recursion(const Operad &p, int max_n,
                          std::string *why = nullptr);

// Truncation ranks drop through a quotient by exactly the overlap with the
// kernel: dim comp_k(P/J)(n) == dim comp_k(P)(n) - dim(comp_k(P) meet J)(n).
bool check_quotient_rungs(const Operad &p, const Ideal &ideal, int max_n,
                          std::string *why = nullptr);

// The S_n-module induced from an S_w-module m on pairs (x, I) with
// I a slot set of size n - w:
//   (x, I) * s = (x * Gamma^{s^{-1} I}(s), s^{-1} I).
// Basis order: slot sets lexicographic, module coordinate within each.
SwModule induced_module(const SwModule &m, int n);

// The symmetric action permutes sections the same way it permutes the
// induced module: for theta in the diagonal rung at k,
//   Lambda_I(theta) * s == Lambda_{s^{-1} I}(theta * Gamma^{s^{-1} I}(s))
// modulo the (k+1)-st truncation component of P(n); exact when that
// component vanishes.
bool check_induced_action(const Operad &p, int k, int n,
                          std::string *why = nullptr, unsigned seed = 0);

// Gamma^I after Lambda_I is the identity on all of P(k); for I' != I of
// the same size, Gamma^{I'} after Lambda_I kills the diagonal rung at k.
bool check_contraction_recovery(const Operad &p, int max_n,
                                std::string *why = nullptr);

struct OperatorSuiteReport {
  bool ok = true;
  long checks = 0;
  std::vector<std::string> violations;  // capped at 8
};

// Matrix identities tying contraction, doubling, padding, the symmetric
// action, restriction, and partial composition together over the whole
// horizon of p. Requires a 2-unit.
OperatorSuiteReport operator_identity_suite(const Operad &p,
                                            unsigned seed = 0);

// The ideal generated by the S_k-span M of the seed rows is spanned,
// arity by arity, by padded doubling words applied to restrictions of M:
//   iota^l_r ( Delta-words ( pi^I (M) ) ),
// closed under the symmetric action. Verified against the saturation
// closure. Requires the doubling tower to be slot-insensitive (2a).
bool check_padded_word_span(const Operad &p, int k, const Mat &seeds,
                            std::string *why = nullptr);

}  // namespace operad
