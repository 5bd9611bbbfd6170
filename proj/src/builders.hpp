#pragma once

#include <cstdint>
#include <optional>

#include "operad.hpp"

namespace operad {

// Unital augmented algebra A = k ⊕ Ā with Ā spanned by δ_1..δ_d and
// δ_i δ_j = Σ_k omega[i][j][k] δ_k. Products of augmentation-ideal
// elements never have a 1-component (omega carries only δ indices).
struct AugmentedAlgebra {
  int d = 0;
  std::vector<Rat> omega;  // ((i-1)*d + (j-1))*d + (k-1), all 1-based

  const Rat &at(int i, int j, int k) const {
    return omega[((size_t)(i - 1) * d + (j - 1)) * d + (k - 1)];
  }
  Rat &at(int i, int j, int k) {
    return omega[((size_t)(i - 1) * d + (j - 1)) * d + (k - 1)];
  }
  // throws when the product fails associativity
  void validate() const;
};

// x, x^2, ..., x^d inside k[x]/(x^{d+1}), augmentation ideal basis.
AugmentedAlgebra truncated_polynomial_algebra(int d);
// the same algebra conjugated by a seeded random unimodular integer
// matrix, so the structure constants look generic but stay exact
AugmentedAlgebra random_associative_algebra(int d, std::uint64_t seed);

// An S_w-module of dimension d: action matrices for the adjacent
// transpositions s_1..s_{w-1}.
struct SwModule {
  int w = 0;
  int d = 0;
  std::vector<Mat> gens;  // w-1 matrices, each d x d

  void validate() const;  // shapes and Coxeter relations
  Vec act(const Vec &v, const Perm &s) const;
};

SwModule trivial_sw_module(int w, int d);
SwModule sign_sw_module(int w);

// ---- builders ----
// Each refuses max_arity > 8 unless allow_large is set; dense rational
// tables past |S_8| stop being honest interactive objects.

// kS_n with composition by block permutation and right multiplication
OperadPtr build_as(int N, bool allow_large = false);
// k in every arity, trivial everything
OperadPtr build_com(int N, bool allow_large = false);
// k, k, 0, 0, ...: the smallest unitary operad
OperadPtr build_uni(int N, bool allow_large = false);

// D(n) = k1_n ⊕ ⊕_{i∈[n],j} kδ^n_{(i)j}, the 2-unitary operad of the
// augmented algebra A. With a chain T_2 ⊇ T_3 ⊇ ... of generator
// subsets (indices into 1..d, entries for arities 2..N) the unitary
// suboperad D^I is built instead: no 1_n line for n ≥ 2 and only the
// chain's δ-lines. The chain must absorb products: for t ∈ T_α, l ∈ T_β
// (T_1 = all), omega[t][l][v] = 0 whenever v ∉ T_{α+β-1}.
OperadPtr build_d(const AugmentedAlgebra &a, int N, bool allow_large = false,
                  const std::optional<std::vector<std::vector<int>>> &chain =
                      std::nullopt);

// Com-augmented operad with signature (0,...,0,d,0,...), d at position w:
// P(n) = k1_n for n < w and k1_n ⊕ (V spread over C(n,w) slots) beyond.
// For w = 1 the module multiplication is zero by construction.
OperadPtr build_signature_operad(int w, const SwModule &v, int N,
                                 bool allow_large = false);

// Com ⊕ ⊔_i ker(ε_i) with componentwise composition and zero cross terms
OperadPtr com_augmented_sum(const std::vector<OperadPtr> &blocks);
// sum of trivial-module signature blocks realizing the prescribed
// signature; all-zero gives Com
OperadPtr build_from_signature(const std::vector<long> &sig, int N,
                               bool allow_large = false);
// the unitary (not 2-unitary) suboperad k1_0 ⊕ Q(1) ⊕ ⊕_{n≥2} ^nU_Q(n)
// of Q = build_from_signature(sig): generating function
// 1 + (d_1+1)t + Σ_{w≥2} d_w t^w
OperadPtr unitary_from_signature(const std::vector<long> &sig, int N,
                                 bool allow_large = false);

// arity-wise tensor product; both factors must share the horizon
OperadPtr hadamard(OperadPtr p, OperadPtr q);

// Uni ⊕ M with M placed at arity w; every composition involving two
// module elements, or a module element with 1_0, is zero
OperadPtr build_uni_plus_m(int w, const SwModule &v, int N,
                           bool allow_large = false);

// alternating sum Σ_σ sgn(σ)·σ in As(n) coordinates
Vec phi(int n);

// Whether P splits as Com ⊕ ker(ε) compatibly with composition: unit
// tower S-trivial and multiplicative, augmentation multiplicative.
bool is_com_augmented(const Operad &p, std::string *why = nullptr);

}  // namespace operad
