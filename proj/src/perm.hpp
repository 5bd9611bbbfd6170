#pragma once

#include <compare>
#include <string>
#include <vector>

namespace operad {

// A permutation sigma in S_n is stored as its one-line sequence
// seq = (sigma^{-1}(1), ..., sigma^{-1}(n)): seq[k-1] is the letter placed
// at position k, so sigma(seq[k-1]) = k. Products compose left factor
// first as functions are read right to left: (s*t)(x) = s(t(x)), giving
// seq_{s*t}[k] = seq_t[seq_s[k]].
struct Perm {
  std::vector<int> seq;

  Perm() = default;
  explicit Perm(std::vector<int> s) : seq(std::move(s)) {}

  int n() const { return (int)seq.size(); }
  bool valid() const;
  bool is_identity() const;
  // sigma(letter); letter in 1..n
  int image(int letter) const;

  bool operator==(const Perm &) const = default;
  auto operator<=>(const Perm &) const = default;  // lex on seq
};

Perm perm_identity(int n);
Perm perm_compose(const Perm &s, const Perm &t);  // s*t
Perm perm_inverse(const Perm &s);
int perm_sign(const Perm &s);

// All of S_n, ordered lexicographically by seq; rank/unrank match it.
std::vector<Perm> symmetric_group(int n);
long perm_rank(const Perm &s);
Perm perm_unrank(int n, long r);
long factorial(int n);

// js with s = s_{j1} * s_{j2} * ... * s_{jm}, s_j the adjacent
// transposition (j, j+1); empty for the identity.
std::vector<int> adjacent_factorization(const Perm &s);

// Block permutation: blocks of sizes k_1..k_n are permuted according to s
// (block i keeps its content permuted by blocks[i-1] and lands where s
// sends position i). The one-line sequence is the concatenation over
// positions j of m_{seq_s[j]} + seq of block seq_s[j], with m_i the offset
// k_1 + ... + k_{i-1}.
Perm block_permutation(const Perm &s, const std::vector<Perm> &blocks);
// s spread over block sizes: block_permutation(s, identities of sizes[]).
Perm block_spread(const Perm &s, const std::vector<int> &sizes);
// identity of S_m with the block s inserted at slot i (1-based): the block
// permutation of 1_m with sizes (1,..,1,|s|@i,1,..,1).
Perm block_at(int m, int i, const Perm &s);

// Restriction to a subset I (sorted, 1-based): keep the letters of I in
// their order of appearance in seq, renumber by rank in I.
Perm perm_restrict(const Perm &s, const std::vector<int> &I);

// c_I in S_n: one-line sequence = (complement of I ascending, I ascending).
Perm c_of(int n, const std::vector<int> &I);

// sigma^{-1}(I) as a sorted set.
std::vector<int> preimage_set(const Perm &s, const std::vector<int> &I);
// sigma(I) as a sorted set.
std::vector<int> image_set(const Perm &s, const std::vector<int> &I);

std::vector<int> complement_set(int n, const std::vector<int> &I);

// Subsets of [n] of size k in lexicographic order; rank/unrank match it.
std::vector<std::vector<int>> subsets_of_size(int n, int k);
long subset_rank(int n, const std::vector<int> &I);
long binom(int n, int k);

std::string perm_str(const Perm &s);     // "312", comma-joined past 9
std::string subset_str(const std::vector<int> &I);  // "{2,4}"

}  // namespace operad
