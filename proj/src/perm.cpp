#include "perm.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace operad {

bool Perm::valid() const {
  std::vector<char> seen(seq.size() + 1, 0);
  for (int v : seq) {
    if (v < 1 || v > (int)seq.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool Perm::is_identity() const {
  for (int k = 0; k < n(); k++)
    if (seq[k] != k + 1) return false;
  return true;
}

int Perm::image(int letter) const {
  for (int k = 0; k < n(); k++)
    if (seq[k] == letter) return k + 1;
  throw std::out_of_range("letter outside 1..n");
}

Perm perm_identity(int n) {
  std::vector<int> s(n);
  for (int k = 0; k < n; k++) s[k] = k + 1;
  return Perm(std::move(s));
}

Perm perm_compose(const Perm &s, const Perm &t) {
  if (s.n() != t.n()) throw std::invalid_argument("size mismatch");
  std::vector<int> r(s.n());
  for (int k = 0; k < s.n(); k++) r[k] = t.seq[s.seq[k] - 1];
  return Perm(std::move(r));
}

Perm perm_inverse(const Perm &s) {
  std::vector<int> r(s.n());
  for (int k = 0; k < s.n(); k++) r[s.seq[k] - 1] = k + 1;
  return Perm(std::move(r));
}

int perm_sign(const Perm &s) {
  int inv = 0;
  for (int a = 0; a < s.n(); a++)
    for (int b = a + 1; b < s.n(); b++)
      if (s.seq[a] > s.seq[b]) inv++;
  return (inv & 1) ? -1 : 1;
}

std::vector<Perm> symmetric_group(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  out.push_back(p);
  while (std::next_permutation(p.seq.begin(), p.seq.end())) out.push_back(p);
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; k++) f *= k;
  return f;
}

long perm_rank(const Perm &s) {
  // factorial number system on the lex order of seq
  long r = 0;
  int n = s.n();
  for (int k = 0; k < n; k++) {
    int smaller = 0;
    for (int l = k + 1; l < n; l++)
      if (s.seq[l] < s.seq[k]) smaller++;
    r += smaller * factorial(n - 1 - k);
  }
  return r;
}

Perm perm_unrank(int n, long r) {
  std::vector<int> pool(n);
  for (int k = 0; k < n; k++) pool[k] = k + 1;
  std::vector<int> s;
  s.reserve(n);
  for (int k = n - 1; k >= 0; k--) {
    long f = factorial(k);
    long d = r / f;
    r %= f;
    s.push_back(pool[d]);
    pool.erase(pool.begin() + d);
  }
  return Perm(std::move(s));
}

std::vector<int> adjacent_factorization(const Perm &s) {
  // Bubble-sort seq to the identity by position swaps; swapping positions
  // j, j+1 is left multiplication by s_j, so s = s_{j1} * ... * s_{jm} in
  // the order recorded.
  std::vector<int> js;
  std::vector<int> w = s.seq;
  int n = (int)w.size();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 1; j < n; j++) {
      if (w[j - 1] > w[j]) {
        std::swap(w[j - 1], w[j]);
        js.push_back(j);
        moved = true;
      }
    }
  }
  return js;
}

Perm block_permutation(const Perm &s, const std::vector<Perm> &blocks) {
  int n = s.n();
  if ((int)blocks.size() != n) throw std::invalid_argument("need n blocks");
  std::vector<int> off(n + 1, 0);
  for (int i = 1; i <= n; i++) off[i] = off[i - 1] + blocks[i - 1].n();
  std::vector<int> r;
  r.reserve(off[n]);
  for (int j = 0; j < n; j++) {
    int i = s.seq[j];  // block landing at position j+1
    for (int v : blocks[i - 1].seq) r.push_back(off[i - 1] + v);
  }
  return Perm(std::move(r));
}

Perm block_spread(const Perm &s, const std::vector<int> &sizes) {
  std::vector<Perm> blocks;
  blocks.reserve(sizes.size());
  for (int k : sizes) blocks.push_back(perm_identity(k));
  return block_permutation(s, blocks);
}

Perm block_at(int m, int i, const Perm &s) {
  std::vector<Perm> blocks(m, perm_identity(1));
  blocks[i - 1] = s;
  return block_permutation(perm_identity(m), blocks);
}

Perm perm_restrict(const Perm &s, const std::vector<int> &I) {
  std::vector<int> r;
  r.reserve(I.size());
  for (int v : s.seq) {
    auto it = std::lower_bound(I.begin(), I.end(), v);
    if (it != I.end() && *it == v) r.push_back((int)(it - I.begin()) + 1);
  }
  return Perm(std::move(r));
}

Perm c_of(int n, const std::vector<int> &I) {
  std::vector<int> s = complement_set(n, I);
  s.insert(s.end(), I.begin(), I.end());
  return Perm(std::move(s));
}

std::vector<int> preimage_set(const Perm &s, const std::vector<int> &I) {
  std::vector<int> r;
  r.reserve(I.size());
  for (int v : I) r.push_back(s.seq[v - 1]);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> image_set(const Perm &s, const std::vector<int> &I) {
  std::vector<int> r;
  r.reserve(I.size());
  for (int v : I) r.push_back(s.image(v));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> complement_set(int n, const std::vector<int> &I) {
  std::vector<int> r;
  r.reserve(n - (int)I.size());
  size_t p = 0;
  for (int v = 1; v <= n; v++) {
    if (p < I.size() && I[p] == v) {
      p++;
      continue;
    }
    r.push_back(v);
  }
  return r;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; i++) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) i--;
    if (i < 0) break;
    cur[i]++;
    for (int j = i + 1; j < k; j++) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (int i = 1; i <= k; i++) r = r * (n - k + i) / i;
  return r;
}

long subset_rank(int n, const std::vector<int> &I) {
  // lex rank among size-|I| subsets of [n]
  long r = 0;
  int k = (int)I.size();
  int prev = 0;
  for (int i = 0; i < k; i++) {
    for (int v = prev + 1; v < I[i]; v++) r += binom(n - v, k - 1 - i);
    prev = I[i];
  }
  return r;
}

std::string perm_str(const Perm &s) {
  std::string out;
  bool wide = s.n() > 9;
  for (int k = 0; k < s.n(); k++) {
    if (wide && k) out += ',';
    out += std::to_string(s.seq[k]);
  }
  if (s.n() == 0) out = "e";
  return out;
}

std::string subset_str(const std::vector<int> &I) {
  std::string out = "{";
  for (size_t k = 0; k < I.size(); k++) {
    if (k) out += ',';
    out += std::to_string(I[k]);
  }
  return out + "}";
}

}  // namespace operad
