#include "series.hpp"

#include <cmath>

namespace operad {

std::vector<Rat> binomial_transform(const std::vector<Rat> &a) {
  std::vector<Rat> b(a.size());
  for (size_t i = 0; i < a.size(); i++)
    for (size_t k = 0; k <= i; k++) {
      Rat c = binom((int)i, (int)k);
      if ((i - k) % 2) c = -c;
      b[i] += c * a[k];
    }
  return b;
}

std::vector<Rat> binomial_transform_inverse(const std::vector<Rat> &b) {
  std::vector<Rat> a(b.size());
  for (size_t i = 0; i < b.size(); i++)
    for (size_t k = 0; k <= i; k++)
      a[i] += Rat(binom((int)i, (int)k)) * b[k];
  return a;
}

std::vector<Rat> to_rats(const std::vector<long> &a) {
  return std::vector<Rat>(a.begin(), a.end());
}

std::vector<Rat> to_rats(const std::vector<int> &a) {
  return std::vector<Rat>(a.begin(), a.end());
}

std::vector<Rat> diagonal_expansion(const std::vector<Rat> &f, int terms) {
  std::vector<Rat> d(std::max(terms, 0));
  for (int n = 0; n < terms; n++)
    for (size_t k = 0; k < f.size(); k++) d[n] += f[k] * binom(n, (int)k);
  return d;
}

std::vector<Rat> HilbertForm::expansion(int terms) const {
  std::vector<Rat> d(std::max(terms, 0));
  for (int n = 0; n < terms; n++)
    for (size_t i = 0; i <= (size_t)n && i < numerator.size(); i++)
      // 1/(1-t)^p expands with C(n+p-1, p-1)
      d[n] += numerator[i] * (denom_power == 0
                                  ? Rat(i == (size_t)n ? 1 : 0)
                                  : Rat(binom((int)(n - i) + denom_power - 1,
                                              denom_power - 1)));
  return d;
}

HilbertForm hilbert_form(const std::vector<Rat> &f) {
  HilbertForm h;
  if (f.empty()) return h;
  int m = (int)f.size() - 1;
  // sum f(k) t^k (1-t)^(m-k) over (1-t)^(m+1)
  std::vector<Rat> num(m + 1, Rat(0));
  for (int k = 0; k <= m; k++) {
    if (f[k] == 0) continue;
    std::vector<Rat> pw(1, Rat(1));  // (1-t)^(m-k)
    for (int t = 0; t < m - k; t++) {
      std::vector<Rat> nx(pw.size() + 1, Rat(0));
      for (size_t i = 0; i < pw.size(); i++) {
        nx[i] += pw[i];
        nx[i + 1] -= pw[i];
      }
      pw = std::move(nx);
    }
    for (size_t i = 0; i < pw.size(); i++) num[k + i] += f[k] * pw[i];
  }
  int denom = m + 1;
  while (!num.empty() && num.back() == 0) num.pop_back();
  // cancel (1-t) while the numerator vanishes at t = 1
  while (denom > 0 && !num.empty()) {
    Rat at_one(0);
    for (const Rat &c : num) at_one += c;
    if (at_one != 0) break;
    std::vector<Rat> q(num.size() - 1, Rat(0));
    Rat carry(0);
    for (size_t i = 0; i < q.size(); i++) {
      q[i] = num[i] + carry;
      carry = q[i];
    }
    num = std::move(q);
    denom -= 1;
    while (!num.empty() && num.back() == 0) num.pop_back();
  }
  if (num.empty()) denom = 0;
  h.numerator = std::move(num);
  h.denom_power = denom;
  return h;
}

GrowthCertificate growth_certificate(const Operad &p) {
  GrowthCertificate c;
  int N = p.max_arity();
  c.signature = signature_of(p, N);
  for (int n = 0; n <= N; n++) c.dims.push_back(p.dim(n));
  int top = 0;
  for (int k = 1; k <= N; k++)
    if (c.signature[k - 1] != 0) top = k;
  // off-diagonal support can only appear above the diagonal top when the
  // diagonal fails to control the series; scan the remaining rungs
  bool off_diagonal = false;
  for (int k = top + 1; k <= N; k++)
    for (int n = k + 1; n <= N; n++)
      if (trunc_component(p, k, n).nr > 0) {
        top = std::max(top, k);
        off_diagonal = true;
      }
  c.value = top + 1;
  std::vector<Rat> expect = {Rat(p.dim(0))};
  for (int s : c.signature) expect.push_back(Rat(s));
  c.dims_match_diagonal = binomial_transform(to_rats(c.dims)) == expect;
  auto v = p.vanishing_index();
  if (v && *v <= N + 1 && top < *v) {
    c.status = GrowthStatus::EXACT;
    c.note = "all components from rung " + std::to_string(*v) +
             " vanish by construction";
  } else {
    c.status = GrowthStatus::LOWER_BOUND;
    c.note = v ? "construction certifies vanishing only from rung " +
                     std::to_string(*v) + ", beyond the horizon"
               : "rung support beyond the horizon is not certified";
  }
  if (off_diagonal || !c.dims_match_diagonal)
    c.note += "; the diagonal does not control the dimension series";
  return c;
}

std::vector<double> exponent_samples(const std::vector<long> &dims) {
  std::vector<double> s;
  for (size_t n = 2; n < dims.size(); n++)
    if (dims[n] > 0)
      s.push_back(std::log((double)dims[n]) / std::log((double)n));
  return s;
}

long algebra_growth_bound(long operad_growth, long generators) {
  return operad_growth - 1 + generators;
}

bool check_transform_monotone(const Operad &p, const Ideal &ideal,
                              std::string *why) {
  int N = p.max_arity();
  if (ideal.max_arity() < N)
    throw usage_error("ideal does not cover the horizon");
  std::vector<long> pd, id;
  for (int n = 0; n <= N; n++) {
    pd.push_back(p.dim(n));
    id.push_back(ideal.comp[n].nr);
  }
  auto bp = binomial_transform(to_rats(pd));
  auto bi = binomial_transform(to_rats(id));
  for (int n = 0; n <= N; n++) {
    if (bi[n] < 0) {
      if (why)
        *why = "transform of the subspace dimensions is negative at " +
               std::to_string(n);
      return false;
    }
    if (bi[n] > bp[n]) {
      if (why)
        *why = "transform of the subspace dimensions exceeds the operad's "
               "at " + std::to_string(n);
      return false;
    }
  }
  return true;
}

}  // namespace operad
