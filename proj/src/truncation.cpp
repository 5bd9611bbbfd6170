#include "truncation.hpp"

namespace operad {

Mat trunc_component(const Operad &p, int k, int n) {
  p.check_arity(n);
  if (k < 0) throw usage_error("truncation index must be non-negative");
  int d = p.dim(n);
  if (k == 0) return rref(Mat::identity(d)).basis;
  if (n < k) return Mat(0, d);
  Mat stacked(d, 0);
  for (const auto &I : subsets_of_size(n, k - 1))
    stacked = hstack(stacked, pi_matrix(p, n, I));
  return rref(kernel_of_map(stacked)).basis;
}

Ideal trunc_ideal(const Operad &p, int k) {
  Ideal ideal;
  for (int n = 0; n <= p.max_arity(); n++)
    ideal.comp.push_back(trunc_component(p, k, n));
  return ideal;
}

Ideal trunc_ideal_rel(const Operad &p, int k, const Mat &m) {
  if (k < 1) throw usage_error("relative truncation needs k >= 1");
  if (k > p.max_arity())
    throw usage_error("relative truncation index beyond the horizon");
  if (m.nc != p.dim(k))
    throw usage_error("submodule columns must match the arity-k component");
  // v lies in the row space of m iff v kills every row of nullspace(m)
  Mat ann = mat_transpose(nullspace(m));
  Ideal ideal;
  for (int n = 0; n <= p.max_arity(); n++) {
    Mat base = trunc_component(p, k, n);
    if (n < k || base.nr == 0 || ann.nc == 0) {
      ideal.comp.push_back(n < k ? Mat(0, p.dim(n)) : base);
      continue;
    }
    Mat stacked(base.nr, 0);
    for (const auto &I : subsets_of_size(n, k))
      stacked =
          hstack(stacked, mat_mul(mat_mul(base, pi_matrix(p, n, I)), ann));
    Mat x = kernel_of_map(stacked);
    ideal.comp.push_back(rref(mat_mul(x, base)).basis);
  }
  return ideal;
}

std::vector<int> signature_of(const Operad &p, int upto) {
  if (upto < 1 || upto > p.max_arity())
    throw usage_error("signature range must lie within 1..horizon");
  std::vector<int> s;
  for (int k = 1; k <= upto; k++)
    s.push_back(trunc_component(p, k, k).nr);
  return s;
}

std::pair<int, int> one_dim_submodules(const Operad &p, const Mat &sub,
                                       int n) {
  p.check_arity(n);
  Rref base = rref(sub);
  int t = base.rank();
  if (n <= 1 || t == 0) return {t, t};
  Mat fixed(t, 0), sign(t, 0);
  for (int j = 1; j < n; j++) {
    Mat a(t, t);
    for (int r = 0; r < t; r++) {
      Vec v = base.basis.row(r);
      Vec w = zero_vec(p.dim(n));
      for (int c = 0; c < p.dim(n); c++)
        if (v[c] != 0) axpy(w, v[c], p.act_gen_basis(n, c, j));
      auto coords = coords_in(w, base);
      if (!coords)
        throw usage_error("subspace is not stable under s_" +
                          std::to_string(j));
      a.set_row(r, *coords);
    }
    Mat minus = a, plus = a;
    for (int r = 0; r < t; r++) {
      minus.at(r, r) -= 1;
      plus.at(r, r) += 1;
    }
    fixed = hstack(fixed, minus);
    sign = hstack(sign, plus);
  }
  return {kernel_of_map(fixed).nr, kernel_of_map(sign).nr};
}

std::shared_ptr<TableOperad> quotient_by_trunc(const Operad &p, int k,
                                               const std::string &name) {
  return quotient_operad(p, trunc_ideal(p, k), name, k);
}

}  // namespace operad
