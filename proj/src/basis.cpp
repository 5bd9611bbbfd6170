#include "basis.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <utility>

namespace operad {

namespace {

Perm random_perm(int n, std::mt19937_64 &gen) {
  std::vector<int> seq(n);
  for (int i = 0; i < n; i++) seq[i] = i + 1;
  for (int i = n - 1; i > 0; i--)
    std::swap(seq[i], seq[(int)(gen() % (unsigned)(i + 1))]);
  return Perm(std::move(seq));
}

Perm adjacent(int n, int j) {
  Perm s = perm_identity(n);
  std::swap(s.seq[j - 1], s.seq[j]);
  return s;
}

// a few basis coordinates with small integer coefficients
Vec sparse_random_vec(int d, std::mt19937_64 &gen) {
  Vec v = zero_vec(d);
  if (d == 0) return v;
  for (int t = 0; t < 3; t++) v[gen() % d] += Rat((long)(gen() % 7) - 3);
  return v;
}

Vec act_by_gen(const Operad &p, int n, const Vec &v, int j) {
  Vec w = zero_vec(p.dim(n));
  for (int a = 0; a < p.dim(n); a++)
    if (v[a] != 0) axpy(w, v[a], p.act_gen_basis(n, a, j));
  return w;
}

Vec vec_sub(Vec a, const Vec &b) {
  for (size_t c = 0; c < a.size(); c++) a[c] -= b[c];
  return a;
}

}  // namespace

Mat lambda_matrix(const Operad &p, int n, const std::vector<int> &I) {
  p.check_arity(n);
  int k = n - (int)I.size();
  if (k < 0) throw usage_error("slot set larger than the arity");
  for (size_t t = 0; t < I.size(); t++)
    if (I[t] < 1 || I[t] > n || (t > 0 && I[t] <= I[t - 1]))
      throw usage_error("slot set must be a sorted subset of 1..n");
  auto tu = find_two_unit(p);
  if (!tu) throw usage_error("sections need a 2-unit");
  Vec pad = unit_tower(p, n - k);
  Perm c = c_of(n, I);
  Mat m = Mat::zero(p.dim(k), p.dim(n));
  for (int a = 0; a < p.dim(k); a++) {
    Vec v = full_compose(p, 2, tu->coords,
                         {{k, basis_vec(p.dim(k), a)}, {n - k, pad}});
    m.set_row(a, act(p, n, v, c));
  }
  return m;
}

BasisReport verify_basis_theorem(const Operad &p, int max_n) {
  BasisReport rep;
  if (max_n < 0 || max_n > p.max_arity())
    throw usage_error("horizon exceeded");
  if (!find_two_unit(p)) {
    rep.why = "no 2-unit";
    return rep;
  }
  std::vector<Mat> diag(max_n + 1);
  for (int k = 0; k <= max_n; k++) diag[k] = trunc_component(p, k, k);
  rep.block_sizes.resize(max_n + 1);
  for (int n = 0; n <= max_n; n++) {
    rep.block_sizes[n].assign(n + 1, 0);
    // stacked with k descending so the blocks with k >= j form a prefix
    std::vector<Vec> rows;
    for (int k = n; k >= 0; k--) {
      rep.block_sizes[n][k] = (long)diag[k].nr * binom(n, k);
      if (diag[k].nr == 0) continue;
      for (const auto &I : subsets_of_size(n, n - k)) {
        Mat lam = lambda_matrix(p, n, I);
        for (int r = 0; r < diag[k].nr; r++)
          rows.push_back(vec_mat(diag[k].row(r), lam));
      }
    }
    long total = 0;
    for (long b : rep.block_sizes[n]) total += b;
    if (total != p.dim(n)) {
      rep.why = "block sizes sum to " + std::to_string(total) +
                " instead of dim " + std::to_string(p.dim(n)) + " at arity " +
                std::to_string(n);
      return rep;
    }
    Mat stacked =
        rows.empty() ? Mat::zero(0, p.dim(n)) : Mat::from_rows(rows, p.dim(n));
    if (rref(stacked).rank() != p.dim(n)) {
      rep.why = "sections are dependent at arity " + std::to_string(n);
      return rep;
    }
    long off = 0;
    for (int k = n; k >= 1; k--) {
      off += rep.block_sizes[n][k];
      std::vector<Vec> tv(rows.begin(), rows.begin() + off);
      Mat tail =
          tv.empty() ? Mat::zero(0, p.dim(n)) : Mat::from_rows(tv, p.dim(n));
      Mat rung = trunc_component(p, k, n);
      if (!subspace_contains(rung, tail)) {
        rep.why = "blocks with index >= " + std::to_string(k) +
                  " leave truncation component " + std::to_string(k) +
                  " at arity " + std::to_string(n);
        return rep;
      }
      if (rref(tail).rank() != rung.nr) {
        rep.why = "blocks with index >= " + std::to_string(k) +
                  " do not span truncation component " + std::to_string(k) +
                  " at arity " + std::to_string(n);
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

namespace {

bool rank_recursion_from(const std::function<long(int, int)> &g, int max_n,
                         std::string *why) {
  for (int k = 0; k <= max_n; k++)
    for (int n = k; n <= max_n; n++) {
      long lhs = g(k, n) - (k + 1 > n ? 0 : g(k + 1, n));
      long rhs = g(k, k) * binom(n, k);
      if (lhs != rhs) {
        if (why)
          *why = "rank difference at (k=" + std::to_string(k) + ", n=" +
                 std::to_string(n) + ") is " + std::to_string(lhs) +
                 ", expected " + std::to_string(rhs);
        return false;
      }
    }
  return true;
}

}  // namespace

bool check_rank_recursion(const Operad &p, const Ideal &ideal, int max_n,
                          std::string *why) {
  if (max_n < 0 || max_n > p.max_arity())
    throw usage_error("horizon exceeded");
  if (ideal.max_arity() < max_n)
    throw usage_error("ideal does not cover the requested arities");
  std::vector<std::vector<long>> g(max_n + 1,
                                   std::vector<long>(max_n + 1, 0));
  for (int k = 0; k <= max_n; k++)
    for (int n = k; n <= max_n; n++)
      g[k][n] =
          subspace_intersect(trunc_component(p, k, n), ideal.comp[n]).nr;
  return rank_recursion_from([&](int k, int n) { return g[k][n]; }, max_n,
                             why);
}

bool check_rank_recursion(const Operad &p, int max_n, std::string *why) {
  if (max_n < 0 || max_n > p.max_arity())
    throw usage_error("horizon exceeded");
  std::vector<std::vector<long>> g(max_n + 1,
                                   std::vector<long>(max_n + 1, 0));
  for (int k = 0; k <= max_n; k++)
    for (int n = k; n <= max_n; n++) g[k][n] = trunc_component(p, k, n).nr;
  return rank_recursion_from([&](int k, int n) { return g[k][n]; }, max_n,
                             why);
}

bool check_quotient_rungs(const Operad &p, const Ideal &ideal, int max_n,
                          std::string *why) {
  if (max_n < 0 || max_n > p.max_arity())
    throw usage_error("horizon exceeded");
  if (ideal.max_arity() < max_n)
    throw usage_error("ideal does not cover the requested arities");
  auto q = quotient_operad(p, ideal, "quotient");
  for (int k = 1; k <= max_n; k++)
    for (int n = k; n <= max_n; n++) {
      long got = trunc_component(*q, k, n).nr;
      Mat rung = trunc_component(p, k, n);
      long want = rung.nr - subspace_intersect(rung, ideal.comp[n]).nr;
      if (got != want) {
        if (why)
          *why = "quotient truncation component at (k=" + std::to_string(k) +
                 ", n=" + std::to_string(n) + ") has rank " +
                 std::to_string(got) + ", expected " + std::to_string(want);
        return false;
      }
    }
  return true;
}

SwModule induced_module(const SwModule &m, int n) {
  int k = m.w;
  if (n < k) throw usage_error("induced module needs n >= w");
  auto subs = subsets_of_size(n, n - k);
  int nsub = (int)subs.size();
  SwModule out;
  out.w = n;
  out.d = m.d * nsub;
  for (int j = 1; j < n; j++) {
    Perm s = adjacent(n, j);
    Mat g = Mat::zero(out.d, out.d);
    for (int si = 0; si < nsub; si++) {
      auto pre = preimage_set(s, subs[si]);
      Perm rho = perm_restrict(s, complement_set(n, pre));
      int ti = (int)subset_rank(n, pre);
      for (int t = 0; t < m.d; t++) {
        Vec img = m.act(basis_vec(m.d, t), rho);
        for (int u = 0; u < m.d; u++)
          if (img[u] != 0) g.at(si * m.d + t, ti * m.d + u) = img[u];
      }
    }
    out.gens.push_back(std::move(g));
  }
  out.validate();
  return out;
}

bool check_induced_action(const Operad &p, int k, int n, std::string *why,
                          unsigned seed) {
  p.check_arity(n);
  if (k < 0 || k > n) throw usage_error("rung index out of range");
  Mat rung = trunc_component(p, k, k);
  if (rung.nr == 0) return true;
  auto subs = subsets_of_size(n, n - k);
  std::vector<Mat> lam;
  for (const auto &I : subs) lam.push_back(lambda_matrix(p, n, I));
  Rref high = rref(k + 1 > n ? Mat::zero(0, p.dim(n))
                             : trunc_component(p, k + 1, n));
  std::vector<Perm> sigmas;
  for (int j = 1; j < n; j++) sigmas.push_back(adjacent(n, j));
  std::mt19937_64 gen(seed);
  for (int t = 0; t < 4; t++) sigmas.push_back(random_perm(n, gen));
  for (const Perm &s : sigmas) {
    for (size_t si = 0; si < subs.size(); si++) {
      auto pre = preimage_set(s, subs[si]);
      Perm rho = perm_restrict(s, complement_set(n, pre));
      const Mat &lam2 = lam[subset_rank(n, pre)];
      for (int r = 0; r < rung.nr; r++) {
        Vec lhs = act(p, n, vec_mat(rung.row(r), lam[si]), s);
        Vec rhs = vec_mat(act(p, k, rung.row(r), rho), lam2);
        if (!is_zero_vec(reduce_against(vec_sub(std::move(lhs), rhs), high))) {
          if (why)
            *why = "section equivariance fails at I=" + subset_str(subs[si]) +
                   " sigma=" + perm_str(s);
          return false;
        }
      }
    }
  }
  return true;
}

bool check_contraction_recovery(const Operad &p, int max_n, std::string *why) {
  if (max_n < 0 || max_n > p.max_arity())
    throw usage_error("horizon exceeded");
  for (int n = 0; n <= max_n; n++)
    for (int k = 0; k <= n; k++) {
      Mat rung = trunc_component(p, k, k);
      auto subs = subsets_of_size(n, n - k);
      std::vector<Mat> gam;
      for (const auto &J : subs) gam.push_back(gamma_matrix(p, n, J));
      for (size_t si = 0; si < subs.size(); si++) {
        Mat lam = lambda_matrix(p, n, subs[si]);
        for (size_t sj = 0; sj < subs.size(); sj++) {
          Mat prod = mat_mul(lam, gam[sj]);
          if (sj == si) {
            if (!(prod == Mat::identity(p.dim(k)))) {
              if (why)
                *why = "contraction by " + subset_str(subs[si]) +
                       " does not invert its section at arity " +
                       std::to_string(n);
              return false;
            }
          } else if (!mat_mul(rung, prod).is_zero()) {
            if (why)
              *why = "contraction by " + subset_str(subs[sj]) +
                     " does not kill the section at " + subset_str(subs[si]) +
                     " on the diagonal rung, arity " + std::to_string(n);
            return false;
          }
        }
      }
    }
  return true;
}

OperatorSuiteReport operator_identity_suite(const Operad &p, unsigned seed) {
  OperatorSuiteReport rep;
  auto fail = [&](const std::string &what) {
    rep.ok = false;
    if (rep.violations.size() < 8) rep.violations.push_back(what);
  };
  auto check_mat = [&](const Mat &a, const Mat &b, const std::string &what) {
    rep.checks++;
    if (!(a == b)) fail(what);
  };
  auto check_vec = [&](const Vec &a, const Vec &b, const std::string &what) {
    rep.checks++;
    if (!(a == b)) fail(what);
  };
  int N = p.max_arity();
  auto tu = find_two_unit(p);
  if (!tu) {
    rep.ok = false;
    rep.violations.push_back("no 2-unit");
    return rep;
  }
  bool two_a = check_2a(p, tu->coords);
  std::mt19937_64 gen(seed);
  auto il = [&](int n, int l) {
    return l == 0 ? Mat::identity(p.dim(n)) : iota_left_matrix(p, n, l);
  };
  auto ir = [&](int n, int r) {
    return r == 0 ? Mat::identity(p.dim(n)) : iota_right_matrix(p, n, r);
  };
  auto at = [](int n, int i) {
    return " at n=" + std::to_string(n) + " i=" + std::to_string(i);
  };

  // restriction matrices, reused below: pis[n][size][lex rank]
  std::vector<std::vector<std::vector<Mat>>> pis(N + 1);
  for (int n = 0; n <= N; n++) {
    pis[n].resize(n + 1);
    for (int sz = 0; sz <= n; sz++)
      for (const auto &I : subsets_of_size(n, sz))
        pis[n][sz].push_back(pi_matrix(p, n, I));
  }

  // contracting a fresh double, on either leg, is the identity
  for (int n = 1; n + 1 <= N; n++)
    for (int i = 1; i <= n; i++) {
      Mat d = delta_matrix(p, n, {i});
      check_mat(mat_mul(d, gamma_matrix(p, n + 1, {i})),
                Mat::identity(p.dim(n)),
                "contraction of the lower leg of a double" + at(n, i));
      check_mat(mat_mul(d, gamma_matrix(p, n + 1, {i + 1})),
                Mat::identity(p.dim(n)),
                "contraction of the upper leg of a double" + at(n, i));
    }

  // doubling commutes past contraction with the expected index shift
  for (int n = 2; n + 1 <= N; n++)
    for (int i = 1; i <= n; i++)
      for (int j = 1; j <= n - 1; j++) {
        Mat lhs = mat_mul(gamma_matrix(p, n, {i}), delta_matrix(p, n - 1, {j}));
        Mat rhs =
            i <= j ? mat_mul(delta_matrix(p, n, {j + 1}),
                             gamma_matrix(p, n + 1, {i}))
                   : mat_mul(delta_matrix(p, n, {j}),
                             gamma_matrix(p, n + 1, {i + 1}));
        check_mat(lhs, rhs, "double past contraction" + at(n, i) +
                                " j=" + std::to_string(j));
      }

  // multi-slot doubling equals its single-slot words in both orders
  for (int n = 1; n <= N; n++)
    for (int s = 2; s <= n && n + s <= N; s++)
      for (const auto &I : subsets_of_size(n, s)) {
        Mat direct = delta_matrix(p, n, I);
        Mat up = delta_matrix(p, n, {I[0]});
        for (int t = 2; t <= s; t++)
          up = mat_mul(up, delta_matrix(p, n + t - 1, {I[t - 1] + t - 1}));
        check_mat(up, direct,
                  "ascending doubling word at " + subset_str(I) + ", arity " +
                      std::to_string(n));
        Mat down = delta_matrix(p, n, {I[s - 1]});
        for (int t = s - 1; t >= 1; t--)
          down = mat_mul(down, delta_matrix(p, n + (s - t), {I[t - 1]}));
        check_mat(down, direct,
                  "descending doubling word at " + subset_str(I) + ", arity " +
                      std::to_string(n));
      }

  // multi-slot contraction equals its single-slot words in both orders
  for (int n = 2; n <= N; n++)
    for (int s = 2; s <= n; s++)
      for (const auto &I : subsets_of_size(n, s)) {
        Mat direct = gamma_matrix(p, n, I);
        Mat up = gamma_matrix(p, n, {I[0]});
        for (int t = 2; t <= s; t++)
          up = mat_mul(up, gamma_matrix(p, n - t + 1, {I[t - 1] - (t - 1)}));
        check_mat(up, direct,
                  "ascending contraction word at " + subset_str(I) +
                      ", arity " + std::to_string(n));
        Mat down = gamma_matrix(p, n, {I[s - 1]});
        for (int t = s - 1; t >= 1; t--)
          down = mat_mul(down, gamma_matrix(p, n - (s - t), {I[t - 1]}));
        check_mat(down, direct,
                  "descending contraction word at " + subset_str(I) +
                      ", arity " + std::to_string(n));
      }

  // two-sided padding factors as left pad then right pad; the other
  // order needs the slot-insensitive tower
  for (int n = 0; n <= N; n++)
    for (int l = 0; n + l <= N; l++)
      for (int r = (l == 0 ? 1 : 0); n + l + r <= N; r++) {
        Mat both = iota_matrix(p, n, l, r);
        check_mat(mat_mul(il(n, l), ir(n + l, r)), both,
                  "padding left then right at n=" + std::to_string(n) + " l=" +
                      std::to_string(l) + " r=" + std::to_string(r));
        if (two_a)
          check_mat(mat_mul(ir(n, r), il(n + r, l)), both,
                    "padding right then left at n=" + std::to_string(n) +
                        " l=" + std::to_string(l) + " r=" +
                        std::to_string(r));
      }

  // contraction and doubling slide past padding
  for (int n = 1; n <= N; n++)
    for (int l = 0; n + l <= N; l++)
      for (int r = (l == 0 ? 1 : 0); n + l + r <= N; r++) {
        Mat pad = iota_matrix(p, n, l, r);
        Mat padm1 = iota_matrix(p, n - 1, l, r);
        for (int i = 1; i <= n; i++) {
          check_mat(mat_mul(pad, gamma_matrix(p, n + l + r, {l + i})),
                    mat_mul(gamma_matrix(p, n, {i}), padm1),
                    "contraction slides past padding" + at(n, i) + " l=" +
                        std::to_string(l) + " r=" + std::to_string(r));
          if (n + l + r + 1 <= N)
            check_mat(mat_mul(pad, delta_matrix(p, n + l + r, {l + i})),
                      mat_mul(delta_matrix(p, n, {i}),
                              iota_matrix(p, n + 1, l, r)),
                      "doubling slides past padding" + at(n, i) + " l=" +
                          std::to_string(l) + " r=" + std::to_string(r));
        }
      }

  // contracting a padded unit slot is the identity
  for (int n = 0; n + 1 <= N; n++) {
    check_mat(mat_mul(il(n, 1), gamma_matrix(p, n + 1, {1})),
              Mat::identity(p.dim(n)),
              "contraction of a left unit pad at n=" + std::to_string(n));
    check_mat(mat_mul(ir(n, 1), gamma_matrix(p, n + 1, {n + 1})),
              Mat::identity(p.dim(n)),
              "contraction of a right unit pad at n=" + std::to_string(n));
  }

  // substituting unit towers equals the single-step word from the last slot
  for (int n = 1; n <= N; n++)
    for (int trial = 0; trial < 6; trial++) {
      Vec th = sparse_random_vec(p.dim(n), gen);
      std::vector<int> ks(n, 1);
      int room = N - n;
      for (int i = 0; i < n; i++) {
        int c = (int)(gen() % 4);
        if (c == 0) ks[i] = 0;
        else if (c >= 2) {
          int add = std::min(c - 1, room);
          ks[i] = 1 + add;
          room -= add;
        }
      }
      std::vector<std::pair<int, Vec>> args;
      for (int i = 0; i < n; i++) args.push_back({ks[i], unit_tower(p, ks[i])});
      Vec direct = full_compose(p, n, th, args);
      Vec v = th;
      int cur = n;
      for (int i = n; i >= 1; i--) {
        if (ks[i - 1] == 0) {
          v = compose(p, cur, i, 0, v, unit_tower(p, 0));
          cur -= 1;
        } else
          for (int rep2 = 1; rep2 < ks[i - 1]; rep2++) {
            v = compose(p, cur, i, 2, v, tu->coords);
            cur += 1;
          }
      }
      check_vec(v, direct,
                "unit substitution word at arity " + std::to_string(n));
    }

  // restriction is equivariant for the symmetric action
  for (int n = 1; n <= N; n++) {
    std::vector<Perm> sig;
    for (int j = 1; j < n; j++) sig.push_back(adjacent(n, j));
    sig.push_back(random_perm(n, gen));
    sig.push_back(random_perm(n, gen));
    for (const Perm &s : sig) {
      Mat a = act_matrix(p, n, s);
      for (int sz = 0; sz <= n; sz++)
        for (const auto &I : subsets_of_size(n, sz)) {
          auto sI = image_set(s, I);
          Mat lhs = mat_mul(a, pis[n][sz][subset_rank(n, I)]);
          Mat rhs = mat_mul(pis[n][sz][subset_rank(n, sI)],
                            act_matrix(p, sz, perm_restrict(s, I)));
          check_mat(lhs, rhs, "restriction equivariance at I=" +
                                  subset_str(I) + " sigma=" + perm_str(s));
        }
    }
  }

  // restriction of a partial composition splits across the two factors
  for (int m = 1; m <= N; m++)
    for (int n2 = 0; m + n2 - 1 <= N; n2++)
      for (int i = 1; i <= m; i++) {
        Vec mu = sparse_random_vec(p.dim(m), gen);
        Vec nu = sparse_random_vec(p.dim(n2), gen);
        Vec whole = compose(p, m, i, n2, mu, nu);
        int big = m + n2 - 1;
        for (int sz = 0; sz <= big; sz++)
          for (const auto &I : subsets_of_size(big, sz)) {
            Vec lhs = vec_mat(whole, pis[big][sz][subset_rank(big, I)]);
            std::vector<int> low, ip, high;
            for (int x : I) {
              if (x < i) low.push_back(x);
              else if (x >= i + n2) high.push_back(x - n2 + 1);
              else ip.push_back(x - (i - 1));
            }
            std::vector<int> J = low;
            J.push_back(i);
            J.insert(J.end(), high.begin(), high.end());
            int j = (int)low.size() + 1;
            Vec rmu = vec_mat(mu, pis[m][(int)J.size()][subset_rank(m, J)]);
            Vec rnu =
                vec_mat(nu, pis[n2][(int)ip.size()][subset_rank(n2, ip)]);
            Vec rhs = compose(p, (int)J.size(), j, (int)ip.size(), rmu, rnu);
            check_vec(lhs, rhs,
                      "restriction of a partial composition at (" +
                          std::to_string(m) + "," + std::to_string(i) + "," +
                          std::to_string(n2) + ") I=" + subset_str(I));
          }
      }

  // restriction maps each ideal component onto the lower one
  {
    Ideal ideal = trunc_ideal(p, 1);
    for (int n = 1; n <= N; n++)
      for (int sz = 0; sz <= n; sz++) {
        long idx = 0;
        for (const auto &I : subsets_of_size(n, sz)) {
          Mat img = rref(mat_mul(ideal.comp[n], pis[n][sz][idx++])).basis;
          rep.checks++;
          if (!subspace_equal(img, ideal.comp[sz]))
            fail("restriction by " + subset_str(I) +
                 " is not onto the ideal component at arity " +
                 std::to_string(sz));
        }
      }
  }

  return rep;
}

bool check_padded_word_span(const Operad &p, int k, const Mat &seeds,
                            std::string *why) {
  p.check_arity(k);
  if (seeds.nc != p.dim(k))
    throw usage_error("seed coordinate length mismatch");
  auto tu = find_two_unit(p);
  if (!tu || !check_2a(p, tu->coords)) {
    if (why) *why = "needs a slot-insensitive doubling tower";
    return false;
  }
  int N = p.max_arity();
  Mat closure = invariant_closure(
      seeds, std::max(0, k - 1),
      [&](const Vec &v, int g) { return act_by_gen(p, k, v, g + 1); });
  std::vector<std::pair<int, Vec>> seedv;
  for (int r = 0; r < closure.nr; r++) seedv.push_back({k, closure.row(r)});
  Ideal full = generate_ideal(p, seedv);
  for (int n = 0; n <= N; n++) {
    std::vector<Vec> rows;
    for (int sz = 0; sz <= std::min(k, n); sz++)
      for (const auto &I : subsets_of_size(k, sz)) {
        Mat base = mat_mul(closure, pi_matrix(p, k, I));
        std::vector<Vec> cur;
        for (int r = 0; r < base.nr; r++) cur.push_back(base.row(r));
        for (int s = 0; sz + s <= n && !cur.empty(); s++) {
          int ar = sz + s;
          int padtot = n - ar;
          for (int l = 0; l <= padtot; l++) {
            if (padtot == 0) {
              for (const Vec &w : cur) rows.push_back(w);
              break;
            }
            Mat pad = iota_matrix(p, ar, l, padtot - l);
            for (const Vec &w : cur) rows.push_back(vec_mat(w, pad));
          }
          if (ar >= 1 && ar + 1 <= n) {
            std::vector<Vec> nxt;
            for (int i = 1; i <= ar; i++) {
              Mat d = delta_matrix(p, ar, {i});
              for (const Vec &w : cur) nxt.push_back(vec_mat(w, d));
            }
            cur = std::move(nxt);
          } else
            cur.clear();
        }
      }
    Mat stacked =
        rows.empty() ? Mat::zero(0, p.dim(n)) : Mat::from_rows(rows, p.dim(n));
    Mat closed = invariant_closure(
        stacked, std::max(0, n - 1),
        [&](const Vec &v, int g) { return act_by_gen(p, n, v, g + 1); });
    if (!subspace_equal(closed, full.comp[n])) {
      if (why)
        *why = "padded words span rank " + std::to_string(closed.nr) +
               " at arity " + std::to_string(n) + ", ideal has rank " +
               std::to_string(full.comp[n].nr);
      return false;
    }
  }
  return true;
}

}  // namespace operad
