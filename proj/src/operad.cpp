#include "operad.hpp"

#include <deque>
#include <set>

#include "parallel.hpp"

namespace operad {

std::string Operad::label(int n, int a) const {
  return std::to_string(a);
}

Vec Operad::act_basis(int n, int a, const Perm &s) const {
  check_arity(n);
  if (s.n() != n) throw usage_error("permutation arity mismatch in act");
  Vec v = basis_vec(dim(n), a);
  for (int j : adjacent_factorization(s)) {
    Vec next = zero_vec(dim(n));
    for (int b = 0; b < dim(n); b++) {
      if (v[b] == 0) continue;
      axpy(next, v[b], act_gen_basis(n, b, j));
    }
    v = std::move(next);
  }
  return v;
}

void Operad::check_compose_args(int m, int i, int n) const {
  if (m < 1)
    throw usage_error("composition needs a left factor of arity >= 1");
  check_arity(m);
  check_arity(n);
  if (i < 1 || i > m)
    throw usage_error("slot " + std::to_string(i) + " outside 1.." +
                      std::to_string(m));
  if (m + n - 1 > N_)
    throw usage_error("composition lands in arity " +
                      std::to_string(m + n - 1) + " beyond horizon " +
                      std::to_string(N_));
}

// ---- TableOperad ----

TableOperad::TableOperad(std::string name, int max_arity,
                         std::vector<int> dims)
    : Operad(std::move(name), max_arity), dims_(std::move(dims)) {
  if ((int)dims_.size() != max_arity + 1)
    throw usage_error("dims must cover arities 0.." +
                      std::to_string(max_arity));
  labels_.resize(dims_.size());
  int N = max_arity;
  comp_.resize(N + 1);
  for (int m = 1; m <= N; m++) {
    comp_[m].resize(m);
    for (int i = 0; i < m; i++) comp_[m][i].resize(N - m + 2);
  }
  act_.resize(N + 1);
  for (int n = 0; n <= N; n++) act_[n].resize(std::max(0, n - 1));
}

std::string TableOperad::label(int n, int a) const {
  if (!labels_[n].empty()) return labels_[n][a];
  return Operad::label(n, a);
}

void TableOperad::set_labels(int n, std::vector<std::string> labels) {
  if ((int)labels.size() != dims_[n])
    throw usage_error("label count mismatch at arity " + std::to_string(n));
  labels_[n] = std::move(labels);
}

void TableOperad::set_table(int m, int i, int n, Mat table) {
  check_compose_args(m, i, n);
  if (table.nr != dims_[m] * dims_[n] || table.nc != dims_[m + n - 1])
    throw usage_error("composition table shape mismatch at (" +
                      std::to_string(m) + "," + std::to_string(i) + "," +
                      std::to_string(n) + ")");
  comp_[m][i - 1][n] = std::move(table);
}

const Mat &TableOperad::table(int m, int i, int n) const {
  check_compose_args(m, i, n);
  return comp_[m][i - 1][n];
}

Vec TableOperad::compose_basis(int m, int i, int n, int a, int b) const {
  const Mat &t = table(m, i, n);
  return t.row(a * dims_[n] + b);
}

void TableOperad::set_act_gen(int n, int j, Mat g) {
  check_arity(n);
  if (j < 1 || j > n - 1)
    throw usage_error("transposition index outside 1..n-1");
  if (g.nr != dims_[n] || g.nc != dims_[n])
    throw usage_error("action matrix shape mismatch at arity " +
                      std::to_string(n));
  act_[n][j - 1] = std::move(g);
}

const Mat &TableOperad::act_gen(int n, int j) const {
  check_arity(n);
  if (j < 1 || j > n - 1)
    throw usage_error("transposition index outside 1..n-1");
  return act_[n][j - 1];
}

Vec TableOperad::act_gen_basis(int n, int a, int j) const {
  return act_gen(n, j).row(a);
}

std::shared_ptr<TableOperad> TableOperad::materialize(const Operad &p) {
  int N = p.max_arity();
  std::vector<int> dims(N + 1);
  for (int n = 0; n <= N; n++) dims[n] = p.dim(n);
  auto t = std::make_shared<TableOperad>(p.name(), N, dims);
  for (int n = 0; n <= N; n++) {
    std::vector<std::string> labels(dims[n]);
    for (int a = 0; a < dims[n]; a++) labels[a] = p.label(n, a);
    t->set_labels(n, std::move(labels));
    for (int j = 1; j <= n - 1; j++) {
      Mat g(dims[n], dims[n]);
      for (int a = 0; a < dims[n]; a++) g.set_row(a, p.act_gen_basis(n, a, j));
      t->set_act_gen(n, j, std::move(g));
    }
  }
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++) {
        Mat table(dims[m] * dims[n], dims[m + n - 1]);
        for (int a = 0; a < dims[m]; a++)
          for (int b = 0; b < dims[n]; b++)
            table.set_row(a * dims[n] + b, p.compose_basis(m, i, n, a, b));
        t->set_table(m, i, n, std::move(table));
      }
  t->set_unit(p.unit_coords());
  t->set_zero_unit(p.zero_unit_coords());
  t->set_two_unit(p.two_unit_coords());
  t->set_vanishing_index(p.vanishing_index());
  t->set_grading(p.grading());
  t->set_kind(p.kind());
  return t;
}

bool operads_identical(const Operad &a, const Operad &b, std::string *why) {
  auto differ = [&](const std::string &m) {
    if (why) *why = m;
    return false;
  };
  if (a.max_arity() != b.max_arity()) return differ("different horizons");
  int N = a.max_arity();
  for (int n = 0; n <= N; n++)
    if (a.dim(n) != b.dim(n))
      return differ("dimensions differ at arity " + std::to_string(n));
  if (a.unit_coords() != b.unit_coords()) return differ("units differ");
  if (a.zero_unit_coords() != b.zero_unit_coords())
    return differ("0-ary units differ");
  if (a.two_unit_coords() != b.two_unit_coords())
    return differ("designated binary units differ");
  for (int n = 2; n <= N; n++)
    for (int j = 1; j <= n - 1; j++)
      for (int x = 0; x < a.dim(n); x++)
        if (a.act_gen_basis(n, x, j) != b.act_gen_basis(n, x, j))
          return differ("action generators differ at arity " +
                        std::to_string(n));
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++)
        for (int x = 0; x < a.dim(m); x++)
          for (int y = 0; y < a.dim(n); y++)
            if (a.compose_basis(m, i, n, x, y) !=
                b.compose_basis(m, i, n, x, y))
              return differ("composition tables differ at (" +
                            std::to_string(m) + "," + std::to_string(i) +
                            "," + std::to_string(n) + ")");
  return true;
}

std::shared_ptr<TableOperad> transport_basis(const Operad &p,
                                             const std::vector<Mat> &basis,
                                             const std::string &name) {
  int N = p.max_arity();
  if ((int)basis.size() != N + 1)
    throw usage_error("transport_basis wants one basis per arity 0.." +
                      std::to_string(N));
  std::vector<int> dims(N + 1);
  std::vector<Mat> inv(N + 1);
  for (int n = 0; n <= N; n++) {
    const Mat &b = basis[n];
    dims[n] = p.dim(n);
    if (b.nr != dims[n] || b.nc != dims[n])
      throw usage_error("basis at arity " + std::to_string(n) + " is not " +
                        std::to_string(dims[n]) + " square");
    auto tr = rref_tracked(b);
    if (tr.basis.nr != b.nr)
      throw usage_error("basis rows at arity " + std::to_string(n) +
                        " are dependent");
    // rref of an invertible square matrix is the identity, so the
    // elimination transform is the old-to-new coordinate change
    inv[n] = std::move(tr.transform);
  }
  auto to_new = [&](int n, const Vec &v) { return vec_mat(v, inv[n]); };

  auto t = std::make_shared<TableOperad>(name, N, dims);
  for (int n = 2; n <= N; n++)
    for (int j = 1; j <= n - 1; j++) {
      Perm s = perm_identity(n);
      std::swap(s.seq[j - 1], s.seq[j]);
      Mat g(dims[n], dims[n]);
      for (int a = 0; a < dims[n]; a++)
        g.set_row(a, to_new(n, act(p, n, basis[n].row(a), s)));
      t->set_act_gen(n, j, std::move(g));
    }
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++) {
        int tgt = m + n - 1;
        Mat table(dims[m] * dims[n], dims[tgt]);
        for (int a = 0; a < dims[m]; a++)
          for (int b = 0; b < dims[n]; b++)
            table.set_row(
                a * dims[n] + b,
                to_new(tgt, compose(p, m, i, n, basis[m].row(a),
                                    basis[n].row(b))));
        t->set_table(m, i, n, std::move(table));
      }
  t->set_unit(to_new(1, p.unit_coords()));
  if (auto z = p.zero_unit_coords()) t->set_zero_unit(to_new(0, *z));
  if (auto u2 = p.two_unit_coords()) t->set_two_unit(to_new(2, *u2));
  t->set_vanishing_index(p.vanishing_index());
  return t;
}

// ---- linear extensions ----

Vec compose(const Operad &p, int m, int i, int n, const Vec &x,
            const Vec &y) {
  p.check_compose_args(m, i, n);
  if ((int)x.size() != p.dim(m) || (int)y.size() != p.dim(n))
    throw usage_error("coordinate length mismatch in compose");
  Vec r = zero_vec(p.dim(m + n - 1));
  for (int a = 0; a < (int)x.size(); a++) {
    if (x[a] == 0) continue;
    for (int b = 0; b < (int)y.size(); b++) {
      if (y[b] == 0) continue;
      axpy(r, x[a] * y[b], p.compose_basis(m, i, n, a, b));
    }
  }
  return r;
}

Vec full_compose(const Operad &p, int m, const Vec &th,
                 const std::vector<std::pair<int, Vec>> &args) {
  if ((int)args.size() != m)
    throw usage_error("full composition needs one argument per slot");
  Vec cur = th;
  int cur_arity = m;
  // substitute the 0-ary slots first: arity then shrinks before it grows,
  // so intermediates stay within [result, m] and never leave the horizon
  std::vector<int> zero_below(m + 1, 0);
  for (int i = 1; i <= m; i++)
    zero_below[i] = zero_below[i - 1] + (args[i - 1].first == 0 ? 1 : 0);
  for (int i = m; i >= 1; i--)
    if (args[i - 1].first == 0) {
      cur = compose(p, cur_arity, i, 0, cur, args[i - 1].second);
      cur_arity -= 1;
    }
  for (int i = m; i >= 1; i--)
    if (args[i - 1].first >= 1) {
      cur = compose(p, cur_arity, i - zero_below[i - 1], args[i - 1].first,
                    cur, args[i - 1].second);
      cur_arity += args[i - 1].first - 1;
    }
  return cur;
}

Vec act(const Operad &p, int n, const Vec &x, const Perm &s) {
  p.check_arity(n);
  if ((int)x.size() != p.dim(n))
    throw usage_error("coordinate length mismatch in act");
  Vec r = zero_vec(p.dim(n));
  for (int a = 0; a < (int)x.size(); a++) {
    if (x[a] == 0) continue;
    axpy(r, x[a], p.act_basis(n, a, s));
  }
  return r;
}

Vec unit_tower(const Operad &p, int n) {
  p.check_arity(n);
  if (n == 0) {
    auto z = p.zero_unit_coords();
    if (!z) throw usage_error(p.name() + " has no designated 0-unit");
    return *z;
  }
  if (n == 1) return p.unit_coords();
  auto tu = find_two_unit(p);
  if (!tu) throw usage_error(p.name() + " has no 2-unit");
  Vec cur = tu->coords;
  for (int k = 3; k <= n; k++) cur = compose(p, 2, 1, k - 1, tu->coords, cur);
  return cur;
}

// ---- elementary operators ----

Mat act_matrix(const Operad &p, int n, const Perm &s) {
  Mat m(p.dim(n), p.dim(n));
  for (int a = 0; a < p.dim(n); a++) m.set_row(a, p.act_basis(n, a, s));
  return m;
}

static void check_subset(int n, const std::vector<int> &I) {
  int prev = 0;
  for (int x : I) {
    if (x <= prev || x > n) throw usage_error("subset not sorted inside [n]");
    prev = x;
  }
}

Mat pi_matrix(const Operad &p, int n, const std::vector<int> &I) {
  p.check_arity(n);
  check_subset(n, I);
  auto z = p.zero_unit_coords();
  if (!z) throw usage_error("restriction needs a 0-unit");
  std::vector<std::pair<int, Vec>> args(n, {0, *z});
  for (int x : I) args[x - 1] = {1, p.unit_coords()};
  Mat m(p.dim(n), p.dim((int)I.size()));
  for (int a = 0; a < p.dim(n); a++)
    m.set_row(a, full_compose(p, n, basis_vec(p.dim(n), a), args));
  return m;
}

Mat gamma_matrix(const Operad &p, int n, const std::vector<int> &I) {
  check_subset(n, I);
  return pi_matrix(p, n, complement_set(n, I));
}

Mat delta_matrix(const Operad &p, int n, const std::vector<int> &I) {
  p.check_arity(n);
  check_subset(n, I);
  Vec two = unit_tower(p, 2);
  std::vector<std::pair<int, Vec>> args(n, {1, p.unit_coords()});
  for (int x : I) args[x - 1] = {2, two};
  Mat m(p.dim(n), p.dim(n + (int)I.size()));
  for (int a = 0; a < p.dim(n); a++)
    m.set_row(a, full_compose(p, n, basis_vec(p.dim(n), a), args));
  return m;
}

Mat iota_right_matrix(const Operad &p, int n, int r) {
  Vec two = unit_tower(p, 2);
  Mat m(p.dim(n), p.dim(n + r));
  for (int a = 0; a < p.dim(n); a++)
    m.set_row(a, full_compose(p, 2, two,
                              {{n, basis_vec(p.dim(n), a)},
                               {r, unit_tower(p, r)}}));
  return m;
}

Mat iota_left_matrix(const Operad &p, int n, int l) {
  Vec two = unit_tower(p, 2);
  Mat m(p.dim(n), p.dim(n + l));
  for (int a = 0; a < p.dim(n); a++)
    m.set_row(a, full_compose(p, 2, two,
                              {{l, unit_tower(p, l)},
                               {n, basis_vec(p.dim(n), a)}}));
  return m;
}

Mat iota_matrix(const Operad &p, int n, int l, int r) {
  Vec three = unit_tower(p, 3);
  Mat m(p.dim(n), p.dim(n + l + r));
  for (int a = 0; a < p.dim(n); a++)
    m.set_row(a, full_compose(p, 3, three,
                              {{l, unit_tower(p, l)},
                               {n, basis_vec(p.dim(n), a)},
                               {r, unit_tower(p, r)}}));
  return m;
}

// ---- units ----

std::optional<TwoUnit> find_two_unit(const Operad &p) {
  if (p.max_arity() < 2) return std::nullopt;
  auto z = p.zero_unit_coords();
  if (!z) return std::nullopt;
  int d2 = p.dim(2);
  if (d2 == 0) return std::nullopt;
  int d1 = p.dim(1);
  Mat g1(d2, d1), g2(d2, d1);
  for (int a = 0; a < d2; a++) {
    g1.set_row(a, compose(p, 2, 1, 0, basis_vec(d2, a), *z));
    g2.set_row(a, compose(p, 2, 2, 0, basis_vec(d2, a), *z));
  }
  Mat stacked = hstack(g1, g2);
  Vec target = p.unit_coords();
  Vec b = target;
  b.insert(b.end(), target.begin(), target.end());
  bool unique = kernel_of_map(stacked).nr == 0;
  if (auto designated = p.two_unit_coords()) {
    if (vec_mat(*designated, stacked) == b) return TwoUnit{*designated, unique};
  }
  auto v = solve_left(stacked, b);
  if (!v) return std::nullopt;
  return TwoUnit{*v, unique};
}

bool check_2a(const Operad &p, const Vec &two_unit) {
  if (p.max_arity() < 3) return true;
  return compose(p, 2, 1, 2, two_unit, two_unit) ==
         compose(p, 2, 2, 2, two_unit, two_unit);
}

// ---- axioms ----

namespace {

struct Checker {
  const Operad &p;
  AxiomReport rep;
  int cap;

  void fail(std::string rule, std::string inst) {
    rep.ok = false;
    if ((int)rep.violations.size() < cap)
      rep.violations.push_back({std::move(rule), std::move(inst)});
  }
  bool expect(const Vec &lhs, const Vec &rhs, const char *rule,
              std::string inst) {
    rep.checks++;
    if (lhs == rhs) return true;
    fail(rule, std::move(inst));
    return false;
  }
};

std::string at(const Operad &p, int n, int a) {
  return p.name() + "(" + std::to_string(n) + "):" + p.label(n, a);
}

}  // namespace

// The equivariance checks run the acting permutation over adjacent
// transpositions only: both sides are multiplicative in that argument
// (for the right-hand block permutations this is the product rule
// theta(st, ...) = theta(s, ...) * theta(t, ...) with identity blocks),
// so the Coxeter checks extend the identities to all of S_n.
AxiomReport verify_axioms(const Operad &p, int max_violations) {
  Checker c{p, {}, max_violations};
  int N = p.max_arity();
  const Vec one = p.unit_coords();

  // identity element: th o_i 1_1 = th and 1_1 o_1 th = th
  for (int n = 1; n <= N; n++)
    for (int a = 0; a < p.dim(n); a++) {
      Vec e = basis_vec(p.dim(n), a);
      for (int i = 1; i <= n; i++)
        c.expect(compose(p, n, i, 1, e, one), e, "unit-right",
                 at(p, n, a) + " o_" + std::to_string(i) + " 1_1");
    }
  for (int n = 0; n <= N; n++)
    for (int a = 0; a < p.dim(n); a++) {
      Vec e = basis_vec(p.dim(n), a);
      c.expect(compose(p, 1, 1, n, one, e), e, "unit-left",
               "1_1 o_1 " + at(p, n, a));
    }

  // right action: Coxeter relations of S_n hold as linear maps
  for (int n = 2; n <= N; n++) {
    std::vector<Mat> gen(n - 1);
    for (int j = 1; j < n; j++) {
      Mat g(p.dim(n), p.dim(n));
      for (int a = 0; a < p.dim(n); a++) g.set_row(a, p.act_gen_basis(n, a, j));
      gen[j - 1] = std::move(g);
    }
    Mat id = Mat::identity(p.dim(n));
    for (int j = 1; j < n; j++) {
      c.rep.checks++;
      if (mat_mul(gen[j - 1], gen[j - 1]) != id)
        c.fail("action-involution",
               "s_" + std::to_string(j) + "^2 on " + p.name() + "(" +
                   std::to_string(n) + ")");
      if (j + 1 < n) {
        c.rep.checks++;
        if (mat_mul(mat_mul(gen[j - 1], gen[j]), gen[j - 1]) !=
            mat_mul(mat_mul(gen[j], gen[j - 1]), gen[j]))
          c.fail("action-braid",
                 "s_" + std::to_string(j) + ",s_" + std::to_string(j + 1) +
                     " on " + p.name() + "(" + std::to_string(n) + ")");
      }
      for (int k = j + 2; k < n; k++) {
        c.rep.checks++;
        if (mat_mul(gen[j - 1], gen[k - 1]) != mat_mul(gen[k - 1], gen[j - 1]))
          c.fail("action-commute",
                 "s_" + std::to_string(j) + ",s_" + std::to_string(k) +
                     " on " + p.name() + "(" + std::to_string(n) + ")");
      }
    }
  }

  // nested associativity:
  // (la o_i mu) o_{i-1+j} nu = la o_i (mu o_j nu)
  for (int l = 1; l <= N; l++)
    for (int m = 1; l + m - 1 <= N; m++)
      for (int n = 0; l + m + n - 2 <= N; n++)
        for (int i = 1; i <= l; i++)
          for (int j = 1; j <= m; j++)
            for (int a = 0; a < p.dim(l); a++) {
              Vec ea = basis_vec(p.dim(l), a);
              for (int b = 0; b < p.dim(m); b++) {
                Vec eb = basis_vec(p.dim(m), b);
                Vec inner = compose(p, l, i, m, ea, eb);
                for (int cc = 0; cc < p.dim(n); cc++) {
                  Vec ec = basis_vec(p.dim(n), cc);
                  Vec lhs = compose(p, l + m - 1, i - 1 + j, n, inner, ec);
                  Vec rhs =
                      compose(p, l, i, m + n - 1, ea,
                              compose(p, m, j, n, eb, ec));
                  if (!c.expect(lhs, rhs, "assoc-nested",
                                at(p, l, a) + " o_" + std::to_string(i) + " " +
                                    at(p, m, b) + " o_" +
                                    std::to_string(i - 1 + j) + " " +
                                    at(p, n, cc)) &&
                      (int)c.rep.violations.size() >= max_violations)
                    return c.rep;
                }
              }
            }

  // disjoint slots commute:
  // (la o_i mu) o_{k-1+m} nu = (la o_k nu) o_i mu for i < k
  for (int l = 2; l <= N; l++)
    for (int m = 0; l + m - 1 <= N; m++)
      for (int n = 0; l + m + n - 2 <= N && l + n - 1 <= N; n++)
        for (int i = 1; i <= l; i++)
          for (int k = i + 1; k <= l; k++)
            for (int a = 0; a < p.dim(l); a++) {
              Vec ea = basis_vec(p.dim(l), a);
              for (int b = 0; b < p.dim(m); b++) {
                Vec eb = basis_vec(p.dim(m), b);
                Vec left = compose(p, l, i, m, ea, eb);
                for (int cc = 0; cc < p.dim(n); cc++) {
                  Vec ec = basis_vec(p.dim(n), cc);
                  Vec lhs = compose(p, l + m - 1, k - 1 + m, n, left, ec);
                  Vec rhs = compose(p, l + n - 1, i, m,
                                    compose(p, l, k, n, ea, ec), eb);
                  if (!c.expect(lhs, rhs, "assoc-disjoint",
                                at(p, l, a) + " slots " + std::to_string(i) +
                                    "<" + std::to_string(k) + " with " +
                                    at(p, m, b) + ", " + at(p, n, cc)) &&
                      (int)c.rep.violations.size() >= max_violations)
                    return c.rep;
                }
              }
            }

  // equivariance in the right factor:
  // mu o_i (nu * s) = (mu o_i nu) * (s placed as a block at slot i)
  for (int m = 1; m <= N; m++)
    for (int n = 2; m + n - 1 <= N; n++)
      for (int i = 1; i <= m; i++)
        for (int j = 1; j < n; j++) {
          std::vector<int> q(n);
          for (int t = 0; t < n; t++) q[t] = t + 1;
          std::swap(q[j - 1], q[j]);
          Perm s{q};
          Perm placed = block_at(m, i, s);
          for (int a = 0; a < p.dim(m); a++) {
            Vec ea = basis_vec(p.dim(m), a);
            for (int b = 0; b < p.dim(n); b++) {
              Vec eb = basis_vec(p.dim(n), b);
              Vec lhs = compose(p, m, i, n, ea, act(p, n, eb, s));
              Vec rhs = act(p, m + n - 1, compose(p, m, i, n, ea, eb), placed);
              if (!c.expect(lhs, rhs, "equiv-right",
                            at(p, m, a) + " o_" + std::to_string(i) + " (" +
                                at(p, n, b) + " * s_" + std::to_string(j) +
                                ")") &&
                  (int)c.rep.violations.size() >= max_violations)
                return c.rep;
            }
          }
        }

  // equivariance in the left factor:
  // (mu * s) o_i nu = (mu o_{s(i)} nu) * (s spread over slot sizes)
  for (int m = 2; m <= N; m++)
    for (int n = 0; m + n - 1 <= N; n++)
      for (int i = 1; i <= m; i++)
        for (int j = 1; j < m; j++) {
          std::vector<int> q(m);
          for (int t = 0; t < m; t++) q[t] = t + 1;
          std::swap(q[j - 1], q[j]);
          Perm s{q};
          std::vector<int> sizes(m, 1);
          sizes[i - 1] = n;
          Perm spread = block_spread(s, sizes);
          int si = s.image(i);
          for (int a = 0; a < p.dim(m); a++) {
            Vec ea = basis_vec(p.dim(m), a);
            for (int b = 0; b < p.dim(n); b++) {
              Vec eb = basis_vec(p.dim(n), b);
              Vec lhs = compose(p, m, i, n, act(p, m, ea, s), eb);
              Vec rhs = act(p, m + n - 1, compose(p, m, si, n, ea, eb), spread);
              if (!c.expect(lhs, rhs, "equiv-left",
                            "(" + at(p, m, a) + " * s_" + std::to_string(j) +
                                ") o_" + std::to_string(i) + " " +
                                at(p, n, b)) &&
                  (int)c.rep.violations.size() >= max_violations)
                return c.rep;
            }
          }
        }

  return c.rep;
}

// ---- ideals ----

std::vector<int> Ideal::dims() const {
  std::vector<int> d(comp.size());
  for (size_t n = 0; n < comp.size(); n++) d[n] = comp[n].nr;
  return d;
}

Ideal zero_ideal(const Operad &p) {
  Ideal ideal;
  ideal.comp.resize(p.max_arity() + 1);
  for (int n = 0; n <= p.max_arity(); n++)
    ideal.comp[n] = Mat::zero(0, p.dim(n));
  return ideal;
}

bool is_ideal(const Operad &p, const Ideal &ideal, std::string *why) {
  int N = p.max_arity();
  if ((int)ideal.comp.size() != N + 1) {
    if (why) *why = "component count mismatch";
    return false;
  }
  std::vector<Rref> span(N + 1);
  for (int n = 0; n <= N; n++) {
    if (ideal.comp[n].nc != p.dim(n)) {
      if (why) *why = "coordinate length mismatch at arity " +
                      std::to_string(n);
      return false;
    }
    span[n] = rref(ideal.comp[n]);
  }
  for (int n = 0; n <= N; n++)
    for (int r = 0; r < span[n].rank(); r++) {
      Vec v = span[n].basis.row(r);
      for (int j = 1; j < n; j++) {
        Vec w = zero_vec(p.dim(n));
        for (int a = 0; a < p.dim(n); a++)
          if (v[a] != 0) axpy(w, v[a], p.act_gen_basis(n, a, j));
        if (!subspace_member(w, span[n])) {
          if (why)
            *why = "not stable under s_" + std::to_string(j) + " at arity " +
                   std::to_string(n);
          return false;
        }
      }
    }
  for (int m = 1; m <= N; m++)
    for (int n = 0; m + n - 1 <= N; n++)
      for (int i = 1; i <= m; i++) {
        for (int r = 0; r < span[m].rank(); r++)
          for (int b = 0; b < p.dim(n); b++) {
            Vec w = compose(p, m, i, n, span[m].basis.row(r),
                            basis_vec(p.dim(n), b));
            if (!subspace_member(w, span[m + n - 1])) {
              if (why)
                *why = "left absorption fails at (" + std::to_string(m) +
                       "," + std::to_string(i) + "," + std::to_string(n) + ")";
              return false;
            }
          }
        for (int a = 0; a < p.dim(m); a++)
          for (int r = 0; r < span[n].rank(); r++) {
            Vec w = compose(p, m, i, n, basis_vec(p.dim(m), a),
                            span[n].basis.row(r));
            if (!subspace_member(w, span[m + n - 1])) {
              if (why)
                *why = "right absorption fails at (" + std::to_string(m) +
                       "," + std::to_string(i) + "," + std::to_string(n) + ")";
              return false;
            }
          }
      }
  return true;
}

Ideal ideal_sum(const Operad &p, const Ideal &a, const Ideal &b) {
  Ideal r;
  r.comp.resize(p.max_arity() + 1);
  for (int n = 0; n <= p.max_arity(); n++)
    r.comp[n] = subspace_sum(a.comp[n], b.comp[n]);
  return r;
}

Ideal ideal_intersect(const Operad &p, const Ideal &a, const Ideal &b) {
  Ideal r;
  r.comp.resize(p.max_arity() + 1);
  for (int n = 0; n <= p.max_arity(); n++)
    r.comp[n] = subspace_intersect(a.comp[n], b.comp[n]);
  return r;
}

Ideal ideal_product(const Operad &p, const Ideal &a, const Ideal &b) {
  std::vector<std::pair<int, Vec>> seeds;
  int N = p.max_arity();
  for (int m = 1; m <= N; m++)
    for (int n = 0; m + n - 1 <= N; n++)
      for (int i = 1; i <= m; i++)
        for (int r = 0; r < a.comp[m].nr; r++)
          for (int s = 0; s < b.comp[n].nr; s++)
            seeds.push_back({m + n - 1,
                             compose(p, m, i, n, a.comp[m].row(r),
                                     b.comp[n].row(s))});
  return generate_ideal(p, seeds);
}

Ideal generate_ideal(const Operad &p,
                     const std::vector<std::pair<int, Vec>> &seeds) {
  int N = p.max_arity();
  std::vector<Rref> span(N + 1);
  for (int n = 0; n <= N; n++) span[n] = rref(Mat::zero(0, p.dim(n)));
  std::deque<std::pair<int, Vec>> queue;
  auto add = [&](int n, const Vec &v) {
    if (is_zero_vec(v) || subspace_member(v, span[n])) return;
    span[n] = rref(vstack(span[n].basis, Mat::from_rows({v}, p.dim(n))));
    queue.push_back({n, v});
  };
  for (const auto &[n, v] : seeds) {
    p.check_arity(n);
    add(n, v);
  }
  while (!queue.empty()) {
    auto [n, v] = std::move(queue.front());
    queue.pop_front();
    for (int j = 1; j < n; j++) {
      Vec w = zero_vec(p.dim(n));
      for (int a = 0; a < p.dim(n); a++)
        if (v[a] != 0) axpy(w, v[a], p.act_gen_basis(n, a, j));
      add(n, w);
    }
    if (n >= 1)
      for (int k = 0; n + k - 1 <= N; k++)
        for (int i = 1; i <= n; i++)
          for (int b = 0; b < p.dim(k); b++)
            add(n + k - 1, compose(p, n, i, k, v, basis_vec(p.dim(k), b)));
    // m stays on the horizon even when v is 0-ary
    for (int m = 1; m <= N && m + n - 1 <= N; m++)
      for (int i = 1; i <= m; i++)
        for (int a = 0; a < p.dim(m); a++)
          add(m + n - 1, compose(p, m, i, n, basis_vec(p.dim(m), a), v));
  }
  Ideal ideal;
  ideal.comp.resize(N + 1);
  for (int n = 0; n <= N; n++) ideal.comp[n] = span[n].basis;
  return ideal;
}

Vec quotient_project(const Rref &ideal_basis, const Vec &v) {
  Vec red = reduce_against(v, ideal_basis);
  std::vector<bool> pivot(v.size(), false);
  for (int c : ideal_basis.pivots) pivot[c] = true;
  Vec out;
  out.reserve(v.size() - ideal_basis.pivots.size());
  for (size_t c = 0; c < v.size(); c++)
    if (!pivot[c]) out.push_back(red[c]);
  return out;
}

std::shared_ptr<TableOperad> quotient_operad(const Operad &p,
                                             const Ideal &ideal,
                                             const std::string &name,
                                             std::optional<int> vanish) {
  int N = p.max_arity();
  std::vector<Rref> span(N + 1);
  std::vector<std::vector<int>> free_cols(N + 1);
  std::vector<int> dims(N + 1);
  for (int n = 0; n <= N; n++) {
    span[n] = rref(ideal.comp[n]);
    std::vector<bool> pivot(p.dim(n), false);
    for (int c : span[n].pivots) pivot[c] = true;
    for (int c = 0; c < p.dim(n); c++)
      if (!pivot[c]) free_cols[n].push_back(c);
    dims[n] = (int)free_cols[n].size();
  }
  auto q = std::make_shared<TableOperad>(name, N, dims);
  q->set_kind("quotient");
  // coset representatives: the basis vectors at non-pivot coordinates
  auto lift = [&](int n, int a) { return basis_vec(p.dim(n), free_cols[n][a]); };
  for (int n = 0; n <= N; n++) {
    std::vector<std::string> labels(dims[n]);
    for (int a = 0; a < dims[n]; a++) labels[a] = p.label(n, free_cols[n][a]);
    q->set_labels(n, std::move(labels));
    for (int j = 1; j < n; j++) {
      Mat g(dims[n], dims[n]);
      for (int a = 0; a < dims[n]; a++) {
        Vec w = zero_vec(p.dim(n));
        int src = free_cols[n][a];
        axpy(w, 1, p.act_gen_basis(n, src, j));
        g.set_row(a, quotient_project(span[n], w));
      }
      q->set_act_gen(n, j, std::move(g));
    }
  }
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++) {
        Mat table(dims[m] * dims[n], dims[m + n - 1]);
        for (int a = 0; a < dims[m]; a++)
          for (int b = 0; b < dims[n]; b++)
            table.set_row(a * dims[n] + b,
                          quotient_project(span[m + n - 1],
                                           compose(p, m, i, n, lift(m, a),
                                                   lift(n, b))));
        q->set_table(m, i, n, std::move(table));
      }
  q->set_unit(quotient_project(span[1], p.unit_coords()));
  if (auto z = p.zero_unit_coords())
    q->set_zero_unit(quotient_project(span[0], *z));
  if (auto t = p.two_unit_coords())
    q->set_two_unit(quotient_project(span[2], *t));
  q->set_vanishing_index(vanish);
  return q;
}

}  // namespace operad
