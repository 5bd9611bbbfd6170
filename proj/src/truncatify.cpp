#include "truncatify.hpp"

#include <deque>
#include <utility>

namespace operad {

namespace {

Perm adjacent(int n, int j) {
  Perm s = perm_identity(n);
  std::swap(s.seq[j - 1], s.seq[j]);
  return s;
}

Vec vec_add(const Vec &a, const Vec &b) {
  Vec r = a;
  axpy(r, Rat(1), b);
  return r;
}

Vec vec_neg(const Vec &a) {
  Vec r = zero_vec(a.size());
  axpy(r, Rat(-1), a);
  return r;
}

// Degree slices of one arity: representative rows stacked degree by
// degree (a basis of the whole component), the inverse that reads
// coordinates off a vector, and the degree of every row.
struct Slices {
  Mat basis;
  Mat inverse;
  std::vector<int> offset;  // offset[i]..offset[i+1] = rows of degree i
  std::vector<int> deg;     // per row
};

Slices make_slices(const Operad &p, int n) {
  int d = p.dim(n);
  std::vector<Rref> rung(n + 2);
  for (int i = 0; i <= n + 1; i++) rung[i] = rref(trunc_component(p, i, n));
  Slices s;
  s.offset.assign(n + 2, 0);
  std::vector<Vec> rows;
  for (int i = 0; i <= n; i++) {
    s.offset[i] = (int)rows.size();
    std::vector<bool> used(d, false);
    for (int c : rung[i + 1].pivots) used[c] = true;
    for (int r = 0; r < rung[i].rank(); r++)
      if (!used[rung[i].pivots[r]]) {
        rows.push_back(rung[i].basis.row(r));
        s.deg.push_back(i);
      }
  }
  s.offset[n + 1] = (int)rows.size();
  if ((int)rows.size() != d)
    throw usage_error("truncation components of " + p.name() +
                      " do not nest at arity " + std::to_string(n));
  s.basis = Mat::from_rows(rows, d);
  RrefTracked t = rref_tracked(s.basis);
  if (t.basis.nr != d)
    throw usage_error("degree slices of " + p.name() +
                      " are dependent at arity " + std::to_string(n));
  s.inverse = std::move(t.transform);
  return s;
}

}  // namespace

std::shared_ptr<TableOperad> truncatify(const Operad &p) {
  int N = p.max_arity();
  std::vector<Slices> sl;
  sl.reserve(N + 1);
  for (int n = 0; n <= N; n++) sl.push_back(make_slices(p, n));
  std::vector<int> dims(N + 1);
  for (int n = 0; n <= N; n++) dims[n] = p.dim(n);
  auto t = std::make_shared<TableOperad>("trc(" + p.name() + ")", N, dims);

  // reads coordinates over the slice basis, insists nothing lives below
  // the predicted degree, and keeps exactly the predicted block
  auto project = [&](int n, const Vec &z, int dg) {
    Vec c = vec_mat(z, sl[n].inverse);
    for (int a = 0; a < (int)c.size(); a++) {
      if (c[a] == 0) continue;
      if (sl[n].deg[a] < dg)
        throw usage_error("composition in " + p.name() +
                          " escapes its truncation rung");
      if (sl[n].deg[a] != dg) c[a] = 0;
    }
    return c;
  };

  std::vector<std::vector<int>> grading(N + 1);
  for (int n = 0; n <= N; n++) {
    for (int i = 0; i <= n; i++)
      grading[n].push_back(sl[n].offset[i + 1] - sl[n].offset[i]);
    std::vector<std::string> labels(dims[n]);
    for (int a = 0; a < dims[n]; a++)
      labels[a] = "d" + std::to_string(sl[n].deg[a]) + "#" +
                  std::to_string(a - sl[n].offset[sl[n].deg[a]]);
    t->set_labels(n, std::move(labels));
    for (int j = 1; j <= n - 1; j++) {
      Mat g(dims[n], dims[n]);
      for (int a = 0; a < dims[n]; a++)
        g.set_row(a, project(n, act(p, n, sl[n].basis.row(a), adjacent(n, j)),
                             sl[n].deg[a]));
      t->set_act_gen(n, j, std::move(g));
    }
  }
  t->set_grading(grading);

  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++) {
        Mat table(dims[m] * dims[n], dims[m + n - 1]);
        for (int a = 0; a < dims[m]; a++)
          for (int b = 0; b < dims[n]; b++) {
            int da = sl[m].deg[a], db = sl[n].deg[b];
            int dg = (da >= 1 && db >= 1) ? da + db - 1 : da + db;
            table.set_row(a * dims[n] + b,
                          project(m + n - 1,
                                  compose(p, m, i, n, sl[m].basis.row(a),
                                          sl[n].basis.row(b)),
                                  dg));
          }
        t->set_table(m, i, n, std::move(table));
      }

  t->set_unit(project(1, p.unit_coords(), 0));
  if (auto z = p.zero_unit_coords()) t->set_zero_unit(project(0, *z, 0));
  if (auto u = p.two_unit_coords())
    t->set_two_unit(project(2, *u, 0));
  else if (auto u2 = find_two_unit(p))
    t->set_two_unit(project(2, u2->coords, 0));
  t->set_vanishing_index(p.vanishing_index());
  t->set_kind("trc");
  return t;
}

bool is_truncatified(const Operad &p, std::string *why) {
  auto differ = [&](const std::string &m) {
    if (why) *why = m;
    return false;
  };
  auto gopt = p.grading();
  if (!gopt) return differ("no grading");
  const auto &g = *gopt;
  int N = p.max_arity();
  if ((int)g.size() != N + 1)
    return differ("grading does not cover every arity up to the horizon");
  std::vector<std::vector<int>> deg(N + 1);
  for (int n = 0; n <= N; n++) {
    if ((int)g[n].size() != n + 1)
      return differ("arity " + std::to_string(n) +
                    " must carry degrees 0.." + std::to_string(n));
    long total = 0;
    for (int i = 0; i <= n; i++) {
      if (g[n][i] < 0) return differ("negative block size");
      total += g[n][i];
      deg[n].insert(deg[n].end(), g[n][i], i);
    }
    if (total != p.dim(n))
      return differ("grading of arity " + std::to_string(n) +
                    " does not fill the component");
  }
  for (int n = 0; n <= N; n++)
    for (int k = 1; k <= n + 1; k++) {
      std::vector<Vec> rows;
      for (int c = 0; c < p.dim(n); c++)
        if (deg[n][c] >= k) rows.push_back(basis_vec(p.dim(n), c));
      if (!subspace_equal(trunc_component(p, k, n),
                          Mat::from_rows(rows, p.dim(n))))
        return differ("component " + std::to_string(k) + " at arity " +
                      std::to_string(n) +
                      " is not the span of the degree >= " +
                      std::to_string(k) + " blocks");
    }
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++)
        for (int a = 0; a < p.dim(m); a++)
          for (int b = 0; b < p.dim(n); b++) {
            int da = deg[m][a], db = deg[n][b];
            int dg = (da >= 1 && db >= 1) ? da + db - 1 : da + db;
            Vec w = p.compose_basis(m, i, n, a, b);
            for (int c = 0; c < (int)w.size(); c++)
              if (w[c] != 0 && deg[m + n - 1][c] != dg)
                return differ("composition at (" + std::to_string(m) + "," +
                              std::to_string(i) + "," + std::to_string(n) +
                              ") leaves degree " + std::to_string(dg));
          }
  for (int n = 2; n <= N; n++)
    for (int j = 1; j <= n - 1; j++)
      for (int a = 0; a < p.dim(n); a++) {
        Vec w = p.act_gen_basis(n, a, j);
        for (int c = 0; c < (int)w.size(); c++)
          if (w[c] != 0 && deg[n][c] != deg[n][a])
            return differ("the action at arity " + std::to_string(n) +
                          " does not preserve degree");
      }
  return true;
}

std::vector<Mat> suboperad_closure(const Operad &p,
                                   const std::vector<Mat> &seeds) {
  int N = p.max_arity();
  std::vector<Rref> span(N + 1);
  for (int n = 0; n <= N; n++) span[n] = rref(Mat::zero(0, p.dim(n)));
  std::deque<std::pair<int, Vec>> queue;
  auto add = [&](int n, const Vec &v) {
    if (is_zero_vec(v) || subspace_member(v, span[n])) return;
    span[n] = rref(vstack(span[n].basis, Mat::from_rows({v}, p.dim(n))));
    queue.push_back({n, v});
  };
  add(1, p.unit_coords());
  if (auto z = p.zero_unit_coords()) add(0, *z);
  for (int n = 0; n <= N && n < (int)seeds.size(); n++)
    for (int r = 0; r < seeds[n].nr; r++) add(n, seeds[n].row(r));
  // when the later member of a pair pops, the earlier one is already in
  // its span, so composing against current spans covers every pair
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
      for (int k = 0; n + k - 1 <= N; k++) {
        Mat snap = span[k].basis;  // add() rewrites the span mid-loop
        for (int i = 1; i <= n; i++)
          for (int b = 0; b < snap.nr; b++)
            add(n + k - 1, compose(p, n, i, k, v, snap.row(b)));
      }
    for (int m = 1; m <= N && m + n - 1 <= N; m++) {
      Mat snap = span[m].basis;
      for (int i = 1; i <= m; i++)
        for (int a = 0; a < snap.nr; a++)
          add(m + n - 1, compose(p, m, i, n, snap.row(a), v));
    }
  }
  std::vector<Mat> out;
  for (int n = 0; n <= N; n++) out.push_back(span[n].basis);
  return out;
}

ShufflePoissonReport poisson_check(const Operad &p) {
  int N = p.max_arity();
  if (N < 3) throw usage_error("shuffle-Poisson check needs horizon >= 3");
  auto gopt = p.grading();
  if (!gopt) throw usage_error("shuffle-Poisson check needs a graded operad");
  const auto &g = *gopt;
  if ((int)g.size() != N + 1 || (int)g[2].size() != 3)
    throw usage_error("grading does not cover arity 2 with degrees 0..2");

  ShufflePoissonReport rep;
  for (int n = 0; n <= N; n++)
    rep.top_degree_dims.push_back(
        (int)g[n].size() == n + 1 ? g[n][n] : 0);
  auto fail = [&](const std::string &w) {
    rep.ok = false;
    rep.why = w;
    return rep;
  };

  if (g[2][0] != 1 || g[2][1] != 0 || g[2][2] != 1)
    return fail("arity 2 is not one degree-0 line and one degree-2 line");
  auto u = find_two_unit(p);
  if (!u) return fail("no two-sided binary unit");
  const Vec &mu = u->coords;
  for (int c = 0; c < p.dim(2); c++)
    if (mu[c] != 0 && c != 0)
      return fail("the binary unit is not concentrated in degree 0");
  auto zu = p.zero_unit_coords();
  if (!zu) return fail("no 0-ary unit");
  Vec br = basis_vec(p.dim(2), 1);  // the degree-2 line

  Perm swap2(std::vector<int>{2, 1});
  Perm twist(std::vector<int>{2, 1, 3});
  if (act(p, 2, mu, swap2) != mu) return fail("the product is not symmetric");
  if (act(p, 2, br, swap2) != vec_neg(br))
    return fail("the bracket is not antisymmetric");
  if (compose(p, 2, 1, 2, mu, mu) != compose(p, 2, 2, 2, mu, mu))
    return fail("the product is not slot-insensitive");

  // product exchange: [a.b, c] matches a.[b, c] plus its (213)-twist
  Vec lhs = compose(p, 2, 1, 2, br, mu);
  Vec half = compose(p, 2, 2, 2, mu, br);
  if (lhs != vec_add(half, act(p, 3, half, twist)))
    return fail("bracket against the product misses its exchange law");
  // bracket exchange: the two nestings differ by the (213)-twist
  Vec outer = compose(p, 2, 2, 2, br, br);
  if (outer != vec_add(compose(p, 2, 1, 2, br, br), act(p, 3, outer, twist)))
    return fail("the bracket misses its own exchange law");

  for (int i = 1; i <= 2; i++) {
    if (compose(p, 2, i, 0, mu, *zu) != p.unit_coords())
      return fail("the product does not collapse to the unit");
    if (!is_zero_vec(compose(p, 2, i, 0, br, *zu)))
      return fail("the bracket survives the 0-ary unit");
  }
  rep.relations_ok = true;

  std::vector<Mat> seeds(3, Mat(0, 0));
  seeds[2] = Mat::from_rows({mu, br}, p.dim(2));
  auto closure = suboperad_closure(p, seeds);
  for (int n = 0; n <= N; n++) rep.generated_dims.push_back(closure[n].nr);
  for (int n = 0; n <= N; n++)
    if (closure[n].nr != p.dim(n))
      return fail("the two lines generate only " +
                  std::to_string(closure[n].nr) + " of " +
                  std::to_string(p.dim(n)) + " at arity " +
                  std::to_string(n));
  rep.ok = true;
  return rep;
}

}  // namespace operad
