#include "linalg.hpp"

#include <deque>

#include "parallel.hpp"

namespace operad {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec> &rows, int ncols) {
  Mat m((int)rows.size(), ncols);
  for (int r = 0; r < m.nr; r++) {
    for (int c = 0; c < ncols; c++) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(int r) const {
  return Vec(a.begin() + (size_t)r * nc, a.begin() + (size_t)(r + 1) * nc);
}

void Mat::set_row(int r, const Vec &v) {
  for (int c = 0; c < nc; c++) at(r, c) = v[c];
}

bool Mat::is_zero() const {
  for (const Rat &x : a)
    if (x != 0) return false;
  return true;
}

Mat mat_mul(const Mat &x, const Mat &y) {
  if (x.nc != y.nr) throw std::invalid_argument("mat_mul shape");
  Mat r(x.nr, y.nc);
  parallel_for(x.nr, [&](long i) {
    for (int k = 0; k < x.nc; k++) {
      const Rat &f = x.at((int)i, k);
      if (f == 0) continue;
      for (int j = 0; j < y.nc; j++) {
        if (y.at(k, j) != 0) r.at((int)i, j) += f * y.at(k, j);
      }
    }
  });
  return r;
}

Mat mat_transpose(const Mat &m) {
  Mat r(m.nc, m.nr);
  for (int i = 0; i < m.nr; i++)
    for (int j = 0; j < m.nc; j++) r.at(j, i) = m.at(i, j);
  return r;
}

Mat vstack(const Mat &x, const Mat &y) {
  if (x.nr == 0) return y;
  if (y.nr == 0) return x;
  if (x.nc != y.nc) throw std::invalid_argument("vstack shape");
  Mat r(x.nr + y.nr, x.nc);
  std::copy(x.a.begin(), x.a.end(), r.a.begin());
  std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
  return r;
}

Mat hstack(const Mat &x, const Mat &y) {
  if (x.nc == 0) return y;
  if (y.nc == 0) return x;
  if (x.nr != y.nr) throw std::invalid_argument("hstack shape");
  Mat r(x.nr, x.nc + y.nc);
  for (int i = 0; i < x.nr; i++) {
    for (int j = 0; j < x.nc; j++) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.nc; j++) r.at(i, x.nc + j) = y.at(i, j);
  }
  return r;
}

Vec vec_mat(const Vec &v, const Mat &m) {
  if ((int)v.size() != m.nr) throw std::invalid_argument("vec_mat shape");
  Vec r = zero_vec(m.nc);
  for (int i = 0; i < m.nr; i++) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.nc; j++)
      if (m.at(i, j) != 0) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

namespace {

// Gauss-Jordan in place; returns pivot columns. work has `rows` rows of
// width `cols`, elimination only inspects the first `main` columns (the
// remainder is carried along, used for tracking).
std::vector<int> eliminate(std::vector<Rat> &work, int rows, int cols,
                           int main) {
  std::vector<int> pivots;
  auto at = [&](int r, int c) -> Rat & { return work[(size_t)r * cols + c]; };
  int rank = 0;
  for (int c = 0; c < main && rank < rows; c++) {
    int p = -1;
    for (int r = rank; r < rows; r++) {
      if (at(r, c) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != rank) {
      for (int j = 0; j < cols; j++) std::swap(at(p, j), at(rank, j));
    }
    if (at(rank, c) != 1) {
      Rat inv = 1 / at(rank, c);
      for (int j = c; j < cols; j++) {
        if (at(rank, j) != 0) at(rank, j) *= inv;
      }
    }
    parallel_for(rows, [&](long r) {
      if (r == rank) return;
      const Rat f = at((int)r, c);
      if (f == 0) return;
      for (int j = c; j < cols; j++) {
        if (at(rank, j) != 0) at((int)r, j) -= f * at(rank, j);
      }
      at((int)r, c) = 0;
    });
    pivots.push_back(c);
    rank++;
  }
  return pivots;
}

}  // namespace

Rref rref(const Mat &m) {
  std::vector<Rat> work = m.a;
  std::vector<int> pivots = eliminate(work, m.nr, m.nc, m.nc);
  Rref out;
  out.pivots = pivots;
  out.basis = Mat((int)pivots.size(), m.nc);
  std::copy(work.begin(), work.begin() + (size_t)pivots.size() * m.nc,
            out.basis.a.begin());
  return out;
}

RrefTracked rref_tracked(const Mat &m) {
  int cols = m.nc + m.nr;
  std::vector<Rat> work((size_t)m.nr * cols);
  for (int r = 0; r < m.nr; r++) {
    for (int c = 0; c < m.nc; c++) work[(size_t)r * cols + c] = m.at(r, c);
    work[(size_t)r * cols + m.nc + r] = 1;
  }
  std::vector<int> pivots = eliminate(work, m.nr, cols, m.nc);
  RrefTracked out;
  out.pivots = pivots;
  int rank = (int)pivots.size();
  out.basis = Mat(rank, m.nc);
  out.transform = Mat(rank, m.nr);
  for (int r = 0; r < rank; r++) {
    for (int c = 0; c < m.nc; c++)
      out.basis.at(r, c) = work[(size_t)r * cols + c];
    for (int c = 0; c < m.nr; c++)
      out.transform.at(r, c) = work[(size_t)r * cols + m.nc + c];
  }
  return out;
}

Mat nullspace(const Mat &m) {
  Rref r = rref(m);
  std::vector<char> is_pivot(m.nc, 0);
  for (int c : r.pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.nc; c++)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat out((int)free_cols.size(), m.nc);
  for (int i = 0; i < out.nr; i++) {
    int f = free_cols[i];
    out.at(i, f) = 1;
    for (int p = 0; p < r.rank(); p++)
      out.at(i, r.pivots[p]) = -r.basis.at(p, f);
  }
  return out;
}

Mat kernel_of_map(const Mat &m) { return nullspace(mat_transpose(m)); }

Mat subspace_sum(const Mat &u, const Mat &v) {
  return rref(vstack(u, v)).basis;
}

Mat subspace_intersect(const Mat &u, const Mat &v) {
  // x in rowspace(w) iff nullspace(w) * x^T = 0
  return rref(nullspace(vstack(nullspace(u), nullspace(v)))).basis;
}

Vec reduce_against(const Vec &v, const Rref &basis) {
  Vec r = v;
  for (int p = 0; p < basis.rank(); p++) {
    const Rat c = r[basis.pivots[p]];
    if (c == 0) continue;
    for (int j = 0; j < basis.basis.nc; j++) {
      if (basis.basis.at(p, j) != 0) r[j] -= c * basis.basis.at(p, j);
    }
  }
  return r;
}

bool subspace_member(const Vec &v, const Rref &basis) {
  return is_zero_vec(reduce_against(v, basis));
}

std::optional<Vec> coords_in(const Vec &v, const Rref &basis) {
  Vec c((size_t)basis.rank());
  for (int p = 0; p < basis.rank(); p++) c[p] = v[basis.pivots[p]];
  Vec rem = v;
  for (int p = 0; p < basis.rank(); p++) {
    if (c[p] == 0) continue;
    for (int j = 0; j < basis.basis.nc; j++)
      if (basis.basis.at(p, j) != 0) rem[j] -= c[p] * basis.basis.at(p, j);
  }
  if (!is_zero_vec(rem)) return std::nullopt;
  return c;
}

bool subspace_equal(const Mat &u, const Mat &v) {
  return rref(u).basis == rref(v).basis;
}

bool subspace_contains(const Mat &u, const Mat &v) {
  Rref ru = rref(u);
  for (int r = 0; r < v.nr; r++) {
    if (!subspace_member(v.row(r), ru)) return false;
  }
  return true;
}

std::optional<Vec> solve_left(const Mat &m, const Vec &b) {
  RrefTracked t = rref_tracked(m);
  Rref basis{t.basis, t.pivots};
  std::optional<Vec> c = coords_in(b, basis);
  if (!c) return std::nullopt;
  return vec_mat(*c, t.transform);
}

Mat invariant_closure(const Mat &seed, int gens,
                      const std::function<Vec(const Vec &, int)> &apply) {
  Rref basis = rref(seed);
  std::deque<Vec> queue;
  for (int r = 0; r < basis.rank(); r++) queue.push_back(basis.basis.row(r));
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (int g = 0; g < gens; g++) {
      Vec w = apply(v, g);
      if (subspace_member(w, basis)) continue;
      queue.push_back(w);
      basis = rref(vstack(basis.basis, Mat::from_rows({w}, (int)w.size())));
    }
  }
  return basis.basis;
}

}  // namespace operad
