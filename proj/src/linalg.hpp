#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace operad {

// Dense rational matrix, row-major. Vectors are rows; a linear map is the
// matrix whose r-th row is the image of the r-th source basis vector, so
// maps apply on the right: v |-> v * M, and composition reads left to
// right as matrix product.
struct Mat {
  int nr = 0, nc = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : nr(r), nc(c), a((size_t)r * c) {}

  Rat &at(int r, int c) { return a[(size_t)r * nc + c]; }
  const Rat &at(int r, int c) const { return a[(size_t)r * nc + c]; }

  static Mat identity(int n);
  static Mat zero(int r, int c) { return Mat(r, c); }
  static Mat from_rows(const std::vector<Vec> &rows, int ncols);

  Vec row(int r) const;
  void set_row(int r, const Vec &v);
  bool is_zero() const;
  bool operator==(const Mat &) const = default;
};

Mat mat_mul(const Mat &x, const Mat &y);
Mat mat_transpose(const Mat &m);
Mat vstack(const Mat &x, const Mat &y);
Mat hstack(const Mat &x, const Mat &y);
Vec vec_mat(const Vec &v, const Mat &m);  // v * m, |v| = m.nr

// Unique reduced row echelon form of the row space: pivots at the least
// possible column indices, pivot entries 1, pivot columns cleared, rows
// ordered by pivot column, zero rows dropped.
struct Rref {
  Mat basis;
  std::vector<int> pivots;
  int rank() const { return basis.nr; }
};
Rref rref(const Mat &m);

// Same elimination run on [m | I]: transform * m == basis (row-for-row).
struct RrefTracked {
  Mat basis;
  std::vector<int> pivots;
  Mat transform;  // rank x m.nr
};
RrefTracked rref_tracked(const Mat &m);

// Rows spanning {x : m * x^T = 0}, canonically ordered by free column.
Mat nullspace(const Mat &m);
// Rows spanning {v : v * m = 0} (kernel of the map v |-> v*m).
Mat kernel_of_map(const Mat &m);

// Subspace algebra on row spaces; results are canonical rref bases.
Mat subspace_sum(const Mat &u, const Mat &v);
Mat subspace_intersect(const Mat &u, const Mat &v);
bool subspace_member(const Vec &v, const Rref &basis);
bool subspace_equal(const Mat &u, const Mat &v);
bool subspace_contains(const Mat &u, const Mat &v);  // v subseteq u

// v minus its projection on the rref rows: zero iff member.
Vec reduce_against(const Vec &v, const Rref &basis);
// Coefficients of v over the rref rows, if v lies in the span.
std::optional<Vec> coords_in(const Vec &v, const Rref &basis);
// Canonical x with x * m = b, if solvable.
std::optional<Vec> solve_left(const Mat &m, const Vec &b);

// Closure of span(seed) under the linear maps v |-> apply(v, g),
// g = 0..gens-1. Returns the canonical rref basis of the smallest
// invariant subspace containing the seed rows.
Mat invariant_closure(const Mat &seed, int gens,
                      const std::function<Vec(const Vec &, int)> &apply);

}  // namespace operad
