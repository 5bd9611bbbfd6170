#pragma once

#include <memory>
#include <string>
#include <vector>

#include "truncation.hpp"

namespace operad {

// Graded replacement of p along its truncation filtration. The degree-i
// slice of arity n is a canonical complement of component i+1 inside
// component i (rows of the i-th rref whose pivot the next rung does not
// use), so each arity carries a grading with block i of size
//   dim comp_i(n) - dim comp_{i+1}(n).
// A composition of degrees i and j is computed on representatives and then
// projected to degree i+j-1, or to i+j when either factor has degree 0;
// the symmetric action keeps the degree. The result is a table operad
// whose grading() reports the block sizes.
std::shared_ptr<TableOperad> truncatify(const Operad &p);

// Checks that p is its own graded replacement: a grading is present and
// sized per arity, the k-th truncation component is exactly the span of
// the coordinate blocks of degree >= k, and every composition and action
// of basis elements lands in the single block the degree law predicts.
bool is_truncatified(const Operad &p, std::string *why = nullptr);

// Smallest suboperad containing the given per-arity spans: closed under
// the units, partial composition on either side, and the symmetric
// action. comps[n] is a canonical basis of arity n. Seeds may be ragged
// (missing arities count as empty).
std::vector<Mat> suboperad_closure(const Operad &p,
                                   const std::vector<Mat> &seeds);

struct ShufflePoissonReport {
  bool ok = false;
  // the relation checks alone (symmetry, antisymmetry, both exchange
  // laws, unit collapse); generation is reported separately through ok
  bool relations_ok = false;
  std::string why;
  // dims of the suboperad generated by the two binary lines and the units
  std::vector<long> generated_dims;
  // size of the top graded block per arity: degree n inside arity n
  std::vector<long> top_degree_dims;
};

// A graded operad whose arity-2 part is one degree-0 line (the product)
// and one degree-2 line (the bracket) carries a shuffle-Poisson check:
// the product is symmetric and slot-insensitive, the bracket is
// antisymmetric, both exchange laws hold with their (213)-twisted
// correction term, composing with the 0-ary unit collapses the product
// to the unit and kills the bracket, and the two lines generate the
// whole operad. Needs horizon >= 3.
ShufflePoissonReport poisson_check(const Operad &p);

}  // namespace operad
