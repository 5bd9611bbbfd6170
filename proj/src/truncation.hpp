#pragma once

#include "operad.hpp"

namespace operad {

// ^kU(n): joint kernel of all restrictions P(n) -> P(k-1), i.e. the
// elements every pi^I with |I| = k - 1 kills. Zero below arity k; all of
// P(n) at k = 0. Canonical rref rows in P(n) coordinates.
Mat trunc_component(const Operad &p, int k, int n);

// the ideal ^kU across the whole horizon
Ideal trunc_ideal(const Operad &p, int k);

// ^kU^M(n) = {mu in ^kU(n) : pi^I(mu) in M for all |I| = k}; m spans a
// subspace of P(k) (checked S_k-stable by the caller when it matters)
Ideal trunc_ideal_rel(const Operad &p, int k, const Mat &m);

// S_k = dim ^kU(k) for k = 1..upto
std::vector<int> signature_of(const Operad &p, int upto);

// dimensions of the invariant and sign-isotypic subspaces of an
// S_n-stable subspace of P(n); throws when sub is not stable
std::pair<int, int> one_dim_submodules(const Operad &p, const Mat &sub, int n);

// P/^kU, tagged with the vanishing index k it acquires
std::shared_ptr<TableOperad> quotient_by_trunc(const Operad &p, int k,
                                               const std::string &name);

}  // namespace operad
