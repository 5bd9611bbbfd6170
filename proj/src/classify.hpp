#pragma once

#include "builders.hpp"
#include "series.hpp"
#include "truncation.hpp"

namespace operad {

// One verified claim with a reproducible witness: dimensions, basis
// data, or the reason the claim does not apply to the subject.
struct ClassificationCheck {
  std::string claim;
  std::string status;  // "pass", "fail", or "not-applicable"
  std::string witness;
};

struct ClassificationReport {
  std::string subject;
  std::vector<ClassificationCheck> checks;
  bool ok = true;  // and-fold over the checks; not-applicable stays true
  const ClassificationCheck *find(const std::string &claim) const;
};

// An EXACT growth certificate of 1 forces the collapse onto the
// one-dimensional tower: every component a line, trivial action,
// identical to Com once the unit tower is rescaled to the basis.
// Not-applicable when the signature has support or the certificate
// stays a lower bound. The subject must be 2-unitary.
ClassificationReport check_com_collapse(const Operad &p);

// Algebra -> operad -> algebra: D_A remembers the structure constants
// on the canonical basis 1_1, delta_1..delta_d.
ClassificationReport equivalence_roundtrip(const AugmentedAlgebra &a, int N);
// Operad -> algebra -> operad: a 2-unitary P whose second rung vanishes
// is D of its own arity-1 augmentation ideal, table for table after the
// change to the canonical basis 1_n and 1_n o_i delta_j.
ClassificationReport equivalence_roundtrip(const Operad &p);

// Deterministic proper nonzero S_k-submodule of the diagonal rung
// ^kU(k): isotypic lines first (trivial, then sign), then orbit spans
// of seeded random vectors. For the permutation operad at k = 4 this
// finds the sign line through the alternating sum.
Mat proper_submodule_of_rung(const Operad &p, int k);

// The quotient tower of the permutation operad at horizon N >= 5: the
// missing linear rung, the simple cubic rung, the arity-4 split 15 + 9,
// a proper submodule wedged strictly between consecutive rungs, and the
// two distinct growth-5 quotients that submodule separates.
ClassificationReport check_quotient_tower(int N);

}  // namespace operad
