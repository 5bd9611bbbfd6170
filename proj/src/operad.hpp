#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "perm.hpp"
#include "rational.hpp"

namespace operad {

// A finite-arity-truncated symmetric operad over Q. Components P(0)..P(N)
// carry right S_n-actions; partial composition o_i : P(m) x P(n) ->
// P(m+n-1) is defined for m >= 1, 1 <= i <= m, n >= 0, m+n-1 <= N.
// Subclasses provide basis-level data; linear extensions live below.
class Operad {
 public:
  Operad(std::string name, int max_arity)
      : name_(std::move(name)), N_(max_arity) {}
  virtual ~Operad() = default;

  const std::string &name() const { return name_; }
  int max_arity() const { return N_; }

  virtual int dim(int n) const = 0;
  virtual std::string label(int n, int a) const;
  // coordinates of (basis a of P(m)) o_i (basis b of P(n)) in P(m+n-1)
  virtual Vec compose_basis(int m, int i, int n, int a, int b) const = 0;
  // right action of the adjacent transposition (j, j+1), 1 <= j <= n-1
  virtual Vec act_gen_basis(int n, int a, int j) const = 0;
  // right action of an arbitrary permutation; default goes through
  // adjacent_factorization
  virtual Vec act_basis(int n, int a, const Perm &s) const;

  virtual Vec unit_coords() const = 0;  // 1_1 in P(1)
  virtual std::optional<Vec> zero_unit_coords() const { return {}; }
  // designated 2-unit, when the construction provides one
  virtual std::optional<Vec> two_unit_coords() const { return {}; }
  // least v with ^vU = 0, when the construction proves it beyond the
  // horizon; drives EXACT growth certificates
  virtual std::optional<int> vanishing_index() const { return {}; }
  virtual std::string kind() const = 0;
  // per-arity degree block sizes, for graded (truncatified) operads
  virtual std::optional<std::vector<std::vector<int>>> grading() const {
    return {};
  }

  void check_arity(int n) const {
    if (n < 0 || n > N_)
      throw usage_error("arity " + std::to_string(n) + " outside 0.." +
                        std::to_string(N_) + " in " + name_);
  }
  void check_compose_args(int m, int i, int n) const;

 private:
  std::string name_;
  int N_;
};

using OperadPtr = std::shared_ptr<const Operad>;

// Fully tabulated operad: dense composition tables and action generators.
class TableOperad final : public Operad {
 public:
  TableOperad(std::string name, int max_arity, std::vector<int> dims);

  int dim(int n) const override { return dims_[n]; }
  std::string label(int n, int a) const override;
  Vec compose_basis(int m, int i, int n, int a, int b) const override;
  Vec act_gen_basis(int n, int a, int j) const override;
  Vec unit_coords() const override { return unit_; }
  std::optional<Vec> zero_unit_coords() const override { return zero_; }
  std::optional<Vec> two_unit_coords() const override { return two_; }
  std::optional<int> vanishing_index() const override { return vanish_; }
  std::string kind() const override { return kind_; }
  std::optional<std::vector<std::vector<int>>> grading() const override {
    return grading_;
  }

  // construction surface (io and builders fill these)
  void set_labels(int n, std::vector<std::string> labels);
  void set_unit(Vec u) { unit_ = std::move(u); }
  void set_zero_unit(std::optional<Vec> z) { zero_ = std::move(z); }
  void set_two_unit(std::optional<Vec> t) { two_ = std::move(t); }
  void set_vanishing_index(std::optional<int> v) { vanish_ = v; }
  void set_kind(std::string k) { kind_ = std::move(k); }
  void set_grading(std::optional<std::vector<std::vector<int>>> g) {
    grading_ = std::move(g);
  }
  // table[a * dim(n) + b] = coords of a o_i b; shape (d_m*d_n) x d_{m+n-1}
  void set_table(int m, int i, int n, Mat table);
  const Mat &table(int m, int i, int n) const;
  void set_act_gen(int n, int j, Mat g);
  const Mat &act_gen(int n, int j) const;

  // deep copy through the virtual interface; preserves units, hints,
  // labels, and grading
  static std::shared_ptr<TableOperad> materialize(const Operad &p);

 private:
  std::vector<int> dims_;
  std::vector<std::vector<std::string>> labels_;
  Vec unit_;
  std::optional<Vec> zero_, two_;
  std::optional<int> vanish_;
  std::optional<std::vector<std::vector<int>>> grading_;
  std::string kind_ = "table";
  // comp_[m][i-1][n], present iff legal
  std::vector<std::vector<std::vector<Mat>>> comp_;
  std::vector<std::vector<Mat>> act_;
};

// ---- linear extensions ----

Vec compose(const Operad &p, int m, int i, int n, const Vec &x, const Vec &y);
// th o (args_1, ..., args_m) as iterated partial composition, rightmost
// slot first; args_j = (arity, coords)
Vec full_compose(const Operad &p, int m, const Vec &th,
                 const std::vector<std::pair<int, Vec>> &args);
Vec act(const Operad &p, int n, const Vec &x, const Perm &s);

// 1_n tower: 1_0, 1_1 from the units, 1_n = 1_2 o_1 1_{n-1} for n >= 2
// (needs the designated 2-unit).
Vec unit_tower(const Operad &p, int n);

// ---- elementary operators as matrices (row r = image of basis r) ----

Mat act_matrix(const Operad &p, int n, const Perm &s);
// restriction: compose with 1_1 at slots in I, 1_0 elsewhere; P(n)->P(|I|)
Mat pi_matrix(const Operad &p, int n, const std::vector<int> &I);
// contraction: pi of the complement; P(n)->P(n-|I|)
Mat gamma_matrix(const Operad &p, int n, const std::vector<int> &I);
// extension: compose with 1_2 at slots in I, 1_1 elsewhere; P(n)->P(n+|I|)
Mat delta_matrix(const Operad &p, int n, const std::vector<int> &I);
// th |-> 1_2 o (th, 1_r)
Mat iota_right_matrix(const Operad &p, int n, int r);
// th |-> 1_2 o (1_l, th)
Mat iota_left_matrix(const Operad &p, int n, int l);
// th |-> 1_3 o (1_l, th, 1_r)
Mat iota_matrix(const Operad &p, int n, int l, int r);

// ---- units ----

struct TwoUnit {
  Vec coords;
  bool unique;
};
// Solves v o_1 1_0 = 1_1 = v o_2 1_0 in P(2). Prefers the designated
// 2-unit when the construction names one (and re-verifies it).
std::optional<TwoUnit> find_two_unit(const Operad &p);
// 1_2 o_1 1_2 == 1_2 o_2 1_2 for the given 2-unit
bool check_2a(const Operad &p, const Vec &two_unit);

// ---- axioms ----

struct AxiomViolation {
  std::string rule;      // "unit-right", "action-coxeter", "assoc-nested",
                         // "assoc-disjoint", "equiv-right", "equiv-left"
  std::string instance;  // human-readable indices and labels
};

struct AxiomReport {
  bool ok = true;
  long checks = 0;
  std::vector<AxiomViolation> violations;  // capped
};

AxiomReport verify_axioms(const Operad &p, int max_violations = 8);

// Structural equality on the nose: same horizon, same dimensions, same
// units, and entrywise equal composition tables and action generators.
// Names, labels, kinds, gradings, and vanishing hints are not compared.
bool operads_identical(const Operad &a, const Operad &b,
                       std::string *why = nullptr);

// The same operad written in a new basis: row r of basis[n] holds the
// r-th new basis vector of P(n) in the old coordinates (square,
// invertible, one matrix per arity 0..N). Tables, action generators, and
// designated units are rewritten; gradings and labels are dropped.
std::shared_ptr<TableOperad> transport_basis(const Operad &p,
                                             const std::vector<Mat> &basis,
                                             const std::string &name);

// ---- ideals and quotients ----

// comp[n]: canonical rref rows spanning I(n) in P(n) coordinates.
struct Ideal {
  std::vector<Mat> comp;
  int max_arity() const { return (int)comp.size() - 1; }
  std::vector<int> dims() const;
};

Ideal zero_ideal(const Operad &p);
// check S-stability and two-sided absorption; on failure *why names the
// violated instance
bool is_ideal(const Operad &p, const Ideal &ideal, std::string *why = nullptr);
Ideal ideal_sum(const Operad &p, const Ideal &a, const Ideal &b);
Ideal ideal_intersect(const Operad &p, const Ideal &a, const Ideal &b);
// ideal generated by all a o_i b with a in A, b in B
Ideal ideal_product(const Operad &p, const Ideal &a, const Ideal &b);
// smallest ideal containing the given vectors (arity, coords)
Ideal generate_ideal(const Operad &p,
                     const std::vector<std::pair<int, Vec>> &seeds);

// Quotient by an ideal: basis = coset representatives at the non-pivot
// coordinates of rref(I(n)). vanish names the least v with ^vU = 0 in the
// quotient when known (quotients by ^kU pass k).
std::shared_ptr<TableOperad> quotient_operad(
    const Operad &p, const Ideal &ideal, const std::string &name,
    std::optional<int> vanish = std::nullopt);

// reduce a P(n) vector to quotient coordinates (non-pivot positions)
Vec quotient_project(const Rref &ideal_basis, const Vec &v);

}  // namespace operad
