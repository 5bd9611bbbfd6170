#include "classify.hpp"

#include <random>
#include <utility>

namespace operad {

namespace {

void add(ClassificationReport &rep, std::string claim, bool pass,
         std::string witness) {
  rep.checks.push_back(
      {std::move(claim), pass ? "pass" : "fail", std::move(witness)});
  rep.ok = rep.ok && pass;
}

void skip(ClassificationReport &rep, std::string claim, std::string why) {
  rep.checks.push_back({std::move(claim), "not-applicable", std::move(why)});
}

template <class T>
std::string num_list(const std::vector<T> &v) {
  std::string s;
  for (size_t i = 0; i < v.size(); i++) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

const ClassificationCheck *ClassificationReport::find(
    const std::string &claim) const {
  for (const auto &c : checks)
    if (c.claim == claim) return &c;
  return nullptr;
}

ClassificationReport check_com_collapse(const Operad &p) {
  ClassificationReport rep;
  rep.subject = p.name();
  if (p.dim(0) != 1 || !p.zero_unit_coords())
    throw usage_error("the collapse check wants a unitary subject");
  if (!find_two_unit(p))
    throw usage_error("the collapse check wants a 2-unitary subject");
  int N = p.max_arity();

  auto cert = growth_certificate(p);
  for (int k = 1; k <= (int)cert.signature.size(); k++)
    if (cert.signature[k - 1] != 0) {
      skip(rep, "com-collapse",
           "rung " + std::to_string(k) + " has rank " +
               std::to_string(cert.signature[k - 1]) + ", so growth is " +
               std::to_string(cert.value) + " or more");
      return rep;
    }
  if (cert.status != GrowthStatus::EXACT) {
    skip(rep, "com-collapse",
         "every rung vanishes inside the horizon but nothing certifies the "
         "tail, so growth 1 stays a lower bound");
    return rep;
  }

  std::vector<long> dims(p.max_arity() + 1);
  bool lines = true;
  for (int n = 0; n <= N; n++) {
    dims[n] = p.dim(n);
    lines = lines && dims[n] == 1;
  }
  add(rep, "line-components", lines, "dimensions " + num_list(dims));
  if (!lines) return rep;

  std::string bad;
  for (int n = 2; n <= N && bad.empty(); n++)
    for (int j = 1; j <= n - 1 && bad.empty(); j++)
      if (p.act_gen_basis(n, 0, j) != basis_vec(1, 0))
        bad = "the transposition (" + std::to_string(j) + " " +
              std::to_string(j + 1) + ") moves the line at arity " +
              std::to_string(n);
  add(rep, "trivial-action", bad.empty(),
      bad.empty() ? "every adjacent transposition acts as the identity"
                  : bad);
  if (!bad.empty()) return rep;

  std::vector<Mat> b(N + 1);
  int dead = -1;
  for (int n = 0; n <= N; n++) {
    Vec u = unit_tower(p, n);
    if (is_zero_vec(u) && dead < 0) dead = n;
    b[n] = Mat::from_rows({u}, 1);
  }
  add(rep, "unit-tower-spans", dead < 0,
      dead < 0 ? "1_n is a basis vector of every component"
               : "1_" + std::to_string(dead) + " vanishes");
  if (dead >= 0) return rep;

  auto t = transport_basis(p, b, p.name());
  if (!t->two_unit_coords()) t->set_two_unit(basis_vec(1, 0));
  auto com = build_com(N, true);
  std::string why;
  bool same = operads_identical(*t, *com, &why);
  add(rep, "unit-tower", same,
      same ? "identical to the one-dimensional tower after rescaling the "
             "basis to the units"
           : why);
  return rep;
}

ClassificationReport equivalence_roundtrip(const AugmentedAlgebra &a, int N) {
  a.validate();
  ClassificationReport rep;
  auto d_op = build_d(a, N);
  rep.subject = d_op->name();

  auto ker = rref(kernel_of_map(pi_matrix(*d_op, 1, {})));
  bool split = ker.rank() == a.d;
  std::string diff;
  for (int j = 1; j <= a.d && diff.empty(); j++)
    for (int l = 1; l <= a.d && diff.empty(); l++) {
      Vec w = compose(*d_op, 1, 1, 1, ker.basis.row(j - 1),
                      ker.basis.row(l - 1));
      Vec res = w;
      for (int v = 1; v <= a.d; v++) {
        Rat c = w[ker.pivots[v - 1]];
        if (c != a.at(j, l, v)) {
          diff = "entry (" + std::to_string(j) + "," + std::to_string(l) +
                 "," + std::to_string(v) + ") comes back as " + rat_str(c) +
                 " instead of " + rat_str(a.at(j, l, v));
          break;
        }
        axpy(res, -c, ker.basis.row(v - 1));
      }
      if (diff.empty() && !is_zero_vec(res))
        diff = "the product of generators " + std::to_string(j) + " and " +
               std::to_string(l) + " escapes the augmentation ideal";
    }
  add(rep, "structure-constants", split && diff.empty(),
      !split ? "the augmentation kernel has rank " +
                   std::to_string(ker.rank()) + " instead of " +
                   std::to_string(a.d)
      : diff.empty()
          ? "all " + std::to_string(a.d * a.d * a.d) +
                " structure constants come back unchanged"
          : diff);
  return rep;
}

ClassificationReport equivalence_roundtrip(const Operad &p) {
  ClassificationReport rep;
  rep.subject = p.name();
  int N = p.max_arity();
  if (p.dim(0) != 1 || !p.zero_unit_coords())
    throw usage_error("the roundtrip wants a unitary subject");
  if (!find_two_unit(p))
    throw usage_error("the roundtrip wants a 2-unitary subject");
  for (int n = 0; n <= N; n++) {
    int r = trunc_component(p, 2, n).nr;
    if (r != 0)
      throw usage_error("the second rung survives (rank " +
                        std::to_string(r) + " at arity " +
                        std::to_string(n) + ")");
  }

  int d = p.dim(1) - 1;
  auto ker = rref(kernel_of_map(pi_matrix(p, 1, {})));
  bool split = ker.rank() == d;
  AugmentedAlgebra al;
  al.d = d;
  al.omega.assign((size_t)d * d * d, Rat(0));
  std::string leak;
  if (split)
    for (int j = 1; j <= d && leak.empty(); j++)
      for (int l = 1; l <= d && leak.empty(); l++) {
        Vec w =
            compose(p, 1, 1, 1, ker.basis.row(j - 1), ker.basis.row(l - 1));
        for (int v = 1; v <= d; v++) {
          al.at(j, l, v) = w[ker.pivots[v - 1]];
          axpy(w, -al.at(j, l, v), ker.basis.row(v - 1));
        }
        if (!is_zero_vec(w))
          leak = "the product of generators " + std::to_string(j) + " and " +
                 std::to_string(l) + " escapes the augmentation ideal";
      }
  add(rep, "augmentation-split", split && leak.empty(),
      !split ? "the augmentation kernel has rank " +
                   std::to_string(ker.rank()) + " against component rank " +
                   std::to_string(p.dim(1))
             : (leak.empty() ? "d = " + std::to_string(d) : leak));
  if (!rep.ok) return rep;

  bool shaped = true;
  std::vector<long> dims(N + 1);
  for (int n = 0; n <= N; n++) {
    dims[n] = p.dim(n);
    shaped = shaped && dims[n] == 1 + (long)n * d;
  }
  add(rep, "canonical-dims", shaped,
      "dimensions " + num_list(dims) +
          (shaped ? " match 1 + n*d" : " off the 1 + n*d line"));
  if (!shaped) return rep;

  // the canonical basis: 1_n, then 1_n o_i delta_j slot-major
  std::vector<Mat> basis(N + 1);
  basis[0] = Mat::from_rows({*p.zero_unit_coords()}, 1);
  int thin = -1;
  for (int n = 1; n <= N; n++) {
    std::vector<Vec> rows{unit_tower(p, n)};
    for (int i = 1; i <= n; i++)
      for (int j = 1; j <= d; j++)
        rows.push_back(
            compose(p, n, i, 1, rows[0], ker.basis.row(j - 1)));
    basis[n] = Mat::from_rows(rows, p.dim(n));
    if (rref(basis[n]).rank() != p.dim(n) && thin < 0) thin = n;
  }
  add(rep, "canonical-basis", thin < 0,
      thin < 0 ? "1_n and the padded generators are a basis of every "
                 "component"
               : "the padded generators are dependent at arity " +
                     std::to_string(thin));
  if (thin >= 0) return rep;

  auto t = transport_basis(p, basis, p.name());
  if (!t->two_unit_coords()) t->set_two_unit(basis_vec(t->dim(2), 0));
  auto d_op = build_d(al, N, true);
  std::string why;
  bool same = operads_identical(*t, *d_op, &why);
  add(rep, "tables-identical", same,
      same ? "every table and action generator coincides in the canonical "
             "coordinates"
           : why);
  return rep;
}

Mat proper_submodule_of_rung(const Operad &p, int k) {
  p.check_arity(k);
  Mat r = trunc_component(p, k, k);
  int dm = p.dim(k);
  if (r.nr == 0)
    throw usage_error("the rung at arity " + std::to_string(k) +
                      " vanishes; nothing to split");
  auto sym = symmetric_group(k);
  // isotypic lines first: average each rung basis vector over the group,
  // plainly and then against the sign
  for (int sgn = 0; sgn <= 1; sgn++)
    for (int i = 0; i < r.nr; i++) {
      Vec acc = zero_vec(dm);
      for (const auto &s : sym)
        axpy(acc, sgn ? Rat(perm_sign(s)) : Rat(1), act(p, k, r.row(i), s));
      if (!is_zero_vec(acc) && r.nr > 1)
        return rref(Mat::from_rows({acc}, dm)).basis;
    }
  // seeded fallback: orbit spans of small random combinations
  std::mt19937_64 gen(0);
  for (int tries = 0; tries < 64; tries++) {
    Vec x = zero_vec(dm);
    for (int i = 0; i < r.nr; i++)
      axpy(x, Rat((long)(gen() % 7) - 3), r.row(i));
    if (is_zero_vec(x)) continue;
    std::vector<Vec> orbit;
    for (const auto &s : sym) orbit.push_back(act(p, k, x, s));
    Mat span = rref(Mat::from_rows(orbit, dm)).basis;
    if (span.nr > 0 && span.nr < r.nr) return span;
  }
  throw usage_error("no proper nonzero submodule of the rung at arity " +
                    std::to_string(k) + " turned up");
}

ClassificationReport check_quotient_tower(int N) {
  if (N < 5) throw usage_error("the quotient tower wants horizon 5 or more");
  auto as = build_as(N);
  ClassificationReport rep;
  rep.subject = as->name();

  auto sig = signature_of(*as, N);
  add(rep, "missing-linear-rung", sig[0] == 0,
      "signature " + num_list(sig) +
          "; quotient rungs sit inside these, so no quotient grows at "
          "exactly the linear rate");

  Mat r3 = trunc_component(*as, 3, 3);
  auto lines3 = one_dim_submodules(*as, r3, 3);
  add(rep, "simple-cubic-rung",
      r3.nr == 2 && lines3.first == 0 && lines3.second == 0,
      "rank " + std::to_string(r3.nr) + " with " +
          std::to_string(lines3.first) + " invariant and " +
          std::to_string(lines3.second) +
          " sign lines; a plane without lines is simple");

  Mat r4 = trunc_component(*as, 4, 4);
  add(rep, "arity-four-split", r4.nr == 9 && as->dim(4) - r4.nr == 15,
      "dimension " + std::to_string(as->dim(4)) + " = " +
          std::to_string(as->dim(4) - r4.nr) + " + " +
          std::to_string(r4.nr) + " over the fourth rung");

  Mat m = proper_submodule_of_rung(*as, 4);
  auto lines4 = one_dim_submodules(*as, m, 4);  // throws unless stable
  bool alt = subspace_equal(m, Mat::from_rows({phi(4)}, as->dim(4)));
  add(rep, "wedged-submodule", m.nr > 0 && m.nr < r4.nr,
      "rank " + std::to_string(m.nr) + " of " + std::to_string(r4.nr) +
          ", " + std::to_string(lines4.first) + " invariant and " +
          std::to_string(lines4.second) + " sign lines" +
          (alt ? "; the line through the alternating sum" : ""));
  if (!rep.ok) return rep;

  Ideal i5 = trunc_ideal(*as, 5);
  Ideal i4 = trunc_ideal(*as, 4);
  Ideal i4m = trunc_ideal_rel(*as, 4, m);
  bool chain = true;
  for (int n = 0; n <= N; n++)
    chain = chain && subspace_contains(i4m.comp[n], i5.comp[n]) &&
            subspace_contains(i4.comp[n], i4m.comp[n]);
  bool strict = i5.comp[5].nr < i4m.comp[5].nr &&
                i4m.comp[5].nr < i4.comp[5].nr;
  add(rep, "strict-tower", chain && strict,
      "arity-5 ranks " + std::to_string(i5.comp[5].nr) + " < " +
          std::to_string(i4m.comp[5].nr) + " < " +
          std::to_string(i4.comp[5].nr) +
          (chain ? "" : "; the chain containments fail"));
  if (!rep.ok) return rep;

  auto q5 = quotient_by_trunc(*as, 5, "As/^5U");
  // sound vanishing hint: the chain check put ^5U inside the ideal
  auto qm = quotient_operad(*as, i4m, "As/^4U^M", 5);
  auto c5 = growth_certificate(*q5);
  auto cm = growth_certificate(*qm);
  bool both = c5.value == 5 && cm.value == 5 &&
              c5.status == GrowthStatus::EXACT &&
              cm.status == GrowthStatus::EXACT;
  add(rep, "separated-quotients", both && c5.dims != cm.dims,
      "growth-5 certificates with dimensions " + num_list(c5.dims) +
          " against " + num_list(cm.dims));
  return rep;
}

}  // namespace operad
