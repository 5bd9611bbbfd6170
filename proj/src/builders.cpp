#include "builders.hpp"

#include <algorithm>
#include <random>

#include "truncation.hpp"

namespace operad {

namespace {

void check_horizon(int N, bool allow_large) {
  if (N < 1) throw usage_error("horizon must be at least 1");
  if (N > 8 && !allow_large)
    throw usage_error("horizon " + std::to_string(N) +
                      " builds factorial-sized tables; pass the large-horizon "
                      "override to proceed");
}

}  // namespace

// ---- algebras and modules ----

void AugmentedAlgebra::validate() const {
  if (d < 0) throw usage_error("algebra dimension must be non-negative");
  if ((long)omega.size() != (long)d * d * d)
    throw usage_error("structure constant array must have d^3 entries");
  for (int i = 1; i <= d; i++)
    for (int j = 1; j <= d; j++)
      for (int k = 1; k <= d; k++)
        for (int w = 1; w <= d; w++) {
          Rat lhs = 0, rhs = 0;
          for (int v = 1; v <= d; v++) {
            lhs += at(i, j, v) * at(v, k, w);
            rhs += at(j, k, v) * at(i, v, w);
          }
          if (lhs != rhs)
            throw usage_error("structure constants are not associative at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              "," + std::to_string(k) + ")");
        }
}

AugmentedAlgebra truncated_polynomial_algebra(int d) {
  AugmentedAlgebra a;
  a.d = d;
  a.omega.assign((size_t)d * d * d, Rat(0));
  for (int i = 1; i <= d; i++)
    for (int j = 1; i + j <= d; j++) a.at(i, j, i + j) = 1;
  return a;
}

AugmentedAlgebra random_associative_algebra(int d, std::uint64_t seed) {
  AugmentedAlgebra base = truncated_polynomial_algebra(d);
  if (d <= 1) return base;
  // conjugate by a random product of integer shears; u and its inverse
  // are tracked together so the result stays exactly unimodular
  Mat u = Mat::identity(d), uinv = Mat::identity(d);
  std::mt19937_64 gen(seed);
  int ops = 2 * d * d;
  for (int step = 0; step < ops; step++) {
    int i = (int)(gen() % d);
    int j = (int)(gen() % (d - 1));
    if (j >= i) j++;
    Rat c((long)(1 + gen() % 2) * (gen() % 2 ? 1 : -1));
    for (int col = 0; col < d; col++) u.at(j, col) += c * u.at(i, col);
    for (int row = 0; row < d; row++) uinv.at(row, i) -= c * uinv.at(row, j);
  }
  AugmentedAlgebra out;
  out.d = d;
  out.omega.assign((size_t)d * d * d, Rat(0));
  for (int t = 1; t <= d; t++)
    for (int l = 1; l <= d; l++)
      for (int q = 1; q <= d; q++) {
        Rat acc = 0;
        for (int s = 1; s <= d; s++)
          for (int r = 1; r <= d; r++) {
            if (u.at(t - 1, s - 1) == 0 || u.at(l - 1, r - 1) == 0) continue;
            for (int v = 1; v <= d; v++)
              acc += u.at(t - 1, s - 1) * u.at(l - 1, r - 1) *
                     base.at(s, r, v) * uinv.at(v - 1, q - 1);
          }
        out.at(t, l, q) = acc;
      }
  out.validate();
  return out;
}

void SwModule::validate() const {
  if (w < 1 || d < 1) throw usage_error("module needs w >= 1 and d >= 1");
  if ((int)gens.size() != w - 1)
    throw usage_error("module needs w-1 generator matrices");
  for (const Mat &g : gens)
    if (g.nr != d || g.nc != d)
      throw usage_error("generator matrix must be d x d");
  Mat id = Mat::identity(d);
  for (int j = 0; j < w - 1; j++) {
    if (mat_mul(gens[j], gens[j]) != id)
      throw usage_error("generator " + std::to_string(j + 1) +
                        " is not an involution");
    if (j + 1 < w - 1) {
      Mat a = mat_mul(mat_mul(gens[j], gens[j + 1]), gens[j]);
      Mat b = mat_mul(mat_mul(gens[j + 1], gens[j]), gens[j + 1]);
      if (a != b)
        throw usage_error("braid relation fails at generator " +
                          std::to_string(j + 1));
    }
    for (int k = j + 2; k < w - 1; k++)
      if (mat_mul(gens[j], gens[k]) != mat_mul(gens[k], gens[j]))
        throw usage_error("distant generators " + std::to_string(j + 1) +
                          "," + std::to_string(k + 1) + " do not commute");
  }
}

Vec SwModule::act(const Vec &v, const Perm &s) const {
  if (s.n() != w) throw usage_error("module action arity mismatch");
  Vec cur = v;
  for (int j : adjacent_factorization(s)) cur = vec_mat(cur, gens[j - 1]);
  return cur;
}

SwModule trivial_sw_module(int w, int d) {
  SwModule m;
  m.w = w;
  m.d = d;
  for (int j = 0; j < w - 1; j++) m.gens.push_back(Mat::identity(d));
  return m;
}

SwModule sign_sw_module(int w) {
  SwModule m;
  m.w = w;
  m.d = 1;
  for (int j = 0; j < w - 1; j++) {
    Mat g(1, 1);
    g.at(0, 0) = -1;
    m.gens.push_back(std::move(g));
  }
  return m;
}

// ---- As ----

namespace {

class AsOperad final : public Operad {
 public:
  explicit AsOperad(int N) : Operad("As", N) {}

  int dim(int n) const override { return (int)factorial(n); }
  std::string label(int n, int a) const override {
    return perm_str(perm_unrank(n, a));
  }
  Vec compose_basis(int m, int i, int n, int a, int b) const override {
    check_compose_args(m, i, n);
    Perm s = perm_unrank(m, a), t = perm_unrank(n, b);
    std::vector<Perm> blocks(m, perm_identity(1));
    blocks[i - 1] = t;
    return basis_vec(dim(m + n - 1), (int)perm_rank(block_permutation(s, blocks)));
  }
  Vec act_gen_basis(int n, int a, int j) const override {
    std::vector<int> q(n);
    for (int t = 0; t < n; t++) q[t] = t + 1;
    std::swap(q[j - 1], q[j]);
    return act_basis(n, a, Perm{q});
  }
  Vec act_basis(int n, int a, const Perm &s) const override {
    check_arity(n);
    return basis_vec(dim(n), (int)perm_rank(perm_compose(perm_unrank(n, a), s)));
  }
  Vec unit_coords() const override { return basis_vec(1, 0); }
  std::optional<Vec> zero_unit_coords() const override {
    return basis_vec(1, 0);
  }
  std::optional<Vec> two_unit_coords() const override {
    if (max_arity() < 2) return {};
    return basis_vec(2, 0);
  }
  std::string kind() const override { return "as"; }
};

class ComOperad final : public Operad {
 public:
  explicit ComOperad(int N) : Operad("Com", N) {}
  int dim(int) const override { return 1; }
  std::string label(int, int) const override { return "1"; }
  Vec compose_basis(int m, int i, int n, int, int) const override {
    check_compose_args(m, i, n);
    return basis_vec(1, 0);
  }
  Vec act_gen_basis(int, int, int) const override { return basis_vec(1, 0); }
  Vec act_basis(int, int, const Perm &) const override {
    return basis_vec(1, 0);
  }
  Vec unit_coords() const override { return basis_vec(1, 0); }
  std::optional<Vec> zero_unit_coords() const override {
    return basis_vec(1, 0);
  }
  std::optional<Vec> two_unit_coords() const override {
    if (max_arity() < 2) return {};
    return basis_vec(1, 0);
  }
  std::optional<int> vanishing_index() const override { return 1; }
  std::string kind() const override { return "com"; }
};

class UniOperad final : public Operad {
 public:
  explicit UniOperad(int N) : Operad("Uni", N) {}
  int dim(int n) const override { return n <= 1 ? 1 : 0; }
  std::string label(int, int) const override { return "1"; }
  Vec compose_basis(int m, int i, int n, int, int) const override {
    check_compose_args(m, i, n);
    // only reachable with m = 1, n <= 1
    return basis_vec(dim(m + n - 1), 0);
  }
  Vec act_gen_basis(int n, int, int) const override {
    return zero_vec(dim(n));
  }
  Vec unit_coords() const override { return basis_vec(1, 0); }
  std::optional<Vec> zero_unit_coords() const override {
    return basis_vec(1, 0);
  }
  std::optional<int> vanishing_index() const override { return 1; }
  std::string kind() const override { return "uni"; }
};

// D(n) = k1_n ⊕ ⊕ kδ^n_{(i)j} and its chain suboperads: per arity an
// optional 1_n line followed by δ-lines (slot-major, then generator).
class DeltaOperad final : public Operad {
 public:
  DeltaOperad(std::string name, int N, AugmentedAlgebra a,
              std::vector<char> has_one, std::vector<std::vector<int>> gens,
              bool full)
      : Operad(std::move(name), N),
        a_(std::move(a)),
        has_one_(std::move(has_one)),
        gens_(std::move(gens)),
        full_(full) {
    gpos_.resize(gens_.size());
    for (size_t n = 0; n < gens_.size(); n++) {
      gpos_[n].assign(a_.d, -1);
      for (size_t r = 0; r < gens_[n].size(); r++)
        gpos_[n][gens_[n][r] - 1] = (int)r;
    }
  }

  int dim(int n) const override {
    return (has_one_[n] ? 1 : 0) + n * (int)gens_[n].size();
  }
  std::string label(int n, int a) const override {
    if (has_one_[n] && a == 0) return "1";
    auto [i, j] = decode(n, a);
    return "d(" + std::to_string(i) + ")" + std::to_string(j);
  }

  Vec compose_basis(int m, int i, int n, int a, int b) const override {
    check_compose_args(m, i, n);
    int tgt = m + n - 1;
    Vec r = zero_vec(dim(tgt));
    bool a_one = has_one_[m] && a == 0;
    bool b_one = has_one_[n] && b == 0;
    if (a_one && b_one) {
      r[0] = 1;  // 1_m o_i 1_n = 1_{m+n-1}
    } else if (a_one) {
      auto [k, l] = decode(n, b);
      r[encode(tgt, k + i - 1, l)] = 1;
    } else if (b_one) {
      auto [s, t] = decode(m, a);
      if (s < i) {
        r[encode(tgt, s, t)] = 1;
      } else if (s == i) {
        for (int h = i; h <= i + n - 1; h++) r[encode(tgt, h, t)] = 1;
      } else {
        r[encode(tgt, s + n - 1, t)] = 1;
      }
    } else {
      auto [s, t] = decode(m, a);
      auto [k, l] = decode(n, b);
      if (s == i)
        for (int v = 1; v <= a_.d; v++) {
          const Rat &c = a_.at(t, l, v);
          if (c != 0) r[encode(tgt, i + k - 1, v)] += c;
        }
    }
    return r;
  }

  Vec act_gen_basis(int n, int a, int j) const override {
    if (has_one_[n] && a == 0) return basis_vec(dim(n), 0);
    auto [i, t] = decode(n, a);
    int ni = i == j ? j + 1 : i == j + 1 ? j : i;
    return basis_vec(dim(n), encode(n, ni, t));
  }
  Vec act_basis(int n, int a, const Perm &s) const override {
    check_arity(n);
    if (has_one_[n] && a == 0) return basis_vec(dim(n), 0);
    auto [i, t] = decode(n, a);
    return basis_vec(dim(n), encode(n, s.seq[i - 1], t));
  }

  Vec unit_coords() const override { return basis_vec(dim(1), 0); }
  std::optional<Vec> zero_unit_coords() const override {
    return basis_vec(1, 0);
  }
  std::optional<Vec> two_unit_coords() const override {
    if (!full_ || max_arity() < 2) return {};
    return basis_vec(dim(2), 0);
  }
  std::optional<int> vanishing_index() const override {
    if (full_) return 2;
    return {};
  }
  std::string kind() const override { return full_ ? "d" : "d_chain"; }

 private:
  std::pair<int, int> decode(int n, int a) const {
    int idx = a - (has_one_[n] ? 1 : 0);
    int g = (int)gens_[n].size();
    return {idx / g + 1, gens_[n][idx % g]};
  }
  int encode(int n, int i, int j) const {
    int pos = gpos_[n][j - 1];
    if (pos < 0)
      throw usage_error("generator " + std::to_string(j) +
                        " escapes the chain at arity " + std::to_string(n));
    return (has_one_[n] ? 1 : 0) + (i - 1) * (int)gens_[n].size() + pos;
  }

  AugmentedAlgebra a_;
  std::vector<char> has_one_;
  std::vector<std::vector<int>> gens_;
  std::vector<std::vector<int>> gpos_;
  bool full_;
};

// Com-augmented operad carrying an S_w-module V across subsets: basis
// 1_n plus pairs (δ_t, I) with |I| = n - w, ordered t-major then I lex.
class SigOperad final : public Operad {
 public:
  SigOperad(std::string name, int w, SwModule v, int N)
      : Operad(std::move(name), N), w_(w), v_(std::move(v)) {
    subs_.resize(N + 1);
    for (int n = w_; n <= N; n++) subs_[n] = subsets_of_size(n, n - w_);
  }

  int dim(int n) const override {
    if (n < w_) return 1;
    return 1 + v_.d * (int)subs_[n].size();
  }
  std::string label(int n, int a) const override {
    if (a == 0) return "1";
    auto [t, I] = decode(n, a);
    return "d" + std::to_string(t) + subset_str(I);
  }

  Vec compose_basis(int m, int slot, int n, int a, int b) const override {
    check_compose_args(m, slot, n);
    int tgt = m + n - 1;
    Vec r = zero_vec(dim(tgt));
    if (a == 0 && b == 0) {
      r[0] = 1;
    } else if (a == 0) {
      auto [t, I] = decode(n, b);
      std::vector<int> nI;
      for (int x = 1; x <= slot - 1; x++) nI.push_back(x);
      for (int x : I) nI.push_back(x + slot - 1);
      for (int x = n + slot; x <= n + m - 1; x++) nI.push_back(x);
      std::sort(nI.begin(), nI.end());
      r[encode(tgt, t, nI)] = 1;
    } else if (b == 0) {
      auto [t, I] = decode(m, a);
      auto in_I = std::find(I.begin(), I.end(), slot) != I.end();
      if (in_I) {
        std::vector<int> nI;
        for (int x : I)
          if (x < slot) nI.push_back(x);
        for (int x = slot; x <= slot + n - 1; x++) nI.push_back(x);
        for (int x : I)
          if (x > slot) nI.push_back(x + n - 1);
        r[encode(tgt, t, nI)] = 1;
      } else {
        for (int u = 1; u <= n; u++) {
          std::vector<int> nI;
          for (int x : I)
            if (x < slot) nI.push_back(x);
          for (int x = slot; x <= slot + n - 1; x++)
            if (x != slot + u - 1) nI.push_back(x);
          for (int x : I)
            if (x > slot) nI.push_back(x + n - 1);
          r[encode(tgt, t, nI)] += 1;
        }
      }
    }
    // two module elements compose to zero
    return r;
  }

  Vec act_gen_basis(int n, int a, int j) const override {
    std::vector<int> q(n);
    for (int t = 0; t < n; t++) q[t] = t + 1;
    std::swap(q[j - 1], q[j]);
    return act_basis(n, a, Perm{q});
  }
  Vec act_basis(int n, int a, const Perm &s) const override {
    check_arity(n);
    if (a == 0) return basis_vec(dim(n), 0);
    auto [t, I] = decode(n, a);
    std::vector<int> J = preimage_set(s, I);
    Perm rho = perm_restrict(s, complement_set(n, J));
    Vec moved = v_.act(basis_vec(v_.d, t - 1), rho);
    Vec r = zero_vec(dim(n));
    for (int tt = 1; tt <= v_.d; tt++)
      if (moved[tt - 1] != 0) r[encode(n, tt, J)] += moved[tt - 1];
    return r;
  }

  Vec unit_coords() const override { return basis_vec(dim(1), 0); }
  std::optional<Vec> zero_unit_coords() const override {
    return basis_vec(1, 0);
  }
  std::optional<Vec> two_unit_coords() const override {
    if (max_arity() < 2) return {};
    return basis_vec(dim(2), 0);
  }
  std::optional<int> vanishing_index() const override { return w_ + 1; }
  std::string kind() const override { return "signature"; }

 private:
  std::pair<int, std::vector<int>> decode(int n, int a) const {
    int c = (int)subs_[n].size();
    int idx = a - 1;
    return {idx / c + 1, subs_[n][idx % c]};
  }
  int encode(int n, int t, const std::vector<int> &I) const {
    return 1 + (t - 1) * (int)subs_[n].size() + (int)subset_rank(n, I);
  }

  int w_;
  SwModule v_;
  std::vector<std::vector<std::vector<int>>> subs_;
};

class HadamardOperad final : public Operad {
 public:
  HadamardOperad(OperadPtr p, OperadPtr q)
      : Operad(p->name() + "*" + q->name(), p->max_arity()),
        p_(std::move(p)),
        q_(std::move(q)) {}

  int dim(int n) const override { return p_->dim(n) * q_->dim(n); }
  std::string label(int n, int a) const override {
    return p_->label(n, a / q_->dim(n)) + "*" + q_->label(n, a % q_->dim(n));
  }
  Vec compose_basis(int m, int i, int n, int a, int b) const override {
    Vec xp = p_->compose_basis(m, i, n, a / q_->dim(m), b / q_->dim(n));
    Vec xq = q_->compose_basis(m, i, n, a % q_->dim(m), b % q_->dim(n));
    return tensor(m + n - 1, xp, xq);
  }
  Vec act_gen_basis(int n, int a, int j) const override {
    return tensor(n, p_->act_gen_basis(n, a / q_->dim(n), j),
                  q_->act_gen_basis(n, a % q_->dim(n), j));
  }
  Vec act_basis(int n, int a, const Perm &s) const override {
    return tensor(n, p_->act_basis(n, a / q_->dim(n), s),
                  q_->act_basis(n, a % q_->dim(n), s));
  }
  Vec unit_coords() const override {
    return tensor(1, p_->unit_coords(), q_->unit_coords());
  }
  std::optional<Vec> zero_unit_coords() const override {
    auto zp = p_->zero_unit_coords(), zq = q_->zero_unit_coords();
    if (!zp || !zq) return {};
    return tensor(0, *zp, *zq);
  }
  std::optional<Vec> two_unit_coords() const override {
    if (max_arity() < 2) return {};
    auto tp = p_->two_unit_coords(), tq = q_->two_unit_coords();
    if (!tp || !tq) return {};
    return tensor(2, *tp, *tq);
  }
  std::string kind() const override { return "hadamard"; }

 private:
  Vec tensor(int n, const Vec &x, const Vec &y) const {
    Vec r = zero_vec(dim(n));
    for (size_t cp = 0; cp < x.size(); cp++) {
      if (x[cp] == 0) continue;
      for (size_t cq = 0; cq < y.size(); cq++)
        if (y[cq] != 0) r[cp * y.size() + cq] = x[cp] * y[cq];
    }
    return r;
  }

  OperadPtr p_, q_;
};

// Uni ⊕ M: module lines at arity w with every module-by-module and
// module-by-1_0 composition equal to zero.
class UniPlusMOperad final : public Operad {
 public:
  UniPlusMOperad(int w, SwModule v, int N)
      : Operad("Uni+M(" + std::to_string(w) + "," + std::to_string(v.d) + ")",
               N),
        w_(w),
        v_(std::move(v)) {}

  int dim(int n) const override {
    if (n == 0) return 1;
    if (n == 1) return 1 + (w_ == 1 ? v_.d : 0);
    return n == w_ ? v_.d : 0;
  }
  std::string label(int n, int a) const override {
    if (n <= 1 && a == 0) return "1";
    int t = n == 1 ? a : a + 1;
    return "m" + std::to_string(t);
  }

  Vec compose_basis(int m, int i, int n, int a, int b) const override {
    check_compose_args(m, i, n);
    int tgt = m + n - 1;
    bool a_one = m == 1 && a == 0;
    bool b_one = n == 1 && b == 0;
    if (a_one) return basis_vec(dim(tgt), b);
    if (b_one) return basis_vec(dim(tgt), a);
    // module with module, or module with 1_0
    return zero_vec(dim(tgt));
  }

  Vec act_gen_basis(int n, int a, int j) const override {
    if (n == w_ && w_ >= 2) return v_.gens[j - 1].row(a);
    return basis_vec(dim(n), a);
  }

  Vec unit_coords() const override { return basis_vec(dim(1), 0); }
  std::optional<Vec> zero_unit_coords() const override {
    return basis_vec(1, 0);
  }
  std::optional<int> vanishing_index() const override { return w_ + 1; }
  std::string kind() const override { return "uni_plus_m"; }

 private:
  int w_;
  SwModule v_;
};

// Com ⊕ ⊔ ker(ε_i): block composition inside each summand, zero across.
class ComSumOperad final : public Operad {
 public:
  ComSumOperad(std::string name, std::string kind,
               std::vector<OperadPtr> blocks)
      : Operad(std::move(name), blocks.at(0)->max_arity()),
        kind_(std::move(kind)),
        blocks_(std::move(blocks)) {
    int N = max_arity();
    for (const auto &b : blocks_) {
      if (b->max_arity() != N) throw usage_error("summand horizon mismatch");
      std::string why;
      if (!is_com_augmented(*b, &why))
        throw usage_error(b->name() + " is not Com-augmented: " + why);
    }
    int r = (int)blocks_.size();
    u_.resize(r);
    tower_.resize(r);
    off_.assign(N + 1, std::vector<int>(r + 1, 1));
    for (int i = 0; i < r; i++) {
      const Operad &b = *blocks_[i];
      auto tu = find_two_unit(b);
      tower_[i].resize(N + 1);
      tower_[i][0] = *b.zero_unit_coords();
      tower_[i][1] = b.unit_coords();
      if (N >= 2) tower_[i][2] = tu->coords;
      for (int n = 3; n <= N; n++)
        tower_[i][n] = compose(b, 2, 1, n - 1, tu->coords, tower_[i][n - 1]);
      u_[i].resize(N + 1);
      for (int n = 0; n <= N; n++) {
        u_[i][n] = rref(kernel_of_map(pi_matrix(b, n, {})));
        off_[n][i + 1] = off_[n][i] + u_[i][n].rank();
      }
    }
  }

  int dim(int n) const override { return off_[n].back(); }
  std::string label(int n, int a) const override {
    if (a == 0) return "1";
    auto [i, row] = split(n, a);
    return "u" + std::to_string(i + 1) + "." + std::to_string(row);
  }

  Vec compose_basis(int m, int slot, int n, int a, int b) const override {
    check_compose_args(m, slot, n);
    int tgt = m + n - 1;
    if (a == 0 && b == 0) return basis_vec(dim(tgt), 0);
    if (a != 0 && b != 0) {
      auto [ia, ra] = split(m, a);
      auto [ib, rb] = split(n, b);
      if (ia != ib) return zero_vec(dim(tgt));
      return embed(tgt, ia,
                   compose(*blocks_[ia], m, slot, n, u_[ia][m].basis.row(ra),
                           u_[ia][n].basis.row(rb)));
    }
    if (a == 0) {
      auto [i, row] = split(n, b);
      return embed(tgt, i,
                   compose(*blocks_[i], m, slot, n, tower_[i][m],
                           u_[i][n].basis.row(row)));
    }
    auto [i, row] = split(m, a);
    return embed(tgt, i,
                 compose(*blocks_[i], m, slot, n, u_[i][m].basis.row(row),
                         tower_[i][n]));
  }

  Vec act_gen_basis(int n, int a, int j) const override {
    if (a == 0) return basis_vec(dim(n), 0);
    auto [i, row] = split(n, a);
    const Operad &b = *blocks_[i];
    Vec v = u_[i][n].basis.row(row);
    Vec w = zero_vec(b.dim(n));
    for (int c = 0; c < b.dim(n); c++)
      if (v[c] != 0) axpy(w, v[c], b.act_gen_basis(n, c, j));
    return embed(n, i, w);
  }

  Vec unit_coords() const override { return basis_vec(dim(1), 0); }
  std::optional<Vec> zero_unit_coords() const override {
    return basis_vec(dim(0), 0);
  }
  std::optional<Vec> two_unit_coords() const override {
    if (max_arity() < 2) return {};
    return basis_vec(dim(2), 0);
  }
  std::optional<int> vanishing_index() const override {
    int v = 1;
    for (const auto &b : blocks_) {
      auto bv = b->vanishing_index();
      if (!bv) return {};
      v = std::max(v, *bv);
    }
    return v;
  }
  std::string kind() const override { return kind_; }

 private:
  std::pair<int, int> split(int n, int a) const {
    int i = 0;
    while (a >= off_[n][i + 1]) i++;
    return {i, a - off_[n][i]};
  }
  // express a kernel element of block i in sum coordinates
  Vec embed(int n, int i, const Vec &w) const {
    auto c = coords_in(w, u_[i][n]);
    if (!c)
      throw usage_error("composition escaped the augmentation kernel in " +
                        blocks_[i]->name());
    Vec r = zero_vec(dim(n));
    for (size_t t = 0; t < c->size(); t++) r[off_[n][i] + t] = (*c)[t];
    return r;
  }

  std::string kind_;
  std::vector<OperadPtr> blocks_;
  std::vector<std::vector<Rref>> u_;
  std::vector<std::vector<Vec>> tower_;
  std::vector<std::vector<int>> off_;
};

std::string join_longs(const std::vector<long> &xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); i++) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

// ---- entry points ----

OperadPtr build_as(int N, bool allow_large) {
  check_horizon(N, allow_large);
  return std::make_shared<AsOperad>(N);
}

OperadPtr build_com(int N, bool allow_large) {
  check_horizon(N, allow_large);
  return std::make_shared<ComOperad>(N);
}

OperadPtr build_uni(int N, bool allow_large) {
  check_horizon(N, allow_large);
  return std::make_shared<UniOperad>(N);
}

OperadPtr build_d(const AugmentedAlgebra &a, int N, bool allow_large,
                  const std::optional<std::vector<std::vector<int>>> &chain) {
  check_horizon(N, allow_large);
  if (a.d < 0) throw usage_error("algebra dimension must be nonnegative");
  a.validate();  // d = 0 is the zero algebra and yields the Com tower
  std::vector<char> has_one(N + 1, 1);
  std::vector<std::vector<int>> gens(N + 1);
  std::vector<int> all(a.d);
  for (int j = 0; j < a.d; j++) all[j] = j + 1;
  for (int n = 1; n <= N; n++) gens[n] = all;
  if (!chain) {
    return std::make_shared<DeltaOperad>("D", N, a, std::move(has_one),
                                         std::move(gens), true);
  }
  if ((int)chain->size() != std::max(0, N - 1))
    throw usage_error("chain needs one subset per arity 2.." +
                      std::to_string(N));
  std::vector<std::vector<int>> t(N + 1);
  t[1] = all;
  for (int alpha = 2; alpha <= N; alpha++) {
    t[alpha] = (*chain)[alpha - 2];
    int prev = 0;
    for (int x : t[alpha]) {
      if (x <= prev || x > a.d)
        throw usage_error("chain subset at arity " + std::to_string(alpha) +
                          " is not a sorted subset of 1.." +
                          std::to_string(a.d));
      prev = x;
    }
    if (alpha > 2 &&
        !std::includes(t[alpha - 1].begin(), t[alpha - 1].end(),
                       t[alpha].begin(), t[alpha].end()))
      throw usage_error("chain is not descending at arity " +
                        std::to_string(alpha));
  }
  for (int alpha = 1; alpha <= N; alpha++)
    for (int beta = 1; alpha + beta - 1 <= N; beta++) {
      if (alpha == 1 && beta == 1) continue;
      std::vector<char> ok(a.d, 0);
      for (int v : t[alpha + beta - 1]) ok[v - 1] = 1;
      for (int x : t[alpha])
        for (int y : t[beta])
          for (int v = 1; v <= a.d; v++)
            if (!ok[v - 1] && a.at(x, y, v) != 0)
              throw usage_error(
                  "chain does not absorb products: generators " +
                  std::to_string(x) + "," + std::to_string(y) +
                  " at arities " + std::to_string(alpha) + "," +
                  std::to_string(beta) + " hit generator " +
                  std::to_string(v));
    }
  for (int n = 2; n <= N; n++) {
    has_one[n] = 0;
    gens[n] = t[n];
  }
  return std::make_shared<DeltaOperad>("D^I", N, a, std::move(has_one),
                                       std::move(gens), false);
}

OperadPtr build_signature_operad(int w, const SwModule &v, int N,
                                 bool allow_large) {
  check_horizon(N, allow_large);
  if (w < 1) throw usage_error("signature position must be at least 1");
  if (w > N) throw usage_error("signature position beyond the horizon");
  if (v.w != w) throw usage_error("module symmetry degree must equal w");
  v.validate();
  return std::make_shared<SigOperad>(
      "Sig(" + std::to_string(w) + ";" + std::to_string(v.d) + ")", w, v, N);
}

OperadPtr com_augmented_sum(const std::vector<OperadPtr> &blocks) {
  if (blocks.empty()) throw usage_error("sum needs at least one summand");
  std::string name = "sum(";
  for (size_t i = 0; i < blocks.size(); i++) {
    if (i) name += ",";
    name += blocks[i]->name();
  }
  name += ")";
  return std::make_shared<ComSumOperad>(std::move(name), "com_sum", blocks);
}

OperadPtr build_from_signature(const std::vector<long> &sig, int N,
                               bool allow_large) {
  check_horizon(N, allow_large);
  for (int w = 1; w <= (int)sig.size(); w++) {
    if (sig[w - 1] < 0) throw usage_error("signature entries must be >= 0");
    if (sig[w - 1] > 0 && w > N)
      throw usage_error("signature entry at position " + std::to_string(w) +
                        " lies beyond the horizon");
  }
  std::vector<OperadPtr> blocks;
  for (int w = 1; w <= (int)sig.size() && w <= N; w++) {
    if (sig[w - 1] > 0)
      blocks.push_back(build_signature_operad(
          w, trivial_sw_module(w, (int)sig[w - 1]), N, allow_large));
  }
  if (blocks.empty()) return build_com(N, allow_large);
  return std::make_shared<ComSumOperad>(
      "from_signature(" + join_longs(sig) + ")", "from_signature", blocks);
}

OperadPtr unitary_from_signature(const std::vector<long> &sig, int N,
                                 bool allow_large) {
  check_horizon(N, allow_large);
  OperadPtr q = build_from_signature(sig, N, allow_large);
  std::vector<Rref> basis(N + 1);
  basis[0] = rref(Mat::identity(q->dim(0)));
  if (N >= 1) basis[1] = rref(Mat::identity(q->dim(1)));
  for (int n = 2; n <= N; n++) basis[n] = rref(trunc_component(*q, n, n));
  std::vector<int> dims(N + 1);
  for (int n = 0; n <= N; n++) dims[n] = basis[n].rank();
  auto b = std::make_shared<TableOperad>(
      "unitary_from_signature(" + join_longs(sig) + ")", N, dims);
  b->set_kind("unitary_from_signature");
  for (int n = 0; n <= N; n++) {
    std::vector<std::string> labels(dims[n]);
    for (int a = 0; a < dims[n]; a++)
      labels[a] = n <= 1 ? q->label(n, basis[n].pivots[a])
                         : "u" + std::to_string(a);
    b->set_labels(n, std::move(labels));
    for (int j = 1; j < n; j++) {
      Mat g(dims[n], dims[n]);
      for (int a = 0; a < dims[n]; a++) {
        Vec v = basis[n].basis.row(a);
        Vec w = zero_vec(q->dim(n));
        for (int c = 0; c < q->dim(n); c++)
          if (v[c] != 0) axpy(w, v[c], q->act_gen_basis(n, c, j));
        auto cc = coords_in(w, basis[n]);
        if (!cc) throw usage_error("action escaped the suboperad");
        g.set_row(a, *cc);
      }
      b->set_act_gen(n, j, std::move(g));
    }
  }
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++) {
        Mat table(dims[m] * dims[n], dims[m + n - 1]);
        for (int aa = 0; aa < dims[m]; aa++)
          for (int bb = 0; bb < dims[n]; bb++) {
            Vec w = compose(*q, m, i, n, basis[m].basis.row(aa),
                            basis[n].basis.row(bb));
            auto cc = coords_in(w, basis[m + n - 1]);
            if (!cc) throw usage_error("composition escaped the suboperad");
            table.set_row(aa * dims[n] + bb, *cc);
          }
        b->set_table(m, i, n, std::move(table));
      }
  b->set_unit(*coords_in(q->unit_coords(), basis[1]));
  b->set_zero_unit(*coords_in(*q->zero_unit_coords(), basis[0]));
  int top = 0;
  for (int w = 1; w <= (int)sig.size() && w <= N; w++)
    if (sig[w - 1] > 0) top = w;
  b->set_vanishing_index(top + 1);
  return b;
}

OperadPtr hadamard(OperadPtr p, OperadPtr q) {
  if (p->max_arity() != q->max_arity())
    throw usage_error("Hadamard factors must share the horizon");
  return std::make_shared<HadamardOperad>(std::move(p), std::move(q));
}

OperadPtr build_uni_plus_m(int w, const SwModule &v, int N, bool allow_large) {
  check_horizon(N, allow_large);
  if (w < 1) throw usage_error("module arity must be at least 1");
  if (w > N) throw usage_error("module arity beyond the horizon");
  if (v.w != w) throw usage_error("module symmetry degree must equal w");
  v.validate();
  return std::make_shared<UniPlusMOperad>(w, v, N);
}

Vec phi(int n) {
  if (n < 1) throw usage_error("alternating sum needs arity >= 1");
  Vec r = zero_vec((int)factorial(n));
  for (long a = 0; a < factorial(n); a++)
    r[a] = perm_sign(perm_unrank(n, a));
  return r;
}

bool is_com_augmented(const Operad &p, std::string *why) {
  auto fail = [&](const std::string &msg) {
    if (why) *why = msg;
    return false;
  };
  int N = p.max_arity();
  if (p.dim(0) != 1) return fail("component at arity 0 is not a line");
  auto z = p.zero_unit_coords();
  if (!z || is_zero_vec(*z)) return fail("no 0-unit");
  std::vector<Vec> tower(N + 1);
  tower[0] = *z;
  tower[1] = p.unit_coords();
  if (N >= 2) {
    auto tu = find_two_unit(p);
    if (!tu) return fail("no 2-unit");
    if (!check_2a(p, tu->coords)) return fail("2-unit is not associative");
    tower[2] = tu->coords;
    for (int n = 3; n <= N; n++)
      tower[n] = compose(p, 2, 1, n - 1, tu->coords, tower[n - 1]);
  }
  for (int n = 2; n <= N; n++)
    for (int j = 1; j < n; j++) {
      Vec w = zero_vec(p.dim(n));
      for (int a = 0; a < p.dim(n); a++)
        if (tower[n][a] != 0) axpy(w, tower[n][a], p.act_gen_basis(n, a, j));
      if (w != tower[n])
        return fail("1_" + std::to_string(n) + " is not fixed by s_" +
                    std::to_string(j));
    }
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++)
        if (compose(p, m, i, n, tower[m], tower[n]) != tower[m + n - 1])
          return fail("unit tower is not multiplicative at (" +
                      std::to_string(m) + "," + std::to_string(i) + "," +
                      std::to_string(n) + ")");
  std::vector<Vec> eps(N + 1);
  for (int n = 0; n <= N; n++) {
    Mat pim = pi_matrix(p, n, {});
    eps[n] = Vec(p.dim(n));
    for (int a = 0; a < p.dim(n); a++) eps[n][a] = pim.at(a, 0) / (*z)[0];
    Rat e1 = 0;
    for (int a = 0; a < p.dim(n); a++) e1 += tower[n][a] * eps[n][a];
    if (e1 != 1)
      return fail("augmentation of 1_" + std::to_string(n) + " is not 1");
  }
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++)
        for (int a = 0; a < p.dim(m); a++)
          for (int b = 0; b < p.dim(n); b++) {
            Vec w = p.compose_basis(m, i, n, a, b);
            Rat ew = 0;
            for (int c = 0; c < p.dim(m + n - 1); c++)
              if (w[c] != 0) ew += w[c] * eps[m + n - 1][c];
            if (ew != eps[m][a] * eps[n][b])
              return fail("augmentation is not multiplicative at (" +
                          std::to_string(m) + "," + std::to_string(i) + "," +
                          std::to_string(n) + ") on " + p.label(m, a) + ", " +
                          p.label(n, b));
          }
  return true;
}

}  // namespace operad
