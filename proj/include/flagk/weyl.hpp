#pragma once
// Type-A root and weight data and the Weyl group S_{n+1}: lengths, Bruhat
// order, coset representatives, reflection orders.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagk {

using i64 = std::int64_t;

// Element of P = Z^{n+1}/Z(1,...,1), stored as the unique representative with
// last coordinate 0.
struct Weight {
  std::vector<i64> c;

  Weight() = default;
  explicit Weight(std::vector<i64> coords) : c(std::move(coords)) { normalize(); }

  static Weight zero(int n) { return Weight(std::vector<i64>(n + 1, 0)); }

  // eps_i, 1 <= i <= n+1
  static Weight eps(int n, int i) {
    std::vector<i64> v(n + 1, 0);
    v.at(i - 1) = 1;
    return Weight(std::move(v));
  }

  // varpi_k = eps_1 + ... + eps_k, 1 <= k <= n
  static Weight fund(int n, int k) {
    std::vector<i64> v(n + 1, 0);
    for (int i = 0; i < k; ++i) v.at(i) = 1;
    return Weight(std::move(v));
  }

  int rank() const { return int(c.size()) - 1; }

  void normalize() {
    if (c.empty()) throw std::invalid_argument("Weight: empty coordinate vector");
    i64 last = c.back();
    if (last != 0)
      for (auto& x : c) x -= last;
  }

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; });
  }

  Weight operator+(const Weight& o) const {
    check_same(o);
    std::vector<i64> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i] + o.c[i];
    return Weight(std::move(v));
  }
  Weight operator-(const Weight& o) const {
    check_same(o);
    std::vector<i64> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i] - o.c[i];
    return Weight(std::move(v));
  }
  Weight operator-() const {
    std::vector<i64> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = -c[i];
    return Weight(std::move(v));
  }
  Weight operator*(i64 k) const {
    std::vector<i64> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = k * c[i];
    return Weight(std::move(v));
  }

  auto operator<=>(const Weight&) const = default;

 private:
  void check_same(const Weight& o) const {
    if (c.size() != o.c.size()) throw std::invalid_argument("Weight: rank mismatch");
  }
};

// Positive root alpha_{i,j} = eps_i - eps_{j+1}, 1 <= i <= j <= n.
struct Root {
  int i = 0, j = 0;

  Root() = default;
  Root(int i_, int j_) : i(i_), j(j_) {
    if (i < 1 || j < i) throw std::invalid_argument("Root: need 1 <= i <= j");
  }

  static Root simple(int i) { return Root(i, i); }
  static Root theta(int n) { return Root(1, n); }

  bool is_simple() const { return i == j; }

  Weight as_weight(int n) const { return Weight::eps(n, i) - Weight::eps(n, j + 1); }

  auto operator<=>(const Root&) const = default;
};

// Root with a sign, for images w(alpha) that may be negative.
struct SignedRoot {
  Root r;
  int sign = 1;  // +1 or -1
  auto operator<=>(const SignedRoot&) const = default;
};

// Element of the coroot lattice Q^vee in the simple-coroot basis.
struct Coroot {
  std::vector<i64> a;  // length n

  Coroot() = default;
  explicit Coroot(std::vector<i64> v) : a(std::move(v)) {}

  static Coroot zero(int n) { return Coroot(std::vector<i64>(n, 0)); }
  static Coroot simple(int n, int i) {
    Coroot x = zero(n);
    x.a.at(i - 1) = 1;
    return x;
  }
  // alpha_{i,j}^vee = alpha_i^vee + ... + alpha_j^vee
  static Coroot of_root(int n, const Root& r) {
    Coroot x = zero(n);
    for (int t = r.i; t <= r.j; ++t) x.a.at(t - 1) = 1;
    return x;
  }

  int rank() const { return int(a.size()); }

  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
  }
  bool is_nonneg() const {
    return std::all_of(a.begin(), a.end(), [](i64 x) { return x >= 0; });
  }
  // total height: sum of simple-coroot coefficients
  i64 height() const { return std::accumulate(a.begin(), a.end(), i64(0)); }

  Coroot operator+(const Coroot& o) const {
    std::vector<i64> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] + o.a[i];
    return Coroot(std::move(v));
  }
  Coroot operator-(const Coroot& o) const {
    std::vector<i64> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] - o.a[i];
    return Coroot(std::move(v));
  }
  Coroot operator-() const {
    std::vector<i64> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = -a[i];
    return Coroot(std::move(v));
  }
  Coroot operator*(i64 k) const {
    std::vector<i64> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = k * a[i];
    return Coroot(std::move(v));
  }

  auto operator<=>(const Coroot&) const = default;
};

// <nu, alpha_{i,j}^vee> = c_i - c_{j+1}; representative-independent.
inline i64 pairing(const Weight& nu, const Root& r) {
  return nu.c.at(r.i - 1) - nu.c.at(r.j);
}

inline i64 pairing(const Weight& nu, const Coroot& xi) {
  i64 s = 0;
  for (int t = 1; t <= xi.rank(); ++t) s += xi.a[t - 1] * (nu.c.at(t - 1) - nu.c.at(t));
  return s;
}

// Permutation in S_m, one-line notation, 1-based values.
struct Perm {
  std::vector<int> p;

  Perm() = default;
  explicit Perm(std::vector<int> images) : p(std::move(images)) {}

  static Perm identity(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }
  static Perm longest(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = m - i;
    return Perm(std::move(v));
  }
  // s_i = transposition (i, i+1)
  static Perm simple(int m, int i) {
    Perm w = identity(m);
    std::swap(w.p.at(i - 1), w.p.at(i));
    return w;
  }
  static Perm transposition(int m, int a, int b) {
    Perm w = identity(m);
    std::swap(w.p.at(a - 1), w.p.at(b - 1));
    return w;
  }
  // s_{alpha_{i,j}} = transposition (i, j+1)
  static Perm reflection(int m, const Root& r) { return transposition(m, r.i, r.j + 1); }

  int size() const { return int(p.size()); }
  int operator()(int i) const { return p.at(i - 1); }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  // (w*v)(i) = w(v(i))
  Perm operator*(const Perm& v) const {
    if (size() != v.size()) throw std::invalid_argument("Perm: size mismatch");
    std::vector<int> r(p.size());
    for (int i = 1; i <= size(); ++i) r[i - 1] = (*this)(v(i));
    return Perm(std::move(r));
  }

  Perm inv() const {
    std::vector<int> r(p.size());
    for (int i = 1; i <= size(); ++i) r[(*this)(i)-1] = i;
    return Perm(std::move(r));
  }

  auto operator<=>(const Perm&) const = default;
};

inline int length(const Perm& w) {
  int m = w.size(), cnt = 0;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (w(i) > w(j)) ++cnt;
  return cnt;
}

// w eps_i = eps_{w(i)}
inline Weight act(const Perm& w, const Weight& nu) {
  if (w.size() != int(nu.c.size())) throw std::invalid_argument("act: rank mismatch");
  std::vector<i64> v(nu.c.size());
  for (int i = 1; i <= w.size(); ++i) v[w(i) - 1] = nu.c[i - 1];
  return Weight(std::move(v));
}

// w alpha_{i,j} = eps_{w(i)} - eps_{w(j+1)} as a signed root.
inline SignedRoot act(const Perm& w, const Root& r) {
  int a = w(r.i), b = w(r.j + 1);
  if (a < b) return SignedRoot{Root(a, b - 1), +1};
  return SignedRoot{Root(b, a - 1), -1};
}

// Coroots transform like roots; computed through the Z^{n+1} embedding.
inline Coroot act(const Perm& w, const Coroot& xi) {
  int n = xi.rank();
  if (w.size() != n + 1) throw std::invalid_argument("act: rank mismatch");
  std::vector<i64> e(n + 1, 0);
  for (int t = 1; t <= n; ++t) {
    e[t - 1] += xi.a[t - 1];
    e[t] -= xi.a[t - 1];
  }
  std::vector<i64> f(n + 1, 0);
  for (int i = 1; i <= n + 1; ++i) f[w(i) - 1] = e[i - 1];
  std::vector<i64> a(n);
  i64 run = 0;
  for (int t = 1; t <= n; ++t) {
    run += f[t - 1];
    a[t - 1] = run;
  }
  return Coroot(std::move(a));
}

inline std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

// Positive roots of the standard parabolic with simple indices J.
inline std::vector<Root> positive_roots_J(int n, const std::vector<int>& J) {
  std::vector<bool> in(n + 2, false);
  for (int i : J) in.at(i) = true;
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      bool all = true;
      for (int t = i; t <= j; ++t)
        if (!in[t]) { all = false; break; }
      if (all) out.emplace_back(i, j);
    }
  return out;
}

// 2 rho_J as a weight (always integral).
inline Weight two_rho_J(int n, const std::vector<int>& J) {
  Weight s = Weight::zero(n);
  for (const Root& r : positive_roots_J(n, J)) s = s + r.as_weight(n);
  return s;
}

inline Weight two_rho(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return two_rho_J(n, all);
}

inline std::vector<Perm> all_elements(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Subgroup W_J: permutations moving points only within the blocks cut out by J.
inline std::vector<Perm> subgroup_WJ(int m, const std::vector<int>& J) {
  int n = m - 1;
  std::vector<bool> in(n + 2, false);
  for (int i : J) in.at(i) = true;
  // blocks of positions [b, e] glued by consecutive elements of J
  std::vector<std::pair<int, int>> blocks;
  int b = 1;
  while (b <= m) {
    int e = b;
    while (e <= n && in[e]) ++e;
    blocks.emplace_back(b, e);
    b = e + 1;
  }
  std::vector<Perm> out{Perm::identity(m)};
  for (auto [lo, hi] : blocks) {
    if (lo == hi) continue;
    std::vector<int> idx(hi - lo + 1);
    std::iota(idx.begin(), idx.end(), lo);
    std::vector<std::vector<int>> perms;
    std::vector<int> cur = idx;
    do perms.push_back(cur);
    while (std::next_permutation(cur.begin(), cur.end()));
    std::vector<Perm> next;
    next.reserve(out.size() * perms.size());
    for (const Perm& w : out)
      for (const auto& q : perms) {
        Perm x = w;
        for (int t = lo; t <= hi; ++t) x.p[t - 1] = w(q[t - lo]);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// w in W^J iff w alpha_i in Delta^+ for all i in J, i.e. w(i) < w(i+1).
inline bool is_min_rep(const Perm& w, const std::vector<int>& J) {
  for (int i : J)
    if (w(i) > w(i + 1)) return false;
  return true;
}

// Minimal-length representative of w W_J: sort values over each J-block.
inline Perm min_coset_rep(const Perm& w, const std::vector<int>& J) {
  int m = w.size(), n = m - 1;
  std::vector<bool> in(n + 2, false);
  for (int i : J) in.at(i) = true;
  Perm r = w;
  int b = 1;
  while (b <= m) {
    int e = b;
    while (e <= n && in[e]) ++e;
    if (e > b) std::sort(r.p.begin() + (b - 1), r.p.begin() + e);
    b = e + 1;
  }
  if (!is_min_rep(r, J)) throw std::logic_error("min_coset_rep: result fails (mcr) membership");
  return r;
}

inline std::vector<Perm> min_reps(int m, const std::vector<int>& J) {
  std::vector<Perm> out;
  for (const Perm& w : all_elements(m))
    if (is_min_rep(w, J)) out.push_back(w);
  return out;
}

inline Perm longest_WJ(int m, const std::vector<int>& J) {
  const Perm e = Perm::identity(m);
  Perm best = e;
  int bl = -1;
  for (const Perm& w : subgroup_WJ(m, J)) {
    int l = length(w);
    if (l > bl) { bl = l; best = w; }
  }
  return best;
}

// Standard dominance criterion for Bruhat order on S_m.
inline bool bruhat_leq(const Perm& v, const Perm& w) {
  int m = v.size();
  if (w.size() != m) throw std::invalid_argument("bruhat_leq: size mismatch");
  for (int i = 1; i <= m; ++i) {
    std::vector<int> a(v.p.begin(), v.p.begin() + i), b(w.p.begin(), w.p.begin() + i);
    std::sort(a.begin(), a.end(), std::greater<int>());
    std::sort(b.begin(), b.end(), std::greater<int>());
    for (int t = 0; t < i; ++t)
      if (a[t] > b[t]) return false;
  }
  return true;
}

inline bool bruhat_less(const Perm& v, const Perm& w) { return v != w && bruhat_leq(v, w); }

// One reduced word, built from right descents; w = s_{i_1} ... s_{i_N}.
inline std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> word;
  Perm x = w;
  int m = w.size();
  while (!x.is_identity()) {
    int d = 0;
    for (int i = 1; i <= m - 1; ++i)
      if (x(i) > x(i + 1)) { d = i; break; }
    if (d == 0) throw std::logic_error("reduced_word: no descent on non-identity");
    word.push_back(d);
    std::swap(x.p[d - 1], x.p[d]);  // x <- x s_d
  }
  std::reverse(word.begin(), word.end());
  return word;
}

// Up to `limit` distinct reduced words (all of them if limit == 0).
inline std::vector<std::vector<int>> all_reduced_words(const Perm& w, size_t limit = 0) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  int m = w.size();
  // build from the right: cur holds a suffix word
  auto rec = [&](auto&& self, const Perm& x) -> bool {
    if (x.is_identity()) {
      std::vector<int> word(cur.rbegin(), cur.rend());
      out.push_back(std::move(word));
      return limit != 0 && out.size() >= limit;
    }
    for (int i = 1; i <= m - 1; ++i)
      if (x(i) > x(i + 1)) {
        Perm y = x;
        std::swap(y.p[i - 1], y.p[i]);
        cur.push_back(i);
        bool stop = self(self, y);
        cur.pop_back();
        if (stop) return true;
      }
    return false;
  };
  rec(rec, w);
  return out;
}

inline Perm product_of_word(int m, const std::vector<int>& word) {
  Perm x = Perm::identity(m);
  for (int i : word) x = x * Perm::simple(m, i);
  return x;
}

inline bool is_reduced_word(int m, const std::vector<int>& word) {
  Perm x = product_of_word(m, word);
  return length(x) == int(word.size());
}

// Reflection order on Delta^+ from a reduced word of w_circ:
// beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}.
inline std::vector<Root> reflection_order(int m, const std::vector<int>& word) {
  int n = m - 1;
  if (int(word.size()) != n * (n + 1) / 2 || !is_reduced_word(m, word) ||
      product_of_word(m, word) != Perm::longest(m))
    throw std::invalid_argument("reflection_order: word is not a reduced word of the longest element");
  std::vector<Root> out;
  Perm pre = Perm::identity(m);
  for (int k = 0; k < int(word.size()); ++k) {
    SignedRoot b = act(pre, Root::simple(word[k]));
    if (b.sign != +1) throw std::logic_error("reflection_order: negative prefix label");
    out.push_back(b.r);
    pre = pre * Perm::simple(m, word[k]);
  }
  std::set<Root> distinct(out.begin(), out.end());
  if (int(distinct.size()) != n * (n + 1) / 2)
    throw std::logic_error("reflection_order: labels not distinct");
  return out;
}

// Convexity: whenever alpha + beta is a root, it lies between alpha and beta.
inline bool check_convex(int n, const std::vector<Root>& order) {
  std::map<Root, int> pos;
  for (int t = 0; t < int(order.size()); ++t) pos[order[t]] = t;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        // alpha_{i,j} + alpha_{j+1,k} = alpha_{i,k}
        int a = pos.at(Root(i, j)), b = pos.at(Root(j + 1, k)), c = pos.at(Root(i, k));
        if (!((a < c && c < b) || (b < c && c < a))) return false;
      }
  return true;
}

// N(w) = { alpha > 0 : w^{-1} alpha < 0 }; the labels of a reduced word of w
// enumerate exactly this set.
inline std::set<Root> inversion_set_N(const Perm& w) {
  int n = w.size() - 1;
  Perm wi = w.inv();
  std::set<Root> out;
  for (const Root& r : positive_roots(n))
    if (act(wi, r).sign < 0) out.insert(r);
  return out;
}

// Independent Bruhat-order oracle: the set {v : v <= w} as all products of
// subwords of one reduced word of w.
std::set<Perm> bruhat_lower_set(const Perm& w);

// Reduced word of w_circ whose labels put Delta_J^+ first (order (refa)).
inline std::vector<int> refa_word(int m, const std::vector<int>& J) {
  Perm wj = longest_WJ(m, J);
  std::vector<int> word = reduced_word(wj);
  for (int i : reduced_word(wj * Perm::longest(m))) word.push_back(i);
  return word;
}

// Reduced word of w_circ with label blocks Delta_J^+, then
// Delta^+ \ (Delta_J^+ u Delta_K^+), then Delta_K^+ (order (e2c)).
// Requires Delta_J^+ and Delta_K^+ disjoint.
inline std::vector<int> three_block_word(int m, const std::vector<int>& J, const std::vector<int>& K) {
  Perm w0 = Perm::longest(m);
  Perm wj = longest_WJ(m, J);
  Perm wk = longest_WJ(m, K);
  std::vector<int> word = reduced_word(wj);
  for (int i : reduced_word(wj * wk * w0)) word.push_back(i);
  for (int i : reduced_word(w0 * wk * w0)) word.push_back(i);
  return word;
}

// Block-membership validity for a three-block word; run, never assumed.
inline bool check_three_block(int m, const std::vector<int>& J, const std::vector<int>& K,
                              const std::vector<int>& word) {
  int n = m - 1;
  std::vector<Root> order = reflection_order(m, word);
  auto dj = positive_roots_J(n, J);
  auto dk = positive_roots_J(n, K);
  std::set<Root> sj(dj.begin(), dj.end()), sk(dk.begin(), dk.end());
  size_t a = sj.size(), c = sk.size(), total = order.size();
  for (size_t t = 0; t < total; ++t) {
    bool inj = sj.count(order[t]) > 0, ink = sk.count(order[t]) > 0;
    if (t < a && !inj) return false;
    if (t >= a && t < total - c && (inj || ink)) return false;
    if (t >= total - c && !ink) return false;
  }
  return check_convex(n, order);
}

}  // namespace flagk
