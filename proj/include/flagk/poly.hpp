#pragma once
// The group algebra Z[P], Demazure operators, E/H symmetric elements,
// truncated Novikov series, fractions, and a 61-bit prime field for
// probabilistic identity checks.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "flagk/weyl.hpp"

namespace flagk {

// Element of Z[P]: finite map (canonical weight) -> nonzero integer.
struct GroupAlg {
  std::map<Weight, mpz_class> t;

  GroupAlg() = default;

  static GroupAlg zero() { return GroupAlg(); }
  static GroupAlg one(int n) { return monomial(Weight::zero(n)); }
  static GroupAlg monomial(const Weight& w, const mpz_class& c = 1) {
    GroupAlg f;
    if (c != 0) f.t.emplace(w, c);
    return f;
  }

  bool is_zero() const { return t.empty(); }

  void add_term(const Weight& w, const mpz_class& c) {
    if (c == 0) return;
    auto it = t.find(w);
    if (it == t.end()) {
      t.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  GroupAlg operator+(const GroupAlg& o) const {
    GroupAlg r = *this;
    for (const auto& [w, c] : o.t) r.add_term(w, c);
    return r;
  }
  GroupAlg operator-(const GroupAlg& o) const {
    GroupAlg r = *this;
    for (const auto& [w, c] : o.t) r.add_term(w, -c);
    return r;
  }
  GroupAlg operator-() const {
    GroupAlg r;
    for (const auto& [w, c] : t) r.t.emplace(w, -c);
    return r;
  }
  GroupAlg operator*(const GroupAlg& o) const {
    GroupAlg r;
    for (const auto& [w1, c1] : t)
      for (const auto& [w2, c2] : o.t) r.add_term(w1 + w2, c1 * c2);
    return r;
  }
  GroupAlg operator*(const mpz_class& k) const {
    GroupAlg r;
    if (k == 0) return r;
    for (const auto& [w, c] : t) r.t.emplace(w, c * k);
    return r;
  }

  bool operator==(const GroupAlg& o) const { return t == o.t; }

  // e^nu -> e^{w nu}
  GroupAlg apply(const Perm& w) const {
    GroupAlg r;
    for (const auto& [wt, c] : t) r.add_term(act(w, wt), c);
    return r;
  }

  // gcd of all integer coefficients (0 for the zero element)
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& [w, c] : t) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  bool is_monomial() const { return t.size() == 1; }
};

inline GroupAlg e_nu(const Weight& w) { return GroupAlg::monomial(w); }

// ----- exact division in Z[P] -------------------------------------------------

namespace detail {
// Strip the (always zero) last coordinate and shift so all exponents are >= 0;
// returns the per-coordinate shift applied.
using ExpMap = std::map<std::vector<i64>, mpz_class>;

inline std::pair<ExpMap, std::vector<i64>> to_poly(const GroupAlg& f) {
  ExpMap m;
  std::vector<i64> shift;
  if (f.is_zero()) return {m, shift};
  int n = f.t.begin()->first.rank();
  shift.assign(n, 0);
  bool first = true;
  for (const auto& [w, c] : f.t) {
    for (int i = 0; i < n; ++i)
      shift[i] = first ? w.c[i] : std::min(shift[i], w.c[i]);
    first = false;
  }
  for (const auto& [w, c] : f.t) {
    std::vector<i64> e(n);
    for (int i = 0; i < n; ++i) e[i] = w.c[i] - shift[i];
    m.emplace(std::move(e), c);
  }
  return {m, shift};
}
}  // namespace detail

// Exact division num / den in Z[P]; nullopt if den does not divide num.
inline std::optional<GroupAlg> divexact(const GroupAlg& num, const GroupAlg& den) {
  if (den.is_zero()) throw std::invalid_argument("divexact: division by zero");
  if (num.is_zero()) return GroupAlg::zero();
  int n = num.t.begin()->first.rank();
  auto pg = detail::to_poly(num);
  auto pd = detail::to_poly(den);
  detail::ExpMap r = pg.first;
  const detail::ExpMap& d = pd.first;
  // lex-leading term of the divisor (std::map is lex-ordered; use rbegin)
  const auto& dl = *d.rbegin();
  detail::ExpMap q;
  while (!r.empty()) {
    const auto& rl = *r.rbegin();
    std::vector<i64> diff(n);
    for (int i = 0; i < n; ++i) {
      diff[i] = rl.first[i] - dl.first[i];
      if (diff[i] < 0) return std::nullopt;  // monomial not divisible
    }
    mpz_class qc, rem;
    mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rl.second.get_mpz_t(), dl.second.get_mpz_t());
    if (rem != 0) return std::nullopt;  // coefficient not divisible
    q.emplace(diff, qc);
    for (const auto& [e, c] : d) {
      std::vector<i64> s(n);
      for (int i = 0; i < n; ++i) s[i] = e[i] + diff[i];
      auto it = r.find(s);
      mpz_class nc = (it == r.end() ? mpz_class(0) : it->second) - c * qc;
      if (it != r.end()) r.erase(it);
      if (nc != 0) r.emplace(std::move(s), std::move(nc));
    }
  }
  // un-shift: quotient exponents + (shift_num - shift_den), then canonicalize
  GroupAlg out;
  for (const auto& [e, c] : q) {
    std::vector<i64> w(n + 1, 0);
    for (int i = 0; i < n; ++i) w[i] = e[i] + pg.second[i] - pd.second[i];
    out.add_term(Weight(std::move(w)), c);
  }
  return out;
}

// ----- Demazure operators ------------------------------------------------------

// Closed form by c = <nu, alpha_i^vee>:
//   c <= 0 : sum_{j=0}^{-c} e^{nu + j alpha_i}
//   c == 1 : 0
//   c >= 2 : -sum_{j=1}^{c-1} e^{nu - j alpha_i}
inline GroupAlg demazure(int i, const GroupAlg& f) {
  GroupAlg out;
  for (const auto& [nu, c0] : f.t) {
    int n = nu.rank();
    Weight ai = Root::simple(i).as_weight(n);
    i64 c = pairing(nu, Root::simple(i));
    if (c <= 0) {
      for (i64 j = 0; j <= -c; ++j) out.add_term(nu + ai * j, c0);
    } else if (c >= 2) {
      for (i64 j = 1; j <= c - 1; ++j) out.add_term(nu - ai * j, -c0);
    }
  }
  return out;
}

// Ratio form (f - e^{alpha_i} s_i f) / (1 - e^{alpha_i}), by exact division.
inline GroupAlg demazure_ratio(int i, const GroupAlg& f) {
  if (f.is_zero()) return f;
  int n = f.t.begin()->first.rank();
  Weight ai = Root::simple(i).as_weight(n);
  GroupAlg num = f - e_nu(ai) * f.apply(Perm::simple(n + 1, i));
  GroupAlg den = GroupAlg::one(n) - e_nu(ai);
  auto q = divexact(num, den);
  if (!q) throw std::logic_error("demazure_ratio: division not exact");
  return *q;
}

// Lemma (leib1): D_i(e^nu e^mu) = ((e^nu - e^{s_i nu})/(1-e^{alpha_i})) e^mu
//                + e^{s_i nu} D_i(e^mu), checked exactly.
inline bool demazure_leibniz_check(int i, const Weight& nu, const Weight& mu) {
  int n = nu.rank();
  Perm si = Perm::simple(n + 1, i);
  Weight ai = Root::simple(i).as_weight(n);
  GroupAlg lhs = demazure(i, e_nu(nu + mu));
  GroupAlg num = e_nu(nu) - e_nu(act(si, nu));
  auto frac = divexact(num, GroupAlg::one(n) - e_nu(ai));
  if (!frac) return false;  // e^nu - e^{s_i nu} is always divisible by 1 - e^{alpha_i}
  GroupAlg rhs = *frac * e_nu(mu) + e_nu(act(si, nu)) * demazure(i, e_nu(mu));
  return lhs == rhs;
}

// ----- symmetric elements E and H ---------------------------------------------

// E^{n+1}_l = sum_{|J| = l} e^{-eps_J}
inline GroupAlg elementary_E(int n, int l) {
  if (l < 0 || l > n + 1) throw std::out_of_range("elementary_E: 0 <= l <= n+1");
  GroupAlg out;
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start, int need) -> void {
    if (need == 0) {
      Weight w = Weight::zero(n);
      for (int j : idx) w = w - Weight::eps(n, j);
      out.add_term(w, 1);
      return;
    }
    for (int j = start; j <= n + 1 - need + 1; ++j) {
      idx.push_back(j);
      self(self, j + 1, need - 1);
      idx.pop_back();
    }
  };
  rec(rec, 1, l);
  return out;
}

// H^m_k: complete homogeneous of degree k in e^{-eps_1}, ..., e^{-eps_m}
inline GroupAlg complete_H(int n, int m, int k) {
  if (m < 1 || m > n + 1 || k < 0) throw std::out_of_range("complete_H: bad indices");
  GroupAlg out;
  std::vector<int> mult(m, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == m) {
      if (left != 0) return;
      Weight w = Weight::zero(n);
      for (int j = 1; j <= m; ++j) w = w - Weight::eps(n, j) * mult[j - 1];
      out.add_term(w, 1);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      mult[var] = c;
      self(self, var + 1, left - c);
    }
    mult[var] = 0;
  };
  rec(rec, 0, k);
  return out;
}

// ----- truncated Novikov series -------------------------------------------------

// Element of R(H)[Q_1..Q_nq] truncated past total Q-degree `cap`.
struct Novikov {
  int n = 0;      // weight-lattice rank of the coefficients
  int nq = 0;     // number of Q variables
  int cap = 4;    // total-degree truncation
  std::map<std::vector<int>, GroupAlg> t;

  Novikov() = default;
  Novikov(int n_, int nq_, int cap_) : n(n_), nq(nq_), cap(cap_) {}

  static Novikov constant(int n, int nq, int cap, const GroupAlg& c) {
    Novikov r(n, nq, cap);
    if (!c.is_zero()) r.t.emplace(std::vector<int>(nq, 0), c);
    return r;
  }
  static Novikov one(int n, int nq, int cap) { return constant(n, nq, cap, GroupAlg::one(n)); }
  static Novikov q_var(int n, int nq, int cap, int j) {
    Novikov r(n, nq, cap);
    std::vector<int> d(nq, 0);
    d.at(j - 1) = 1;
    if (cap >= 1) r.t.emplace(std::move(d), GroupAlg::one(n));
    return r;
  }

  bool is_zero() const { return t.empty(); }

  static int total(const std::vector<int>& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
  }

  void add_term(const std::vector<int>& d, const GroupAlg& c) {
    if (c.is_zero() || total(d) > cap) return;
    auto it = t.find(d);
    if (it == t.end()) {
      t.emplace(d, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  Novikov operator+(const Novikov& o) const {
    Novikov r = *this;
    for (const auto& [d, c] : o.t) r.add_term(d, c);
    return r;
  }
  Novikov operator-(const Novikov& o) const {
    Novikov r = *this;
    for (const auto& [d, c] : o.t) r.add_term(d, -c);
    return r;
  }
  Novikov operator*(const Novikov& o) const {
    Novikov r(n, nq, cap);
    for (const auto& [d1, c1] : t)
      for (const auto& [d2, c2] : o.t) {
        std::vector<int> d(nq);
        for (int i = 0; i < nq; ++i) d[i] = d1[i] + d2[i];
        if (total(d) <= cap) r.add_term(d, c1 * c2);
      }
    return r;
  }
  bool operator==(const Novikov& o) const { return t == o.t; }

  // Inverse of an element whose constant term is a unit +-e^nu; geometric
  // series up to the cap.
  Novikov inverse() const {
    auto c0 = t.find(std::vector<int>(nq, 0));
    if (c0 == t.end() || !c0->second.is_monomial())
      throw std::invalid_argument("Novikov::inverse: constant term is not a unit monomial");
    const Weight& w0 = c0->second.t.begin()->first;
    const mpz_class& a0 = c0->second.t.begin()->second;
    if (a0 != 1 && a0 != -1)
      throw std::invalid_argument("Novikov::inverse: constant coefficient not +-1");
    GroupAlg inv0 = GroupAlg::monomial(-w0, a0);  // (a0 e^{w0})^{-1}, a0 = +-1
    Novikov u = *this * constant(n, nq, cap, inv0);  // u = 1 + h, h in (Q)
    Novikov h = u - one(n, nq, cap);
    Novikov acc = one(n, nq, cap), pw = one(n, nq, cap);
    for (int k = 1; k <= cap; ++k) {
      pw = pw * h;
      if (pw.is_zero()) break;
      acc = (k % 2 == 0) ? acc + pw : acc - pw;
    }
    return constant(n, nq, cap, inv0) * acc;
  }
};

// ----- fraction field of Z[P] ----------------------------------------------------

// num/den with light normalization: integer content, monomial units, and
// opportunistic exact division; equality by cross-multiplication.
struct Frac {
  GroupAlg num, den;

  Frac() = default;
  explicit Frac(GroupAlg n_) : num(std::move(n_)) { den.t.emplace(Weight::zero(rank_of(num)), 1); }
  Frac(GroupAlg n_, GroupAlg d_) : num(std::move(n_)), den(std::move(d_)) {
    if (den.is_zero()) throw std::invalid_argument("Frac: zero denominator");
    normalize();
  }

  static int rank_of(const GroupAlg& g) { return g.is_zero() ? 0 : g.t.begin()->first.rank(); }

  static Frac zero() { return Frac(); }

  bool is_zero() const { return num.is_zero(); }

  void normalize() {
    if (num.is_zero()) {
      den = GroupAlg::monomial(Weight::zero(std::max(0, rank_of(den))), 1);
      return;
    }
    if (auto q = divexact(num, den)) {
      num = *q;
      den = GroupAlg::one(rank_of(num));
      // still normalize sign/content below via den == 1 path
    }
    mpz_class cn = num.content(), cd = den.content(), g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
      GroupAlg n2, d2;
      for (const auto& [w, c] : num.t) n2.t.emplace(w, c / g);
      for (const auto& [w, c] : den.t) d2.t.emplace(w, c / g);
      num = std::move(n2);
      den = std::move(d2);
    }
    // monomial unit: shift den so its lex-least weight is 0, flip sign so its
    // lex-least coefficient is positive
    const auto& [w0, c0] = *den.t.begin();
    if (!(w0 == Weight::zero(w0.rank())) || c0 < 0) {
      GroupAlg shift = GroupAlg::monomial(-w0, c0 < 0 ? -1 : 1);
      num = num * shift;
      den = den * shift;
    }
  }

  Frac operator+(const Frac& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den == o.den) return Frac(num + o.num, den);
    return Frac(num * o.den + o.num * den, den * o.den);
  }
  Frac operator-(const Frac& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return Frac(-o.num, o.den);
    if (den == o.den) return Frac(num - o.num, den);
    return Frac(num * o.den - o.num * den, den * o.den);
  }
  Frac operator*(const Frac& o) const {
    if (is_zero() || o.is_zero()) return Frac::zero();
    return Frac(num * o.num, den * o.den);
  }
  Frac operator/(const Frac& o) const {
    if (o.is_zero()) throw std::invalid_argument("Frac: division by zero");
    if (is_zero()) return Frac::zero();
    return Frac(num * o.den, den * o.num);
  }
  Frac operator-() const {
    Frac r = *this;
    r.num = -r.num;
    return r;
  }

  bool operator==(const Frac& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return (num * o.den) == (o.num * den);
  }
};

// ----- prime field F_p, p = 2^61 - 1 ---------------------------------------------

struct Fp {
  static constexpr std::uint64_t P = 2305843009213693951ULL;  // 2^61 - 1
  std::uint64_t v = 0;

  Fp() = default;
  explicit Fp(std::uint64_t x) : v(x % P) {}

  static Fp from_mpz(const mpz_class& z) {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(P));
    if (r < 0) r += mpz_class(static_cast<unsigned long>(P));
    return Fp(r.get_ui());
  }

  bool is_zero() const { return v == 0; }

  Fp operator+(Fp o) const {
    std::uint64_t s = v + o.v;
    if (s >= P) s -= P;
    return Fp(s);
  }
  Fp operator-(Fp o) const { return Fp(v >= o.v ? v - o.v : v + P - o.v); }
  Fp operator*(Fp o) const {
    unsigned __int128 m = (unsigned __int128)v * o.v;
    std::uint64_t lo = (std::uint64_t)(m & P), hi = (std::uint64_t)(m >> 61);
    std::uint64_t s = lo + hi;
    if (s >= P) s -= P;
    return Fp(s);
  }
  Fp operator-() const { return Fp(v == 0 ? 0 : P - v); }

  Fp pow(std::uint64_t e) const {
    Fp b = *this, r(1);
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const {
    if (v == 0) throw std::invalid_argument("Fp: inverse of zero");
    return pow(P - 2);
  }
  Fp operator/(Fp o) const { return *this * o.inv(); }

  bool operator==(const Fp&) const = default;
};

// Random point e^{eps_i} -> x_i in F_p^*, i = 1..n (e^{eps_{n+1}} is then
// determined by the SL-normalization built into canonical weights).
inline std::vector<Fp> random_torus_point(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, Fp::P - 1);
  std::vector<Fp> x(n);
  for (int i = 0; i < n; ++i) x[i] = Fp(dist(rng));
  return x;
}

inline Fp eval_at(const GroupAlg& f, const std::vector<Fp>& x) {
  int n = int(x.size());
  Fp s(0);
  for (const auto& [w, c] : f.t) {
    Fp m = Fp::from_mpz(c);
    for (int i = 0; i < n; ++i) {
      i64 e = w.c[i];
      if (e > 0)
        m = m * x[i].pow(std::uint64_t(e));
      else if (e < 0)
        m = m * x[i].pow(std::uint64_t(-e)).inv();
    }
    s = s + m;
  }
  return s;
}

}  // namespace flagk
