#include "flagk/qkring.hpp"

#include <algorithm>
#include <string>

namespace flagk {

namespace {

std::vector<std::vector<int>> subsets(int m, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& rec, int from) -> void {
    if (int(cur.size()) == l) {
      out.push_back(cur);
      return;
    }
    if (m - from + 1 < l - int(cur.size())) return;
    for (int j = from; j <= m; ++j) {
      cur.push_back(j);
      rec(rec, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

GroupAlg int_const(int nr, const mpz_class& k) { return GroupAlg::monomial(Weight::zero(nr), k); }

}  // namespace

// ----- QPoly --------------------------------------------------------------------

int QPoly::total(const std::vector<int>& d) {
  int s = 0;
  for (int x : d) s += x;
  return s;
}

QPoly QPoly::constant(int nr, int nx, int nq, int qcap, const GroupAlg& c) {
  QPoly r(nr, nx, nq, qcap);
  if (!c.is_zero()) r.t.emplace(QKey{std::vector<int>(nx, 0), std::vector<int>(nq, 0)}, c);
  return r;
}

QPoly QPoly::one(int nr, int nx, int nq, int qcap) {
  return constant(nr, nx, nq, qcap, GroupAlg::one(nr));
}

QPoly QPoly::x_var(int nr, int nx, int nq, int qcap, int j) {
  if (j < 1 || j > nx) throw std::out_of_range("QPoly::x_var: 1 <= j <= nx");
  QPoly r(nr, nx, nq, qcap);
  QKey k{std::vector<int>(nx, 0), std::vector<int>(nq, 0)};
  k.xd[j - 1] = 1;
  r.t.emplace(std::move(k), GroupAlg::one(nr));
  return r;
}

QPoly QPoly::q_var(int nr, int nx, int nq, int qcap, int i) {
  if (i < 1 || i > nq) throw std::out_of_range("QPoly::q_var: 1 <= i <= nq");
  QPoly r(nr, nx, nq, qcap);
  if (qcap < 1) return r;
  QKey k{std::vector<int>(nx, 0), std::vector<int>(nq, 0)};
  k.qd[i - 1] = 1;
  r.t.emplace(std::move(k), GroupAlg::one(nr));
  return r;
}

QPoly QPoly::from_novikov(const Novikov& f, int nx) {
  QPoly r(f.n, nx, f.nq, f.cap);
  for (const auto& [d, c] : f.t) r.t.emplace(QKey{std::vector<int>(nx, 0), d}, c);
  return r;
}

void QPoly::add_term(const QKey& k, const GroupAlg& c) {
  if (c.is_zero() || total(k.qd) > qcap) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  for (const auto& [k, c] : o.t) r.add_term(k, c);
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  for (const auto& [k, c] : o.t) r.add_term(k, -c);
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r(nr, nx, nq, qcap);
  for (const auto& [k, c] : t) r.t.emplace(k, -c);
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r(nr, nx, nq, qcap);
  for (const auto& [k1, c1] : t)
    for (const auto& [k2, c2] : o.t) {
      QKey k;
      k.xd.resize(nx);
      k.qd.resize(nq);
      for (int i = 0; i < nx; ++i) k.xd[i] = k1.xd[i] + k2.xd[i];
      for (int i = 0; i < nq; ++i) k.qd[i] = k1.qd[i] + k2.qd[i];
      if (total(k.qd) > qcap) continue;
      r.add_term(k, c1 * c2);
    }
  return r;
}

QPoly QPoly::operator*(const GroupAlg& c) const {
  QPoly r(nr, nx, nq, qcap);
  for (const auto& [k, v] : t) r.add_term(k, v * c);
  return r;
}

QPoly QPoly::operator*(const mpz_class& k) const {
  QPoly r(nr, nx, nq, qcap);
  if (k == 0) return r;
  for (const auto& [key, v] : t) r.t.emplace(key, v * k);
  return r;
}

QPoly QPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("QPoly::pow: negative exponent");
  QPoly r = one(nr, nx, nq, qcap), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

QPoly QPoly::subst_x(int j, const QPoly& val) const {
  if (j < 1 || j > nx) throw std::out_of_range("QPoly::subst_x: 1 <= j <= nx");
  QPoly r(nr, nx, nq, qcap);
  std::vector<QPoly> powers{one(nr, nx, nq, qcap)};
  for (const auto& [k, c] : t) {
    int d = k.xd[j - 1];
    while (int(powers.size()) <= d) powers.push_back(powers.back() * val);
    QKey rest = k;
    rest.xd[j - 1] = 0;
    QPoly base(nr, nx, nq, qcap);
    base.t.emplace(std::move(rest), c);
    r = r + base * powers[d];
  }
  return r;
}

QPoly QPoly::q_zero(int i) const {
  if (i < 1 || i > nq) throw std::out_of_range("QPoly::q_zero: 1 <= i <= nq");
  QPoly r(nr, nx, nq, qcap);
  for (const auto& [k, c] : t)
    if (k.qd[i - 1] == 0) r.t.emplace(k, c);
  return r;
}

QPoly QPoly::q_zero_all() const {
  QPoly r(nr, nx, nq, qcap);
  for (const auto& [k, c] : t)
    if (total(k.qd) == 0) r.t.emplace(k, c);
  return r;
}

QPoly QPoly::retruncate(int newcap) const {
  QPoly r(nr, nx, nq, newcap);
  for (const auto& [k, c] : t)
    if (total(k.qd) <= newcap) r.t.emplace(k, c);
  return r;
}

GroupAlg QPoly::constant_term() const {
  auto it = t.find(QKey{std::vector<int>(nx, 0), std::vector<int>(nq, 0)});
  return it == t.end() ? GroupAlg::zero() : it->second;
}

int QPoly::x_degree() const {
  int d = 0;
  for (const auto& [k, c] : t) d = std::max(d, total(k.xd));
  return d;
}

QPoly reshape(const QPoly& f, int nx, int nq, int qcap) {
  QPoly r(f.nr, nx, nq, qcap);
  for (const auto& [k, c] : f.t) {
    QKey nk{std::vector<int>(nx, 0), std::vector<int>(nq, 0)};
    for (int i = 0; i < f.nx; ++i) {
      if (k.xd[i] == 0) continue;
      if (i >= nx) throw std::invalid_argument("reshape: dropped x-slot carries a nonzero exponent");
      nk.xd[i] = k.xd[i];
    }
    for (int i = 0; i < f.nq; ++i) {
      if (k.qd[i] == 0) continue;
      if (i >= nq) throw std::invalid_argument("reshape: dropped Q-slot carries a nonzero exponent");
      nk.qd[i] = k.qd[i];
    }
    if (QPoly::total(nk.qd) > qcap)
      throw std::invalid_argument("reshape: term exceeds the new Q-cap");
    r.t.emplace(std::move(nk), c);
  }
  return r;
}

// ----- generators -----------------------------------------------------------------

GroupAlg class_elementary(int n, int l) {
  if (l < 0 || l > n + 1) throw std::out_of_range("class_elementary: 0 <= l <= n+1");
  GroupAlg s;
  for (const auto& J : subsets(n + 1, l)) {
    Weight w = Weight::zero(n);
    for (int j : J) w = w + Weight::eps(n, j);
    s.add_term(w, 1);
  }
  return s;
}

std::vector<QPoly> ideal_generators(int n, bool quantum, int qcap) {
  const int nx = n + 1, nq = n;
  std::vector<QPoly> gens;
  QPoly one = QPoly::one(n, nx, nq, qcap);
  for (int l = 1; l <= n + 1; ++l) {
    QPoly g(n, nx, nq, qcap);
    for (const auto& J : subsets(n + 1, l)) {
      QPoly term = one;
      for (int j : J) {
        term = term * (one - QPoly::x_var(n, nx, nq, qcap, j));
        bool succ = std::binary_search(J.begin(), J.end(), j + 1);
        if (quantum && j <= n && !succ)
          term = term * (one - QPoly::q_var(n, nx, nq, qcap, j));
      }
      g = g + term;
    }
    gens.push_back(g - QPoly::constant(n, nx, nq, qcap, class_elementary(n, l)));
  }
  return gens;
}

// ----- quotient construction --------------------------------------------------------

QuotientRing esym_quotient(int nr, int nx, int nq, int qcap, const std::vector<QPoly>& gens) {
  if (int(gens.size()) != nx)
    throw std::invalid_argument("esym_quotient: need one generator per variable");
  QuotientRing R;
  R.nr = nr;
  R.nx = nx;
  R.nq = nq;
  R.qcap = qcap;
  R.bound.resize(nx);
  for (int k = 1; k <= nx; ++k) R.bound[k - 1] = nx - k;

  // complete homogeneous polynomials h[k][m] in z_1..z_k, z_j = 1 - x_j
  QPoly one = QPoly::one(nr, nx, nq, qcap);
  std::vector<std::vector<QPoly>> h(nx + 1, std::vector<QPoly>(nx + 1, QPoly(nr, nx, nq, qcap)));
  for (int k = 0; k <= nx; ++k) h[k][0] = one;
  for (int k = 1; k <= nx; ++k) {
    QPoly z = one - QPoly::x_var(nr, nx, nq, qcap, k);
    for (int m = 1; m <= nx; ++m) h[k][m] = h[k - 1][m] + z * h[k][m - 1];
  }

  // rule k: the alternating h-weighted combination of the generators whose
  // Q-free part collapses onto the single pivot column x_k
  for (int k = 1; k <= nx; ++k) {
    const int M = nx + 1 - k;
    QPoly r(nr, nx, nq, qcap);
    for (int j = 1; j <= M; ++j) {
      QPoly add = h[k][M - j] * gens[j - 1];
      r = (j % 2 == 1) ? r + add : r - add;
    }
    // pivot validation
    QKey head{std::vector<int>(nx, 0), std::vector<int>(nq, 0)};
    head.xd[k - 1] = M;
    auto it = r.t.find(head);
    GroupAlg want = int_const(nr, (M % 2 == 0) ? mpz_class(1) : mpz_class(-1));
    if (it == r.t.end() || !(it->second == want))
      throw std::logic_error("esym_quotient: pivot failure at variable " + std::to_string(k) +
                             ": head monomial x^" + std::to_string(M) +
                             " is missing or not a unit");
    for (const auto& [key, c] : r.t) {
      if (QPoly::total(key.qd) > 0 || key == head) continue;
      bool tail_ok = key.xd[k - 1] < M;
      for (int i = k + 1; i <= nx; ++i) tail_ok = tail_ok && key.xd[i - 1] == 0;
      if (!tail_ok)
        throw std::logic_error("esym_quotient: pivot failure at variable " + std::to_string(k) +
                               ": Q-free body escapes the triangular block");
    }
    R.rule.push_back(std::move(r));
  }
  return R;
}

QuotientRing main_quotient(int n, bool quantum, int qcap) {
  return esym_quotient(n, n + 1, n, qcap, ideal_generators(n, quantum, qcap));
}

// ----- shared rewrite loop -----------------------------------------------------------

namespace {

// Keys ordered by the reverse-lex order on the x-multidegree (compared
// from x_nx down to x_1). A rewrite at variable k keeps the exponents
// above k, strictly lowers the one at k, and stays Q-free only within the
// same slice, so every key a rewrite inserts into its own slice is
// strictly smaller in this order.
struct RevLess {
  bool operator()(const QKey& a, const QKey& b) const {
    if (a.xd != b.xd)
      return std::lexicographical_compare(a.xd.rbegin(), a.xd.rend(), b.xd.rbegin(),
                                          b.xd.rend());
    return a.qd < b.qd;
  }
};

// Reduce p by the triangular rules, one total-Q-degree slice at a time
// (rule tails never feed a lower slice). Within a slice, sweep the keys in
// strictly descending reverse-lex order: every contribution to a key comes
// from rewriting a larger key, so each coefficient is final when its key
// is reached and each key is rewritten at most once. Heads are +-1, so
// exact coefficients never leave the ring.
template <class C>
std::map<QKey, C> reduce_impl(const std::map<QKey, C>& p,
                              const std::vector<const std::map<QKey, C>*>& rules,
                              const std::vector<C>& headunit, const std::vector<int>& bound,
                              int qcap) {
  const int nx = int(bound.size());
  using Slice = std::map<QKey, C, RevLess>;
  std::vector<Slice> buck(qcap + 1);
  for (const auto& [k, v] : p) buck[QPoly::total(k.qd)].emplace(k, v);
  std::map<QKey, C> out;
  for (int d = 0; d <= qcap; ++d) {
    Slice& B = buck[d];
    auto cur = B.end();
    while (cur != B.begin()) {
      --cur;
      int k = -1;
      for (int j = nx; j >= 1; --j)
        if (cur->first.xd[j - 1] > bound[j - 1]) {
          k = j;
          break;
        }
      if (k < 0) continue;  // standard; keep walking down
      const QKey key = cur->first;
      const int M = bound[k - 1] + 1;
      // s = coefficient / head coefficient; heads are +-1, their own inverse
      C s = cur->second * headunit[k - 1];
      QKey shift = key;
      shift.xd[k - 1] -= M;
      for (const auto& [rk, rc] : *rules[k - 1]) {
        QKey nk;
        nk.xd.resize(shift.xd.size());
        nk.qd.resize(shift.qd.size());
        for (size_t i = 0; i < nk.xd.size(); ++i) nk.xd[i] = shift.xd[i] + rk.xd[i];
        for (size_t i = 0; i < nk.qd.size(); ++i) nk.qd[i] = shift.qd[i] + rk.qd[i];
        int tq = QPoly::total(nk.qd);
        if (tq > qcap) continue;
        C delta = -(s * rc);
        if (delta.is_zero()) continue;
        Slice& dst = buck[tq];
        auto jt = dst.find(nk);
        if (jt == dst.end()) {
          dst.emplace(std::move(nk), std::move(delta));
        } else {
          jt->second = jt->second + delta;
          if (jt->second.is_zero()) dst.erase(jt);
        }
      }
      if (B.count(key))
        throw std::logic_error("quotient rewrite: head term failed to cancel");
      // resume just below the erased key; everything above it is final
      cur = B.lower_bound(key);
    }
    for (auto& [k, v] : B) out.emplace(k, std::move(v));
    B.clear();
  }
  return out;
}

}  // namespace

QPoly QuotientRing::nf(const QPoly& p) const {
  if (p.nx != nx || p.nq != nq || p.qcap != qcap)
    throw std::invalid_argument("QuotientRing::nf: ring shape mismatch");
  std::vector<const std::map<QKey, GroupAlg>*> rs;
  std::vector<GroupAlg> hu;
  for (int k = 1; k <= nx; ++k) {
    rs.push_back(&rule[k - 1].t);
    int M = bound[k - 1] + 1;
    hu.push_back(int_const(nr, (M % 2 == 0) ? mpz_class(1) : mpz_class(-1)));
  }
  QPoly r(nr, nx, nq, qcap);
  r.t = reduce_impl<GroupAlg>(p.t, rs, hu, bound, qcap);
  return r;
}

std::vector<std::vector<int>> QuotientRing::basis() const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nx, 0);
  auto rec = [&](auto&& rec, int j) -> void {
    if (j == nx) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= bound[j]; ++a) {
      cur[j] = a;
      rec(rec, j + 1);
    }
    cur[j] = 0;
  };
  rec(rec, 0);
  return out;
}

long QuotientRing::basis_size() const {
  long s = 1;
  for (int b : bound) s *= b + 1;
  return s;
}

// ----- mod-p mirror ---------------------------------------------------------------

FpQPoly FpQuotient::project(const QPoly& p) const {
  FpQPoly r;
  for (const auto& [k, c] : p.t) {
    Fp v = eval_at(c, pt);
    if (!v.is_zero()) r.t.emplace(k, v);
  }
  return r;
}

FpQPoly FpQuotient::nf(FpQPoly p) const {
  std::vector<const std::map<QKey, Fp>*> rs;
  std::vector<Fp> hu;
  for (int k = 1; k <= nx; ++k) {
    rs.push_back(&rule[k - 1].t);
    int M = bound[k - 1] + 1;
    hu.push_back((M % 2 == 0) ? Fp(1) : -Fp(1));
  }
  FpQPoly r;
  r.t = reduce_impl<Fp>(p.t, rs, hu, bound, qcap);
  return r;
}

bool FpQuotient::contains(const QPoly& p) const { return nf(project(p)).is_zero(); }

FpQuotient modp_quotient(const QuotientRing& R, std::uint64_t seed) {
  FpQuotient F;
  F.nx = R.nx;
  F.nq = R.nq;
  F.qcap = R.qcap;
  F.bound = R.bound;
  F.pt = random_torus_point(R.nr, seed);
  for (const auto& r : R.rule) {
    FpQPoly fr;
    for (const auto& [k, c] : r.t) {
      Fp v = eval_at(c, F.pt);
      if (!v.is_zero()) fr.t.emplace(k, v);
    }
    F.rule.push_back(std::move(fr));
  }
  return F;
}

// ----- freeness -------------------------------------------------------------------

namespace {

// exact determinant by fraction-free elimination; the step divisions are
// exact in the Laurent ring Z[P]
GroupAlg bareiss_det(std::vector<std::vector<GroupAlg>> a, int nr) {
  const int n = int(a.size());
  if (n == 0) return GroupAlg::one(nr);
  GroupAlg prev = GroupAlg::one(nr);
  bool neg = false;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (!a[r][k].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return GroupAlg::zero();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        GroupAlg num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = divexact(num, prev);
        if (!q) throw std::logic_error("bareiss_det: inexact division");
        a[i][j] = *q;
      }
      a[i][k] = GroupAlg::zero();
    }
    prev = a[k][k];
  }
  return neg ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Fp modp_det(std::vector<std::vector<Fp>> a) {
  const int n = int(a.size());
  Fp det(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (!a[r][k].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Fp(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det = det * a[k][k];
    Fp inv = a[k][k].inv();
    for (int i = k + 1; i < n; ++i) {
      Fp f = a[i][k] * inv;
      if (f.is_zero()) continue;
      for (int j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
  }
  return det;
}

std::vector<std::vector<int>> monomials_up_to(int nx, int maxtot) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nx, 0);
  auto rec = [&](auto&& rec, int j, int left) -> void {
    if (j == nx) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[j] = a;
      rec(rec, j + 1, left - a);
    }
    cur[j] = 0;
  };
  rec(rec, 0, maxtot);
  return out;
}

FpQPoly fp_q_zero_all(const FpQPoly& p) {
  FpQPoly r;
  for (const auto& [k, c] : p.t)
    if (QPoly::total(k.qd) == 0) r.t.emplace(k, c);
  return r;
}

}  // namespace

long verify_freeness(int n, int qcap, bool exact, std::uint64_t seed) {
  const int m = n + 1;
  QuotientRing RQ = main_quotient(n, true, qcap);
  QuotientRing RC = main_quotient(n, false, qcap);
  long fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  if (RQ.basis_size() != fact || RC.basis_size() != fact)
    throw std::logic_error("verify_freeness: basis cardinality is not (n+1)!");

  auto standard = [&](const std::vector<int>& xd) {
    for (int j = 0; j < RQ.nx; ++j)
      if (xd[j] > RQ.bound[j]) return false;
    return true;
  };

  FpQuotient FQ, FC;
  if (!exact) {
    FQ = modp_quotient(RQ, seed);
    FC = modp_quotient(RC, seed);
  }

  // spanning: every monomial of total degree <= n+2 lands in the standard
  // basis, and the quantum normal form agrees with the classical one at Q = 0
  for (const auto& xd : monomials_up_to(m, n + 2)) {
    QKey k{xd, std::vector<int>(n, 0)};
    QPoly mono(n, m, n, qcap);
    mono.t.emplace(k, GroupAlg::one(n));
    if (exact) {
      QPoly a = RQ.nf(mono), b = RC.nf(mono);
      for (const auto& [key, c] : a.t)
        if (!standard(key.xd)) throw std::logic_error("verify_freeness: nonstandard support");
      for (const auto& [key, c] : b.t)
        if (!standard(key.xd) || QPoly::total(key.qd) != 0)
          throw std::logic_error("verify_freeness: classical reduction left the classical ring");
      if (!(a.q_zero_all() == b))
        throw std::logic_error("verify_freeness: quantum normal form does not specialize");
    } else {
      FpQPoly a = FQ.nf(FQ.project(mono)), b = FC.nf(FC.project(mono));
      for (const auto& [key, c] : a.t)
        if (!standard(key.xd)) throw std::logic_error("verify_freeness: nonstandard support");
      if (!(fp_q_zero_all(a) == b))
        throw std::logic_error("verify_freeness: quantum normal form does not specialize");
    }
  }

  // the generators themselves reduce to zero
  for (const QPoly& g : ideal_generators(n, true, qcap))
    if (!(exact ? RQ.contains(g) : FQ.contains(g)))
      throw std::logic_error("verify_freeness: quantum generator escapes its ideal");
  for (const QPoly& g : ideal_generators(n, false, qcap))
    if (!(exact ? RC.contains(g) : FC.contains(g)))
      throw std::logic_error("verify_freeness: classical generator escapes its ideal");

  // fixed-point substitution x_j -> 1 - e^{eps_{w(j)}} kills every classical
  // generator, exactly, for every Weyl group element
  const auto W = all_elements(m);
  for (const QPoly& g : ideal_generators(n, false, 0)) {
    for (const Perm& w : W) {
      GroupAlg acc;
      for (const auto& [key, c] : g.t) {
        GroupAlg term = c;
        for (int j = 1; j <= m; ++j)
          for (int e = 0; e < key.xd[j - 1]; ++e)
            term = term * (GroupAlg::one(n) - e_nu(Weight::eps(n, w(j))));
        acc = acc + term;
      }
      if (!acc.is_zero())
        throw std::logic_error("verify_freeness: fixed-point substitution misses a generator");
    }
  }

  // independence: the fixed-point evaluation matrix of the standard basis is
  // invertible, so no nonzero combination of basis monomials can vanish at
  // all fixed points; membership would force exactly that
  const auto bas = RQ.basis();
  if (exact) {
    std::vector<std::vector<GroupAlg>> M(fact, std::vector<GroupAlg>(fact));
    for (long r = 0; r < fact; ++r)
      for (long c = 0; c < fact; ++c) {
        GroupAlg e = GroupAlg::one(n);
        for (int j = 1; j <= m; ++j)
          for (int k = 0; k < bas[c][j - 1]; ++k)
            e = e * (GroupAlg::one(n) - e_nu(Weight::eps(n, W[r](j))));
        M[r][c] = e;
      }
    if (bareiss_det(std::move(M), n).is_zero())
      throw std::logic_error("verify_freeness: fixed-point matrix is singular");
  } else {
    std::vector<Fp> pt = random_torus_point(n, seed);
    std::vector<Fp> ev(m + 1);
    for (int i = 1; i <= m; ++i)
      ev[i] = Fp(1) - eval_at(e_nu(Weight::eps(n, i)), pt);
    std::vector<std::vector<Fp>> M(fact, std::vector<Fp>(fact));
    for (long r = 0; r < fact; ++r)
      for (long c = 0; c < fact; ++c) {
        Fp e(1);
        for (int j = 1; j <= m; ++j)
          for (int k = 0; k < bas[c][j - 1]; ++k) e = e * ev[W[r](j)];
        M[r][c] = e;
      }
    if (modp_det(std::move(M)).is_zero())
      throw std::logic_error("verify_freeness: fixed-point matrix is singular at the sample point");
  }
  return fact;
}

// ----- the relation theorem ---------------------------------------------------------

void verify_thm_rel(int n, int qcap) {
  const int m = n + 1;
  QuotientRing RQ = main_quotient(n, true, qcap);
  QPoly one = QPoly::one(n, m, n, qcap);

  // Q-degree actually needed by the displayed classes
  int need = 0;
  for (int l = 0; l <= m; ++l)
    for (const auto& J : subsets(m, l)) {
      int runs = 0;
      for (int j : J)
        if (j <= n && !std::binary_search(J.begin(), J.end(), j + 1)) ++runs;
      need = std::max(need, runs);
    }
  if (need > qcap) throw std::logic_error("verify_thm_rel: Q-cap below the displayed degree");

  const int wcap = std::max(qcap, n + 1);
  for (int l = 0; l <= m; ++l) {
    QPoly cf(n, m, n, qcap), disp(n, m, n, qcap);
    for (const auto& J : subsets(m, l)) {
      auto succ = [&](int j) { return std::binary_search(J.begin(), J.end(), j + 1); };
      // run factors split exactly: all = runs * glue
      Novikov all = Novikov::one(n, n, wcap), runsf = all, glue = all;
      for (int j : J) {
        if (j > n) continue;
        Novikov f = Novikov::one(n, n, wcap) - Novikov::q_var(n, n, wcap, j);
        all = all * f;
        if (succ(j))
          glue = glue * f;
        else
          runsf = runsf * f;
      }
      if (!(all == runsf * glue))
        throw std::logic_error("verify_thm_rel: run-factor split fails");
      // inversion path: glue^{-1} times the product of line-bundle images
      Novikov glue_c = Novikov::one(n, n, qcap);
      for (int j : J)
        if (j <= n && succ(j))
          glue_c = glue_c * (Novikov::one(n, n, qcap) - Novikov::q_var(n, n, qcap, j));
      QPoly term = QPoly::from_novikov(glue_c.inverse(), m);
      QPoly dterm = one;
      for (int j : J) {
        QPoly f = one - QPoly::x_var(n, m, n, qcap, j);
        dterm = dterm * f;
        if (j <= n) {
          QPoly qf = one - QPoly::q_var(n, m, n, qcap, j);
          term = term * (f * qf);
          if (!succ(j)) dterm = dterm * qf;
        } else {
          term = term * f;
        }
      }
      if (!(term == dterm))
        throw std::logic_error("verify_thm_rel: inversion path deviates from the display");
      cf = cf + term;
      disp = disp + dterm;
    }
    if (!(cf == disp)) throw std::logic_error("verify_thm_rel: sum mismatch");
    QPoly kappa = QPoly::constant(n, m, n, qcap, class_elementary(n, l));
    if (!(RQ.nf(disp) == kappa))
      throw std::logic_error("verify_thm_rel: displayed class does not reduce to the "
                             "elementary class at l = " + std::to_string(l));
    if (!RQ.contains(disp - kappa))
      throw std::logic_error("verify_thm_rel: relation escapes the ideal at l = " +
                             std::to_string(l));
  }
}

}  // namespace flagk
