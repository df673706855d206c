#include "flagk/groth.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

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

mpz_class binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

void req(bool ok, const std::string& who, const std::string& what) {
  if (!ok) throw std::logic_error(who + ": " + what);
}

// integer polynomials in the x-variables alone, as exponent-vector maps
using XMap = std::map<std::vector<int>, mpz_class>;

XMap xmap_mul(const XMap& a, const XMap& b, int nx) {
  XMap r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> k(nx);
      for (int i = 0; i < nx; ++i) k[i] = ka[i] + kb[i];
      r[k] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

XMap xmap_e(int nx, int k, int p) {
  XMap r;
  for (const auto& I : subsets(k, p)) {
    std::vector<int> key(nx, 0);
    for (int j : I) key[j - 1] = 1;
    r[key] += 1;
  }
  return r;
}

// e_i(x_1..x_k) as a QPoly of the given shape
QPoly elementary_x(int nr, int nx, int nq, int qcap, int k, int i) {
  QPoly s(nr, nx, nq, qcap);
  for (const auto& I : subsets(k, i)) {
    QPoly term = QPoly::one(nr, nx, nq, qcap);
    for (int j : I) term = term * QPoly::x_var(nr, nx, nq, qcap, j);
    s = s + term;
  }
  return s;
}

// fraction-free determinant over the group algebra; returns zero if singular
GroupAlg bareiss_det(std::vector<std::vector<GroupAlg>> a, int nr) {
  const int s = int(a.size());
  if (s == 0) return GroupAlg::one(nr);
  GroupAlg prev = GroupAlg::one(nr);
  int sign = 1;
  for (int c = 0; c < s - 1; ++c) {
    int piv = -1;
    for (int r = c; r < s; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return GroupAlg();
    if (piv != c) {
      std::swap(a[piv], a[c]);
      sign = -sign;
    }
    for (int r = c + 1; r < s; ++r)
      for (int j = c + 1; j < s; ++j) {
        GroupAlg num = a[r][j] * a[c][c] - a[r][c] * a[c][j];
        auto q = divexact(num, prev);
        req(q.has_value(), "bareiss_det", "non-exact division");
        a[r][j] = *q;
      }
    for (int r = c + 1; r < s; ++r) a[r][c] = GroupAlg();
    prev = a[c][c];
  }
  GroupAlg d = a[s - 1][s - 1];
  return (sign < 0) ? -d : d;
}

}  // namespace

// ----- operators -------------------------------------------------------------------

GroupAlg y_class(int nr, int j) {
  if (j < 1 || j > nr + 1) throw std::out_of_range("y_class: 1 <= j <= nr+1");
  return GroupAlg::one(nr) - GroupAlg::monomial(-Weight::eps(nr, j));
}

QPoly divided_difference(const QPoly& f, int i) {
  if (i < 1 || i >= f.nx) throw std::out_of_range("divided_difference: 1 <= i < nx");
  QPoly r = f.like_zero();
  for (const auto& [k, c] : f.t) {
    const int a = k.xd[i - 1], b = k.xd[i];
    if (a == b) continue;
    QKey nk = k;
    if (a > b) {
      for (int t = b; t <= a - 1; ++t) {
        nk.xd[i - 1] = t;
        nk.xd[i] = a + b - 1 - t;
        r.add_term(nk, c);
      }
    } else {
      for (int t = a; t <= b - 1; ++t) {
        nk.xd[i - 1] = t;
        nk.xd[i] = a + b - 1 - t;
        r.add_term(nk, -c);
      }
    }
  }
  return r;
}

QPoly demazure_pi(const QPoly& f, int i) {
  return divided_difference(f - f * f.like_x(i + 1), i);
}

std::vector<int> code_of(const Perm& w) {
  const int m = w.size();
  std::vector<int> c(m, 0);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (w(j) < w(i)) ++c[i - 1];
  return c;
}

bool is_dominant(const Perm& w) {
  std::vector<int> c = code_of(w);
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] > c[i - 1]) return false;
  return true;
}

QPoly eta_poly(int nr, int nx, int nq, int qcap, int i, int j) {
  if (j < 0 || j > nr + 1) throw std::out_of_range("eta_poly: 0 <= j <= nr+1");
  QPoly out = QPoly::one(nr, nx, nq, qcap);
  QPoly xi = QPoly::x_var(nr, nx, nq, qcap, i);
  for (int a = 1; a <= j; ++a) {
    GroupAlg ya = y_class(nr, a);
    out = out * (xi * (GroupAlg::one(nr) - ya) + QPoly::constant(nr, nx, nq, qcap, ya));
  }
  return out;
}

QPoly grothendieck(int nr, int nx, int nq, int qcap, const Perm& w) {
  const int N = w.size();
  if (nx < N) throw std::invalid_argument("grothendieck: need nx >= N for the operator chain");
  if (nr + 1 < N - 1) throw std::invalid_argument("grothendieck: need torus classes y_1..y_{N-1}");
  QPoly g = QPoly::one(nr, nx, nq, qcap);
  for (int i = 1; i <= N - 1; ++i) g = g * eta_poly(nr, nx, nq, qcap, i, N - i);
  // Walk from the longest element down to w one right descent at a time;
  // each letter of the word applies one Demazure operator. The dominant
  // closed form and the word-independence gate pin this orientation.
  Perm u = Perm::longest(N) * w;
  for (int a : reduced_word(u)) g = demazure_pi(g, a);
  return g;
}

// ----- quantum elementary families ---------------------------------------------------

QPoly f_family(int nr, int nx, int nq, int qcap, int k, int p) {
  if (k < 1 || k > nx || k > nq) throw std::out_of_range("f_family: need x_1..x_k and Q_1..Q_k");
  if (p < 0 || p > k) throw std::out_of_range("f_family: 0 <= p <= k");
  QPoly one = QPoly::one(nr, nx, nq, qcap);
  QPoly s(nr, nx, nq, qcap);
  for (const auto& I : subsets(k, p)) {
    QPoly term = one;
    for (int i : I) {
      term = term * (one - QPoly::x_var(nr, nx, nq, qcap, i));
      if (!std::binary_search(I.begin(), I.end(), i + 1))
        term = term * (one - QPoly::q_var(nr, nx, nq, qcap, i));
    }
    s = s + term;
  }
  return s;
}

QPoly ehat_family(int nr, int nx, int nq, int qcap, int k, int p) {
  if (p < 0 || p > k) throw std::out_of_range("ehat_family: 0 <= p <= k");
  QPoly s(nr, nx, nq, qcap);
  for (int i = 0; i <= p; ++i) {
    QPoly add = f_family(nr, nx, nq, qcap, k, i) * binom(k - i, p - i);
    s = (i % 2 == 0) ? s + add : s - add;
  }
  return s;
}

GroupAlg stable_tail(int nr, int k, int i) {
  if (i < 0 || i > k) throw std::out_of_range("stable_tail: 0 <= i <= k");
  const int m = std::min(k, nr + 1);
  if (i > m) return GroupAlg();
  GroupAlg s;
  for (const auto& J : subsets(m, i)) {
    Weight w = Weight::zero(nr);
    for (int j : J) w = w + Weight::eps(nr, j);
    s.add_term(w, 1);
  }
  return s;
}

QPoly ff_family(int nr, int nx, int nq, int qcap, int k, int i) {
  if (k < 1 || k > nx || i < 1 || i > k) throw std::out_of_range("ff_family: 1 <= i <= k <= nx");
  QPoly one = QPoly::one(nr, nx, nq, qcap);
  QPoly s(nr, nx, nq, qcap);
  for (const auto& I : subsets(k, i)) {
    QPoly term = one;
    for (int j : I) term = term * (one - QPoly::x_var(nr, nx, nq, qcap, j));
    s = s + term;
  }
  return s - QPoly::constant(nr, nx, nq, qcap, stable_tail(nr, k, i));
}

QPoly fhat_family(int nr, int nx, int nq, int qcap, int k, int i) {
  if (i < 1 || i > k) throw std::out_of_range("fhat_family: 1 <= i <= k");
  return f_family(nr, nx, nq, qcap, k, i) -
         QPoly::constant(nr, nx, nq, qcap, stable_tail(nr, k, i));
}

// ----- quantization ------------------------------------------------------------------

Quantizer::Quantizer(int m_, int nr_, int qcap_) : m(m_), nr(nr_), nx(m_), nq(m_ - 1), qcap(qcap_) {
  if (m < 1) throw std::invalid_argument("Quantizer: m >= 1");
  // tuples (p_1..p_{m-1}) with 0 <= p_k <= k, and staircase monomials
  // a_j <= m - j; both families have m! members
  tuples.assign(1, std::vector<int>{});
  for (int k = 1; k <= m - 1; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int p = 0; p <= k; ++p) {
        next.push_back(t);
        next.back().push_back(p);
      }
    tuples = std::move(next);
  }
  monos.assign(1, std::vector<int>{});
  for (int j = 1; j <= m; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& t : monos)
      for (int a = 0; a <= m - j; ++a) {
        next.push_back(t);
        next.back().push_back(a);
      }
    monos = std::move(next);
  }
  const int S = int(tuples.size());
  req(int(monos.size()) == S, "Quantizer", "staircase and tuple counts differ");
  std::map<std::vector<int>, int> idx;
  for (int r = 0; r < S; ++r) idx[monos[r]] = r;

  // integer transition: column p holds the monomial expansion of
  // e_{p_1}(x_1) e_{p_2}(x_1,x_2) ... e_{p_{m-1}}(x_1..x_{m-1})
  std::vector<std::vector<mpz_class>> T(S, std::vector<mpz_class>(S, 0));
  for (int cidx = 0; cidx < S; ++cidx) {
    XMap prod{{std::vector<int>(m, 0), 1}};
    for (int k = 1; k <= m - 1; ++k)
      prod = xmap_mul(prod, xmap_e(m, k, tuples[cidx][k - 1]), m);
    for (const auto& [key, c] : prod) {
      auto it = idx.find(key);
      req(it != idx.end(), "Quantizer", "prefix product leaves the staircase");
      T[it->second][cidx] = c;
    }
  }

  // exact Gauss-Jordan inverse; the basis change must be unimodular
  std::vector<std::vector<mpq_class>> a(S, std::vector<mpq_class>(S * 2, 0));
  for (int r = 0; r < S; ++r) {
    for (int c = 0; c < S; ++c) a[r][c] = mpq_class(T[r][c]);
    a[r][S + r] = 1;
  }
  mpq_class det = 1;
  for (int c = 0; c < S; ++c) {
    int piv = -1;
    for (int r = c; r < S; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    req(piv >= 0, "Quantizer", "transition matrix is singular");
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    mpq_class inv_piv = 1 / a[c][c];
    for (int j = c; j < 2 * S; ++j) a[c][j] *= inv_piv;
    for (int r = 0; r < S; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (int j = c; j < 2 * S; ++j) a[r][j] -= f * a[c][j];
    }
  }
  req(det == 1 || det == -1, "Quantizer", "transition determinant is not a unit");
  inv.assign(S, std::vector<mpz_class>(S, 0));
  for (int r = 0; r < S; ++r)
    for (int c = 0; c < S; ++c) {
      mpq_class v = a[r][S + c];
      req(v.get_den() == 1, "Quantizer", "inverse transition is not integral");
      inv[r][c] = v.get_num();
    }

  // quantized images of the basis products
  ehat_prod.reserve(S);
  for (int cidx = 0; cidx < S; ++cidx) {
    QPoly prod = QPoly::one(nr, nx, nq, qcap);
    for (int k = 1; k <= m - 1; ++k)
      prod = prod * ehat_family(nr, nx, nq, qcap, k, tuples[cidx][k - 1]);
    ehat_prod.push_back(std::move(prod));
  }
}

QPoly Quantizer::apply(const QPoly& f) const {
  req(f.nr == nr && f.nx == nx && f.nq == nq && f.qcap == qcap, "Quantizer::apply",
      "shape mismatch");
  const int S = int(tuples.size());
  std::map<std::vector<int>, int> idx;
  for (int r = 0; r < S; ++r) idx[monos[r]] = r;
  std::vector<GroupAlg> v(S);
  for (const auto& [k, c] : f.t) {
    req(QPoly::total(k.qd) == 0, "Quantizer::apply", "input must be free of Q-variables");
    auto it = idx.find(k.xd);
    req(it != idx.end(), "Quantizer::apply", "input leaves the staircase span");
    v[it->second] = c;
  }
  QPoly out(nr, nx, nq, qcap);
  for (int p = 0; p < S; ++p) {
    GroupAlg cp;
    for (int r = 0; r < S; ++r)
      if (!v[r].is_zero() && inv[p][r] != 0) cp = cp + v[r] * inv[p][r];
    if (!cp.is_zero()) out = out + ehat_prod[p] * cp;
  }
  return out;
}

// ----- level engines -----------------------------------------------------------------

QuotientRing level_quotient(int m, bool quantum, int qcap) {
  if (m < 1) throw std::invalid_argument("level_quotient: m >= 1");
  if (!quantum) {
    std::vector<QPoly> gens, main = ideal_generators(m - 1, false, 0);
    for (int i = 1; i <= m; ++i) {
      gens.push_back(ff_family(m - 1, m, 0, 0, m, i));
      req(reshape(gens.back(), m, m - 1, 0) == main[i - 1], "level_quotient",
          "classical family disagrees with the presentation generator");
    }
    return esym_quotient(m - 1, m, 0, 0, gens);
  }
  // quantum: keep the top variable Q_m; dropping it must recover the
  // presentation generators, which never carry Q_m
  std::vector<QPoly> gens, main = ideal_generators(m - 1, true, qcap);
  for (int i = 1; i <= m; ++i) {
    gens.push_back(fhat_family(m - 1, m, m, qcap, m, i));
    req(gens.back().q_zero(m) == reshape(main[i - 1], m, m, qcap), "level_quotient",
        "quantum family at top Q = 0 disagrees with the presentation generator");
  }
  return esym_quotient(m - 1, m, m, qcap, gens);
}

// ----- verifications -----------------------------------------------------------------

void verify_demazure_gates(int m) {
  const char* me = "verify_demazure_gates";
  if (m < 2) throw std::invalid_argument("verify_demazure_gates: m >= 2");
  const int nr = m - 1, nx = m;
  QPoly one = QPoly::one(nr, nx, 0, 0);
  auto x = [&](int j) { return QPoly::x_var(nr, nx, 0, 0, j); };

  // closed-form gates on single monomials
  req(divided_difference(x(1), 1) == one, me, "dd(x_1) != 1");
  req(divided_difference(x(2), 1) == -one, me, "dd(x_2) != -1");
  req(divided_difference(x(1) * x(2), 1).is_zero(), me, "dd(x_1 x_2) != 0");
  req(divided_difference(x(1) * x(1), 1) == x(1) + x(2), me, "dd(x_1^2) != x_1 + x_2");

  for (int i = 1; i <= m - 1; ++i) req(demazure_pi(one, i) == one, me, "pi_i(1) != 1");

  // the rank-one Grothendieck factor collapses to 1
  GroupAlg y1 = y_class(nr, 1);
  QPoly g1 = x(1) * (GroupAlg::one(nr) - y1) + QPoly::constant(nr, nx, 0, 0, y1);
  req(demazure_pi(g1, 1) == one, me, "pi_1(x_1 + y_1 - x_1 y_1) != 1");

  // symmetric inputs are fixed; images are idempotent
  QPoly top = grothendieck(nr, nx, 0, 0, Perm::longest(m));
  for (int i = 1; i <= m - 1; ++i) {
    QPoly e2 = elementary_x(nr, nx, 0, 0, m, std::min(2, m));
    req(demazure_pi(e2, i) == e2, me, "pi_i does not fix a symmetric polynomial");
    QPoly im = demazure_pi(top, i);
    req(demazure_pi(im, i) == im, me, "pi_i is not idempotent on its image");
  }

  // braid and commutation relations on a generic input
  if (m >= 3) {
    QPoly f = top * x(1) + x(2) * x(2);
    req(demazure_pi(demazure_pi(demazure_pi(f, 1), 2), 1) ==
            demazure_pi(demazure_pi(demazure_pi(f, 2), 1), 2),
        me, "braid relation fails");
    if (m >= 4)
      req(demazure_pi(demazure_pi(f, 1), 3) == demazure_pi(demazure_pi(f, 3), 1), me,
          "distant operators do not commute");
  }

  // chain value is independent of the reduced word
  for (const Perm& w : all_elements(m)) {
    Perm u = Perm::longest(m) * w;
    auto words = all_reduced_words(u, 3);
    QPoly ref;
    bool first = true;
    for (const auto& word : words) {
      QPoly g = top;
      for (int a : word) g = demazure_pi(g, a);
      if (first) {
        ref = g;
        first = false;
      } else {
        req(g == ref, me, "chain value depends on the reduced word");
      }
    }
    req(ref == grothendieck(nr, nx, 0, 0, w), me, "chain disagrees with grothendieck()");
  }
}

void verify_family_transforms(int kmax) {
  const char* me = "verify_family_transforms";
  const int nr = kmax - 1, nx = kmax, nq = kmax, qcap = 2;
  for (int k = 1; k <= kmax; ++k) {
    for (int p = 0; p <= k; ++p) {
      // quantized elementary drops to the classical one at Q = 0
      req(ehat_family(nr, nx, nq, qcap, k, p).q_zero_all() ==
              elementary_x(nr, nx, nq, qcap, k, p),
          me, "ehat at Q = 0 is not e_p");
      // inverse binomial transform recovers the f-family
      QPoly s(nr, nx, nq, qcap);
      for (int i = 0; i <= p; ++i) {
        QPoly add = ehat_family(nr, nx, nq, qcap, k, i) * binom(k - i, p - i);
        s = (i % 2 == 0) ? s + add : s - add;
      }
      req(s == f_family(nr, nx, nq, qcap, k, p), me, "inverse transform does not recover F");
      // tail-subtracted pair agrees at Q = 0 (defined for p >= 1)
      if (p >= 1)
        req(fhat_family(nr, nx, nq, qcap, k, p).q_zero_all() == ff_family(nr, nx, nq, qcap, k, p),
            me, "fhat at Q = 0 is not ff");
    }
  }
}

void verify_family_bases(int k) {
  const char* me = "verify_family_bases";
  const int nr = k, nx = k;
  // all tuples (i_1..i_k), 0 <= i_j <= j, against the staircase a_j <= k+1-j
  std::vector<std::vector<int>> tuples{{}};
  for (int j = 1; j <= k; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int i = 0; i <= j; ++i) {
        next.push_back(t);
        next.back().push_back(i);
      }
    tuples = std::move(next);
  }
  std::vector<std::vector<int>> monos{{}};
  for (int j = 1; j <= k; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& t : monos)
      for (int a = 0; a <= k + 1 - j; ++a) {
        next.push_back(t);
        next.back().push_back(a);
      }
    monos = std::move(next);
  }
  const int S = int(tuples.size());
  req(int(monos.size()) == S, "verify_family_bases", "count mismatch");
  std::map<std::vector<int>, int> idx;
  for (int r = 0; r < S; ++r) idx[monos[r]] = r;

  std::vector<std::vector<GroupAlg>> M(S, std::vector<GroupAlg>(S));
  for (int c = 0; c < S; ++c) {
    QPoly prod = QPoly::one(nr, nx, 0, 0);
    // an index of 0 means the level-j factor is absent from the product
    for (int j = 1; j <= k; ++j)
      if (tuples[c][j - 1] > 0) prod = prod * ff_family(nr, nx, 0, 0, j, tuples[c][j - 1]);
    for (const auto& [key, coef] : prod.t) {
      auto it = idx.find(key.xd);
      req(it != idx.end(), me, "family product leaves the staircase");
      M[it->second][c] = coef;
    }
  }
  GroupAlg det = bareiss_det(std::move(M), nr);
  req(!det.is_zero() && det.is_monomial() && det.content() == 1, me,
      "family transition determinant is not a unit monomial");
}

void verify_stability(int n, int kmax, int qcap) {
  const char* me = "verify_stability";
  const int nr = n - 1, nx = kmax, nq = kmax;
  QPoly qone = QPoly::one(nr, nx, nq, qcap);
  for (int j = n + 1; j <= kmax; ++j) {
    for (int i = 1; i <= j; ++i) {
      // quantum collapse: x_{n+1..j} -> 1 and Q_{n..j} -> 0
      QPoly lhs = fhat_family(nr, nx, nq, qcap, j, i);
      for (int l = n + 1; l <= j; ++l) lhs = lhs.subst_x(l, qone);
      for (int t = n; t <= j; ++t) lhs = lhs.q_zero(t);
      QPoly rhs = (i <= n) ? fhat_family(nr, nx, nq, qcap, n, i).q_zero(n)
                           : QPoly(nr, nx, nq, qcap);
      req(lhs == rhs, me, "quantum family does not collapse to level n");

      // classical collapse: x_{n+1..j} -> 1
      QPoly cone = QPoly::one(nr, nx, 0, 0);
      QPoly cl = ff_family(nr, nx, 0, 0, j, i);
      for (int l = n + 1; l <= j; ++l) cl = cl.subst_x(l, cone);
      QPoly cr = (i <= n) ? ff_family(nr, nx, 0, 0, n, i) : QPoly(nr, nx, 0, 0);
      req(cl == cr, me, "classical family does not collapse to level n");
    }
  }

  // full products with a factor above level n land in the level-n ideal
  QuotientRing R = level_quotient(n, false, 0);
  std::vector<std::vector<int>> tuples{{}};
  for (int j = 1; j <= n + 1; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int i = (j == n + 1 ? 1 : 0); i <= j; ++i) {
        next.push_back(t);
        next.back().push_back(i);
      }
    tuples = std::move(next);
  }
  QPoly pone = QPoly::one(nr, n + 1, 0, 0);
  for (const auto& t : tuples) {
    QPoly prod = pone;
    for (int j = 1; j <= n + 1; ++j)
      if (t[j - 1] > 0) prod = prod * ff_family(nr, n + 1, 0, 0, j, t[j - 1]);
    req(R.contains(reshape(prod.subst_x(n + 1, pone), n, 0, 0)), me,
        "collapsed product escapes the level-n ideal");
  }
}

void verify_eta_membership(int m) {
  const char* me = "verify_eta_membership";
  const int nr = m - 1, nx = m;
  QPoly eta = eta_poly(nr, nx, 0, 0, 1, m);
  // explicit witness: eta^m(x_1) + sum_s (x_1 - 1)^s ff^{(m)}_{m-s} vanishes
  QPoly acc = eta;
  QPoly x1m1 = QPoly::x_var(nr, nx, 0, 0, 1) - QPoly::one(nr, nx, 0, 0);
  for (int s = 0; s <= m - 1; ++s)
    acc = acc + x1m1.pow(s) * ff_family(nr, nx, 0, 0, m, m - s);
  req(acc.is_zero(), me, "witness combination does not vanish");
  req(level_quotient(m, false, 0).contains(eta), me, "eta is not in the level ideal");
}

long verify_dominant_grothendieck(int N) {
  const char* me = "verify_dominant_grothendieck";
  const int nr = N - 2, nx = N;
  long count = 0;
  for (const Perm& w : all_elements(N)) {
    if (!is_dominant(w)) continue;
    std::vector<int> c = code_of(w);
    QPoly prod = QPoly::one(nr, nx, 0, 0);
    for (int i = 1; i <= N - 1; ++i) prod = prod * eta_poly(nr, nx, 0, 0, i, c[i - 1]);
    req(grothendieck(nr, nx, 0, 0, w) == prod, me, "chain disagrees with the code product");
    ++count;
  }
  return count;
}

long verify_grothendieck_membership(int m, bool exact, std::uint64_t seed) {
  const char* me = "verify_grothendieck_membership";
  QuotientRing R = level_quotient(m, false, 0);
  FpQuotient F;
  if (!exact) F = modp_quotient(R, seed);
  long count = 0;
  for (const Perm& w : all_elements(m + 1)) {
    QPoly g = reshape(grothendieck(m - 1, m + 1, 0, 0, w), m, 0, 0);
    bool member = exact ? R.contains(g) : F.contains(g);
    if (w(m + 1) != m + 1) {
      req(member, me, "polynomial of a moving permutation escapes the ideal");
      ++count;
    } else {
      // control: classes of the fixing subgroup stay nonzero in the quotient
      req(!member, me, "polynomial of a fixing permutation lands in the ideal");
    }
  }
  return count;
}

long verify_quantized_grothendieck_membership(int m, int qcap) {
  const char* me = "verify_quantized_grothendieck_membership";
  QuotientRing RQ = level_quotient(m, true, qcap);
  Quantizer Qz(m + 1, m - 1, qcap);
  long exact_zero = 0;
  for (const Perm& w : all_elements(m + 1)) {
    if (w(m + 1) == m + 1) continue;
    QPoly g = reshape(grothendieck(m - 1, m + 1, 0, 0, w), m + 1, m, qcap);
    QPoly r = RQ.nf(reshape(Qz.apply(g), m, m, qcap));
    req(r.q_zero(m).is_zero(), me,
        "quantized polynomial escapes the ideal modulo the top Novikov variable");
    if (r.is_zero()) ++exact_zero;
  }
  return exact_zero;
}

long verify_quantized_family_membership(int n, int qcap) {
  const char* me = "verify_quantized_family_membership";
  const int nr = n - 1, m = n + 2;
  QuotientRing RQ = level_quotient(n, true, qcap);
  Quantizer Qz(m, nr, qcap);
  std::vector<std::vector<int>> tuples{{}};
  for (int j = 1; j <= n + 1; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int i = (j == n + 1 ? 1 : 0); i <= j; ++i) {
        next.push_back(t);
        next.back().push_back(i);
      }
    tuples = std::move(next);
  }
  QPoly pone = QPoly::one(nr, m, 0, 0);
  long exact_zero = 0;
  for (const auto& t : tuples) {
    QPoly prod = pone;
    for (int j = 1; j <= n + 1; ++j)
      if (t[j - 1] > 0) prod = prod * ff_family(nr, m, 0, 0, j, t[j - 1]);
    QPoly img = Qz.apply(reshape(prod, m, m - 1, qcap));
    img = img.subst_x(n + 1, QPoly::one(nr, m, m - 1, qcap)).q_zero(n + 1);
    QPoly r = RQ.nf(reshape(img, n, n, qcap));
    req(r.q_zero(n).is_zero(), me,
        "quantized product escapes the ideal modulo the top Novikov variable");
    if (r.is_zero()) ++exact_zero;
  }
  return exact_zero;
}

}  // namespace flagk
