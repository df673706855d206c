#include "flagk/walks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace flagk {

namespace {

Perm word_product(int m, const std::vector<int>& word) {
  Perm p = Perm::identity(m);
  for (int i : word) p = p * Perm::simple(m, i);
  return p;
}

}  // namespace

EtaSeq make_eta_seq(int n, const std::vector<int>& xword, const std::vector<int>& yword) {
  int mm = n + 1;
  if (!is_reduced_word(mm, xword) || !is_reduced_word(mm, yword))
    throw std::invalid_argument("make_eta_seq: words must be reduced");
  EtaSeq seq;
  seq.n = n;
  seq.x = word_product(mm, xword);
  seq.y = word_product(mm, yword);
  seq.l = int(xword.size());
  seq.m = int(yword.size());

  // beta block, already in walk order: prefix inversions of the first word
  Perm pre = Perm::identity(mm);
  for (int u = 0; u < seq.l; ++u) {
    SignedRoot sr = act(pre, Root::simple(xword[u]));
    if (sr.sign < 0) throw std::logic_error("make_eta_seq: negative beta label");
    seq.eta.push_back(sr.r);
    pre = pre * Perm::simple(mm, xword[u]);
  }

  // gamma block: gamma_r = s_{c_m}...s_{c_{r+1}} alpha_{c_r}, computed from
  // the right end of the second word inward
  std::vector<Root> gamma(seq.m, Root::simple(1));
  Perm tailrev = Perm::identity(mm);
  for (int r = seq.m; r >= 1; --r) {
    SignedRoot sr = act(tailrev, Root::simple(yword[r - 1]));
    if (sr.sign < 0) throw std::logic_error("make_eta_seq: negative gamma label");
    gamma[r - 1] = sr.r;
    tailrev = tailrev * Perm::simple(mm, yword[r - 1]);
  }
  for (const Root& g : gamma) seq.eta.push_back(g);
  return seq;
}

EtaSeq eta_for_varpi1(int n) {
  std::vector<int> yword;
  for (int i = n; i >= 1; --i) yword.push_back(i);
  EtaSeq seq = make_eta_seq(n, {}, yword);
  // y is the minimal coset representative of w_circ modulo stabilizing
  // varpi_1, and the labels descend alpha_{1,n}, ..., alpha_{1,1}
  std::vector<int> J;
  for (int i = 2; i <= n; ++i) J.push_back(i);
  if (!(seq.y == min_coset_rep(Perm::longest(n + 1), J)))
    throw std::logic_error("eta_for_varpi1: wrong coset representative");
  for (int r = 1; r <= n; ++r)
    if (!(seq.eta[r - 1] == Root(1, n + 1 - r)))
      throw std::logic_error("eta_for_varpi1: unexpected label");
  return seq;
}

std::vector<Walk> enumerate_walks(const QbgGraph& full, const EtaSeq& seq, const Perm& start) {
  std::vector<Walk> res;
  Walk cur;
  cur.w.push_back(start);
  size_t L = seq.steps();
  auto rec = [&](auto&& self, size_t r) -> void {
    if (r == L) {
      res.push_back(cur);
      return;
    }
    // stay
    cur.w.push_back(cur.w.back());
    cur.crossed.push_back(0);
    cur.quantum.push_back(0);
    self(self, r + 1);
    cur.w.pop_back();
    cur.crossed.pop_back();
    cur.quantum.pop_back();
    // cross, when the quantum graph has the edge
    const Perm& prev = cur.w.back();
    SignedRoot sr = act(prev.inv(), seq.eta[r]);
    Perm next = prev * Perm::reflection(prev.size(), sr.r);
    int dst = full.id(next);
    for (const Edge& e : full.out[full.id(prev)])
      if (e.dst == dst) {
        cur.w.push_back(next);
        cur.crossed.push_back(1);
        cur.quantum.push_back(e.quantum ? 1 : 0);
        self(self, r + 1);
        cur.w.pop_back();
        cur.crossed.pop_back();
        cur.quantum.pop_back();
        break;
      }
  };
  rec(rec, 0);
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<int> stay_support_minus(const EtaSeq& seq, const Walk& wk) {
  std::vector<int> s;
  for (int r = 1; r <= seq.l; ++r) {
    if (wk.crossed[r - 1]) continue;
    SignedRoot sr = act(wk.w[r - 1].inv(), seq.eta[r - 1]);
    if (sr.sign > 0 && sr.r.i == sr.r.j) s.push_back(r);
  }
  return s;
}

std::vector<int> stay_support_plus(const EtaSeq& seq, const Walk& wk) {
  std::vector<int> s;
  for (int r = seq.l + 1; r <= seq.l + seq.m; ++r) {
    if (wk.crossed[r - 1]) continue;
    SignedRoot sr = act(wk.w[r - 1].inv(), seq.eta[r - 1]);
    if (sr.sign < 0 && sr.r.i == sr.r.j) s.push_back(r);
  }
  return s;
}

std::vector<Decorated> enumerate_decorated(const QbgGraph& full, const EtaSeq& seq,
                                           const Perm& start) {
  std::vector<Decorated> res;
  for (const Walk& wk : enumerate_walks(full, seq, start)) {
    std::vector<int> S = stay_support_minus(seq, wk);
    for (int r : stay_support_plus(seq, wk)) S.push_back(r);
    std::sort(S.begin(), S.end());
    size_t card = S.size();
    for (size_t mask = 0; mask < (size_t(1) << card); ++mask) {
      Decorated d;
      d.walk = wk;
      for (size_t i = 0; i < card; ++i) d.b[S[i]] = int((mask >> i) & 1);
      res.push_back(std::move(d));
    }
  }
  return res;
}

DecoStats deco_stats(const EtaSeq& seq, const Decorated& dw) {
  const Walk& wk = dw.walk;
  int n = seq.n;
  Perm w0 = Perm::longest(n + 1);
  std::set<int> sminus, splus;
  for (int r : stay_support_minus(seq, wk)) sminus.insert(r);
  for (int r : stay_support_plus(seq, wk)) splus.insert(r);

  DecoStats st;
  st.wt = Weight::zero(n);
  st.wtv = Coroot::zero(n);
  int sign = 1;
  for (int r = 1; r <= seq.l + seq.m; ++r) {
    bool crossed = wk.crossed[r - 1];
    bool quantum = crossed && wk.quantum[r - 1];
    if (crossed) {
      // a crossing drops in Bruhat order exactly when the edge is quantum
      if (r <= seq.l && quantum) sign = -sign;
      if (r > seq.l && !quantum) sign = -sign;
    }
    i64 coef = 0;
    if (r <= seq.l) {
      if (sminus.count(r))
        coef = -dw.b.at(r);
      else if (quantum)
        coef = 1;
    } else {
      if (splus.count(r))
        coef = dw.b.at(r);
      else if (quantum)
        coef = 1;
    }
    if (dw.b.count(r)) sign = dw.b.at(r) ? -sign : sign;
    if (coef != 0) {
      const Perm winv = wk.w[r - 1].inv();
      Weight c = act(w0, act(winv, seq.eta[r - 1].as_weight(n)));
      st.wt = st.wt + c * coef;
      Coroot cv = act(w0, act(winv, Coroot::of_root(n, seq.eta[r - 1])));
      st.wtv = st.wtv + cv * coef;
    }
  }
  st.sign = sign;
  if (!st.wtv.is_nonneg()) throw std::logic_error("deco_stats: coweight left the positive cone");
  return st;
}

namespace {

Perm s1_to(int m, int k) {  // s_1 s_2 ... s_k
  Perm p = Perm::identity(m);
  for (int i = 1; i <= k; ++i) p = p * Perm::simple(m, i);
  return p;
}

}  // namespace

std::vector<QW1Class> classify_QW1(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("classify_QW1: need 0 <= k <= n");
  QbgGraph full = build_qbg(n, {});
  EtaSeq seq = eta_for_varpi1(n);
  Perm w = s1_to(n + 1, k);
  std::vector<Walk> walks = enumerate_walks(full, seq, w);

  std::vector<QW1Class> out;
  bool sawConstant = false, sawBruhat = false;
  std::set<int> sawRun;
  for (const Walk& wk : walks) {
    bool constant = std::all_of(wk.crossed.begin(), wk.crossed.end(),
                                [](char c) { return c == 0; });
    if (constant) {
      out.push_back({QW1Form::Constant, 0});
      sawConstant = true;
      continue;
    }
    std::vector<int> crossings;
    for (int r = 1; r <= n; ++r)
      if (wk.crossed[r - 1]) crossings.push_back(r);
    if (crossings.size() == 1 && crossings[0] == n - k && !wk.quantum[n - k - 1]) {
      // single Bruhat step at r = n-k labeled alpha_{k+1}
      if (!(wk.w.back() == s1_to(n + 1, k + 1)))
        throw std::logic_error("classify_QW1: stray Bruhat step");
      out.push_back({QW1Form::BruhatStep, 0});
      sawBruhat = true;
      continue;
    }
    // remaining shape: quantum run at steps n-k+1 .. n-m+1
    int first = crossings.front();
    int mval = n + 1 - (first + int(crossings.size()) - 1);
    bool contiguous = true;
    for (size_t t = 0; t < crossings.size(); ++t) {
      int r = crossings[t];
      if (r != first + int(t) || !wk.quantum[r - 1]) contiguous = false;
    }
    if (!contiguous || first != n - k + 1 || mval < 1 || mval > k)
      throw std::logic_error("classify_QW1: walk fits no expected shape");
    if (!(wk.w.back() == s1_to(n + 1, mval - 1)))
      throw std::logic_error("classify_QW1: quantum run landed badly");
    out.push_back({QW1Form::QuantumRun, mval});
    sawRun.insert(mval);
  }

  if (!sawConstant) throw std::logic_error("classify_QW1: constant walk missing");
  if (k == n && sawBruhat) throw std::logic_error("classify_QW1: Bruhat step should vanish");
  if (k < n && !sawBruhat) throw std::logic_error("classify_QW1: Bruhat step missing");
  if (k == 0 && !sawRun.empty()) throw std::logic_error("classify_QW1: runs should vanish");
  for (int mv = 1; mv <= k; ++mv)
    if (!sawRun.count(mv)) throw std::logic_error("classify_QW1: a quantum run is missing");
  if (out.size() != size_t(1 + (k < n ? 1 : 0) + k))
    throw std::logic_error("classify_QW1: wrong walk count");
  return out;
}

std::pair<SMod, SMod> inv_chevalley(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("inv_chevalley: need 0 <= k <= n");
  QbgGraph full = build_qbg(n, {});
  EtaSeq seq = eta_for_varpi1(n);
  int mm = n + 1;
  Perm w0 = Perm::longest(mm);
  Perm w = s1_to(mm, k);

  SMod left = SMod::sym(n, w, Coroot::zero(n), Weight::zero(n), e_nu(Weight::fund(n, 1)));

  SMod right = SMod::zero(n);
  for (const Decorated& dw : enumerate_decorated(full, seq, w)) {
    DecoStats st = deco_stats(seq, dw);
    Coroot tr = act(w0, st.wtv) * (-1);
    if (!tr.is_nonneg()) throw std::logic_error("inv_chevalley: negative translation");
    // l = 0 here, so the twist base point is the walk start
    Weight tw = act(w0, act(dw.walk.w[seq.l].inv(), Weight::fund(n, 1))) * (-1) + st.wt;
    right.add_term({dw.walk.w.back(), tr, tw}, GroupAlg::one(n) * mpz_class(st.sign));
  }

  // closed five-group display
  SMod disp = SMod::zero(n);
  Weight tau = act(w0, Weight::eps(n, k + 1)) * (-1);
  disp.add_term({w, Coroot::zero(n), tau}, GroupAlg::one(n));
  if (k >= 1) {
    Weight shift = act(w0, Root(k, k).as_weight(n));
    disp.add_term({w, Coroot::simple(n, k), tau - shift}, GroupAlg::one(n) * mpz_class(-1));
  }
  if (k < n)
    disp.add_term({s1_to(mm, k + 1), Coroot::zero(n), tau}, GroupAlg::one(n) * mpz_class(-1));
  for (int m = 1; m <= k; ++m) {
    Weight shift = act(w0, Root(m, k).as_weight(n));
    disp.add_term({s1_to(mm, m - 1), Coroot::of_root(n, Root(m, k)), tau - shift},
                  GroupAlg::one(n));
  }
  for (int m = 2; m <= k; ++m) {
    Weight shift = act(w0, Root(m - 1, k).as_weight(n));
    disp.add_term({s1_to(mm, m - 1), Coroot::of_root(n, Root(m - 1, k)), tau - shift},
                  GroupAlg::one(n) * mpz_class(-1));
  }

  if (!(right == disp))
    throw std::logic_error("inv_chevalley: walk assembly disagrees with the closed display");
  return {left, right};
}

std::pair<SMod, SMod> inv_chevalley_cor(int n, int k) {
  auto [left, right] = inv_chevalley(n, k);
  int mm = n + 1;
  Perm w0 = Perm::longest(mm);
  Weight shift = act(w0, Weight::eps(n, k + 1));

  SMod corL = SMod::zero(n);
  if (k < n) corL = SMod::sym(n, s1_to(mm, k + 1), Coroot::zero(n), Weight::zero(n));

  SMod corR = right.twisted(shift) + corL - left.twisted(shift);

  // direct display of the rearranged form
  SMod disp = SMod::zero(n);
  Perm w = s1_to(mm, k);
  disp.add_term({w, Coroot::zero(n), shift},
                e_nu(Weight::fund(n, 1)) * mpz_class(-1));
  disp.add_term({w, Coroot::zero(n), Weight::zero(n)}, GroupAlg::one(n));
  for (int m = 1; m <= k; ++m) {
    Weight tw = shift - act(w0, Weight::eps(n, m));
    Coroot xi = Coroot::of_root(n, Root(m, k));
    disp.add_term({s1_to(mm, m - 1), xi, tw}, GroupAlg::one(n));
    disp.add_term({s1_to(mm, m), xi, tw}, GroupAlg::one(n) * mpz_class(-1));
  }
  if (!(corR == disp))
    throw std::logic_error("inv_chevalley_cor: rearrangement disagrees with the display");
  return {corL, corR};
}

}  // namespace flagk
