#include "flagk/qls.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flagk {

Rat::Rat(i64 p, i64 q) {
  if (q == 0) throw std::invalid_argument("Rat: zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  i64 g = std::gcd(p < 0 ? -p : p, q);
  if (g == 0) g = 1;
  num = p / g;
  den = q / g;
}

std::vector<int> orthogonal_simples(const Weight& nu) {
  int n = nu.rank();
  std::vector<int> J;
  for (int i = 1; i <= n; ++i)
    if (pairing(nu, Root::simple(i)) == 0) J.push_back(i);
  return J;
}

QlsCtx make_qls_ctx(int n, const Weight& nu) {
  QlsCtx ctx;
  ctx.n = n;
  ctx.nu = nu;
  ctx.J = orthogonal_simples(nu);
  ctx.full = build_qbg(n, {});
  ctx.para = build_qbg(n, ctx.J);
  ctx.para_b = build_qbg(n, ctx.J, true);
  return ctx;
}

const QbgGraph& QlsCtx::level(i64 p, i64 q, bool bruhat_only) {
  i64 g = std::gcd(p, q);
  auto key = std::make_pair(p / g, q / g);
  auto& cache = bruhat_only ? level_b_ : level_q_;
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, subgraph_at_level(bruhat_only ? para_b : para, p, q, nu)).first;
  return it->second;
}

std::vector<QlsPath> enumerate_qls(QlsCtx& ctx, bool bruhat_only) {
  // Interior cuts a = p/q in lowest terms admit an edge beta only when
  // q divides <nu, beta^vee>, so the candidate denominators are finite.
  std::set<i64> qs;
  for (const auto& edges : ctx.para.out)
    for (const Edge& e : edges) {
      i64 c = pairing(ctx.nu, e.label);
      for (i64 q = 2; q <= c; ++q)
        if (c % q == 0) qs.insert(q);
    }
  std::set<Rat> fracset;
  for (i64 q : qs)
    for (i64 p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) fracset.emplace(p, q);
  std::vector<Rat> F(fracset.begin(), fracset.end());
  std::sort(F.begin(), F.end(), [](const Rat& a, const Rat& b) { return a < b; });

  std::vector<QlsPath> res;
  std::vector<Perm> ws;
  std::vector<size_t> cutIdx;  // indices into F, strictly increasing
  auto emit = [&]() {
    QlsPath eta;
    eta.w = ws;
    eta.a.push_back(Rat(0, 1));
    for (size_t fi : cutIdx) eta.a.push_back(F[fi]);
    eta.a.push_back(Rat(1, 1));
    res.push_back(std::move(eta));
  };
  auto rec = [&](auto&& self, size_t minIdx) -> void {
    emit();
    for (size_t fi = minIdx; fi < F.size(); ++fi) {
      const QbgGraph& h = ctx.level(F[fi].num, F[fi].den, bruhat_only);
      int dst = h.id(ws.back());
      for (const Perm& w2 : h.verts) {
        if (w2 == ws.back()) continue;
        if (h.dist_row(h.id(w2)).at(dst) < 0) continue;  // need w_{l+1} -> w_l
        ws.push_back(w2);
        cutIdx.push_back(fi);
        self(self, fi + 1);
        ws.pop_back();
        cutIdx.pop_back();
      }
    }
  };
  for (const Perm& w1 : ctx.para.verts) {
    ws.assign(1, w1);
    cutIdx.clear();
    rec(rec, 0);
  }
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<QlsPath> enumerate_qls_fund(int n, int i) {
  QlsCtx ctx = make_qls_ctx(n, Weight::fund(n, i));
  return enumerate_qls(ctx);
}

PathStats path_stats(QlsCtx& ctx, const QlsPath& eta, const Perm& v) {
  const int s = int(eta.segments());
  if (s < 1 || int(eta.a.size()) != s + 1) throw std::invalid_argument("path_stats: ragged path");
  i64 D = 1;
  for (const Rat& r : eta.a) D = std::lcm(D, r.den);
  auto scaled = [&](const Rat& r) { return r.num * (D / r.den); };  // D * a_l, exact

  PathStats st;

  // weight: sum over segments of (a_l - a_{l-1}) w_l nu, asserted integral in P
  std::vector<i64> acc(ctx.n + 1, 0);
  for (int l = 1; l <= s; ++l) {
    i64 d = scaled(eta.a[l]) - scaled(eta.a[l - 1]);
    Weight wnu = act(eta.w[l - 1], ctx.nu);
    for (int k = 0; k <= ctx.n; ++k) acc[k] += d * wnu.c[k];
  }
  {
    i64 base = acc[ctx.n];
    std::vector<i64> c(ctx.n + 1, 0);
    for (int k = 0; k <= ctx.n; ++k) {
      i64 diff = acc[k] - base;
      if (diff % D != 0) throw std::logic_error("path_stats: weight is not integral");
      c[k] = diff / D;
    }
    st.wt = Weight(c);
  }

  // degree: pairings of nu with quotient-graph path weights at interior cuts
  i64 degAcc = 0;
  for (int l = 1; l <= s - 1; ++l) {
    auto [d, cw] = dist_wt(ctx.para, eta.w[l], eta.w[l - 1]);
    (void)d;
    degAcc += scaled(eta.a[l]) * pairing(ctx.nu, cw);
  }
  if (degAcc % D != 0) throw std::logic_error("path_stats: degree is not integral");
  st.deg = -degAcc / D;

  st.kappa = eta.w.back();

  // tilted-maximum chain seeded at v
  std::vector<Perm> hw(s + 1);
  hw[0] = v;
  for (int l = 1; l <= s; ++l) hw[l] = tb_max(ctx.full, eta.w[l - 1], ctx.J, hw[l - 1]);
  st.kappa_v = hw[s];
  Coroot zeta = Coroot::zero(ctx.n);
  for (int l = 0; l <= s - 1; ++l) zeta = zeta + dist_wt(ctx.full, hw[l + 1], hw[l]).second;
  st.zeta = zeta;

  // tilted-minimum chain seeded at v, consumed right to left
  std::vector<Perm> tw(s + 2);
  tw[s + 1] = v;
  for (int l = s; l >= 1; --l) tw[l] = tb_min(ctx.full, eta.w[l - 1], ctx.J, tw[l + 1]);
  st.iota = tw[1];
  Coroot xi = Coroot::zero(ctx.n);
  i64 degvAcc = 0;
  for (int l = 1; l <= s; ++l) {
    Coroot cw = dist_wt(ctx.full, tw[l + 1], tw[l]).second;
    xi = xi + cw;
    degvAcc += scaled(eta.a[l]) * pairing(ctx.nu, cw);
  }
  st.xi = xi;
  if (degvAcc % D != 0) throw std::logic_error("path_stats: twisted degree is not integral");
  st.deg_v = -degvAcc / D;

  return st;
}

namespace {

std::vector<int> complement(int n, const std::vector<int>& K) {
  std::vector<int> J;
  for (int i = 1; i <= n; ++i)
    if (std::find(K.begin(), K.end(), i) == K.end()) J.push_back(i);
  return J;
}

Weight sum_fund(int n, const std::vector<int>& K) {
  Weight mu = Weight::zero(n);
  for (int i : K) mu = mu + Weight::fund(n, i);
  return mu;
}

mpz_class sign_of(const Perm& v) { return length(v) % 2 == 0 ? mpz_class(1) : mpz_class(-1); }

}  // namespace

std::vector<Perm> dp_set(int n, const std::vector<int>& K) {
  int m = n + 1;
  std::vector<int> J = complement(n, K);
  QbgGraph bg = build_qbg(n, {}, true);
  QbgGraph full = build_qbg(n, {});
  auto dj = positive_roots_J(n, J);
  std::set<Root> sj(dj.begin(), dj.end());

  // both orders put Delta_J^+ first, as the avoidance condition requires; the
  // first also keeps Delta_K^+ last
  std::vector<std::vector<Root>> orders;
  orders.push_back(reflection_order(m, three_block_word(m, J, K)));
  orders.push_back(reflection_order(m, refa_word(m, J)));

  Perm e = Perm::identity(m);
  std::vector<Perm> result;
  for (const Perm& vtx : bg.verts) {
    bool dp = false, first = true;
    for (const auto& ord : orders) {
      DirectedPath p = li_path(bg, e, vtx, ord);
      bool ok = true;
      for (const Root& r : p.labels)
        if (sj.count(r)) {
          ok = false;
          break;
        }
      if (first) {
        dp = ok;
        first = false;
      } else if (dp != ok) {
        throw std::logic_error("dp_set: membership depended on the reflection order");
      }
    }
    // order-free characterization: the coset maximum of e W_J in the dual
    // v-tilted order is e itself
    bool tilted = tb_max(full, e, J, vtx) == e;
    if (dp != tilted)
      throw std::logic_error("dp_set: label avoidance disagrees with the tilted maximum");
    if (dp) result.push_back(vtx);
  }
  std::sort(result.begin(), result.end());
  return result;
}

SMod expand_antidominant(int n, const std::vector<int>& K) {
  std::vector<Perm> dp = dp_set(n, K);
  std::vector<Perm> wk = subgroup_WJ(n + 1, K);
  std::sort(wk.begin(), wk.end());
  if (dp != wk) throw std::logic_error("expand_antidominant: support set is not W_K");

  Weight mu = sum_fund(n, K);
  GroupAlg em = e_nu(Weight::zero(n) - mu);
  SMod r = SMod::zero(n);
  for (const Perm& v : wk)
    r.add_term({v, Coroot::zero(n), Weight::zero(n)}, em * sign_of(v));
  return r;
}

SMod expand_mixed_equivariant(int n, const std::vector<int>& K, int m, i64 cap) {
  if (m < 1 || m > n || std::find(K.begin(), K.end(), m) != K.end())
    throw std::invalid_argument("expand_mixed: m must be a simple index outside K");
  QlsCtx ctx = make_qls_ctx(n, Weight::fund(n, m));
  std::vector<QlsPath> paths = enumerate_qls(ctx);
  if (paths.size() != ctx.para.verts.size())
    throw std::logic_error("expand_mixed: fundamental-shape path count is off");

  Weight mu = sum_fund(n, K);
  Coroot am = Coroot::simple(n, m);
  SMod r = SMod::zero(n);
  for (const Perm& v : subgroup_WJ(n + 1, K)) {
    mpz_class sgn = sign_of(v);
    for (const QlsPath& eta : paths) {
      if (eta.segments() != 1)
        throw std::logic_error("expand_mixed: fundamental shape gave a multi-segment path");
      PathStats st = path_stats(ctx, eta, v);
      if (!(st.xi == Coroot::zero(n)) || st.deg_v != 0)
        throw std::logic_error("expand_mixed: tilted-minimum chain escaped the Bruhat cone");
      GroupAlg coef = e_nu(st.wt - mu) * sgn;
      for (i64 c = 0; c <= cap; ++c) r.add_term({st.iota, am * c, Weight::zero(n)}, coef);
    }
  }
  return r;
}

SMod expand_mixed_z2(int n, const std::vector<int>& K, int m, i64 cap) {
  if (m < 1 || m > n || std::find(K.begin(), K.end(), m) != K.end())
    throw std::invalid_argument("expand_mixed: m must be a simple index outside K");
  std::vector<int> IM = complement(n, std::vector<int>{m});  // I \ {m}
  std::vector<int> IK = complement(n, K);                    // I \ K

  std::vector<Perm> ws;
  for (const Perm& w : subgroup_WJ(n + 1, IK))
    if (is_min_rep(w, IM)) ws.push_back(w);

  Weight mu = sum_fund(n, K);
  Weight vm = Weight::fund(n, m);
  Coroot am = Coroot::simple(n, m);
  SMod r = SMod::zero(n);
  std::set<SKey> seen;
  for (const Perm& v : subgroup_WJ(n + 1, K)) {
    mpz_class sgn = sign_of(v);
    for (const Perm& w : ws) {
      Perm y = w * v;
      if (!(up(n, v, w, IM) == y))
        throw std::logic_error("expand_mixed: coset minimum is not the plain product");
      GroupAlg coef = e_nu(act(w, vm) - mu) * sgn;
      for (i64 c = 0; c <= cap; ++c) {
        SKey k{y, am * c, Weight::zero(n)};
        if (!seen.insert(k).second) throw std::logic_error("expand_mixed: symbols collide");
        r.add_term(k, coef);
      }
    }
  }
  return r;
}

SMod expand_mixed(int n, const std::vector<int>& K, int m, i64 cap) {
  std::vector<int> IM = complement(n, std::vector<int>{m});
  std::vector<Perm> wk = subgroup_WJ(n + 1, K);

  // descent rewriting: replacing v by s_k v (or by the first K-letter of a
  // reduced word for w) does not move the coset minimum over w W_{I\{m}}
  for (const Perm& w : min_reps(n + 1, IM)) {
    for (int k : K) {
      Perm skw = Perm::simple(n + 1, k) * w;
      if (length(skw) < length(w))
        for (const Perm& v : wk)
          if (!(up(n, v, w, IM) == up(n, Perm::simple(n + 1, k) * v, w, IM)))
            throw std::logic_error("expand_mixed: descent rewriting failed");
    }
    std::vector<int> rw = reduced_word(w);
    for (int t : rw)
      if (std::find(K.begin(), K.end(), t) != K.end()) {
        for (const Perm& v : wk)
          if (!(up(n, v, w, IM) == up(n, Perm::simple(n + 1, t) * v, w, IM)))
            throw std::logic_error("expand_mixed: leading-letter rewriting failed");
        break;
      }
  }

  SMod a = expand_mixed_equivariant(n, K, m, cap);
  SMod b = expand_mixed_z2(n, K, m, cap);
  if (!(a == b))
    throw std::logic_error("expand_mixed: path-indexed and cancellation-free forms disagree");
  return b;
}

}  // namespace flagk
