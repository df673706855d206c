#include "flagk/qbg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace flagk {

int QbgGraph::id(const Perm& w) const {
  auto it = vid.find(w);
  if (it == vid.end()) throw std::invalid_argument("QbgGraph: vertex not in W^J");
  return it->second;
}

size_t QbgGraph::num_edges() const {
  size_t s = 0;
  for (const auto& v : out) s += v.size();
  return s;
}

const std::vector<int>& QbgGraph::dist_row(int src) const {
  auto it = dist_cache_.find(src);
  if (it != dist_cache_.end()) return it->second;
  std::vector<int> d(verts.size(), -1);
  d[src] = 0;
  std::deque<int> q{src};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (const Edge& e : out[x])
      if (d[e.dst] < 0) {
        d[e.dst] = d[x] + 1;
        q.push_back(e.dst);
      }
  }
  return dist_cache_.emplace(src, std::move(d)).first->second;
}

QbgGraph build_qbg(int n, const std::vector<int>& J, bool bruhat_only) {
  QbgGraph g;
  g.n = n;
  g.J = J;
  g.bruhat_only = bruhat_only;
  int m = n + 1;
  g.verts = min_reps(m, J);
  std::sort(g.verts.begin(), g.verts.end());
  for (int i = 0; i < int(g.verts.size()); ++i) g.vid.emplace(g.verts[i], i);
  g.out.assign(g.verts.size(), {});

  std::set<Root> dj;
  for (const Root& r : positive_roots_J(n, J)) dj.insert(r);
  Weight rho2 = two_rho(n), rho2J = two_rho_J(n, J);

  for (int xi = 0; xi < int(g.verts.size()); ++xi) {
    const Perm& x = g.verts[xi];
    int lx = length(x);
    for (const Root& a : positive_roots(n)) {
      if (dj.count(a)) continue;  // labels lie in Delta^+ \ Delta_J^+
      Perm y = min_coset_rep(x * Perm::reflection(m, a), J);
      if (y == x) continue;
      int ly = length(y);
      bool bruhat = (ly == lx + 1);
      bool quantum = !bruhat_only && (ly == lx + 1 - pairing(rho2 - rho2J, a));
      if (bruhat || quantum)
        g.out[xi].push_back(Edge{xi, g.id(y), a, !bruhat});
    }
  }
  return g;
}

namespace {

std::map<Root, int> order_pos(const std::vector<Root>& order) {
  std::map<Root, int> pos;
  for (int i = 0; i < int(order.size()); ++i) pos.emplace(order[i], i);
  return pos;
}

}  // namespace

long long count_li_paths(const QbgGraph& g, const Perm& v, const Perm& w,
                         const std::vector<Root>& order) {
  auto pos = order_pos(order);
  int target = g.id(w);
  // cnt[x][t]: label-increasing paths x -> w using labels at positions >= t
  std::map<std::pair<int, int>, long long> memo;
  auto rec = [&](auto&& self, int x, int t) -> long long {
    auto key = std::make_pair(x, t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long c = (x == target) ? 1 : 0;
    for (const Edge& e : g.out[x]) {
      int p = pos.at(e.label);
      if (p >= t) c += self(self, e.dst, p + 1);
    }
    memo.emplace(key, c);
    return c;
  };
  return rec(rec, g.id(v), 0);
}

DirectedPath li_path(const QbgGraph& g, const Perm& v, const Perm& w,
                     const std::vector<Root>& order) {
  auto pos = order_pos(order);
  int target = g.id(w);
  DirectedPath path;
  path.verts.push_back(v);
  // greedy-with-backtracking; the path is unique when it exists
  auto rec = [&](auto&& self, int x, int t) -> bool {
    if (x == target) return true;
    for (const Edge& e : g.out[x]) {
      int p = pos.at(e.label);
      if (p < t) continue;
      path.verts.push_back(g.at(e.dst));
      path.labels.push_back(e.label);
      path.quantum.push_back(e.quantum);
      if (self(self, e.dst, p + 1)) return true;
      path.verts.pop_back();
      path.labels.pop_back();
      path.quantum.pop_back();
    }
    return false;
  };
  if (!rec(rec, g.id(v), 0)) throw std::runtime_error("li_path: no label-increasing path");
  return path;
}

std::vector<Root> default_order(const QbgGraph& g) {
  return reflection_order(g.n + 1, refa_word(g.n + 1, g.J));
}

DirectedPath shortest_path(const QbgGraph& g, const Perm& v, const Perm& w) {
  int src = g.id(v), dst = g.id(w);
  std::vector<int> par(g.verts.size(), -1);
  std::vector<const Edge*> pedge(g.verts.size(), nullptr);
  std::vector<char> seen(g.verts.size(), 0);
  seen[src] = 1;
  std::deque<int> q{src};
  while (!q.empty() && !seen[dst]) {
    int x = q.front();
    q.pop_front();
    for (const Edge& e : g.out[x])
      if (!seen[e.dst]) {
        seen[e.dst] = 1;
        par[e.dst] = x;
        pedge[e.dst] = &e;
        q.push_back(e.dst);
      }
  }
  if (!seen[dst]) throw std::runtime_error("shortest_path: no directed path");
  DirectedPath p;
  std::vector<const Edge*> chain;
  for (int x = dst; x != src; x = par[x]) chain.push_back(pedge[x]);
  p.verts.push_back(v);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    p.verts.push_back(g.verts[(*it)->dst]);
    p.labels.push_back((*it)->label);
    p.quantum.push_back((*it)->quantum);
  }
  return p;
}

std::vector<DirectedPath> all_shortest_paths(const QbgGraph& g, const Perm& v, const Perm& w,
                                             size_t limit) {
  int d = g.dist_row(g.id(v)).at(g.id(w));
  if (d < 0) throw std::runtime_error("all_shortest_paths: no directed path");
  std::vector<DirectedPath> res;
  DirectedPath path;
  path.verts.push_back(v);
  int dst = g.id(w);
  auto rec = [&](auto&& self, int x, int left) -> bool {
    if (left == 0) {
      if (x == dst) {
        res.push_back(path);
        if (limit && res.size() >= limit) return true;
      }
      return false;
    }
    for (const Edge& e : g.out[x]) {
      if (g.dist_row(e.dst).at(dst) != left - 1) continue;
      path.verts.push_back(g.verts[e.dst]);
      path.labels.push_back(e.label);
      path.quantum.push_back(e.quantum);
      if (self(self, e.dst, left - 1)) return true;
      path.verts.pop_back();
      path.labels.pop_back();
      path.quantum.pop_back();
    }
    return false;
  };
  rec(rec, g.id(v), d);
  return res;
}

std::pair<int, Coroot> dist_wt(const QbgGraph& g, const Perm& v, const Perm& w) {
  int d = g.dist_row(g.id(v)).at(g.id(w));
  if (d < 0) throw std::runtime_error("dist_wt: no directed path");
  DirectedPath p = shortest_path(g, v, w);
  return {d, p.wt(g.n)};
}

QbgGraph subgraph_at_level(const QbgGraph& g, i64 p, i64 q, const Weight& nu) {
  if (q <= 0) throw std::invalid_argument("subgraph_at_level: need q > 0");
  i64 gg = std::gcd(p, q);
  q /= gg;  // a <nu, alpha^vee> in Z iff q | <nu, alpha^vee> once p/q is reduced
  QbgGraph h;
  h.n = g.n;
  h.J = g.J;
  h.bruhat_only = g.bruhat_only;
  h.verts = g.verts;
  h.vid = g.vid;
  h.out.assign(h.verts.size(), {});
  for (const auto& edges : g.out)
    for (const Edge& e : edges)
      if (pairing(nu, e.label) % q == 0) h.out[e.src].push_back(e);
  return h;
}

Perm up(int n, const Perm& w, const Perm& x, const std::vector<int>& J) {
  int m = n + 1;
  if (!is_min_rep(x, J)) throw std::invalid_argument("up: x not in W^J");
  if (!bruhat_leq(min_coset_rep(w, J), x)) throw std::invalid_argument("up: need x >= floor(w)^J");
  std::vector<Perm> cand;
  for (const Perm& u : subgroup_WJ(m, J)) {
    Perm y = x * u;
    if (bruhat_leq(w, y)) cand.push_back(y);
  }
  if (cand.empty()) throw std::logic_error("up: empty candidate set");
  const Perm* mn = nullptr;
  for (const Perm& y : cand) {
    bool min = true;
    for (const Perm& z : cand)
      if (!bruhat_leq(y, z)) { min = false; break; }
    if (min) {
      if (mn) throw std::logic_error("up: minimum not unique");
      mn = &y;
    }
  }
  if (!mn) throw std::logic_error("up: no minimum element");
  return *mn;
}

Perm dn(int n, const Perm& w, const Perm& x, const std::vector<int>& J) {
  int m = n + 1;
  if (!is_min_rep(x, J)) throw std::invalid_argument("dn: x not in W^J");
  if (!bruhat_leq(x, min_coset_rep(w, J))) throw std::invalid_argument("dn: need x <= floor(w)^J");
  std::vector<Perm> cand;
  for (const Perm& u : subgroup_WJ(m, J)) {
    Perm y = x * u;
    if (bruhat_leq(y, w)) cand.push_back(y);
  }
  if (cand.empty()) throw std::logic_error("dn: empty candidate set");
  const Perm* mx = nullptr;
  for (const Perm& y : cand) {
    bool max = true;
    for (const Perm& z : cand)
      if (!bruhat_leq(z, y)) { max = false; break; }
    if (max) {
      if (mx) throw std::logic_error("dn: maximum not unique");
      mx = &y;
    }
  }
  if (!mx) throw std::logic_error("dn: no maximum element");
  return *mx;
}

namespace {

int qbg_dist(const QbgGraph& full, const Perm& a, const Perm& b) {
  return full.dist_row(full.id(a)).at(full.id(b));
}

}  // namespace

Perm tb_min(const QbgGraph& full, const Perm& u, const std::vector<int>& J, const Perm& v) {
  int m = full.n + 1;
  std::vector<Perm> coset;
  Perm base = min_coset_rep(u, J);
  for (const Perm& z : subgroup_WJ(m, J)) coset.push_back(base * z);
  const Perm* mn = nullptr;
  for (const Perm& c : coset) {
    bool min = true;
    for (const Perm& w : coset)
      if (qbg_dist(full, v, w) != qbg_dist(full, v, c) + qbg_dist(full, c, w)) { min = false; break; }
    if (min) {
      if (mn) throw std::logic_error("tb_min: minimum not unique");
      mn = &c;
    }
  }
  if (!mn) throw std::logic_error("tb_min: no minimum in tilted order");
  return *mn;
}

Perm tb_max(const QbgGraph& full, const Perm& u, const std::vector<int>& J, const Perm& v) {
  int m = full.n + 1;
  std::vector<Perm> coset;
  Perm base = min_coset_rep(u, J);
  for (const Perm& z : subgroup_WJ(m, J)) coset.push_back(base * z);
  const Perm* mx = nullptr;
  for (const Perm& c : coset) {
    bool max = true;
    for (const Perm& w : coset)
      if (qbg_dist(full, w, v) != qbg_dist(full, w, c) + qbg_dist(full, c, v)) { max = false; break; }
    if (max) {
      if (mx) throw std::logic_error("tb_max: maximum not unique");
      mx = &c;
    }
  }
  if (!mx) throw std::logic_error("tb_max: no maximum in dual tilted order");
  return *mx;
}

Perm tb_max_by_labels(const QbgGraph& full, const Perm& u, const std::vector<int>& J,
                      const Perm& v) {
  int m = full.n + 1;
  std::vector<Root> order = reflection_order(m, refa_word(m, J));
  std::set<Root> dj;
  for (const Root& r : positive_roots_J(full.n, J)) dj.insert(r);
  Perm base = min_coset_rep(u, J);
  const Perm* found = nullptr;
  std::vector<Perm> coset;
  for (const Perm& z : subgroup_WJ(m, J)) coset.push_back(base * z);
  for (const Perm& c : coset) {
    DirectedPath p = li_path(full, c, v, order);
    bool ok = true;
    for (const Root& r : p.labels)
      if (dj.count(r)) { ok = false; break; }
    if (ok) {
      if (found) throw std::logic_error("tb_max_by_labels: characterization not unique");
      found = &c;
    }
  }
  if (!found) throw std::logic_error("tb_max_by_labels: no member satisfies the label condition");
  return *found;
}

}  // namespace flagk
