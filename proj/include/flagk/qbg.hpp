#pragma once
// (Parabolic) Bruhat and quantum Bruhat graphs: label-increasing paths,
// distances and weights, up/dn, and tilted Bruhat extrema.

#include <map>
#include <optional>
#include <vector>

#include "flagk/weyl.hpp"

namespace flagk {

struct Edge {
  int src = -1, dst = -1;  // vertex indices
  Root label;
  bool quantum = false;
};

struct QbgGraph {
  int n = 0;
  std::vector<int> J;
  bool bruhat_only = false;
  std::vector<Perm> verts;  // W^J, sorted
  std::map<Perm, int> vid;
  std::vector<std::vector<Edge>> out;  // by source vertex

  int id(const Perm& w) const;
  const Perm& at(int i) const { return verts.at(i); }
  size_t num_edges() const;

  // BFS distance matrix rows, computed lazily per source.
  const std::vector<int>& dist_row(int src) const;

 private:
  mutable std::map<int, std::vector<int>> dist_cache_;
};

// Complete edge set over W^J by exhaustive (x, alpha) scan.
QbgGraph build_qbg(int n, const std::vector<int>& J, bool bruhat_only = false);

struct DirectedPath {
  std::vector<Perm> verts;   // size = labels.size() + 1
  std::vector<Root> labels;
  std::vector<bool> quantum;

  size_t length() const { return labels.size(); }
  Coroot wt(int n) const {
    Coroot s = Coroot::zero(n);
    for (size_t i = 0; i < labels.size(); ++i)
      if (quantum[i]) s = s + Coroot::of_root(n, labels[i]);
    return s;
  }
};

// One BFS-shortest directed path v -> w (throws if unreachable).
DirectedPath shortest_path(const QbgGraph& g, const Perm& v, const Perm& w);

// All shortest directed paths v -> w (up to `limit` of them; 0 = all).
std::vector<DirectedPath> all_shortest_paths(const QbgGraph& g, const Perm& v, const Perm& w,
                                             size_t limit = 0);

// Number of strictly-label-increasing directed paths v -> w under `order`
// (restricted to the labels present in g).
long long count_li_paths(const QbgGraph& g, const Perm& v, const Perm& w,
                         const std::vector<Root>& order);

// The unique label-increasing path (throws if none; callers wanting counts use
// count_li_paths).
DirectedPath li_path(const QbgGraph& g, const Perm& v, const Perm& w,
                     const std::vector<Root>& order);

// Default reflection order for g: labels of (refa) for g's J (Delta_J^+ first,
// so the parabolic label set fills the tail).
std::vector<Root> default_order(const QbgGraph& g);

// ell(v => w) and wt(v => w) via the label-increasing path; length checked
// against BFS distance.
std::pair<int, Coroot> dist_wt(const QbgGraph& g, const Perm& v, const Perm& w);

// Level subgraph: keep edges whose label alpha has (p/q) <nu, alpha^vee> in Z.
QbgGraph subgraph_at_level(const QbgGraph& g, i64 p, i64 q, const Weight& nu);

// min{ y in x W_J : y >= w }; requires x in W^J and x >= floor(w)^J.
Perm up(int n, const Perm& w, const Perm& x, const std::vector<int>& J);
// max{ y in x W_J : y <= w }; requires x in W^J and x <= floor(w)^J.
Perm dn(int n, const Perm& w, const Perm& x, const std::vector<int>& J);

// Extrema of the coset u W_J in the v-tilted Bruhat order and its dual,
// computed by definition-chasing over the whole coset in QBG(W).
Perm tb_min(const QbgGraph& full, const Perm& u, const std::vector<int>& J, const Perm& v);
Perm tb_max(const QbgGraph& full, const Perm& u, const std::vector<int>& J, const Perm& v);

// Independent characterization of tb_max: the unique member x' of u W_J whose
// label-increasing path x' -> v under a (refa) order has all labels outside
// Delta_J^+.
Perm tb_max_by_labels(const QbgGraph& full, const Perm& u, const std::vector<int>& J,
                      const Perm& v);

}  // namespace flagk
