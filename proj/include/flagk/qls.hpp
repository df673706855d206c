#pragma once
// Quantum LS paths of a dominant shape: brute-force enumeration over rational
// level subgraphs, exact path statistics (weight, degree, tilted endpoints),
// and the two closed expansions of antidominant-twist classes they feed.

#include <map>
#include <vector>

#include "flagk/kmod.hpp"
#include "flagk/qbg.hpp"

namespace flagk {

// Exact rational, kept in lowest terms with positive denominator.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 p, i64 q);

  bool operator==(const Rat&) const = default;
  bool operator<(const Rat& o) const { return num * o.den < o.num * den; }

  Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
};

// (w_1..w_s ; a_0..a_s): vertices in W^{J_nu}, strictly increasing cuts from
// 0 to 1, with a directed path w_{l+1} -> w_l in the a_l-level subgraph.
struct QlsPath {
  std::vector<Perm> w;
  std::vector<Rat> a;

  size_t segments() const { return w.size(); }
  bool operator==(const QlsPath&) const = default;
  bool operator<(const QlsPath& o) const { return std::tie(w, a) < std::tie(o.w, o.a); }
};

// Everything path enumeration and statistics need for one dominant shape nu:
// the ambient quantum graph, its parabolic quotient by J_nu, and cached level
// subgraphs.
struct QlsCtx {
  int n = 0;
  Weight nu;
  std::vector<int> J;  // simple reflections orthogonal to nu
  QbgGraph full;       // quantum graph on W
  QbgGraph para;       // quantum graph on W^J
  QbgGraph para_b;     // Bruhat-only edges on W^J

  std::map<std::pair<i64, i64>, QbgGraph> level_q_, level_b_;

  const QbgGraph& level(i64 p, i64 q, bool bruhat_only);
};

std::vector<int> orthogonal_simples(const Weight& nu);
QlsCtx make_qls_ctx(int n, const Weight& nu);

// All quantum LS paths of shape nu (set bruhat_only for classical LS paths).
// Desk scale: the cut denominators divide some <nu, beta^vee>.
std::vector<QlsPath> enumerate_qls(QlsCtx& ctx, bool bruhat_only = false);

// Fundamental-shape convenience: shape varpi_i in rank n.
std::vector<QlsPath> enumerate_qls_fund(int n, int i);

struct PathStats {
  Weight wt;     // sum (a_l - a_{l-1}) w_l nu, integral
  i64 deg = 0;   // degree statistic, a nonpositive integer
  Perm kappa;    // final direction w_s
  Perm kappa_v;  // endpoint of the tilted-maximum chain seeded at v
  Coroot zeta;   // accumulated quantum weight along that chain
  Perm iota;     // endpoint of the tilted-minimum chain seeded at v
  Coroot xi;     // accumulated quantum weight along that chain
  i64 deg_v = 0; // v-twisted degree
};

PathStats path_stats(QlsCtx& ctx, const QlsPath& eta, const Perm& v);

// Elements v whose label-increasing path e -> v in the Bruhat graph avoids
// Delta_J^+ for J = I \ K.  Requires orders that put Delta_J^+ first; the set
// is then order-independent (it equals {v : tb_max(e, J, v) = e}, which is
// checked en route) and equals the parabolic subgroup W_K.
std::vector<Perm> dp_set(int n, const std::vector<int>& K);

// Closed alternating expansion of the class twisted by -sum_{i in K} varpi_i.
SMod expand_antidominant(int n, const std::vector<int>& K);

// Two routes to the mixed-twist expansion (K plus one fundamental weight
// varpi_m removed, m outside K), as capped translation series:
//  - the path-indexed form, via tilted-minimum chains;
//  - the cancellation-free form with symbols [w v t_{c alpha_m^vee}].
// expand_mixed computes both, checks the rewriting lemmas en route, and
// asserts they agree before returning the cancellation-free one.
SMod expand_mixed_equivariant(int n, const std::vector<int>& K, int m, i64 cap);
SMod expand_mixed_z2(int n, const std::vector<int>& K, int m, i64 cap);
SMod expand_mixed(int n, const std::vector<int>& K, int m, i64 cap);

}  // namespace flagk
