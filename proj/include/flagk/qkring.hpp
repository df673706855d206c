#pragma once
// Polynomial model of the quantum equivariant K-ring presentation of the
// full flag variety: sparse exact polynomials in x-variables and truncated
// Novikov Q-variables over the weight-lattice group algebra, the
// presentation ideals, a triangular rewrite engine for normal forms (exact
// and mod-p), and the freeness / relation verifications built on it.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "flagk/poly.hpp"
#include "flagk/weyl.hpp"

namespace flagk {

// ----- sparse polynomials in x and Q --------------------------------------------

// Term key: x-multidegree (nx entries) and Q-multidegree (nq entries).
struct QKey {
  std::vector<int> xd, qd;
  auto operator<=>(const QKey&) const = default;
};

// Element of R(H)[Q_1..Q_nq][x_1..x_nx], truncated past total Q-degree
// qcap; coefficients are group-algebra elements of weight rank nr.
struct QPoly {
  int nr = 0, nx = 0, nq = 0, qcap = 0;
  std::map<QKey, GroupAlg> t;

  QPoly() = default;
  QPoly(int nr_, int nx_, int nq_, int qcap_) : nr(nr_), nx(nx_), nq(nq_), qcap(qcap_) {}

  static QPoly constant(int nr, int nx, int nq, int qcap, const GroupAlg& c);
  static QPoly one(int nr, int nx, int nq, int qcap);
  static QPoly x_var(int nr, int nx, int nq, int qcap, int j);  // 1 <= j <= nx
  static QPoly q_var(int nr, int nx, int nq, int qcap, int i);  // 1 <= i <= nq
  static QPoly from_novikov(const Novikov& f, int nx);

  // shape helpers for building further elements of the same ring
  QPoly like_zero() const { return QPoly(nr, nx, nq, qcap); }
  QPoly like_one() const { return one(nr, nx, nq, qcap); }
  QPoly like_x(int j) const { return x_var(nr, nx, nq, qcap, j); }
  QPoly like_const(const GroupAlg& c) const { return constant(nr, nx, nq, qcap, c); }

  bool is_zero() const { return t.empty(); }
  size_t size() const { return t.size(); }

  static int total(const std::vector<int>& d);

  void add_term(const QKey& k, const GroupAlg& c);

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const GroupAlg& c) const;
  QPoly operator*(const mpz_class& k) const;
  bool operator==(const QPoly& o) const { return t == o.t; }

  QPoly pow(int e) const;

  QPoly subst_x(int j, const QPoly& val) const;  // substitute x_j -> val
  QPoly q_zero(int i) const;                     // substitute Q_i -> 0
  QPoly q_zero_all() const;
  QPoly retruncate(int newcap) const;

  GroupAlg constant_term() const;  // coefficient at xd = qd = 0
  int x_degree() const;            // max total x-degree over the support
};

// Reshape to a different variable count, Q-variable count, or Q-cap;
// slots being dropped must carry exponent zero in every term, and terms
// past the new cap must not exist. Added slots read as exponent zero.
QPoly reshape(const QPoly& f, int nx, int nq, int qcap);

// Sum of e^{eps_J} over all l-element subsets J of [n+1], in rank n.
GroupAlg class_elementary(int n, int l);

// The n+1 presentation generators, l = 1..n+1: the l-th elementary
// polynomial in 1 - x_j over [n+1] (quantum: with a (1 - Q_j) factor at
// each j in J with j+1 not in J, where 1 - Q_{n+1} is read as 1) minus
// class_elementary(n, l).
std::vector<QPoly> ideal_generators(int n, bool quantum, int qcap);

// ----- triangular quotient engine ------------------------------------------------

// Rewrite engine for ideals whose Q-degree-zero parts are
// e_j(1 - x_1, ..., 1 - x_nx) - kappa_j with scalar kappa_j, j = 1..nx.
// Rule k is the combination of the generators whose Q-degree-zero part has
// head x_k^{bound_k + 1} with integer coefficient (-1)^{bound_k + 1} and
// all other Q-free terms of lower x_k-degree in x_1..x_k only; rewriting a
// multiple of the head therefore strictly descends, and quantum tails only
// feed later Q-slices. Construction validates this pivot structure and
// throws if a generator family breaks it.
struct QuotientRing {
  int nr = 0, nx = 0, nq = 0, qcap = 0;
  std::vector<int> bound;   // basis bounds: 0 <= a_k <= bound[k-1]
  std::vector<QPoly> rule;  // rule[k-1] has head x_k^{bound[k-1]+1}

  QPoly nf(const QPoly& p) const;
  bool contains(const QPoly& p) const { return nf(p).is_zero(); }

  std::vector<std::vector<int>> basis() const;  // standard x-multidegrees
  long basis_size() const;
};

// Build the engine from nx generators with classical parts e_j(1-x) - kappa_j.
QuotientRing esym_quotient(int nr, int nx, int nq, int qcap, const std::vector<QPoly>& gens);

// Main presentation quotient: nx = n+1 variables, nq = n, bounds n+1-j.
QuotientRing main_quotient(int n, bool quantum, int qcap);

// ----- mod-p mirror ---------------------------------------------------------------

// Same rewrite with coefficients evaluated at a seeded random torus point
// e^{eps_i} -> u_i in F_p^*; probabilistic membership testing at ranks
// where exact coefficients get expensive.
struct FpQPoly {
  std::map<QKey, Fp> t;
  bool is_zero() const { return t.empty(); }
  bool operator==(const FpQPoly&) const = default;
};

struct FpQuotient {
  int nx = 0, nq = 0, qcap = 0;
  std::vector<int> bound;
  std::vector<FpQPoly> rule;
  std::vector<Fp> pt;

  FpQPoly project(const QPoly& p) const;
  FpQPoly nf(FpQPoly p) const;
  bool contains(const QPoly& p) const;
};

FpQuotient modp_quotient(const QuotientRing& R, std::uint64_t seed);

// ----- verifications ---------------------------------------------------------------

// Freeness of the quotient on the basis x^a, 0 <= a_j <= n+1-j:
// cardinality (n+1)!, spanning by rewrite of every low-degree monomial,
// generator membership, annihilation of the classical generators under
// every fixed-point substitution x_j -> 1 - e^{eps_{w(j)}}, independence
// through the fixed-point evaluation matrix (nonzero determinant), and
// agreement of the quantum normal form with the classical one at Q = 0.
// exact selects the exact determinant over Z[P]; otherwise the matrix is
// evaluated at the seeded torus point. Returns the rank.
long verify_freeness(int n, int qcap, bool exact, std::uint64_t seed);

// The relation theorem: for every l, (a) the run factors of each subset
// split exactly, (b) the product of line-bundle images with inverted run
// factors (Novikov-inversion path) equals the plain generator display, and
// (c) its difference with class_elementary(n, l) lies in the quantum
// ideal. Throws on the first failure.
void verify_thm_rel(int n, int qcap);

// Cross-oracle through the classical quotient (Q = 0): for a subset K of
// {1..n}, the structure sheaf product Prod_{i in K} Prod_{j<=i} (1 - x_j)
// agrees modulo the classical ideal with the alternating Demazure sum
// Sum_{v in W_K} (-1)^{l(v)} e^{mu_K} G_v, where G_v is the double
// Grothendieck representative from the groth module and
// mu_K = Sum_{i in K} omega_i. The sum is invariant under v -> v^{-1}
// (W_K is closed under inverses and l(v) = l(v^{-1})), so the two
// transcription conventions for G_v coincide termwise after reindexing.
// Throws with a description on the first mismatch. Implemented in ls0.cpp.
void verify_LS0(int n, const std::vector<int>& K);

}  // namespace flagk
