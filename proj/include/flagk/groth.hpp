#pragma once
// Double Grothendieck polynomials and their quantization: divided
// differences and Demazure operators on the x-variables, permutation codes
// and the dominant closed form, the quantum elementary families and the
// staircase quantization map, and the stability / ideal-membership
// verifications that tie them to the ring presentation at desk scale.
//
// Conventions. A "level m" computation works in x_1..x_m with torus
// classes y_j = 1 - e^{-eps_j}, j = 1..m, over the rank m-1 weight lattice
// (so e^{eps_1} ... e^{eps_m} = 1). The classical ideal of level m is
// generated by the k = m elementary family and coincides with the main
// presentation ideal at rank m-1; the quantum families below carry their
// own Q_k at the top index, which the main presentation reads as zero.
// Quantization is taken with respect to the x-variables; with the
// transposed convention (quantizing in y) the same polynomials appear with
// the roles of x and y and of w and w^{-1} exchanged, which has no
// counterpart here and is not tested.

#include <cstdint>
#include <vector>

#include "flagk/qkring.hpp"
#include "flagk/weyl.hpp"

namespace flagk {

// y_j = 1 - e^{-eps_j} in rank nr, 1 <= j <= nr + 1.
GroupAlg y_class(int nr, int j);

// Divided difference in x_i, x_{i+1}: (f - swap(f)) / (x_i - x_{i+1}),
// computed termwise by the closed form, and the Demazure operator
// pi_i f = divided_difference((1 - x_{i+1}) f, i).
QPoly divided_difference(const QPoly& f, int i);
QPoly demazure_pi(const QPoly& f, int i);

// Code c_i(w) = #{j > i : w(j) < w(i)}; w is dominant iff its code is
// weakly decreasing.
std::vector<int> code_of(const Perm& w);
bool is_dominant(const Perm& w);

// eta^j applied to x_i: prod_{a=1}^{j} (1 - (1 - x_i)(1 - y_a)).
QPoly eta_poly(int nr, int nx, int nq, int qcap, int i, int j);

// Double Grothendieck polynomial of w in S_N (N = w.size()): the Demazure
// chain from prod_{i+j<=N} (x_i + y_j - x_i y_j) along a reduced word, or
// the eta product directly when w is dominant. Needs nx >= N (the top
// slot is transient) and torus classes y_1..y_{N-1} in rank nr.
QPoly grothendieck(int nr, int nx, int nq, int qcap, const Perm& w);

// Quantum elementary families in x_1..x_k (k <= nx, k <= nq):
//   f_family: sum over p-subsets I of [k] of prod_{i in I} (1 - x_i)
//             times prod_{i in I, i+1 not in I} (1 - Q_i);
//   ehat_family: sum_i (-1)^i binom(k-i, p-i) f_family(i), the
//                quantization of e_p(x_1..x_k);
//   stable_tail: e_i(e^{eps_1}, .., e^{eps_min(k, nr+1)}), the scalar limit
//                the classical family approaches (zero for larger i);
//   ff_family:   e_i(1-x_1, .., 1-x_k) - stable_tail;
//   fhat_family: f_family(i) - stable_tail, the quantization of ff_family.
QPoly f_family(int nr, int nx, int nq, int qcap, int k, int p);
QPoly ehat_family(int nr, int nx, int nq, int qcap, int k, int p);
GroupAlg stable_tail(int nr, int k, int i);
QPoly ff_family(int nr, int nx, int nq, int qcap, int k, int i);
QPoly fhat_family(int nr, int nx, int nq, int qcap, int k, int i);

// Quantization on the staircase span of level m (x_j-degree at most m - j):
// exact change of basis into the prefix elementary products
// e_{p_1}(x_1) e_{p_2}(x_1,x_2) ... followed by substitution of the ehat
// families. The integer transition matrix is inverted exactly at
// construction and must be unimodular. Coefficient rank nr is independent
// of m; polynomials carry nx = m slots and Q_1..Q_{m-1}.
struct Quantizer {
  int m, nr, nx, nq, qcap;
  std::vector<std::vector<int>> tuples;   // (p_1..p_{m-1}), 0 <= p_k <= k
  std::vector<std::vector<int>> monos;    // staircase exponents, same count
  std::vector<std::vector<mpz_class>> inv;  // monomial -> tuple coordinates
  std::vector<QPoly> ehat_prod;           // quantized basis products

  Quantizer(int m, int nr, int qcap);
  QPoly apply(const QPoly& f) const;  // f must be Q-free with staircase support
};

// Level-m ideal engine through the family route: checks that the k = m
// families coincide with the main presentation generators at rank m-1 and
// returns that quotient. The quantum engine keeps its top variable Q_m in
// play; dropping Q_m recovers the presentation generators exactly.
QuotientRing level_quotient(int m, bool quantum, int qcap);

// ----- verifications ---------------------------------------------------------------

// Demazure operator gates (m >= 2): pi_i(1) = 1, pi_1(x_1 + y_1 - x_1 y_1)
// = 1, idempotence, symmetric fixing, braid relations, and independence of
// the Grothendieck chain from the choice of reduced word, at level m.
void verify_demazure_gates(int m);

// Transform gates for k = 1..kmax: ehat at Q = 0 recovers e_p, the inverse
// binomial transform recovers f_family from ehat, and fhat at Q = 0
// recovers ff_family.
void verify_family_transforms(int kmax);

// Basis change of the k-tuple products: the classical family products
// carry a unimodular (unit monomial) determinant against the staircase
// monomials of level k+1, and the quantum products specialize to them at
// Q = 0, which makes them a basis over the truncated Novikov ring at any
// cap. Exact; k small.
void verify_family_bases(int k);

// Upper-variable collapse: setting x_{n+1..kmax} to 1 splits off the level
// n family exactly (classical: ff^{(j)} drops to ff^{(n)} or to zero;
// quantum: fhat^{(j)} with the top Q-block zeroed drops to fhat^{(n)} with
// its top Q zeroed, or to zero), and products with a collapsed factor land
// in the level-n classical ideal.
void verify_stability(int n, int kmax, int qcap);

// eta^m(x_1) equals an explicit combination of the level-m classical
// generators: eta^m(x_1) + sum_{s=0}^{m-1} (x_1 - 1)^s ff^{(m)}_{m-s} = 0
// identically, which places it in the ideal with an explicit witness.
void verify_eta_membership(int m);

// Dominant closed form over all dominant w in S_N: the Demazure chain
// value equals the eta product read off the code. Returns the number of
// dominant permutations checked.
long verify_dominant_grothendieck(int N);

// Classical membership: for every w in S_{m+1} moving the last point, the
// Grothendieck polynomial reduces to zero in the level-m classical ideal
// (exact or at a seeded mod-p point); elements fixing the last point stay
// nonzero as a control. Returns the number of moving permutations.
long verify_grothendieck_membership(int m, bool exact, std::uint64_t seed);

// Quantum membership: for every w in S_{m+1} moving the last point, the
// quantized polynomial reduces against the kept-top-Q quantum ideal of
// level m to a residue that vanishes modulo the top Novikov variable Q_m
// (throws otherwise). Returns how many residues vanished exactly, i.e.
// landed in the full quantum family ideal with no Q_m correction.
long verify_quantized_grothendieck_membership(int m, int qcap);

// Quantized collapse of family products with a factor above level n:
// quantize at level n+2, set x_{n+1} to 1 and Q_{n+1} to 0, and reduce
// against the kept-top-Q quantum ideal of level n; every residue must
// vanish modulo the top Novikov variable Q_n (throws otherwise). Returns
// how many residues vanished exactly.
long verify_quantized_family_membership(int n, int qcap);

}  // namespace flagk
