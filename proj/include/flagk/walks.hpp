#pragma once
// Quantum walks against a step-label sequence built from two reduced words,
// their stay-step decorations, and the signed twisted classes they assemble
// into: the inverse Chevalley expansion of e^{varpi_1} [O(s_1...s_k)].

#include <map>
#include <utility>

#include "flagk/kmod.hpp"
#include "flagk/qbg.hpp"

namespace flagk {

// Step labels (beta_l,...,beta_1, gamma_1,...,gamma_m): the beta block lists
// the prefix inversions of the first word, the gamma block the inversions of
// the reversed second word.
struct EtaSeq {
  int n = 0;
  Perm x, y;
  int l = 0, m = 0;
  std::vector<Root> eta;  // size l + m, all positive

  size_t steps() const { return eta.size(); }
};

// Words are letter sequences applied left to right (word[0] is the leftmost
// factor).  Both must be reduced.
EtaSeq make_eta_seq(int n, const std::vector<int>& xword, const std::vector<int>& yword);

// The first-fundamental specialization: x = e, y = s_n...s_1, labels
// (alpha_{1,n}, alpha_{1,n-1}, ..., alpha_1).
EtaSeq eta_for_varpi1(int n);

// A walk: per step either stay, or cross to s_{eta_r} w_{r-1} along an
// existing edge of the quantum graph.
struct Walk {
  std::vector<Perm> w;        // w_0..w_{l+m}
  std::vector<char> crossed;  // per step
  std::vector<char> quantum;  // per step; meaningful when crossed

  bool operator==(const Walk&) const = default;
  bool operator<(const Walk& o) const {
    return std::tie(w, crossed, quantum) < std::tie(o.w, o.crossed, o.quantum);
  }
};

std::vector<Walk> enumerate_walks(const QbgGraph& full, const EtaSeq& seq, const Perm& start);

// Stay steps eligible for decoration: in the beta block those where
// w_{r-1}^{-1} eta_r is simple, in the gamma block those where its negative
// is simple.  Returned as 1-based step indices.
std::vector<int> stay_support_minus(const EtaSeq& seq, const Walk& wk);
std::vector<int> stay_support_plus(const EtaSeq& seq, const Walk& wk);

struct Decorated {
  Walk walk;
  std::map<int, int> b;  // 0/1 on the union of the two supports
};

std::vector<Decorated> enumerate_decorated(const QbgGraph& full, const EtaSeq& seq,
                                           const Perm& start);

struct DecoStats {
  int sign = 1;
  Weight wt;   // in the positive root lattice
  Coroot wtv;  // the same recursion run on coroots
};

DecoStats deco_stats(const EtaSeq& seq, const Decorated& dw);

// Shape classification of the undecorated walks from s_1...s_k against the
// first-fundamental labels: the constant walk, one Bruhat step to
// s_1...s_{k+1} (absent when k = n), or a quantum run down to s_1...s_{m-1}
// (absent when k = 0).
enum class QW1Form { Constant, BruhatStep, QuantumRun };

struct QW1Class {
  QW1Form form = QW1Form::Constant;
  int m = 0;  // QuantumRun only: run stops at s_1...s_{m-1}, 1 <= m <= k
};

std::vector<QW1Class> classify_QW1(int n, int k);

// Both sides of the inverse Chevalley identity for e^{varpi_1}[O(s_1...s_k)]:
// left is that element, right the signed sum of twisted classes assembled
// from the decorated walks.  The right side is checked against the closed
// five-group display before returning.  The identity itself is the imported
// theorem; callers treat left -> right as a rewrite rule.
std::pair<SMod, SMod> inv_chevalley(int n, int k);

// Rearranged form: the class of s_1...s_{k+1} (zero when k = n) written as a
// twist-shifted combination; checked against its own closed display.
std::pair<SMod, SMod> inv_chevalley_cor(int n, int k);

}  // namespace flagk
