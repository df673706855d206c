#pragma once
// Formal Z[P]-linear combinations of symbols [w t_xi] carrying an optional
// line-bundle twist.  Shift expansions and walk reconstructions both land
// here; identities between capped series are compared termwise.

#include <map>
#include <stdexcept>

#include "flagk/poly.hpp"
#include "flagk/weyl.hpp"

namespace flagk {

// One symbol: finite Weyl part w, translation xi in the positive coroot cone,
// and a twist weight kept separate from the scalar coefficient.
struct SKey {
  Perm w;
  Coroot xi;
  Weight tw;

  auto operator<=>(const SKey&) const = default;
};

struct SMod {
  int n = 0;
  std::map<SKey, GroupAlg> t;

  static SMod zero(int n) {
    SMod r;
    r.n = n;
    return r;
  }

  static SMod sym(int n, const Perm& w, const Coroot& xi, const Weight& tw,
                  const GroupAlg& c) {
    SMod r = zero(n);
    r.add_term({w, xi, tw}, c);
    return r;
  }
  static SMod sym(int n, const Perm& w, const Coroot& xi, const Weight& tw) {
    return sym(n, w, xi, tw, GroupAlg::one(n));
  }

  bool is_zero() const { return t.empty(); }
  size_t size() const { return t.size(); }

  void add_term(const SKey& k, const GroupAlg& c) {
    if (!k.xi.is_nonneg()) throw std::invalid_argument("SMod: xi outside the positive cone");
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  SMod operator+(const SMod& o) const {
    SMod r = *this;
    for (const auto& [k, c] : o.t) r.add_term(k, c);
    return r;
  }
  SMod operator-(const SMod& o) const {
    SMod r = *this;
    for (const auto& [k, c] : o.t) r.add_term(k, -c);
    return r;
  }
  SMod operator-() const {
    SMod r = zero(n);
    for (const auto& [k, c] : t) r.t.emplace(k, -c);
    return r;
  }
  SMod operator*(const GroupAlg& f) const {
    SMod r = zero(n);
    for (const auto& [k, c] : t) r.add_term(k, c * f);
    return r;
  }
  SMod operator*(const mpz_class& k0) const {
    SMod r = zero(n);
    for (const auto& [k, c] : t) r.add_term(k, c * k0);
    return r;
  }

  bool operator==(const SMod& o) const { return n == o.n && t == o.t; }

  // st_xi: translate every symbol by xi
  SMod shifted(const Coroot& xi) const {
    SMod r = zero(n);
    for (const auto& [k, c] : t) r.add_term({k.w, k.xi + xi, k.tw}, c);
    return r;
  }

  // tensor every symbol's twist slot by e^nu
  SMod twisted(const Weight& nu) const {
    SMod r = zero(n);
    for (const auto& [k, c] : t) r.add_term({k.w, k.xi, k.tw + nu}, c);
    return r;
  }

  // drop symbols whose translation exceeds the cap in any coordinate
  SMod truncated(i64 cap) const {
    SMod r = zero(n);
    for (const auto& [k, c] : t) {
      bool keep = true;
      for (i64 a : k.xi.a)
        if (a > cap) {
          keep = false;
          break;
        }
      if (keep) r.add_term(k, c);
    }
    return r;
  }
};

}  // namespace flagk
