// Cross-oracle between the classical elimination engine and the double
// Grothendieck representatives: alternating parabolic sums of G_v reproduce
// the products Prod_{i in K} Prod_{j<=i} (1 - x_j) modulo the classical
// ideal. This exercises the quotient rewrite and the Demazure chain
// construction against each other with no shared code path beyond QPoly.

#include "flagk/groth.hpp"
#include "flagk/qkring.hpp"
#include "flagk/weyl.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace flagk {

void verify_LS0(int n, const std::vector<int>& K) {
  const int nx = n + 1, nq = n;
  for (int i : K)
    if (i < 1 || i > n) throw std::out_of_range("verify_LS0: K must lie in 1..n");

  QPoly one = QPoly::one(n, nx, nq, 0);
  QPoly lhs = one;
  Weight mu = Weight::zero(n);
  for (int i : K)
    for (int j = 1; j <= i; ++j) {
      lhs = lhs * (one - QPoly::x_var(n, nx, nq, 0, j));
      mu = mu + Weight::eps(n, j);
    }

  // The alternating sum over W_K is unchanged under v -> v^{-1}: the
  // subgroup is closed under inverses and lengths match, so either
  // transcription of G_v yields the same polynomial. We use G_v directly.
  QPoly rhs(n, nx, nq, 0);
  GroupAlg emu = GroupAlg::monomial(mu);
  for (const Perm& v : subgroup_WJ(n + 1, K)) {
    QPoly g = grothendieck(n, nx, nq, 0, v) * emu;
    rhs = (length(v) % 2 == 0) ? rhs + g : rhs - g;
  }

  QuotientRing R = main_quotient(n, false, 0);
  if (!R.contains(lhs - rhs)) {
    std::ostringstream os;
    os << "verify_LS0: alternating Grothendieck sum misses the structure "
          "sheaf product at n="
       << n << " K={";
    for (std::size_t a = 0; a < K.size(); ++a) os << (a ? "," : "") << K[a];
    os << "}";
    throw std::logic_error(os.str());
  }
}

}  // namespace flagk
