#include "flagk/weyl.hpp"

namespace flagk {

std::set<Perm> bruhat_lower_set(const Perm& w) {
  int m = w.size();
  std::vector<int> word = reduced_word(w);
  std::set<Perm> out{Perm::identity(m)};
  // left-to-right subset DP over the word: after each letter, the set of all
  // subword products so far
  for (int i : word) {
    std::set<Perm> next = out;
    Perm s = Perm::simple(m, i);
    for (const Perm& x : out) next.insert(x * s);
    out = std::move(next);
  }
  return out;
}

}  // namespace flagk
