#pragma once

// Independent reference implementations used as test oracles. These stay
// deliberately naive: full permutation / subset enumeration and elementwise
// loops, with no shared code paths with the library kernels they check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "permsum/gset.hpp"
#include "permsum/sequence.hpp"

namespace permsum::testing {

// S*T by full enumeration: all r-position subsets of each side and all
// bijections between them, r = min(|S|, |T|).
inline GSet brute_product_set(const Sequence& s, const Sequence& t) {
  const Ring& ring = s.ring();
  std::vector<Residue> st = s.terms();
  std::vector<Residue> tt = t.terms();
  const std::size_t r = std::min(st.size(), tt.size());
  GSet out(ring);
  if (r == 0) {
    out.insert(0);
    return out;
  }

  std::vector<std::size_t> s_idx(st.size());
  std::iota(s_idx.begin(), s_idx.end(), 0);
  std::vector<bool> s_pick(st.size(), false);
  std::fill(s_pick.begin(), s_pick.begin() + r, true);
  std::sort(s_pick.begin(), s_pick.end());  // lexicographic subset masks

  do {
    std::vector<Residue> sv;
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (s_pick[i]) sv.push_back(st[i]);
    }
    std::vector<bool> t_pick(tt.size(), false);
    std::fill(t_pick.begin(), t_pick.begin() + r, true);
    std::sort(t_pick.begin(), t_pick.end());
    do {
      std::vector<Residue> tv;
      for (std::size_t i = 0; i < tt.size(); ++i) {
        if (t_pick[i]) tv.push_back(tt[i]);
      }
      std::sort(tv.begin(), tv.end());
      do {
        Residue acc = 0;
        for (std::size_t i = 0; i < r; ++i) {
          acc = ring.add(acc, ring.mul(sv[i], tv[i]));
        }
        out.insert(acc);
      } while (std::next_permutation(tv.begin(), tv.end()));
    } while (std::next_permutation(t_pick.begin(), t_pick.end()));
  } while (std::next_permutation(s_pick.begin(), s_pick.end()));
  return out;
}

// A+B by double loop.
inline GSet naive_sumset(const GSet& a, const GSet& b) {
  GSet out(a.ring());
  for (Residue x : a.members()) {
    for (Residue y : b.members()) out.insert(a.ring().add(x, y));
  }
  return out;
}

// AP test by trying every (anchor, difference) pair.
inline bool naive_is_ap(const GSet& a) {
  const Ring& ring = a.ring();
  const std::uint32_t m = a.size();
  if (m == 0) return false;
  if (m == 1) return true;
  for (Residue f = 0; f < ring.n; ++f) {
    for (Residue d = 1; d < ring.n; ++d) {
      GSet prog(ring);
      Residue z = f;
      for (std::uint32_t k = 0; k < m; ++k) {
        prog.insert(z);
        z = ring.add(z, d);
      }
      if (prog == a) return true;
    }
  }
  return false;
}

}  // namespace permsum::testing
