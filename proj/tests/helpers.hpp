#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "lsc/explorer.hpp"
#include "lsc/order.hpp"
#include "lsc/path.hpp"
#include "lsc/weyl.hpp"

namespace lsc::test {

inline Weight W(long long m1, long long m2) { return Weight{Int(m1), Int(m2)}; }

inline Rat R(long long p, long long q = 1) { return Rat(Int(p), Int(q)); }

inline WeylWord word_from_letters(const CartanMatrix& cm, const std::vector<int>& letters) {
  WeylWord w;
  for (int l : letters) w = append(cm, w, l);
  return w;
}

inline std::vector<int> random_letters(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(1, 2);
  std::vector<int> out(static_cast<std::size_t>(len_dist(rng)));
  for (auto& l : out) l = letter_dist(rng);
  return out;
}

inline Weight random_weight(std::mt19937& rng, long long lo = -50, long long hi = 50) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  return W(dist(rng), dist(rng));
}

// Brute-force enumeration of LS paths straight from the definition: ordered
// tuples of orbit points glued at grid cuts, kept exactly when every
// adjacency carries a sigma-chain certificate. Independent of the operator
// machinery the explorer uses.
inline std::vector<LSPath> enumerate_ls_paths(const CartanMatrix& cm, const Weight& shape,
                                              std::int64_t orbit_word_bound, int max_segments,
                                              int max_denominator, const OrderConfig& cfg) {
  std::vector<Weight> pts;
  for (const auto& [w, wt] : orbit(cm, shape, orbit_word_bound).elements) pts.push_back(wt);

  std::vector<Rat> grid;
  for (int q = 2; q <= max_denominator; ++q)
    for (int p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) grid.push_back(R(p, q));
  std::sort(grid.begin(), grid.end());

  std::vector<LSPath> out;
  struct Frame {
    std::vector<Weight> dirs;
    std::vector<Rat> cuts;  // 0 and the interior cuts chosen so far
  };
  std::vector<Frame> stack;
  for (const Weight& p : pts) stack.push_back({{p}, {R(0)}});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    {
      auto cuts = f.cuts;
      cuts.push_back(R(1));
      out.push_back(LSPath::make(shape, f.dirs, cuts));
    }
    if (static_cast<int>(f.dirs.size()) >= max_segments) continue;
    for (const Rat& sigma : grid) {
      if (sigma <= f.cuts.back()) continue;
      for (const Weight& next : pts) {
        if (next == f.dirs.back()) continue;
        if (!sigma_chain_exists(cm, sigma, f.dirs.back(), next, cfg)) continue;
        Frame g = f;
        g.dirs.push_back(next);
        g.cuts.push_back(sigma);
        stack.push_back(std::move(g));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LSPath& a, const LSPath& b) { return a.str() < b.str(); });
  return out;
}

}  // namespace lsc::test
