#include "core/isomorphism.hpp"

#include <algorithm>
#include <vector>

#include "core/errors.hpp"

namespace nsgraph {

namespace {

struct IsoSearch {
  const IdealGraph* G;
  const IdealGraph* H;
  std::vector<int> order_g;   // G vertices, most-constrained first
  std::vector<int> map_gh;    // G index -> H index, -1 unmapped
  std::vector<char> used_h;

  bool extend(std::size_t k) {
    if (k == order_g.size()) return true;
    const int g = order_g[k];
    const int dg = G->degree(g);
    for (int h = 0; h < H->order(); ++h) {
      if (used_h[static_cast<std::size_t>(h)] || H->degree(h) != dg) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k; ++j) {
        const int g2 = order_g[j];
        if (G->adjacent(g, g2) !=
            H->adjacent(h, map_gh[static_cast<std::size_t>(g2)])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_gh[static_cast<std::size_t>(g)] = h;
      used_h[static_cast<std::size_t>(h)] = 1;
      if (extend(k + 1)) return true;
      used_h[static_cast<std::size_t>(h)] = 0;
      map_gh[static_cast<std::size_t>(g)] = -1;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const IdealGraph& G, const IdealGraph& H) {
  if (G.order() > 10 || H.order() > 10) {
    throw Error(errc::order_too_large,
                "isomorphism test supports at most 10 vertices");
  }
  if (G.order() != H.order()) return false;
  if (G.edge_count() != H.edge_count()) return false;
  if (G.degree_sequence() != H.degree_sequence()) return false;

  IsoSearch s;
  s.G = &G;
  s.H = &H;
  for (int v = 0; v < G.order(); ++v) s.order_g.push_back(v);
  std::stable_sort(s.order_g.begin(), s.order_g.end(), [&G](int a, int b) {
    return G.degree(a) > G.degree(b);
  });
  s.map_gh.assign(static_cast<std::size_t>(G.order()), -1);
  s.used_h.assign(static_cast<std::size_t>(G.order()), 0);
  return s.extend(0);
}

}  // namespace nsgraph
