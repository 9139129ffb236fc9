#include "core/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "core/errors.hpp"

namespace nsgraph {

int clique_size_formula(int n) {
  if (n < 1) throw Error(errc::invalid_argument, "clique formula needs n >= 1");
  return (n % 2 == 0) ? n / 2 + 1 : (n + 1) / 2;
}

namespace {

void expand(const std::vector<std::uint64_t>& adj, int depth,
            std::uint64_t candidates, int* best) {
  if (candidates == 0) {
    *best = std::max(*best, depth);
    return;
  }
  std::uint64_t p = candidates;
  while (p != 0) {
    if (depth + std::popcount(p) <= *best) return;
    const int v = std::countr_zero(p);
    p &= p - 1;
    expand(adj, depth + 1, p & adj[static_cast<std::size_t>(v)], best);
  }
}

}  // namespace

int clique_number(const IdealGraph& G) {
  const int n = G.order();
  if (n > 32) {
    throw Error(errc::order_too_large,
                "clique_number supports at most 32 vertices, got " +
                    std::to_string(n));
  }
  if (n == 0) return 0;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) adj[static_cast<std::size_t>(i)] = G.word(i, 0);
  int best = 0;
  expand(adj, 0, (std::uint64_t{1} << n) - 1, &best);
  return best;
}

namespace {

struct CliqueSearch {
  const IdealGraph* G;
  int k;
  std::vector<int> chosen;

  // Extend the clique with vertices strictly below `from`, all adjacent to
  // every chosen vertex.
  bool grow(int from) {
    if (static_cast<int>(chosen.size()) == k) return true;
    const int need = k - static_cast<int>(chosen.size());
    for (int v = from - 1; v >= need - 1; --v) {
      bool ok = true;
      for (int c : chosen) {
        if (!G->adjacent(v, c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (grow(v)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_clique(const IdealGraph& G, int k) {
  if (k <= 0) return std::vector<int>{};
  if (k > G.order()) return std::nullopt;
  if (k == 1) return std::vector<int>{G.order() - 1};
  CliqueSearch s{&G, k, {}};
  if (!s.grow(G.order())) return std::nullopt;
  std::sort(s.chosen.begin(), s.chosen.end());
  return s.chosen;
}

}  // namespace nsgraph
