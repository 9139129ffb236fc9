#include "core/planarity.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "core/errors.hpp"

namespace nsgraph {

namespace {

using Mask = std::uint32_t;

struct SubdivisionSearch {
  const IdealGraph* G;
  int n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> found;  // index path per pair

  bool connect(std::size_t pi, Mask used) {
    if (pi == pairs.size()) return true;
    const auto [u, v] = pairs[pi];
    std::vector<int> path{u};
    for (int len = 1; len < n; ++len) {
      if (dfs(pi, u, v, len, used, path)) return true;
    }
    return false;
  }

  // Enumerate u->v paths with exactly `rem` edges, internals outside `used`.
  bool dfs(std::size_t pi, int cur, int v, int rem, Mask used,
           std::vector<int>& path) {
    if (rem == 1) {
      if (!G->adjacent(cur, v)) return false;
      path.push_back(v);
      found[pi] = path;
      const bool ok = connect(pi + 1, used);
      path.pop_back();
      return ok;
    }
    for (int w = 0; w < n; ++w) {
      if (w == v || !G->adjacent(cur, w)) continue;
      if (used & (Mask{1} << w)) continue;
      path.push_back(w);
      if (dfs(pi, w, v, rem - 1, used | (Mask{1} << w), path)) return true;
      path.pop_back();
    }
    return false;
  }
};

Mask bit(int v) { return Mask{1} << v; }

// Vertex indices with degree >= min_deg, ordered degree desc then index asc.
std::vector<int> branch_candidates(const IdealGraph& G, int min_deg) {
  std::vector<int> cand;
  for (int v = 0; v < G.order(); ++v) {
    if (G.degree(v) >= min_deg) cand.push_back(v);
  }
  std::stable_sort(cand.begin(), cand.end(), [&G](int a, int b) {
    return G.degree(a) > G.degree(b);
  });
  return cand;
}

// Next k-combination of positions 0..m-1 in lexicographic order.
bool next_combination(std::vector<int>& c, int m) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < m - (k - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

KuratowskiWitness make_witness(const IdealGraph& G, KuratowskiWitness::Kind kind,
                               const std::vector<std::vector<int>>& parts_idx,
                               const std::vector<std::pair<int, int>>& pairs,
                               const std::vector<std::vector<int>>& found) {
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    by_pair[{std::min(pairs[i].first, pairs[i].second),
             std::max(pairs[i].first, pairs[i].second)}] = found[i];
  }

  KuratowskiWitness w;
  w.kind = kind;
  std::vector<std::vector<int>> sorted_parts = parts_idx;
  for (auto& p : sorted_parts) {
    std::sort(p.begin(), p.end(), [&G](int a, int b) {
      return G.label(a) < G.label(b);
    });
  }
  if (sorted_parts.size() == 2 &&
      G.label(sorted_parts[1][0]) < G.label(sorted_parts[0][0])) {
    std::swap(sorted_parts[0], sorted_parts[1]);
  }
  for (const auto& p : sorted_parts) {
    std::vector<std::int64_t> labels;
    for (int v : p) labels.push_back(G.label(v));
    w.parts.push_back(std::move(labels));
  }

  auto emit = [&](int a, int b) {
    auto path = by_pair.at({std::min(a, b), std::max(a, b)});
    if (path.front() != a) std::reverse(path.begin(), path.end());
    std::vector<std::int64_t> labels;
    for (int v : path) labels.push_back(G.label(v));
    w.paths.push_back(std::move(labels));
  };
  if (kind == KuratowskiWitness::Kind::K33) {
    for (int a : sorted_parts[0]) {
      for (int b : sorted_parts[1]) emit(a, b);
    }
  } else {
    const auto& p = sorted_parts[0];
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) emit(p[i], p[j]);
    }
  }
  return w;
}

std::optional<KuratowskiWitness> search_k33(const IdealGraph& G) {
  const int n = G.order();
  if (n < 6 || G.edge_count() < 9) return std::nullopt;
  const std::vector<int> cand = branch_candidates(G, 3);
  const int m = static_cast<int>(cand.size());
  if (m < 6) return std::nullopt;

  std::vector<int> a{0, 1, 2};
  do {
    // Left part owns the earliest candidate of the pair, so each unordered
    // {A, B} is tried once.
    std::vector<int> rest;
    for (int p = a[0] + 1; p < m; ++p) {
      if (p != a[1] && p != a[2]) rest.push_back(p);
    }
    const int r = static_cast<int>(rest.size());
    if (r < 3) continue;
    std::vector<int> b{0, 1, 2};
    do {
      SubdivisionSearch s;
      s.G = &G;
      s.n = n;
      const std::vector<int> A{cand[a[0]], cand[a[1]], cand[a[2]]};
      const std::vector<int> B{cand[rest[b[0]]], cand[rest[b[1]]],
                               cand[rest[b[2]]]};
      Mask branch = 0;
      for (int v : A) branch |= bit(v);
      for (int v : B) branch |= bit(v);
      for (int u : A) {
        for (int v : B) s.pairs.emplace_back(u, v);
      }
      s.found.resize(s.pairs.size());
      if (s.connect(0, branch)) {
        return make_witness(G, KuratowskiWitness::Kind::K33, {A, B}, s.pairs,
                            s.found);
      }
    } while (next_combination(b, r));
  } while (next_combination(a, m));
  return std::nullopt;
}

std::optional<KuratowskiWitness> search_k5(const IdealGraph& G) {
  const int n = G.order();
  if (n < 5 || G.edge_count() < 10) return std::nullopt;
  const std::vector<int> cand = branch_candidates(G, 4);
  const int m = static_cast<int>(cand.size());
  if (m < 5) return std::nullopt;

  std::vector<int> c{0, 1, 2, 3, 4};
  do {
    SubdivisionSearch s;
    s.G = &G;
    s.n = n;
    std::vector<int> P;
    Mask branch = 0;
    for (int p : c) {
      P.push_back(cand[p]);
      branch |= bit(cand[p]);
    }
    for (std::size_t i = 0; i < P.size(); ++i) {
      for (std::size_t j = i + 1; j < P.size(); ++j) {
        s.pairs.emplace_back(P[i], P[j]);
      }
    }
    s.found.resize(s.pairs.size());
    if (s.connect(0, branch)) {
      return make_witness(G, KuratowskiWitness::Kind::K5, {P}, s.pairs,
                          s.found);
    }
  } while (next_combination(c, m));
  return std::nullopt;
}

}  // namespace

PlanarityVerdict is_planar(const IdealGraph& G) {
  if (G.order() > 16) {
    throw Error(errc::order_too_large,
                "planarity oracle supports at most 16 vertices, got " +
                    std::to_string(G.order()));
  }
  if (auto w = search_k33(G)) return {false, std::move(w)};
  if (auto w = search_k5(G)) return {false, std::move(w)};
  return {true, std::nullopt};
}

bool validate_witness(const IdealGraph& G, const KuratowskiWitness& w) {
  std::map<std::int64_t, int> index;
  for (int i = 0; i < G.order(); ++i) index[G.label(i)] = i;
  const auto lookup = [&index](std::int64_t lab) {
    auto it = index.find(lab);
    return it == index.end() ? -1 : it->second;
  };

  std::vector<std::vector<int>> parts;
  for (const auto& p : w.parts) {
    std::vector<int> q;
    for (std::int64_t lab : p) {
      const int v = lookup(lab);
      if (v < 0) return false;
      q.push_back(v);
    }
    parts.push_back(std::move(q));
  }
  std::vector<int> branch;
  for (const auto& p : parts) branch.insert(branch.end(), p.begin(), p.end());
  std::vector<int> uniq = branch;
  std::sort(uniq.begin(), uniq.end());
  if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) return false;

  std::map<std::pair<int, int>, int> required;  // pair -> times still needed
  if (w.kind == KuratowskiWitness::Kind::K5) {
    if (parts.size() != 1 || parts[0].size() != 5) return false;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) {
        const int a = parts[0][i], b = parts[0][j];
        required[{std::min(a, b), std::max(a, b)}] += 1;
      }
    }
  } else {
    if (parts.size() != 2 || parts[0].size() != 3 || parts[1].size() != 3) {
      return false;
    }
    for (int a : parts[0]) {
      for (int b : parts[1]) required[{std::min(a, b), std::max(a, b)}] += 1;
    }
  }
  if (w.paths.size() != required.size()) return false;

  std::vector<char> internal_used(static_cast<std::size_t>(G.order()), 0);
  for (const auto& path : w.paths) {
    if (path.size() < 2) return false;
    std::vector<int> p;
    for (std::int64_t lab : path) {
      const int v = lookup(lab);
      if (v < 0) return false;
      p.push_back(v);
    }
    std::vector<int> dedup = p;
    std::sort(dedup.begin(), dedup.end());
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end()) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!G.adjacent(p[i], p[i + 1])) return false;
    }
    const std::pair<int, int> key{std::min(p.front(), p.back()),
                                  std::max(p.front(), p.back())};
    auto it = required.find(key);
    if (it == required.end() || it->second == 0) return false;
    it->second -= 1;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      const int v = p[i];
      if (std::find(branch.begin(), branch.end(), v) != branch.end()) {
        return false;
      }
      if (internal_used[static_cast<std::size_t>(v)]) return false;
      internal_used[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (const auto& [key, remaining] : required) {
    (void)key;
    if (remaining != 0) return false;
  }
  return true;
}

}  // namespace nsgraph
