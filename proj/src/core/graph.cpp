#include "core/graph.hpp"

#include <algorithm>
#include <bit>

namespace nsgraph {

IdealGraph::IdealGraph(std::vector<std::int64_t> labels,
                       const std::function<bool(int, int)>& pred)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  words_ = (n + 63) / 64;
  bits_.assign(n * words_, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!pred(static_cast<int>(i), static_cast<int>(j))) continue;
      bits_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
      bits_[j * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
      ++edge_count_;
    }
  }
}

int IdealGraph::degree(int i) const {
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    d += std::popcount(word(i, static_cast<int>(w)));
  }
  return d;
}

std::vector<int> IdealGraph::degree_sequence() const {
  std::vector<int> deg;
  deg.reserve(labels_.size());
  for (int i = 0; i < order(); ++i) deg.push_back(degree(i));
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::vector<std::pair<std::int64_t, std::int64_t>> IdealGraph::edges() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  out.reserve(edge_count_);
  for (int i = 0; i < order(); ++i) {
    for (int j = i + 1; j < order(); ++j) {
      if (adjacent(i, j)) out.emplace_back(label(i), label(j));
    }
  }
  return out;
}

IdealGraph build_graph(const NumericalSemigroup& S, std::int64_t x) {
  std::vector<std::int64_t> verts = divisors(S, x).nonzero();
  const std::vector<std::int64_t> v = verts;
  return IdealGraph(std::move(verts), [&S, &v, x](int i, int j) {
    return !S.contains(x - (v[static_cast<std::size_t>(i)] +
                            v[static_cast<std::size_t>(j)]));
  });
}

IdealGraph build_graph(const GeneratedIdeal& I) {
  std::vector<std::int64_t> verts;
  for (std::int64_t t : I.complement()) {
    if (t != 0) verts.push_back(t);
  }
  const std::vector<std::int64_t> v = verts;
  return IdealGraph(std::move(verts), [&I, &v](int i, int j) {
    return I.contains(v[static_cast<std::size_t>(i)] +
                      v[static_cast<std::size_t>(j)]);
  });
}

bool is_connected(const IdealGraph& G) {
  const int n = G.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!seen[static_cast<std::size_t>(u)] && G.adjacent(v, u)) {
        seen[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
        ++reached;
      }
    }
  }
  return reached == n;
}

}  // namespace nsgraph
