#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "core/ideal.hpp"
#include "core/semigroup.hpp"

namespace nsgraph {

// Undirected simple graph on labelled vertices, dense bitset adjacency.
// Vertices are indexed 0..order-1 in ascending label order.
class IdealGraph {
 public:
  IdealGraph() = default;
  // pred(i, j) decides adjacency of vertex indices i < j.
  IdealGraph(std::vector<std::int64_t> labels,
             const std::function<bool(int, int)>& pred);

  int order() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::int64_t>& labels() const { return labels_; }
  std::int64_t label(int i) const {
    return labels_[static_cast<std::size_t>(i)];
  }

  bool adjacent(int i, int j) const {
    return (word(i, j >> 6) >> (j & 63)) & 1u;
  }
  int degree(int i) const;
  std::size_t edge_count() const { return edge_count_; }
  bool complete() const {
    const std::size_t n = labels_.size();
    return edge_count_ == n * (n - 1) / 2;
  }

  std::vector<int> degree_sequence() const;  // ascending
  // Label pairs, smaller endpoint first, ascending lexicographic.
  std::vector<std::pair<std::int64_t, std::int64_t>> edges() const;

  // Adjacency row i as 64-bit words, low word first.
  std::uint64_t word(int i, int w) const {
    return bits_[static_cast<std::size_t>(i) * words_ +
                 static_cast<std::size_t>(w)];
  }
  int words_per_row() const { return static_cast<int>(words_); }

 private:
  std::vector<std::int64_t> labels_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
};

// Graph of the irreducible ideal S \ B(x): vertices B(x) \ {0}, edge y ~ z
// when x - (y + z) is not a member. Empty graph for x = 0.
// Throws not_a_member when x is not a member.
IdealGraph build_graph(const NumericalSemigroup& S, std::int64_t x);

// Graph of a generated ideal I: vertices (S \ I) \ {0}, edge y ~ z when
// y + z lands in I.
IdealGraph build_graph(const GeneratedIdeal& I);

bool is_connected(const IdealGraph& G);

}  // namespace nsgraph
