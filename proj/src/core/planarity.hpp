#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace nsgraph {

// Proof of non-planarity: branch vertices of a K5 or K3,3 subdivision plus
// the internally disjoint paths realizing each required edge. All entries
// are vertex labels. K5 carries one part of five labels, K33 two parts of
// three; paths are listed in row-major pair order over the sorted parts.
struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind;
  std::vector<std::vector<std::int64_t>> parts;
  std::vector<std::vector<std::int64_t>> paths;
};

struct PlanarityVerdict {
  bool planar = true;
  std::optional<KuratowskiWitness> certificate;
};

// Exhaustive topological-minor search, K3,3 tried before K5 so bipartite
// witnesses win when both exist. Branch candidates are scanned in
// (degree descending, index ascending) order and paths shortest-first,
// making the certificate deterministic. Throws order_too_large above 16.
PlanarityVerdict is_planar(const IdealGraph& G);

// Independent re-check of a witness against the host graph: part shapes,
// path adjacency, internal disjointness, full pair coverage.
bool validate_witness(const IdealGraph& G, const KuratowskiWitness& w);

}  // namespace nsgraph
