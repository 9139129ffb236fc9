#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/factorization.hpp"
#include "core/graph.hpp"
#include "core/planarity.hpp"
#include "core/semigroup.hpp"

namespace nsgraph {

// A structural form of x from the admissible list for graphs of order 6
// (8 forms) or order 7 (9 forms). The witness records which generator
// plays each role, e.g. {"a_i", 3} for x = 4*a_i.
struct CaseMatch {
  int family = 0;  // targeted graph order, 6 or 7
  int index = 0;   // 1-based position in the case list
  std::vector<std::pair<std::string, std::int64_t>> witness;
};

// First matching case in listed order, or empty when none matches.
// `order` must be 6 or 7 and equal |B*(x)|; order_mismatch otherwise.
std::optional<CaseMatch> match_case(const NumericalSemigroup& S,
                                    std::int64_t x,
                                    const FactorizationProfile& p, int order);

// All matching case indices, for diagnostics.
std::vector<int> matching_cases(const NumericalSemigroup& S, std::int64_t x,
                                const FactorizationProfile& p, int order);

// Rules certifying that the graph order cannot be 6 (ids "O6.1".."O6.4")
// or 7 ("O7.1".."O7.8"), decided from the support-size counts of x.
std::vector<std::string> order6_exclusions(const FactorizationProfile& p);
std::vector<std::string> order7_exclusions(const FactorizationProfile& p);

struct GraphType {
  int order = 0;
  int index = 0;  // 1-based row of the degree-sequence table
  std::vector<int> degree_sequence;
};

// The six admissible degree sequences for the given order (6 or 7).
const std::vector<std::vector<int>>& degree_table(int order);

// Pinned instance a representative was generated from, plus its frozen
// adjacency (bit j of adjacency_rows[i] = edge between vertices i and j).
struct TypeRepresentativeSpec {
  int order;
  int index;
  std::array<int, 7> degree_sequence;
  std::array<std::uint8_t, 7> adjacency_rows;
  std::vector<std::int64_t> generators;
  std::int64_t x;
};
const std::vector<TypeRepresentativeSpec>& type_representative_specs();

// Canonical graph for (order, index); placeholder labels 1..order.
const IdealGraph& type_representative(int order, int index);

// Degree-sequence row lookup plus isomorphism check against the canonical
// representative. Empty when the sequence is off-table or the graph is not
// isomorphic to the representative; order_mismatch unless order is 6 or 7.
std::optional<GraphType> table_type(const IdealGraph& G);

enum class TypePlanarity { planar, nonplanar, out_of_range };
const char* type_planarity_name(TypePlanarity v);

// The planarity dichotomy: orders <= 5 planar; order 6 planar exactly for
// types 1-4, order 7 for types 1-3; order >= 8 non-planar. Throws
// missing_type when order is 6 or 7 and no type is supplied.
TypePlanarity planarity_by_type(int order, const std::optional<GraphType>& t);

struct ClassificationReport {
  std::vector<std::int64_t> generators;  // minimal system
  std::int64_t x = 0;
  int order = 0;
  IdealGraph graph;
  std::optional<CaseMatch> matched_case;
  std::vector<int> all_cases;
  std::optional<GraphType> type;
  TypePlanarity predicted = TypePlanarity::out_of_range;
  std::optional<PlanarityVerdict> oracle;
  bool agreement = true;
  std::vector<std::string> exclusions;
  // Largest product-form lower bound claimed for |B(x)|, vs. the actual
  // size; holds = the claimed inequality was true for this x.
  std::int64_t bound_best = 0;
  std::int64_t divisor_count = 0;
  bool divisor_bound_holds = true;
};

// Full pipeline for one (semigroup, x) instance: factorization profile,
// graph, case match, table type, dichotomy verdict, independent planarity
// oracle (a 5-clique witness stands in for the oracle at order >= 8), and
// the cross-check results. Throws not_a_member when x is outside S.
ClassificationReport classify(const NumericalSemigroup& S, std::int64_t x);

}  // namespace nsgraph
