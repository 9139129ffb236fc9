#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/classifier.hpp"
#include "core/graph.hpp"
#include "core/ideal.hpp"
#include "core/planarity.hpp"
#include "core/semigroup.hpp"
#include "core/sweep.hpp"

namespace nsgraph {

// All JSON output is insertion-ordered and bit-exact across runs; all DOT
// output lists vertices and edges ascending with the smaller endpoint
// first.

std::string semigroup_json(const NumericalSemigroup& S);
std::string semigroup_text(const NumericalSemigroup& S);

std::string divisor_set_text(const DivisorSet& D);

std::string graph_dot(const IdealGraph& G);
std::string graph_text(const IdealGraph& G);
// {"generators":…,"x":…,"vertices":…,"edges":…}
std::string graph_json(const std::vector<std::int64_t>& generators,
                       std::int64_t x, const IdealGraph& G);
// Same shape with "ideal_generators" in place of "x".
std::string ideal_graph_json(const std::vector<std::int64_t>& generators,
                             const std::vector<std::int64_t>& ideal_generators,
                             const IdealGraph& G);

std::string witness_json(const KuratowskiWitness& w);

std::string classification_json(const ClassificationReport& r);
std::string classification_text(const ClassificationReport& r);

std::string verification_json(const VerificationReport& r);
std::string verification_text(const VerificationReport& r);

std::string csv_header();
std::string csv_line(const std::vector<std::int64_t>& generators,
                     std::int64_t x, int order, std::optional<int> case_index,
                     std::optional<int> type_index, TypePlanarity predicted,
                     std::optional<bool> oracle_planar, bool agreement);

}  // namespace nsgraph
