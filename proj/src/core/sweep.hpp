#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/semigroup.hpp"

namespace nsgraph {

struct SweepConfig {
  int max_embedding_dim = 6;
  int max_generator = 30;
  std::int64_t max_x = 200;
  int jobs = 0;           // 0 = one per hardware thread
  std::string csv_path;   // empty = no CSV written
  // When non-empty, only these minimal systems are swept (test hook).
  std::vector<std::vector<std::int64_t>> only;
};

struct Violation {
  std::vector<std::int64_t> generators;
  std::int64_t x = 0;
  std::string check;
};

struct VerificationReport {
  SweepConfig config;
  std::uint64_t semigroup_count = 0;
  std::uint64_t instances = 0;
  double duration_seconds = 0.0;
  std::map<int, std::uint64_t> per_order;
  std::map<std::pair<int, int>, std::uint64_t> per_type;  // (order, type)
  std::map<std::pair<int, int>, std::uint64_t> per_case;  // (order, case)
  // Counts cover everything; example records are capped at
  // kMaxExamplesPerCheck per check, kept in scan order.
  std::map<std::string, std::uint64_t> violation_counts;
  std::map<std::string, std::vector<Violation>> examples;
  std::uint64_t total_violations = 0;

  static constexpr std::size_t kMaxExamplesPerCheck = 25;
};

// Every check id a sweep can report, in canonical order.
const std::vector<std::string>& check_ids();

// Minimal generating systems with size in [2, max_embedding_dim] and all
// generators <= max_generator, ascending lexicographic. Each tuple is the
// unique minimal system of its semigroup, so there are no duplicates.
std::vector<std::vector<std::int64_t>> enumerate_semigroups(
    const SweepConfig& cfg);

// Exhaustive verification over every enumerated semigroup and every member
// x in [1, max_x]. Deterministic: identical config gives byte-identical
// CSV and an identical report regardless of the worker count.
VerificationReport sweep(const SweepConfig& cfg);

// Re-runs every per-instance check for one (semigroup, x), returning the
// ids that fail. Matches what sweep records for that instance, except
// bucket-iso which needs a second instance to compare against.
std::vector<std::string> check_instance(const NumericalSemigroup& S,
                                        std::int64_t x);

}  // namespace nsgraph
