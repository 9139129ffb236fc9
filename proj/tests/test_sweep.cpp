#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/render.hpp"
#include "core/semigroup.hpp"
#include "core/sweep.hpp"
#include "doctest.h"

using nsgraph::Error;
using nsgraph::errc;
using nsgraph::NumericalSemigroup;
using nsgraph::SweepConfig;
using nsgraph::TypePlanarity;

namespace {

using i64 = std::int64_t;
using vec = std::vector<i64>;

std::optional<errc> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  return std::nullopt;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("check id vocabulary") {
  const auto& ids = nsgraph::check_ids();
  CHECK(ids.size() == 14);
  CHECK(ids.front() == "connectivity");
  for (const char* id :
       {"non-completeness", "divisor-bound", "order6-exclusion",
        "order7-exclusion", "order6-case", "order7-case", "degree-table",
        "type-iso", "bucket-iso", "clique-formula", "clique-k5",
        "planarity-agreement", "planarity-range"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
}

TEST_CASE("semigroup enumeration pins") {
  SweepConfig tiny;
  tiny.max_embedding_dim = 2;
  tiny.max_generator = 4;
  tiny.max_x = 10;
  CHECK(nsgraph::enumerate_semigroups(tiny) ==
        std::vector<vec>{{2, 3}, {3, 4}});

  SweepConfig five = tiny;
  five.max_generator = 5;
  CHECK(nsgraph::enumerate_semigroups(five) ==
        std::vector<vec>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

TEST_CASE("enumerated systems are minimal and unique") {
  SweepConfig cfg;
  cfg.max_embedding_dim = 3;
  cfg.max_generator = 10;
  cfg.max_x = 10;
  const auto systems = nsgraph::enumerate_semigroups(cfg);
  CHECK(!systems.empty());
  std::set<vec> seen;
  for (const auto& sys : systems) {
    CAPTURE(sys);
    CHECK(seen.insert(sys).second);
    CHECK(sys.size() >= 2);
    CHECK(sys.size() <= 3);
    CHECK(sys.back() <= 10);
    CHECK(NumericalSemigroup(sys).generators() == sys);
  }
  CHECK(std::is_sorted(systems.begin(), systems.end()));
}

TEST_CASE("config validation") {
  SweepConfig bad;
  bad.max_embedding_dim = 1;
  CHECK(code_of([&] { nsgraph::enumerate_semigroups(bad); }) ==
        errc::invalid_argument);
  SweepConfig gen;
  gen.max_generator = 2;
  CHECK(code_of([&] { nsgraph::sweep(gen); }) == errc::invalid_argument);
  SweepConfig x;
  x.max_x = 5;  // below max_generator
  CHECK(code_of([&] { nsgraph::sweep(x); }) == errc::invalid_argument);
}

TEST_CASE("restricted sweep over one semigroup") {
  SweepConfig cfg;
  cfg.max_embedding_dim = 2;
  cfg.max_generator = 4;
  cfg.max_x = 12;
  cfg.jobs = 1;
  cfg.only = {{3, 4}};
  const auto report = nsgraph::sweep(cfg);

  CHECK(report.semigroup_count == 1);
  CHECK(report.instances == 9);  // members of <3,4> in 1..12
  CHECK(report.per_order.at(6) == 1);
  CHECK(report.per_order.count(7) == 0);
  CHECK(report.per_type.at({6, 5}) == 1);
  CHECK(report.per_case.at({6, 2}) == 1);
  CHECK(report.total_violations == 0);
  for (const auto& [id, count] : report.violation_counts) CHECK(count == 0);
  CHECK(report.examples.empty());

  std::uint64_t order_sum = 0;
  for (const auto& [order, count] : report.per_order) order_sum += count;
  CHECK(order_sum == report.instances);
  CHECK(report.duration_seconds >= 0.0);
  CHECK(report.config.jobs == 1);
}

TEST_CASE("csv output is deterministic across worker counts") {
  const std::string path1 = "sweep_jobs1.csv";
  const std::string path4 = "sweep_jobs4.csv";
  SweepConfig cfg;
  cfg.max_embedding_dim = 3;
  cfg.max_generator = 10;
  cfg.max_x = 60;
  cfg.jobs = 1;
  cfg.csv_path = path1;
  const auto r1 = nsgraph::sweep(cfg);
  cfg.jobs = 4;
  cfg.csv_path = path4;
  const auto r4 = nsgraph::sweep(cfg);

  const std::string csv1 = slurp(path1);
  const std::string csv4 = slurp(path4);
  std::remove(path1.c_str());
  std::remove(path4.c_str());

  REQUIRE(!csv1.empty());
  CHECK(csv1 == csv4);
  CHECK(csv1.substr(0, csv1.find('\n')) == nsgraph::csv_header());
  CHECK(r1.instances == r4.instances);
  CHECK(r1.total_violations == r4.total_violations);
  CHECK(r1.violation_counts == r4.violation_counts);
  CHECK(r1.per_order == r4.per_order);
  CHECK(r1.per_type == r4.per_type);
  CHECK(r1.per_case == r4.per_case);

  // one data line per instance, plus the header
  const auto lines = static_cast<std::uint64_t>(
      std::count(csv1.begin(), csv1.end(), '\n'));
  CHECK(lines == r1.instances + 1);
}

TEST_CASE("recorded violations replay through check_instance") {
  SweepConfig cfg;
  cfg.max_embedding_dim = 3;
  cfg.max_generator = 12;
  cfg.max_x = 60;
  cfg.jobs = 0;
  const auto report = nsgraph::sweep(cfg);

  // this domain is known to trip the product bound and both order-7 gaps
  CHECK(report.violation_counts.at("divisor-bound") > 0);
  CHECK(report.violation_counts.at("order7-exclusion") > 0);
  CHECK(report.violation_counts.at("order7-case") > 0);
  CHECK(report.violation_counts.at("connectivity") == 0);
  CHECK(report.violation_counts.at("clique-formula") == 0);
  CHECK(report.violation_counts.at("planarity-agreement") == 0);

  std::uint64_t total = 0;
  for (const auto& [id, count] : report.violation_counts) total += count;
  CHECK(total == report.total_violations);

  for (const auto& [id, examples] : report.examples) {
    CHECK(report.violation_counts.at(id) >= examples.size());
    CHECK(examples.size() <=
          nsgraph::VerificationReport::kMaxExamplesPerCheck);
    if (id == "bucket-iso") continue;  // needs the partner instance
    std::size_t tried = 0;
    for (const auto& v : examples) {
      if (++tried > 3) break;
      CAPTURE(id);
      CAPTURE(v.generators);
      CAPTURE(v.x);
      const auto failed =
          nsgraph::check_instance(NumericalSemigroup(v.generators), v.x);
      CHECK(std::find(failed.begin(), failed.end(), id) != failed.end());
    }
  }
}

TEST_CASE("check_instance on clean and dirty instances") {
  CHECK(nsgraph::check_instance(NumericalSemigroup({3, 4}), 12).empty());
  const auto dirty = nsgraph::check_instance(NumericalSemigroup({2, 3}), 14);
  CHECK(std::find(dirty.begin(), dirty.end(), "divisor-bound") !=
        dirty.end());
  const auto missing =
      nsgraph::check_instance(NumericalSemigroup({3, 4, 5}), 11);
  CHECK(std::find(missing.begin(), missing.end(), "order7-case") !=
        missing.end());
  CHECK(code_of([] {
          nsgraph::check_instance(NumericalSemigroup({3, 4}), 5);
        }) == errc::not_a_member);
}

TEST_CASE("csv line rendering") {
  CHECK(nsgraph::csv_header() ==
        "generators;x;order;case;type;planar_theorem;planar_oracle;"
        "agreement");
  CHECK(nsgraph::csv_line({3, 4}, 12, 6, 2, 5, TypePlanarity::nonplanar,
                          false, true) == "3,4;12;6;2;5;nonplanar;nonplanar;true");
  CHECK(nsgraph::csv_line({2, 3}, 3, 2, std::nullopt, std::nullopt,
                          TypePlanarity::planar, true,
                          true) == "2,3;3;2;;;planar;planar;true");
  CHECK(nsgraph::csv_line({3, 4, 5}, 11, 7, std::nullopt, std::nullopt,
                          TypePlanarity::out_of_range, false, true) ==
        "3,4,5;11;7;;;out-of-range;nonplanar;true");
}
