#include "core/classifier.hpp"

#include <algorithm>
#include <map>

#include "core/cliques.hpp"
#include "core/errors.hpp"
#include "core/ideal.hpp"
#include "core/isomorphism.hpp"

namespace nsgraph {

namespace {

using Term = std::pair<int, std::int64_t>;  // (generator index, coefficient)
using Witness = std::vector<std::pair<std::string, std::int64_t>>;

// Factorizations regrouped by support size, each as its nonzero terms in
// ascending generator-index order.
struct Supports {
  std::vector<Term> s1;
  std::vector<std::array<Term, 2>> s2;
  std::vector<std::array<Term, 3>> s3;
};

Supports split_supports(const FactorizationProfile& p) {
  Supports sup;
  for (const Factorization& f : p.list) {
    std::vector<Term> nz;
    for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
      if (f.coefficients[i] > 0) {
        nz.emplace_back(static_cast<int>(i), f.coefficients[i]);
      }
    }
    if (nz.size() == 1) {
      sup.s1.push_back(nz[0]);
    } else if (nz.size() == 2) {
      sup.s2.push_back({nz[0], nz[1]});
    } else if (nz.size() == 3) {
      sup.s3.push_back({nz[0], nz[1], nz[2]});
    }
  }
  return sup;
}

std::optional<int> single_with(const Supports& sup, std::int64_t coeff) {
  for (const Term& t : sup.s1) {
    if (t.second == coeff) return t.first;
  }
  return std::nullopt;
}

bool coeffs_are(const std::array<Term, 2>& p, std::int64_t lo,
                std::int64_t hi) {
  return std::min(p[0].second, p[1].second) == lo &&
         std::max(p[0].second, p[1].second) == hi;
}

// The generator carrying the given coefficient in a two-term form.
int carrier(const std::array<Term, 2>& p, std::int64_t coeff) {
  return p[0].second == coeff ? p[0].first : p[1].first;
}

bool involves(const std::array<Term, 2>& p, int i) {
  return p[0].first == i || p[1].first == i;
}

// Admissible forms for order 6, tried at the given index. gens is the
// minimal system; returned witness maps roles to generator values.
std::optional<Witness> match_order6(int k, const Supports& sup,
                                    const std::vector<std::int64_t>& gens) {
  switch (k) {
    case 1: {  // x = 6 a_i
      if (auto i = single_with(sup, 6)) return Witness{{"a_i", gens[*i]}};
      return std::nullopt;
    }
    case 2: {  // x = 4 a_i = 3 a_j
      auto i = single_with(sup, 4);
      auto j = single_with(sup, 3);
      if (i && j) return Witness{{"a_i", gens[*i]}, {"a_j", gens[*j]}};
      return std::nullopt;
    }
    case 3: {  // x = 5 a_i = 2 a_j
      auto i = single_with(sup, 5);
      auto j = single_with(sup, 2);
      if (i && j) return Witness{{"a_i", gens[*i]}, {"a_j", gens[*j]}};
      return std::nullopt;
    }
    case 4: {  // x = 4 a_i and x = a_j + a_k
      auto i = single_with(sup, 4);
      if (!i) return std::nullopt;
      for (const auto& p : sup.s2) {
        if (coeffs_are(p, 1, 1)) {
          return Witness{{"a_i", gens[*i]},
                         {"a_j", gens[p[0].first]},
                         {"a_k", gens[p[1].first]}};
        }
      }
      return std::nullopt;
    }
    case 5: {  // x = 4 a_i and x = a_i + 2 a_k (so 3 a_i = 2 a_k)
      for (const Term& t : sup.s1) {
        if (t.second != 4) continue;
        for (const auto& p : sup.s2) {
          if (!coeffs_are(p, 1, 2)) continue;
          const int one = carrier(p, 1);
          const int two = carrier(p, 2);
          if (one == t.first && two != t.first) {
            return Witness{{"a_i", gens[t.first]}, {"a_k", gens[two]}};
          }
        }
      }
      return std::nullopt;
    }
    case 6: {  // x = 2 a_i and x = 2 a_k + a_l, i fresh
      for (const Term& t : sup.s1) {
        if (t.second != 2) continue;
        for (const auto& p : sup.s2) {
          if (!coeffs_are(p, 1, 2) || involves(p, t.first)) continue;
          return Witness{{"a_i", gens[t.first]},
                         {"a_k", gens[carrier(p, 2)]},
                         {"a_l", gens[carrier(p, 1)]}};
        }
      }
      return std::nullopt;
    }
    case 7: {  // x = 3 a_i, x = 2 a_j, x = a_k + a_l, all roles distinct
      for (const Term& t : sup.s1) {
        if (t.second != 3) continue;
        for (const Term& u : sup.s1) {
          if (u.second != 2 || u.first == t.first) continue;
          for (const auto& p : sup.s2) {
            if (!coeffs_are(p, 1, 1) || involves(p, t.first) ||
                involves(p, u.first)) {
              continue;
            }
            return Witness{{"a_i", gens[t.first]},
                           {"a_j", gens[u.first]},
                           {"a_k", gens[p[0].first]},
                           {"a_l", gens[p[1].first]}};
          }
        }
      }
      return std::nullopt;
    }
    case 8: {  // x = 2 a_i and two distinct pair sums avoiding a_i
      for (const Term& t : sup.s1) {
        if (t.second != 2) continue;
        std::vector<const std::array<Term, 2>*> ones;
        for (const auto& p : sup.s2) {
          if (coeffs_are(p, 1, 1) && !involves(p, t.first)) ones.push_back(&p);
        }
        if (ones.size() >= 2) {
          return Witness{{"a_i", gens[t.first]},
                         {"a_k", gens[(*ones[0])[0].first]},
                         {"a_l", gens[(*ones[0])[1].first]},
                         {"a_m", gens[(*ones[1])[0].first]},
                         {"a_n", gens[(*ones[1])[1].first]}};
        }
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// Admissible forms for order 7.
std::optional<Witness> match_order7(int k, const Supports& sup,
                                    const std::vector<std::int64_t>& gens) {
  switch (k) {
    case 1: {  // x = 7 a_i
      if (auto i = single_with(sup, 7)) return Witness{{"a_i", gens[*i]}};
      return std::nullopt;
    }
    case 2: {  // x = 5 a_i = 3 a_j
      auto i = single_with(sup, 5);
      auto j = single_with(sup, 3);
      if (i && j) return Witness{{"a_i", gens[*i]}, {"a_j", gens[*j]}};
      return std::nullopt;
    }
    case 3: {  // x = 3 a_i + a_j
      for (const auto& p : sup.s2) {
        if (coeffs_are(p, 1, 3)) {
          return Witness{{"a_i", gens[carrier(p, 3)]},
                         {"a_j", gens[carrier(p, 1)]}};
        }
      }
      return std::nullopt;
    }
    case 4: {  // x = 5 a_i and x = a_j + a_k
      auto i = single_with(sup, 5);
      if (!i) return std::nullopt;
      for (const auto& p : sup.s2) {
        if (coeffs_are(p, 1, 1)) {
          return Witness{{"a_i", gens[*i]},
                         {"a_j", gens[p[0].first]},
                         {"a_k", gens[p[1].first]}};
        }
      }
      return std::nullopt;
    }
    case 5: {  // x = 3 a_i and x = 2 a_j + a_k, i fresh
      for (const Term& t : sup.s1) {
        if (t.second != 3) continue;
        for (const auto& p : sup.s2) {
          if (!coeffs_are(p, 1, 2) || involves(p, t.first)) continue;
          return Witness{{"a_i", gens[t.first]},
                         {"a_j", gens[carrier(p, 2)]},
                         {"a_k", gens[carrier(p, 1)]}};
        }
      }
      return std::nullopt;
    }
    case 6: {  // x = a_i + a_j and x = 2 a_k + a_l on disjoint generators
      for (const auto& p : sup.s2) {
        if (!coeffs_are(p, 1, 1)) continue;
        for (const auto& q : sup.s2) {
          if (!coeffs_are(q, 1, 2)) continue;
          if (involves(q, p[0].first) || involves(q, p[1].first)) continue;
          return Witness{{"a_i", gens[p[0].first]},
                         {"a_j", gens[p[1].first]},
                         {"a_k", gens[carrier(q, 2)]},
                         {"a_l", gens[carrier(q, 1)]}};
        }
      }
      return std::nullopt;
    }
    case 7: {  // x = 3 a_i and two pair sums avoiding a_i
      for (const Term& t : sup.s1) {
        if (t.second != 3) continue;
        std::vector<const std::array<Term, 2>*> ones;
        for (const auto& p : sup.s2) {
          if (coeffs_are(p, 1, 1) && !involves(p, t.first)) ones.push_back(&p);
        }
        if (ones.size() >= 2) {
          return Witness{{"a_i", gens[t.first]},
                         {"a_j", gens[(*ones[0])[0].first]},
                         {"a_k", gens[(*ones[0])[1].first]},
                         {"a_l", gens[(*ones[1])[0].first]},
                         {"a_m", gens[(*ones[1])[1].first]}};
        }
      }
      return std::nullopt;
    }
    case 8: {  // three pair sums
      std::vector<const std::array<Term, 2>*> ones;
      for (const auto& p : sup.s2) {
        if (coeffs_are(p, 1, 1)) ones.push_back(&p);
      }
      if (ones.size() >= 3) {
        return Witness{{"a_i", gens[(*ones[0])[0].first]},
                       {"a_j", gens[(*ones[0])[1].first]},
                       {"a_k", gens[(*ones[1])[0].first]},
                       {"a_l", gens[(*ones[1])[1].first]},
                       {"a_m", gens[(*ones[2])[0].first]},
                       {"a_n", gens[(*ones[2])[1].first]}};
      }
      return std::nullopt;
    }
    case 9: {  // x = a_i + a_j + a_k
      for (const auto& t : sup.s3) {
        if (t[0].second == 1 && t[1].second == 1 && t[2].second == 1) {
          return Witness{{"a_i", gens[t[0].first]},
                         {"a_j", gens[t[1].first]},
                         {"a_k", gens[t[2].first]}};
        }
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

void require_order(const NumericalSemigroup& S, std::int64_t x, int order) {
  if (order != 6 && order != 7) {
    throw Error(errc::order_mismatch,
                "case lists exist for orders 6 and 7, got " +
                    std::to_string(order));
  }
  const std::size_t actual = divisors(S, x).nonzero().size();
  if (actual != static_cast<std::size_t>(order)) {
    throw Error(errc::order_mismatch,
                "x = " + std::to_string(x) + " has |B*(x)| = " +
                    std::to_string(actual) + ", not " + std::to_string(order));
  }
}

}  // namespace

std::optional<CaseMatch> match_case(const NumericalSemigroup& S,
                                    std::int64_t x,
                                    const FactorizationProfile& p, int order) {
  require_order(S, x, order);
  const Supports sup = split_supports(p);
  const auto& gens = S.generators();
  const int count = order == 6 ? 8 : 9;
  for (int k = 1; k <= count; ++k) {
    auto w = order == 6 ? match_order6(k, sup, gens)
                        : match_order7(k, sup, gens);
    if (w) return CaseMatch{order, k, std::move(*w)};
  }
  return std::nullopt;
}

std::vector<int> matching_cases(const NumericalSemigroup& S, std::int64_t x,
                                const FactorizationProfile& p, int order) {
  require_order(S, x, order);
  const Supports sup = split_supports(p);
  const auto& gens = S.generators();
  const int count = order == 6 ? 8 : 9;
  std::vector<int> out;
  for (int k = 1; k <= count; ++k) {
    auto w = order == 6 ? match_order6(k, sup, gens)
                        : match_order7(k, sup, gens);
    if (w) out.push_back(k);
  }
  return out;
}

std::vector<std::string> order6_exclusions(const FactorizationProfile& p) {
  std::vector<std::string> fired;
  if (p.any_at_least(3)) fired.push_back("O6.1");
  if (p.count(1) >= 3) fired.push_back("O6.2");
  if (p.count(2) > 0 && p.count(1) == 0) fired.push_back("O6.3");
  if (p.count(1) >= 2 && p.count(2) >= 2) fired.push_back("O6.4");
  return fired;
}

std::vector<std::string> order7_exclusions(const FactorizationProfile& p) {
  std::vector<std::string> fired;
  if (p.any_at_least(4)) fired.push_back("O7.1");
  if (p.count(3) >= 2) fired.push_back("O7.2");
  if (p.count(3) == 1 && (p.count(1) > 0 || p.count(2) > 0)) {
    fired.push_back("O7.3");
  }
  if (p.count(2) >= 4) fired.push_back("O7.4");
  if (p.count(2) == 3 && p.count(1) > 0) fired.push_back("O7.5");
  if (p.count(2) == 2 && p.count(1) >= 2) fired.push_back("O7.6");
  if (p.count(2) == 1 && p.count(1) >= 2) fired.push_back("O7.7");
  if (p.count(1) >= 3) fired.push_back("O7.8");
  return fired;
}

const std::vector<std::vector<int>>& degree_table(int order) {
  static const std::vector<std::vector<int>> rows6{
      {1, 2, 3, 3, 4, 5}, {2, 3, 3, 4, 5, 5}, {2, 3, 4, 4, 4, 5},
      {3, 3, 4, 4, 5, 5}, {3, 4, 4, 4, 4, 5}, {4, 4, 4, 4, 5, 5}};
  static const std::vector<std::vector<int>> rows7{
      {1, 2, 3, 3, 4, 5, 6}, {2, 3, 3, 4, 5, 5, 6}, {3, 3, 3, 5, 5, 5, 6},
      {3, 4, 4, 5, 5, 5, 6}, {4, 4, 5, 5, 5, 5, 6}, {5, 5, 5, 5, 5, 5, 6}};
  if (order == 6) return rows6;
  if (order == 7) return rows7;
  throw Error(errc::order_mismatch,
              "degree table exists for orders 6 and 7, got " +
                  std::to_string(order));
}

const std::vector<TypeRepresentativeSpec>& type_representative_specs() {
  static const std::vector<TypeRepresentativeSpec> specs{
      {6, 1, {1, 2, 3, 3, 4, 5, 0}, {32, 48, 56, 52, 46, 31, 0}, {2, 15}, 12},
      {6, 2, {2, 3, 3, 4, 5, 5, 0}, {36, 52, 59, 52, 46, 31, 0}, {2, 5}, 10},
      {6, 3, {2, 3, 4, 4, 4, 5, 0}, {40, 52, 58, 53, 46, 31, 0}, {2, 3}, 8},
      {6, 4, {3, 3, 4, 4, 5, 5, 0}, {44, 52, 59, 53, 46, 31, 0}, {3, 4, 5}, 10},
      {6, 5, {3, 4, 4, 4, 4, 5, 0}, {42, 53, 58, 53, 46, 31, 0}, {3, 4}, 12},
      {6, 6, {4, 4, 4, 4, 5, 5, 0}, {46, 53, 59, 53, 46, 31, 0}, {4, 5, 6, 7}, 12},
      {7, 1, {1, 2, 3, 3, 4, 5, 6}, {64, 96, 112, 112, 108, 94, 63}, {2, 9}, 14},
      {7, 2, {2, 3, 3, 4, 5, 5, 6}, {80, 104, 112, 114, 109, 94, 63}, {2, 3}, 9},
      {7, 3, {3, 3, 3, 5, 5, 5, 6}, {88, 104, 112, 115, 109, 94, 63}, {4, 5, 6}, 15},
      {7, 4, {3, 4, 4, 5, 5, 5, 6}, {82, 109, 114, 114, 109, 94, 63}, {3, 5}, 15},
      {7, 5, {4, 4, 5, 5, 5, 5, 6}, {92, 108, 115, 115, 109, 94, 63}, {4, 5, 6, 7}, 13},
      {7, 6, {5, 5, 5, 5, 5, 5, 6}, {94, 109, 115, 115, 109, 94, 63}, {5, 6, 7, 8, 9}, 15},
  };
  return specs;
}

const IdealGraph& type_representative(int order, int index) {
  static const std::map<std::pair<int, int>, IdealGraph> reps = [] {
    std::map<std::pair<int, int>, IdealGraph> m;
    for (const TypeRepresentativeSpec& spec : type_representative_specs()) {
      std::vector<std::int64_t> labels;
      for (int v = 1; v <= spec.order; ++v) labels.push_back(v);
      const auto& rows = spec.adjacency_rows;
      m.emplace(std::make_pair(spec.order, spec.index),
                IdealGraph(std::move(labels), [&rows](int i, int j) {
                  return (rows[static_cast<std::size_t>(i)] >> j) & 1;
                }));
    }
    return m;
  }();
  auto it = reps.find({order, index});
  if (it == reps.end()) {
    throw Error(errc::invalid_argument,
                "no type representative for order " + std::to_string(order) +
                    " index " + std::to_string(index));
  }
  return it->second;
}

std::optional<GraphType> table_type(const IdealGraph& G) {
  const int order = G.order();
  const auto& rows = degree_table(order);  // validates order
  const std::vector<int> deg = G.degree_sequence();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] != deg) continue;
    const int index = static_cast<int>(r) + 1;
    if (!isomorphic(G, type_representative(order, index))) return std::nullopt;
    return GraphType{order, index, deg};
  }
  return std::nullopt;
}

const char* type_planarity_name(TypePlanarity v) {
  switch (v) {
    case TypePlanarity::planar:
      return "planar";
    case TypePlanarity::nonplanar:
      return "nonplanar";
    case TypePlanarity::out_of_range:
      return "out-of-range";
  }
  return "?";
}

TypePlanarity planarity_by_type(int order, const std::optional<GraphType>& t) {
  if (order <= 5) return TypePlanarity::planar;
  if (order >= 8) return TypePlanarity::nonplanar;
  if (!t) {
    throw Error(errc::missing_type,
                "order " + std::to_string(order) +
                    " needs a table type to decide planarity");
  }
  const int cutoff = order == 6 ? 4 : 3;
  return t->index <= cutoff ? TypePlanarity::planar : TypePlanarity::nonplanar;
}

ClassificationReport classify(const NumericalSemigroup& S, std::int64_t x) {
  ClassificationReport r;
  r.generators = S.generators();
  r.x = x;
  const FactorizationProfile p = profile(S, x);
  r.graph = build_graph(S, x);
  r.order = r.graph.order();
  r.divisor_count = r.order + 1;  // B(x) adds the vertex 0

  for (const Factorization& f : p.list) {
    if (f.support_size() == 0) continue;
    r.bound_best = std::max(r.bound_best, divisor_count_lower_bound(f));
  }
  r.divisor_bound_holds = r.divisor_count >= r.bound_best;

  r.exclusions = order6_exclusions(p);
  for (std::string& id : order7_exclusions(p)) {
    r.exclusions.push_back(std::move(id));
  }

  if (r.order == 6 || r.order == 7) {
    r.matched_case = match_case(S, x, p, r.order);
    r.all_cases = matching_cases(S, x, p, r.order);
    r.type = table_type(r.graph);
    r.predicted = r.type ? planarity_by_type(r.order, r.type)
                         : TypePlanarity::out_of_range;
  } else {
    r.predicted = planarity_by_type(r.order, std::nullopt);
  }

  if (r.order <= 7) {
    r.oracle = is_planar(r.graph);
  } else if (auto clique = find_clique(r.graph, 5)) {
    PlanarityVerdict v;
    v.planar = false;
    KuratowskiWitness w;
    w.kind = KuratowskiWitness::Kind::K5;
    std::vector<std::int64_t> labels;
    for (int idx : *clique) labels.push_back(r.graph.label(idx));
    std::sort(labels.begin(), labels.end());
    w.parts.push_back(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        w.paths.push_back({labels[i], labels[j]});
      }
    }
    v.certificate = std::move(w);
    r.oracle = std::move(v);
  } else if (r.order <= 16) {
    r.oracle = is_planar(r.graph);
  }

  if (!r.oracle || r.predicted == TypePlanarity::out_of_range) {
    r.agreement = true;
  } else {
    r.agreement =
        r.oracle->planar == (r.predicted == TypePlanarity::planar);
  }
  return r;
}

}  // namespace nsgraph
