#include "core/render.hpp"

#include <sstream>

#include "json.hpp"

namespace nsgraph {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<std::int64_t>& xs, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << sep;
    out << xs[i];
  }
  return out.str();
}

std::string join_int(const std::vector<int>& xs, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << sep;
    out << xs[i];
  }
  return out.str();
}

ordered_json witness_node(const KuratowskiWitness& w) {
  ordered_json j;
  j["kind"] = w.kind == KuratowskiWitness::Kind::K5 ? "K5" : "K33";
  j["parts"] = w.parts;
  j["paths"] = w.paths;
  return j;
}

ordered_json classification_node(const ClassificationReport& r) {
  ordered_json j;
  j["generators"] = r.generators;
  j["x"] = r.x;
  j["order"] = r.order;
  j["degree_sequence"] = r.graph.degree_sequence();
  if (r.matched_case) {
    ordered_json c;
    c["theorem"] = r.matched_case->family == 6 ? 1 : 2;
    c["index"] = r.matched_case->index;
    ordered_json w;
    for (const auto& [role, value] : r.matched_case->witness) {
      w[role] = value;
    }
    c["witness"] = w;
    j["case"] = c;
  } else {
    j["case"] = nullptr;
  }
  j["all_cases"] = r.all_cases;
  if (r.type) {
    ordered_json t;
    t["order"] = r.type->order;
    t["index"] = r.type->index;
    t["degree_sequence"] = r.type->degree_sequence;
    j["type"] = t;
  } else {
    j["type"] = nullptr;
  }
  if (r.predicted == TypePlanarity::out_of_range) {
    j["planar_theorem"] = "out-of-range";
  } else {
    j["planar_theorem"] = r.predicted == TypePlanarity::planar;
  }
  if (r.oracle) {
    j["planar_oracle"] = r.oracle->planar;
  } else {
    j["planar_oracle"] = nullptr;
  }
  j["agreement"] = r.agreement;
  j["exclusions"] = r.exclusions;
  j["divisor_bound"] = {{"claimed", r.bound_best},
                        {"actual", r.divisor_count},
                        {"holds", r.divisor_bound_holds}};
  if (r.oracle && r.oracle->certificate) {
    j["certificate"] = witness_node(*r.oracle->certificate);
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

std::string type_key(const std::pair<int, int>& k) {
  return std::to_string(k.first) + "." + std::to_string(k.second);
}

}  // namespace

std::string semigroup_json(const NumericalSemigroup& S) {
  ordered_json j;
  j["generators"] = S.generators();
  j["frobenius"] = S.frobenius();
  j["gaps"] = S.gaps();
  return j.dump();
}

std::string semigroup_text(const NumericalSemigroup& S) {
  std::ostringstream out;
  if (S.raw_generators() != S.generators()) {
    out << "input generators: " << join(S.raw_generators(), ", ") << "\n";
  }
  out << "generators: " << join(S.generators(), ", ") << "\n";
  out << "frobenius: " << S.frobenius() << "\n";
  out << "gaps: "
      << (S.gaps().empty() ? std::string("none") : join(S.gaps(), ", "))
      << "\n";
  out << "multiplicity: " << S.multiplicity() << "\n";
  return out.str();
}

std::string divisor_set_text(const DivisorSet& D) {
  std::ostringstream out;
  out << "B(" << D.x << ") = {" << join(D.elements, ", ") << "}  ("
      << D.elements.size() << " elements, " << D.nonzero().size()
      << " nonzero)\n";
  return out.str();
}

std::string graph_dot(const IdealGraph& G) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int i = 0; i < G.order(); ++i) {
    out << "  v" << G.label(i) << ";\n";
  }
  for (const auto& [y, z] : G.edges()) {
    out << "  v" << y << " -- v" << z << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_text(const IdealGraph& G) {
  std::ostringstream out;
  out << "order: " << G.order() << "\n";
  out << "edges: " << G.edge_count() << "\n";
  out << "degree sequence: " << join_int(G.degree_sequence(), ", ") << "\n";
  out << "vertices: " << join(G.labels(), ", ") << "\n";
  out << "edge list:";
  for (const auto& [y, z] : G.edges()) {
    out << " (" << y << "," << z << ")";
  }
  out << "\n";
  return out.str();
}

std::string graph_json(const std::vector<std::int64_t>& generators,
                       std::int64_t x, const IdealGraph& G) {
  ordered_json j;
  j["generators"] = generators;
  j["x"] = x;
  j["vertices"] = G.labels();
  auto edges = ordered_json::array();
  for (const auto& [y, z] : G.edges()) {
    edges.push_back(ordered_json::array({y, z}));
  }
  j["edges"] = edges;
  return j.dump();
}

std::string ideal_graph_json(const std::vector<std::int64_t>& generators,
                             const std::vector<std::int64_t>& ideal_generators,
                             const IdealGraph& G) {
  ordered_json j;
  j["generators"] = generators;
  j["ideal_generators"] = ideal_generators;
  j["vertices"] = G.labels();
  auto edges = ordered_json::array();
  for (const auto& [y, z] : G.edges()) {
    edges.push_back(ordered_json::array({y, z}));
  }
  j["edges"] = edges;
  return j.dump();
}

std::string witness_json(const KuratowskiWitness& w) {
  return witness_node(w).dump();
}

std::string classification_json(const ClassificationReport& r) {
  return classification_node(r).dump(2);
}

std::string classification_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "semigroup: <" << join(r.generators, ", ") << ">\n";
  out << "x: " << r.x << "\n";
  out << "order: " << r.order << "\n";
  if (r.order > 0) {
    out << "degree sequence: " << join_int(r.graph.degree_sequence(), ", ")
        << "\n";
  }
  if (r.order == 6 || r.order == 7) {
    if (r.matched_case) {
      out << "case: " << r.matched_case->index;
      out << "   witness:";
      for (std::size_t i = 0; i < r.matched_case->witness.size(); ++i) {
        const auto& [role, value] = r.matched_case->witness[i];
        out << (i ? ", " : " ") << role << " = " << value;
      }
      out << "\n";
      if (r.all_cases.size() > 1) {
        out << "all matching cases: " << join_int(r.all_cases, ", ") << "\n";
      }
    } else {
      out << "case: none matched\n";
    }
    if (r.type) {
      out << "type: " << r.type->index << "\n";
    } else {
      out << "type: none\n";
    }
  }
  out << "planar (classification): " << type_planarity_name(r.predicted)
      << "\n";
  if (r.oracle) {
    out << "planar (oracle): " << (r.oracle->planar ? "planar" : "nonplanar")
        << "\n";
  } else {
    out << "planar (oracle): not computed\n";
  }
  out << "agreement: " << (r.agreement ? "yes" : "no") << "\n";
  out << "exclusions fired: "
      << (r.exclusions.empty() ? std::string("none")
                               : [&r] {
                                   std::string s;
                                   for (std::size_t i = 0;
                                        i < r.exclusions.size(); ++i) {
                                     if (i) s += ", ";
                                     s += r.exclusions[i];
                                   }
                                   return s;
                                 }())
      << "\n";
  out << "divisor bound: claimed >= " << r.bound_best << ", actual "
      << r.divisor_count << " (" << (r.divisor_bound_holds ? "holds" : "FAILS")
      << ")\n";
  if (r.oracle && r.oracle->certificate) {
    const KuratowskiWitness& w = *r.oracle->certificate;
    out << "certificate: "
        << (w.kind == KuratowskiWitness::Kind::K5 ? "K5" : "K33") << "\n";
    out << "  parts:";
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
      out << (i ? " / {" : " {") << join(w.parts[i], ", ") << "}";
    }
    out << "\n  paths:";
    for (const auto& path : w.paths) {
      out << " " << join(path, "-");
    }
    out << "\n";
  }
  return out.str();
}

std::string verification_json(const VerificationReport& r) {
  ordered_json j;
  j["config"] = {{"max_embedding_dim", r.config.max_embedding_dim},
                 {"max_generator", r.config.max_generator},
                 {"max_x", r.config.max_x},
                 {"jobs", r.config.jobs}};
  j["semigroups"] = r.semigroup_count;
  j["instances"] = r.instances;
  j["duration_seconds"] = r.duration_seconds;
  ordered_json per_order;
  for (const auto& [order, count] : r.per_order) {
    per_order[std::to_string(order)] = count;
  }
  j["per_order"] = per_order;
  ordered_json per_type;
  for (const auto& [key, count] : r.per_type) per_type[type_key(key)] = count;
  j["per_type"] = per_type;
  ordered_json per_case;
  for (const auto& [key, count] : r.per_case) per_case[type_key(key)] = count;
  j["per_case"] = per_case;
  ordered_json counts;
  for (const std::string& id : check_ids()) {
    auto it = r.violation_counts.find(id);
    counts[id] = it == r.violation_counts.end() ? 0 : it->second;
  }
  j["violation_counts"] = counts;
  ordered_json examples;
  for (const std::string& id : check_ids()) {
    auto it = r.examples.find(id);
    if (it == r.examples.end() || it->second.empty()) continue;
    auto arr = ordered_json::array();
    for (const Violation& v : it->second) {
      arr.push_back({{"generators", v.generators}, {"x", v.x}});
    }
    examples[id] = arr;
  }
  j["examples"] = examples;
  j["total_violations"] = r.total_violations;
  return j.dump(2);
}

std::string verification_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "domain: embedding dimension 2.." << r.config.max_embedding_dim
      << ", generators <= " << r.config.max_generator << ", x in 1.."
      << r.config.max_x << "\n";
  out << "semigroups: " << r.semigroup_count << "\n";
  out << "instances: " << r.instances << "\n";
  out << "duration: " << r.duration_seconds << " s\n";
  out << "per order:";
  for (const auto& [order, count] : r.per_order) {
    out << " " << order << ":" << count;
  }
  out << "\nper type:";
  for (const auto& [key, count] : r.per_type) {
    out << " " << type_key(key) << ":" << count;
  }
  out << "\nper case:";
  for (const auto& [key, count] : r.per_case) {
    out << " " << type_key(key) << ":" << count;
  }
  out << "\nchecks:\n";
  for (const std::string& id : check_ids()) {
    auto it = r.violation_counts.find(id);
    const std::uint64_t count =
        it == r.violation_counts.end() ? 0 : it->second;
    out << "  " << id << ": ";
    if (count == 0) {
      out << "ok\n";
      continue;
    }
    out << count << " violation" << (count == 1 ? "" : "s");
    auto ex = r.examples.find(id);
    if (ex != r.examples.end() && !ex->second.empty()) {
      const Violation& v = ex->second.front();
      out << ", first <" << join(v.generators, ",") << "> x=" << v.x;
    }
    out << "\n";
  }
  out << "total violations: " << r.total_violations << "\n";
  return out.str();
}

std::string csv_header() {
  return "generators;x;order;case;type;planar_theorem;planar_oracle;"
         "agreement";
}

std::string csv_line(const std::vector<std::int64_t>& generators,
                     std::int64_t x, int order, std::optional<int> case_index,
                     std::optional<int> type_index, TypePlanarity predicted,
                     std::optional<bool> oracle_planar, bool agreement) {
  std::ostringstream out;
  out << join(generators, ",") << ";" << x << ";" << order << ";";
  if (case_index) out << *case_index;
  out << ";";
  if (type_index) out << *type_index;
  out << ";" << type_planarity_name(predicted) << ";";
  if (oracle_planar) out << (*oracle_planar ? "planar" : "nonplanar");
  out << ";" << (agreement ? "true" : "false");
  return out.str();
}

}  // namespace nsgraph
