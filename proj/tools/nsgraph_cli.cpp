#include <cstdint>
#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsgraph.h"

namespace {

using SemigroupPtr =
    std::unique_ptr<nsg_semigroup, decltype(&nsg_semigroup_destroy)>;
using GraphPtr = std::unique_ptr<nsg_graph, decltype(&nsg_graph_destroy)>;
using IdealPtr = std::unique_ptr<nsg_ideal, decltype(&nsg_ideal_destroy)>;

int report_error() {
  std::fprintf(stderr, "error: %s\n", nsg_last_error());
  return 1;
}

SemigroupPtr make_semigroup(const std::vector<int64_t>& gens) {
  nsg_semigroup* s = nullptr;
  if (nsg_semigroup_create(gens.data(), gens.size(), &s) != NSG_OK) {
    return {nullptr, nsg_semigroup_destroy};
  }
  return {s, nsg_semigroup_destroy};
}

// Two-call pattern: size query first, then the actual copy.
template <typename Fetch>
bool fetch_list(Fetch fetch, std::vector<int64_t>* out) {
  size_t need = 0;
  if (fetch(nullptr, 0, &need) != NSG_OK) return false;
  out->assign(need, 0);
  return need == 0 || fetch(out->data(), out->size(), &need) == NSG_OK;
}

std::string join(const std::vector<int64_t>& values, const char* sep) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

int print_rendered(nsg_status status, char* text) {
  if (status != NSG_OK) return report_error();
  if (text != nullptr) {
    std::fputs(text, stdout);
    nsg_string_free(text);
  }
  return 0;
}

nsg_format format_from_name(const std::string& name) {
  return name == "json" ? NSG_RENDER_JSON : NSG_RENDER_DOT;
}

int run_info(const std::vector<int64_t>& gens) {
  auto s = make_semigroup(gens);
  if (!s) return report_error();
  char* text = nullptr;
  const nsg_status status =
      nsg_semigroup_render(s.get(), NSG_RENDER_TEXT, &text);
  return print_rendered(status, text);
}

int run_bx(const std::vector<int64_t>& gens, int64_t x) {
  auto s = make_semigroup(gens);
  if (!s) return report_error();
  std::vector<int64_t> elements;
  const bool ok = fetch_list(
      [&](int64_t* buf, size_t cap, size_t* written) {
        return nsg_divisors(s.get(), x, buf, cap, written);
      },
      &elements);
  if (!ok) return report_error();
  size_t nonzero = 0;
  for (int64_t v : elements) {
    if (v != 0) ++nonzero;
  }
  std::printf("B(%lld) = {%s}  (%zu elements, %zu nonzero)\n",
              static_cast<long long>(x), join(elements, ", ").c_str(),
              elements.size(), nonzero);
  return 0;
}

int run_graph(const std::vector<int64_t>& gens, int64_t x,
              const std::string& format) {
  auto s = make_semigroup(gens);
  if (!s) return report_error();
  nsg_graph* raw = nullptr;
  if (nsg_graph_build(s.get(), x, &raw) != NSG_OK) return report_error();
  GraphPtr g(raw, nsg_graph_destroy);
  char* text = nullptr;
  const nsg_status status =
      nsg_graph_render(g.get(), format_from_name(format), &text);
  return print_rendered(status, text);
}

int run_classify(const std::vector<int64_t>& gens, int64_t x, bool json) {
  auto s = make_semigroup(gens);
  if (!s) return report_error();
  nsg_report* raw = nullptr;
  if (nsg_classify(s.get(), x, &raw) != NSG_OK) return report_error();
  std::unique_ptr<nsg_report, decltype(&nsg_report_destroy)> report(
      raw, nsg_report_destroy);
  char* text = nullptr;
  const nsg_status status = nsg_report_render(
      report.get(), json ? NSG_RENDER_JSON : NSG_RENDER_TEXT, &text);
  return print_rendered(status, text);
}

int run_ideal(const std::vector<int64_t>& gens,
              const std::vector<int64_t>& ideal_gens, bool show_graph,
              const std::string& format) {
  auto s = make_semigroup(gens);
  if (!s) return report_error();
  nsg_ideal* raw = nullptr;
  if (nsg_ideal_create(s.get(), ideal_gens.data(), ideal_gens.size(), &raw) !=
      NSG_OK) {
    return report_error();
  }
  IdealPtr ideal(raw, nsg_ideal_destroy);

  if (show_graph) {
    nsg_graph* graph_raw = nullptr;
    if (nsg_ideal_graph(ideal.get(), &graph_raw) != NSG_OK) {
      return report_error();
    }
    GraphPtr g(graph_raw, nsg_graph_destroy);
    char* text = nullptr;
    const nsg_status status =
        nsg_graph_render(g.get(), format_from_name(format), &text);
    return print_rendered(status, text);
  }

  std::vector<int64_t> sg;
  fetch_list(
      [&](int64_t* buf, size_t cap, size_t* written) {
        return nsg_semigroup_generators(s.get(), buf, cap, written);
      },
      &sg);
  std::vector<int64_t> complement;
  if (!fetch_list(
          [&](int64_t* buf, size_t cap, size_t* written) {
            return nsg_ideal_complement(ideal.get(), buf, cap, written);
          },
          &complement)) {
    return report_error();
  }
  std::printf("semigroup: <%s>\n", join(sg, ", ").c_str());
  std::printf("ideal generators: %s\n", join(ideal_gens, ", ").c_str());
  std::printf("complement: {%s}  (%zu elements)\n",
              join(complement, ", ").c_str(), complement.size());
  int64_t x = 0;
  if (nsg_ideal_is_irreducible(ideal.get(), &x)) {
    std::printf("irreducible: yes, x = %lld\n", static_cast<long long>(x));
  } else {
    std::printf("irreducible: no\n");
  }
  return 0;
}

int run_verify(int max_dim, int max_gen, int64_t max_x, int jobs,
               const std::string& csv, bool json) {
  nsg_verification* raw = nullptr;
  const nsg_status status =
      nsg_verify(max_dim, max_gen, max_x, jobs,
                 csv.empty() ? nullptr : csv.c_str(), &raw);
  if (status != NSG_OK) return report_error();
  std::unique_ptr<nsg_verification, decltype(&nsg_verification_destroy)>
      verification(raw, nsg_verification_destroy);
  char* text = nullptr;
  const nsg_status render_status = nsg_verification_render(
      verification.get(), json ? NSG_RENDER_JSON : NSG_RENDER_TEXT, &text);
  const int rc = print_rendered(render_status, text);
  if (rc != 0) return rc;
  return nsg_verification_violations(verification.get()) > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisor graphs of numerical semigroup ideals"};
  app.require_subcommand(1);

  std::vector<int64_t> gens;
  std::vector<int64_t> ideal_gens;
  int64_t x = 0;
  std::string format = "dot";
  bool json = false;
  bool show_graph = false;
  int max_dim = 6;
  int max_gen = 30;
  int64_t max_x = 200;
  int jobs = 0;
  std::string csv;

  auto* info = app.add_subcommand("info", "summarize a numerical semigroup");
  info->add_option("--gens", gens, "comma-separated generators")
      ->required()
      ->delimiter(',');

  auto* bx = app.add_subcommand("bx", "list the divisors of x");
  bx->add_option("--gens", gens, "comma-separated generators")
      ->required()
      ->delimiter(',');
  bx->add_option("--x", x, "element of the semigroup")->required();

  auto* graph = app.add_subcommand("graph", "emit the divisor graph of x");
  graph->add_option("--gens", gens, "comma-separated generators")
      ->required()
      ->delimiter(',');
  graph->add_option("--x", x, "element of the semigroup")->required();
  graph->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* classify =
      app.add_subcommand("classify", "classify the divisor graph of x");
  classify->add_option("--gens", gens, "comma-separated generators")
      ->required()
      ->delimiter(',');
  classify->add_option("--x", x, "element of the semigroup")->required();
  classify->add_flag("--json", json, "emit JSON instead of text");

  auto* ideal =
      app.add_subcommand("ideal", "inspect an ideal given by generators");
  ideal->add_option("--gens", gens, "comma-separated semigroup generators")
      ->required()
      ->delimiter(',');
  ideal
      ->add_option("--ideal-gens", ideal_gens,
                   "comma-separated ideal generators")
      ->required()
      ->delimiter(',');
  ideal->add_flag("--graph", show_graph, "emit the ideal's graph");
  ideal->add_option("--format", format, "graph output format")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* verify =
      app.add_subcommand("verify", "sweep a domain and check every claim");
  verify->add_option("--max-dim", max_dim, "max embedding dimension");
  verify->add_option("--max-gen", max_gen, "max generator value");
  verify->add_option("--max-x", max_x, "max element scanned per semigroup");
  verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  verify->add_option("--csv", csv, "write per-instance rows to this file");
  verify->add_flag("--json", json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (info->parsed()) return run_info(gens);
  if (bx->parsed()) return run_bx(gens, x);
  if (graph->parsed()) return run_graph(gens, x, format);
  if (classify->parsed()) return run_classify(gens, x, json);
  if (ideal->parsed()) return run_ideal(gens, ideal_gens, show_graph, format);
  if (verify->parsed()) {
    return run_verify(max_dim, max_gen, max_x, jobs, csv, json);
  }
  return 1;
}
