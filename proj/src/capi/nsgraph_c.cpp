#include "nsgraph.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/classifier.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/ideal.hpp"
#include "core/render.hpp"
#include "core/semigroup.hpp"
#include "core/sweep.hpp"

struct nsg_semigroup {
  nsgraph::NumericalSemigroup impl;
};

struct nsg_graph {
  nsgraph::IdealGraph impl;
  std::vector<std::int64_t> generators;
  std::int64_t x = 0;
  bool from_ideal = false;
  std::vector<std::int64_t> ideal_generators;
};

struct nsg_ideal {
  nsgraph::GeneratedIdeal impl;
};

struct nsg_report {
  nsgraph::ClassificationReport impl;
};

struct nsg_verification {
  nsgraph::VerificationReport impl;
};

namespace {

thread_local std::string g_last_error;

nsg_status map_code(nsgraph::errc code) {
  using nsgraph::errc;
  switch (code) {
    case errc::invalid_argument:
      return NSG_INVALID_ARGUMENT;
    case errc::empty_generator_list:
      return NSG_EMPTY_GENERATOR_LIST;
    case errc::non_coprime_generators:
      return NSG_NON_COPRIME_GENERATORS;
    case errc::not_a_member:
      return NSG_NOT_A_MEMBER;
    case errc::zero_factorization:
      return NSG_ZERO_FACTORIZATION;
    case errc::order_too_large:
      return NSG_ORDER_TOO_LARGE;
    case errc::order_mismatch:
      return NSG_ORDER_MISMATCH;
    case errc::missing_type:
      return NSG_MISSING_TYPE;
    case errc::io_error:
      return NSG_IO_ERROR;
  }
  return NSG_UNKNOWN_ERROR;
}

template <typename F>
nsg_status guarded(F&& f) {
  try {
    return f();
  } catch (const nsgraph::Error& e) {
    g_last_error = e.what();
    return map_code(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NSG_UNKNOWN_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return NSG_UNKNOWN_ERROR;
  }
}

nsg_status fail(nsg_status status, const char* message) {
  g_last_error = message;
  return status;
}

nsg_status fill_buffer(const std::vector<std::int64_t>& src, int64_t* buf,
                       size_t cap, size_t* written) {
  if (written) *written = src.size();
  if (buf == nullptr || cap == 0) return NSG_OK;  // size query
  if (cap < src.size()) return fail(NSG_INVALID_ARGUMENT, "buffer too small");
  std::memcpy(buf, src.data(), src.size() * sizeof(int64_t));
  return NSG_OK;
}

nsg_status copy_out(const std::string& s, char** out) {
  char* mem = static_cast<char*>(std::malloc(s.size() + 1));
  if (mem == nullptr) return fail(NSG_UNKNOWN_ERROR, "out of memory");
  std::memcpy(mem, s.c_str(), s.size() + 1);
  *out = mem;
  return NSG_OK;
}

}  // namespace

extern "C" {

const char* nsg_status_name(nsg_status status) {
  switch (status) {
    case NSG_OK:
      return "ok";
    case NSG_INVALID_ARGUMENT:
      return "invalid argument";
    case NSG_EMPTY_GENERATOR_LIST:
      return "empty generator list";
    case NSG_NON_COPRIME_GENERATORS:
      return "non-coprime generators";
    case NSG_NOT_A_MEMBER:
      return "not a member";
    case NSG_ZERO_FACTORIZATION:
      return "zero factorization";
    case NSG_ORDER_TOO_LARGE:
      return "order too large";
    case NSG_ORDER_MISMATCH:
      return "order mismatch";
    case NSG_MISSING_TYPE:
      return "missing type";
    case NSG_IO_ERROR:
      return "io error";
    case NSG_UNKNOWN_ERROR:
      break;
  }
  return "unknown error";
}

const char* nsg_last_error(void) { return g_last_error.c_str(); }

void nsg_string_free(char* s) { std::free(s); }

nsg_status nsg_semigroup_create(const int64_t* generators, size_t count,
                                nsg_semigroup** out) {
  if (out == nullptr) return fail(NSG_INVALID_ARGUMENT, "null output handle");
  if (generators == nullptr && count > 0) {
    return fail(NSG_INVALID_ARGUMENT, "null generator array");
  }
  return guarded([&] {
    std::vector<std::int64_t> gens(generators, generators + count);
    *out = new nsg_semigroup{nsgraph::NumericalSemigroup(std::move(gens))};
    return NSG_OK;
  });
}

void nsg_semigroup_destroy(nsg_semigroup* s) { delete s; }

int64_t nsg_semigroup_frobenius(const nsg_semigroup* s) {
  return s ? s->impl.frobenius() : -1;
}

int64_t nsg_semigroup_multiplicity(const nsg_semigroup* s) {
  return s ? s->impl.multiplicity() : 0;
}

int nsg_semigroup_contains(const nsg_semigroup* s, int64_t t) {
  return (s && s->impl.contains(t)) ? 1 : 0;
}

nsg_status nsg_semigroup_generators(const nsg_semigroup* s, int64_t* buf,
                                    size_t cap, size_t* written) {
  if (s == nullptr) return fail(NSG_INVALID_ARGUMENT, "null semigroup");
  return fill_buffer(s->impl.generators(), buf, cap, written);
}

nsg_status nsg_semigroup_gaps(const nsg_semigroup* s, int64_t* buf,
                              size_t cap, size_t* written) {
  if (s == nullptr) return fail(NSG_INVALID_ARGUMENT, "null semigroup");
  return fill_buffer(s->impl.gaps(), buf, cap, written);
}

nsg_status nsg_semigroup_apery_set(const nsg_semigroup* s, int64_t m,
                                   int64_t* buf, size_t cap, size_t* written) {
  if (s == nullptr) return fail(NSG_INVALID_ARGUMENT, "null semigroup");
  return guarded([&] {
    return fill_buffer(s->impl.apery_set(m), buf, cap, written);
  });
}

nsg_status nsg_semigroup_render(const nsg_semigroup* s, nsg_format format,
                                char** out) {
  if (s == nullptr || out == nullptr) {
    return fail(NSG_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    switch (format) {
      case NSG_RENDER_TEXT:
        return copy_out(nsgraph::semigroup_text(s->impl), out);
      case NSG_RENDER_JSON:
        return copy_out(nsgraph::semigroup_json(s->impl), out);
      default:
        return fail(NSG_INVALID_ARGUMENT, "unsupported format");
    }
  });
}

nsg_status nsg_divisors(const nsg_semigroup* s, int64_t x, int64_t* buf,
                        size_t cap, size_t* written) {
  if (s == nullptr) return fail(NSG_INVALID_ARGUMENT, "null semigroup");
  return guarded([&] {
    return fill_buffer(nsgraph::divisors(s->impl, x).elements, buf, cap,
                       written);
  });
}

nsg_status nsg_graph_build(const nsg_semigroup* s, int64_t x,
                           nsg_graph** out) {
  if (s == nullptr || out == nullptr) {
    return fail(NSG_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto* g = new nsg_graph{nsgraph::build_graph(s->impl, x),
                            s->impl.generators(), x, false, {}};
    *out = g;
    return NSG_OK;
  });
}

void nsg_graph_destroy(nsg_graph* g) { delete g; }

int nsg_graph_order(const nsg_graph* g) { return g ? g->impl.order() : 0; }

size_t nsg_graph_edge_count(const nsg_graph* g) {
  return g ? g->impl.edge_count() : 0;
}

int64_t nsg_graph_vertex_label(const nsg_graph* g, int i) {
  if (g == nullptr || i < 0 || i >= g->impl.order()) return 0;
  return g->impl.label(i);
}

int nsg_graph_adjacent(const nsg_graph* g, int i, int j) {
  if (g == nullptr || i < 0 || j < 0 || i >= g->impl.order() ||
      j >= g->impl.order() || i == j) {
    return 0;
  }
  return g->impl.adjacent(i, j) ? 1 : 0;
}

nsg_status nsg_graph_render(const nsg_graph* g, nsg_format format,
                            char** out) {
  if (g == nullptr || out == nullptr) {
    return fail(NSG_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    switch (format) {
      case NSG_RENDER_TEXT:
        return copy_out(nsgraph::graph_text(g->impl), out);
      case NSG_RENDER_DOT:
        return copy_out(nsgraph::graph_dot(g->impl), out);
      case NSG_RENDER_JSON:
        if (g->from_ideal) {
          return copy_out(nsgraph::ideal_graph_json(
                              g->generators, g->ideal_generators, g->impl),
                          out);
        }
        return copy_out(nsgraph::graph_json(g->generators, g->x, g->impl),
                        out);
      default:
        return fail(NSG_INVALID_ARGUMENT, "unsupported format");
    }
  });
}

nsg_status nsg_ideal_create(const nsg_semigroup* s, const int64_t* generators,
                            size_t count, nsg_ideal** out) {
  if (s == nullptr || out == nullptr) {
    return fail(NSG_INVALID_ARGUMENT, "null argument");
  }
  if (generators == nullptr && count > 0) {
    return fail(NSG_INVALID_ARGUMENT, "null generator array");
  }
  return guarded([&] {
    std::vector<std::int64_t> gens(generators, generators + count);
    *out = new nsg_ideal{
        nsgraph::GeneratedIdeal(s->impl, std::move(gens))};
    return NSG_OK;
  });
}

void nsg_ideal_destroy(nsg_ideal* ideal) { delete ideal; }

nsg_status nsg_ideal_complement(const nsg_ideal* ideal, int64_t* buf,
                                size_t cap, size_t* written) {
  if (ideal == nullptr) return fail(NSG_INVALID_ARGUMENT, "null ideal");
  return fill_buffer(ideal->impl.complement(), buf, cap, written);
}

int nsg_ideal_contains(const nsg_ideal* ideal, int64_t t) {
  return (ideal && ideal->impl.contains(t)) ? 1 : 0;
}

int nsg_ideal_is_irreducible(const nsg_ideal* ideal, int64_t* x_out) {
  if (ideal == nullptr) return 0;
  const auto x = ideal->impl.irreducible_x();
  if (!x) return 0;
  if (x_out) *x_out = *x;
  return 1;
}

nsg_status nsg_ideal_graph(const nsg_ideal* ideal, nsg_graph** out) {
  if (ideal == nullptr || out == nullptr) {
    return fail(NSG_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto* g = new nsg_graph{nsgraph::build_graph(ideal->impl),
                            ideal->impl.semigroup().generators(), 0, true,
                            ideal->impl.generators()};
    *out = g;
    return NSG_OK;
  });
}

nsg_status nsg_classify(const nsg_semigroup* s, int64_t x, nsg_report** out) {
  if (s == nullptr || out == nullptr) {
    return fail(NSG_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new nsg_report{nsgraph::classify(s->impl, x)};
    return NSG_OK;
  });
}

void nsg_report_destroy(nsg_report* r) { delete r; }

int nsg_report_order(const nsg_report* r) { return r ? r->impl.order : 0; }

int nsg_report_case_index(const nsg_report* r) {
  return (r && r->impl.matched_case) ? r->impl.matched_case->index : 0;
}

int nsg_report_type_index(const nsg_report* r) {
  return (r && r->impl.type) ? r->impl.type->index : 0;
}

const char* nsg_report_planar_theorem(const nsg_report* r) {
  if (r == nullptr) return "out-of-range";
  return nsgraph::type_planarity_name(r->impl.predicted);
}

int nsg_report_planar_oracle(const nsg_report* r) {
  if (r == nullptr || !r->impl.oracle) return -1;
  return r->impl.oracle->planar ? 1 : 0;
}

int nsg_report_agreement(const nsg_report* r) {
  return (r && r->impl.agreement) ? 1 : 0;
}

nsg_status nsg_report_render(const nsg_report* r, nsg_format format,
                             char** out) {
  if (r == nullptr || out == nullptr) {
    return fail(NSG_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    switch (format) {
      case NSG_RENDER_TEXT:
        return copy_out(nsgraph::classification_text(r->impl), out);
      case NSG_RENDER_JSON:
        return copy_out(nsgraph::classification_json(r->impl), out);
      default:
        return fail(NSG_INVALID_ARGUMENT, "unsupported format");
    }
  });
}

nsg_status nsg_verify(int max_dim, int max_gen, int64_t max_x, int jobs,
                      const char* csv_path, nsg_verification** out) {
  if (out == nullptr) return fail(NSG_INVALID_ARGUMENT, "null output handle");
  return guarded([&] {
    nsgraph::SweepConfig cfg;
    cfg.max_embedding_dim = max_dim;
    cfg.max_generator = max_gen;
    cfg.max_x = max_x;
    cfg.jobs = jobs > 0 ? jobs : 0;
    if (csv_path != nullptr) cfg.csv_path = csv_path;
    *out = new nsg_verification{nsgraph::sweep(cfg)};
    return NSG_OK;
  });
}

void nsg_verification_destroy(nsg_verification* v) { delete v; }

uint64_t nsg_verification_instances(const nsg_verification* v) {
  return v ? v->impl.instances : 0;
}

uint64_t nsg_verification_violations(const nsg_verification* v) {
  return v ? v->impl.total_violations : 0;
}

nsg_status nsg_verification_render(const nsg_verification* v,
                                   nsg_format format, char** out) {
  if (v == nullptr || out == nullptr) {
    return fail(NSG_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    switch (format) {
      case NSG_RENDER_TEXT:
        return copy_out(nsgraph::verification_text(v->impl), out);
      case NSG_RENDER_JSON:
        return copy_out(nsgraph::verification_json(v->impl), out);
      default:
        return fail(NSG_INVALID_ARGUMENT, "unsupported format");
    }
  });
}

}  // extern "C"
