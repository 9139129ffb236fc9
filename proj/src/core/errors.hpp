#pragma once

#include <stdexcept>
#include <string>

namespace nsgraph {

enum class errc {
  invalid_argument,
  empty_generator_list,
  non_coprime_generators,
  not_a_member,
  zero_factorization,
  order_too_large,
  order_mismatch,
  missing_type,
  io_error,
};

const char* errc_name(errc c);

struct Error : std::runtime_error {
  errc code;
  Error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

}  // namespace nsgraph
