// Error codes shared by the whole library. Every domain failure carries one
// of these codes; the code name is what the CLI prints and what tests match.
#pragma once

#include <stdexcept>
#include <string>

namespace twc {

enum class errc {
  vertex_uncovered,
  edge_uncovered,
  connectivity_violated,
  not_a_tree,
  invalid_decomposition,
  out_degree_exceeds_n,
  invalid_endpoints,
  width_limit_exceeded,
  not_monic,
  dimension_too_large,
  edge_limit_exceeded,
  self_loop_unsupported,
  invalid_argument,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace twc
