#include "twcount/errors.hpp"

namespace twc {

const char* errc_name(errc code) {
  switch (code) {
    case errc::vertex_uncovered:
      return "VertexUncovered";
    case errc::edge_uncovered:
      return "EdgeUncovered";
    case errc::connectivity_violated:
      return "ConnectivityViolated";
    case errc::not_a_tree:
      return "NotATree";
    case errc::invalid_decomposition:
      return "InvalidDecomposition";
    case errc::out_degree_exceeds_n:
      return "OutDegreeExceedsN";
    case errc::invalid_endpoints:
      return "InvalidEndpoints";
    case errc::width_limit_exceeded:
      return "WidthLimitExceeded";
    case errc::not_monic:
      return "NotMonic";
    case errc::dimension_too_large:
      return "DimensionTooLarge";
    case errc::edge_limit_exceeded:
      return "EdgeLimitExceeded";
    case errc::self_loop_unsupported:
      return "SelfLoopUnsupported";
    case errc::invalid_argument:
      return "InvalidArgument";
    case errc::parse_error:
      return "ParseError";
  }
  return "UnknownError";
}

}  // namespace twc
