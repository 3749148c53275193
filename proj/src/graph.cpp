#include "twcount/graph.hpp"

namespace twc {

std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoint_pairs(
    const DirectedMultigraph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoint_pairs(
    const UndirectedMultigraph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) out.emplace_back(e.a, e.b);
  return out;
}

}  // namespace twc
