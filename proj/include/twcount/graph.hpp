#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twcount/errors.hpp"

namespace twc {

// Vertices are 0-based everywhere in the library; the PACE-style file formats
// are 1-based and converted at the I/O boundary.

struct Arc {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;

  bool operator==(const Arc&) const = default;
};

class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;
  explicit DirectedMultigraph(std::uint32_t vertex_count)
      : vertex_count_(vertex_count) {}

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  void add_arc(std::uint32_t tail, std::uint32_t head) {
    if (tail >= vertex_count_ || head >= vertex_count_)
      fail(errc::invalid_argument,
           "arc endpoint out of range: " + std::to_string(tail) + "->" +
               std::to_string(head));
    arcs_.push_back({tail, head});
  }

  // Out-degrees counting every arc instance, self-loops included.
  std::vector<std::uint32_t> out_degrees() const {
    std::vector<std::uint32_t> d(vertex_count_, 0);
    for (const Arc& a : arcs_) ++d[a.tail];
    return d;
  }

  std::vector<std::uint32_t> in_degrees() const {
    std::vector<std::uint32_t> d(vertex_count_, 0);
    for (const Arc& a : arcs_) ++d[a.head];
    return d;
  }

 private:
  std::uint32_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
};

struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  bool operator==(const Edge&) const = default;
};

class UndirectedMultigraph {
 public:
  UndirectedMultigraph() = default;
  explicit UndirectedMultigraph(std::uint32_t vertex_count)
      : vertex_count_(vertex_count) {}

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(std::uint32_t a, std::uint32_t b) {
    if (a >= vertex_count_ || b >= vertex_count_)
      fail(errc::invalid_argument,
           "edge endpoint out of range: " + std::to_string(a) + "-" +
               std::to_string(b));
    edges_.push_back({a, b});
  }

  // Degrees counting every edge instance; a self-loop adds 2.
  std::vector<std::uint32_t> degrees() const {
    std::vector<std::uint32_t> d(vertex_count_, 0);
    for (const Edge& e : edges_) {
      ++d[e.a];
      ++d[e.b];
    }
    return d;
  }

  bool has_self_loop() const {
    for (const Edge& e : edges_)
      if (e.a == e.b) return true;
    return false;
  }

 private:
  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Endpoint pairs of either graph type, used by the decomposition routines,
// which only care about the underlying undirected structure.
std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoint_pairs(
    const DirectedMultigraph& g);
std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoint_pairs(
    const UndirectedMultigraph& g);

}  // namespace twc
