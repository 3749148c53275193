#include "twcount/graph_ops.hpp"

#include <string>

#include "twcount/errors.hpp"

namespace twc {

DirectedMultigraph support_digraph(const SquareIntMatrix& m) {
  const std::size_t n = m.size();
  DirectedMultigraph d(static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j) != 0)
        d.add_arc(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  return d;
}

SquareIntMatrix laplacian(const DirectedMultigraph& d) {
  const std::uint32_t n = d.vertex_count();
  SquareIntMatrix l(n);
  for (const Arc& a : d.arcs()) {
    if (a.tail == a.head) continue;
    l.at(a.tail, a.tail) += 1;
    l.at(a.tail, a.head) -= 1;
  }
  return l;
}

DirectedMultigraph bidirect(const UndirectedMultigraph& g) {
  DirectedMultigraph d(g.vertex_count());
  for (const Edge& e : g.edges()) {
    d.add_arc(e.a, e.b);
    d.add_arc(e.b, e.a);
  }
  return d;
}

UndirectedMultigraph subdivide(const UndirectedMultigraph& g) {
  const std::uint32_t n = g.vertex_count();
  const std::size_t m = g.edges().size();
  UndirectedMultigraph out(n + static_cast<std::uint32_t>(m));
  for (std::size_t j = 0; j < m; ++j) {
    const std::uint32_t mid = n + static_cast<std::uint32_t>(j);
    out.add_edge(g.edges()[j].a, mid);
    out.add_edge(mid, g.edges()[j].b);
  }
  return out;
}

DirectedMultigraph degree_pad(const DirectedMultigraph& d) {
  const std::uint32_t n = d.vertex_count();
  const std::vector<std::uint32_t> od = d.out_degrees();
  for (std::uint32_t v = 0; v < n; ++v)
    if (od[v] > n)
      fail(errc::out_degree_exceeds_n,
           "vertex " + std::to_string(v) + " has out-degree " +
               std::to_string(od[v]) + " > " + std::to_string(n));

  std::uint32_t extra = 0;
  for (std::uint32_t v = 0; v < n; ++v) extra += n - od[v];
  DirectedMultigraph out(n + extra);
  for (const Arc& a : d.arcs()) out.add_arc(a.tail, a.head);
  std::uint32_t next = n;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t k = od[v]; k < n; ++k) {
      out.add_arc(v, next);
      out.add_arc(next, v);
      ++next;
    }
  }
  return out;
}

DirectedMultigraph ord_gadget(std::uint32_t n, std::uint32_t s,
                              std::uint32_t t) {
  if (n < 4)
    fail(errc::invalid_endpoints,
         "path needs at least 4 vertices, got " + std::to_string(n));
  if (s == 0 || s >= n - 1 || t == 0 || t >= n - 1 || s == t)
    fail(errc::invalid_endpoints,
         "s and t must be distinct interior vertices, got s=" +
             std::to_string(s) + " t=" + std::to_string(t));
  DirectedMultigraph d(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
  d.add_arc(s, t);
  for (std::uint32_t v = 0; v < n; ++v)
    if (v != s && v != t) d.add_arc(v, v);
  return d;
}

SquareIntMatrix adjacency_matrix(const DirectedMultigraph& d) {
  SquareIntMatrix m(d.vertex_count());
  for (const Arc& a : d.arcs()) m.at(a.tail, a.head) += 1;
  return m;
}

SquareIntMatrix adjacency_matrix(const UndirectedMultigraph& g) {
  SquareIntMatrix m(g.vertex_count());
  for (const Edge& e : g.edges()) {
    m.at(e.a, e.b) += 1;
    if (e.a != e.b) m.at(e.b, e.a) += 1;
  }
  return m;
}

}  // namespace twc
