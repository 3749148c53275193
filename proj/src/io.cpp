#include "twcount/io.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twcount/errors.hpp"

namespace twc::io {

namespace {

struct Line {
  std::size_t number;  // 1-based position in the file
  std::vector<std::string> tokens;
};

// All lines that carry content: blank lines and "c ..." comments dropped,
// the rest split on whitespace.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream split(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (split >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0] == "c") continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

[[noreturn]] void bad_line(const Line& line, const std::string& what) {
  fail(errc::parse_error, "line " + std::to_string(line.number) + ": " + what);
}

std::uint64_t parse_count(const Line& line, const std::string& tok,
                          const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    bad_line(line, std::string(what) + " must be a nonnegative integer, got '" +
                       tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    bad_line(line, std::string(what) + " out of range: '" + tok + "'");
  }
}

// Keeps a mistyped header from requesting an absurd allocation.
std::uint64_t parse_bounded_count(const Line& line, const std::string& tok,
                                  const char* what, std::uint64_t bound) {
  const std::uint64_t v = parse_count(line, tok, what);
  if (v > bound)
    bad_line(line, std::string(what) + " " + tok + " exceeds the supported " +
                       "maximum " + std::to_string(bound));
  return v;
}

// 1-based id on disk -> 0-based id in memory.
std::uint32_t parse_id(const Line& line, const std::string& tok,
                       std::uint64_t limit, const char* what) {
  const std::uint64_t v = parse_count(line, tok, what);
  if (v < 1 || v > limit)
    bad_line(line, std::string(what) + " " + tok + " outside 1.." +
                       std::to_string(limit));
  return static_cast<std::uint32_t>(v - 1);
}

Int parse_integer(const Line& line, const std::string& tok) {
  std::size_t digits_from = tok.size() > 0 && (tok[0] == '-' || tok[0] == '+');
  if (tok.size() == digits_from ||
      tok.find_first_not_of("0123456789", digits_from) != std::string::npos)
    bad_line(line, "expected a decimal integer, got '" + tok + "'");
  return Int(tok);
}

struct GraphHeader {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
};

GraphHeader read_graph_header(const std::vector<Line>& lines,
                              const char* kind) {
  if (lines.empty())
    fail(errc::parse_error,
         std::string("empty input, expected 'p ") + kind + " <n> <m>'");
  const Line& h = lines[0];
  if (h.tokens.size() != 4 || h.tokens[0] != "p" || h.tokens[1] != kind)
    bad_line(h, std::string("expected header 'p ") + kind + " <n> <m>'");
  GraphHeader out;
  out.n = static_cast<std::uint32_t>(
      parse_bounded_count(h, h.tokens[2], "vertex count", 1000000));
  out.m = parse_count(h, h.tokens[3], "edge count");
  if (lines.size() - 1 != out.m)
    fail(errc::parse_error,
         "header declares " + std::to_string(out.m) + " edges but the file " +
             "has " + std::to_string(lines.size() - 1) + " edge lines");
  return out;
}

std::pair<std::uint32_t, std::uint32_t> read_endpoint_line(const Line& line,
                                                           std::uint32_t n) {
  if (line.tokens.size() != 2)
    bad_line(line, "expected two endpoints");
  return {parse_id(line, line.tokens[0], n, "endpoint"),
          parse_id(line, line.tokens[1], n, "endpoint")};
}

}  // namespace

UndirectedMultigraph read_undirected_graph(std::istream& in) {
  const std::vector<Line> lines = content_lines(in);
  const GraphHeader h = read_graph_header(lines, "tw");
  UndirectedMultigraph g(h.n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [a, b] = read_endpoint_line(lines[i], h.n);
    g.add_edge(a, b);
  }
  return g;
}

DirectedMultigraph read_directed_graph(std::istream& in) {
  const std::vector<Line> lines = content_lines(in);
  const GraphHeader h = read_graph_header(lines, "dgr");
  DirectedMultigraph d(h.n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [tail, head] = read_endpoint_line(lines[i], h.n);
    d.add_arc(tail, head);
  }
  return d;
}

DecompositionFile read_decomposition(std::istream& in) {
  const std::vector<Line> lines = content_lines(in);
  if (lines.empty())
    fail(errc::parse_error,
         "empty input, expected 's td <bags> <max_bag_size> <n>'");
  const Line& h = lines[0];
  if (h.tokens.size() != 5 || h.tokens[0] != "s" || h.tokens[1] != "td")
    bad_line(h, "expected header 's td <bags> <max_bag_size> <n>'");
  const std::uint64_t bag_count =
      parse_bounded_count(h, h.tokens[2], "bag count", 1000000);
  const std::uint64_t declared_max =
      parse_count(h, h.tokens[3], "max bag size");
  const std::uint32_t n = static_cast<std::uint32_t>(
      parse_bounded_count(h, h.tokens[4], "vertex count", 1000000));

  DecompositionFile out;
  out.vertex_count = n;
  out.decomposition.bags.resize(bag_count);
  std::vector<bool> seen(bag_count, false);
  std::size_t i = 1;
  for (; i < lines.size() && lines[i].tokens[0] == "b"; ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() < 2) bad_line(line, "expected 'b <i> <vertices>'");
    const std::uint32_t id = parse_id(line, line.tokens[1], bag_count, "bag id");
    if (seen[id]) bad_line(line, "bag " + line.tokens[1] + " defined twice");
    seen[id] = true;
    std::vector<std::uint32_t> bag;
    for (std::size_t t = 2; t < line.tokens.size(); ++t)
      bag.push_back(parse_id(line, line.tokens[t], n, "vertex"));
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    out.decomposition.bags[id] = std::move(bag);
  }
  for (std::size_t id = 0; id < bag_count; ++id)
    if (!seen[id])
      fail(errc::parse_error,
           "bag " + std::to_string(id + 1) + " has no 'b' line");
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) bad_line(line, "expected a bag edge '<i> <j>'");
    out.decomposition.tree_edges.emplace_back(
        parse_id(line, line.tokens[0], bag_count, "bag id"),
        parse_id(line, line.tokens[1], bag_count, "bag id"));
  }
  std::size_t max_bag = 0;
  for (const auto& bag : out.decomposition.bags)
    max_bag = std::max(max_bag, bag.size());
  if (max_bag != declared_max)
    fail(errc::parse_error,
         "header declares max bag size " + std::to_string(declared_max) +
             " but the largest bag has " + std::to_string(max_bag) +
             " vertices");
  return out;
}

SquareIntMatrix read_matrix(std::istream& in) {
  const std::vector<Line> lines = content_lines(in);
  if (lines.empty() || lines[0].tokens.size() != 1)
    fail(errc::parse_error, "expected the matrix size on the first line");
  const std::uint64_t n =
      parse_bounded_count(lines[0], lines[0].tokens[0], "size", 4096);
  SquareIntMatrix m(n);
  std::size_t filled = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (const std::string& tok : lines[i].tokens) {
      if (filled == n * n)
        bad_line(lines[i], "more than n*n entries");
      m.at(filled / n, filled % n) = parse_integer(lines[i], tok);
      ++filled;
    }
  }
  if (filled != n * n)
    fail(errc::parse_error, "expected " + std::to_string(n * n) +
                                " entries, found " + std::to_string(filled));
  return m;
}

void write_undirected_graph(std::ostream& out, const UndirectedMultigraph& g) {
  out << "p tw " << g.vertex_count() << ' ' << g.edges().size() << '\n';
  for (const Edge& e : g.edges())
    out << e.a + 1 << ' ' << e.b + 1 << '\n';
}

void write_directed_graph(std::ostream& out, const DirectedMultigraph& d) {
  out << "p dgr " << d.vertex_count() << ' ' << d.arcs().size() << '\n';
  for (const Arc& a : d.arcs())
    out << a.tail + 1 << ' ' << a.head + 1 << '\n';
}

void write_decomposition(std::ostream& out, const TreeDecomposition& t,
                         std::uint32_t vertex_count) {
  std::size_t max_bag = 0;
  for (const auto& bag : t.bags) max_bag = std::max(max_bag, bag.size());
  out << "s td " << t.bags.size() << ' ' << max_bag << ' ' << vertex_count
      << '\n';
  for (std::size_t i = 0; i < t.bags.size(); ++i) {
    out << "b " << i + 1;
    std::vector<std::uint32_t> bag = t.bags[i];
    std::sort(bag.begin(), bag.end());
    for (std::uint32_t v : bag) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [a, b] : t.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

void write_matrix(std::ostream& out, const SquareIntMatrix& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out << ' ';
      out << m.at(i, j).get_str();
    }
    out << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace twc::io
