#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <initializer_list>
#include <iterator>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kpvc/error.hpp"

namespace kpvc {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; each
// adjacency list is sorted and duplicate free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  // Builds a graph from an edge list. Parallel edges and both orientations of
  // the same edge collapse into one; self-loops and out-of-range endpoints
  // throw PreconditionError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw PreconditionError("edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ") out of range for n=" +
                                std::to_string(n));
      }
      if (e.u == e.v) {
        throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
      }
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    g.normalize();
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  // Throws std::logic_error if symmetry, loop-freeness, set semantics or
  // the edge count are broken.
  void check_invariants() const {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < order(); ++v) {
      const auto& a = adj_[v];
      if (!std::is_sorted(a.begin(), a.end()) ||
          std::adjacent_find(a.begin(), a.end()) != a.end()) {
        throw std::logic_error("adjacency of " + std::to_string(v) + " is not a sorted set");
      }
      for (Vertex u : a) {
        if (u >= order()) throw std::logic_error("neighbor out of range");
        if (u == v) throw std::logic_error("self-loop at " + std::to_string(v));
        if (!has_edge(u, v)) throw std::logic_error("asymmetric adjacency");
      }
      degree_sum += a.size();
    }
    if (degree_sum % 2 != 0 || degree_sum / 2 != m_) {
      throw std::logic_error("edge count inconsistent with adjacency");
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void normalize() {
    std::size_t degree_sum = 0;
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      degree_sum += a.size();
    }
    m_ = degree_sum / 2;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  static VertexSet all(std::size_t n) {
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), Vertex{0});
    return VertexSet(std::move(v));
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  bool valid_for(const Graph& g) const {
    return members_.empty() || members_.back() < g.order();
  }

  // Membership indicator of length n.
  std::vector<char> mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (Vertex v : members_) m.at(v) = 1;
    return m;
  }

  VertexSet united(const VertexSet& other) const {
    std::vector<Vertex> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Induced subgraph plus the map from new indices back to the source graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // new index -> source index

  VertexSet lift(const VertexSet& s) const {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(original.at(v));
    return VertexSet(std::move(out));
  }
};

// Subgraph induced by the vertices whose keep flag is set, re-indexed in
// ascending source order.
inline Subgraph induced_subgraph(const Graph& g, const std::vector<char>& keep) {
  const std::size_t n = g.order();
  std::vector<Vertex> new_index(n, 0);
  Subgraph out;
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v]) {
      new_index[v] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back({new_index[e.u], new_index[e.v]});
  }
  out.graph = Graph::from_edges(out.original.size(), edges);
  return out;
}

inline Subgraph delete_vertices(const Graph& g, const VertexSet& s) {
  if (!s.valid_for(g)) throw PreconditionError("vertex set out of range for graph");
  std::vector<char> keep(g.order(), 1);
  for (Vertex v : s) keep[v] = 0;
  return induced_subgraph(g, keep);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.order() + b.order(), edges);
}

// Component id per vertex, ids assigned in order of lowest member.
struct Components {
  std::vector<std::size_t> id;
  std::size_t count = 0;

  std::vector<std::vector<Vertex>> members() const {
    std::vector<std::vector<Vertex>> out(count);
    for (Vertex v = 0; v < id.size(); ++v) out[id[v]].push_back(v);
    return out;
  }
};

inline Components connected_components(const Graph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  Components c;
  c.id.assign(g.order(), unset);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (c.id[root] != unset) continue;
    c.id[root] = c.count;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (c.id[u] == unset) {
          c.id[u] = c.count;
          stack.push_back(u);
        }
      }
    }
    ++c.count;
  }
  return c;
}

inline bool is_forest(const Graph& g) {
  return g.size() + connected_components(g).count == g.order();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits a line into non-negative integers; throws ParseError on junk.
inline std::vector<std::uint64_t> parse_naturals(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::uint64_t value = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line_no, "expected a non-negative integer in \"" +
                                    std::string(line) + "\"");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

// Non-empty, non-comment lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') out.emplace_back(line_no, line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace detail

// Edge-list format: '#' comment lines, a header "n m", then one "u v" line
// per edge. The header's m must match either the number of edge lines or the
// number of distinct edges after deduplication.
inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("missing \"n m\" header");
  const auto header = detail::parse_naturals(lines[0].second, lines[0].first);
  if (header.size() != 2) throw ParseError(lines[0].first, "header must be \"n m\"");
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError(lines[0].first, "n too large");

  std::vector<Edge> edges;
  edges.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line_no, line] = lines[i];
    const auto uv = detail::parse_naturals(line, line_no);
    if (uv.size() != 2) throw ParseError(line_no, "edge line must be \"u v\"");
    if (uv[0] >= n || uv[1] >= n) {
      throw ParseError(line_no, "vertex index out of range [0," + std::to_string(n) + ")");
    }
    if (uv[0] == uv[1]) throw ParseError(line_no, "self-loop at vertex " + std::to_string(uv[0]));
    edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
  }
  Graph g = Graph::from_edges(static_cast<std::size_t>(n), edges);
  if (edges.size() != m && g.size() != m) {
    throw ParseError(lines[0].first, "header declares " + std::to_string(m) + " edges but " +
                                         std::to_string(edges.size()) + " edge lines follow");
  }
  return g;
}

// Canonical form: header, then edges u < v in lexicographic order, LF
// separated, no trailing newline.
inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size());
  for (const Edge& e : g.edges()) {
    out += '\n';
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
  }
  return out;
}

inline VertexSet parse_vertex_set(std::string_view text) {
  std::vector<Vertex> members;
  for (const auto& [line_no, line] : detail::content_lines(text)) {
    for (auto v : detail::parse_naturals(line, line_no)) {
      if (v > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex index too large");
      members.push_back(static_cast<Vertex>(v));
    }
  }
  return VertexSet(std::move(members));
}

}  // namespace kpvc
