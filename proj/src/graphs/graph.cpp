#include "satlab/graphs/graph.hpp"

#include <algorithm>
#include <sstream>

#include "satlab/error.hpp"

namespace satlab::graphs {

namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

void insert_sorted(std::vector<Vertex>& sorted, Vertex v) { sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), v), v); }

void erase_sorted(std::vector<Vertex>& sorted, Vertex v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it != sorted.end() && *it == v) sorted.erase(it);
}

}  // namespace

FiniteGraph FiniteGraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  FiniteGraph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::MalformedGraph, "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    }
    if (u == v) throw Error(ErrorCode::MalformedGraph, "loop at " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

FiniteGraph FiniteGraph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return from_edges(n, edges);
}

FiniteGraph FiniteGraph::cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; n >= 3 && u < n; ++u) edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return from_edges(n, edges);
}

FiniteGraph FiniteGraph::petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return from_edges(10, edges);
}

bool FiniteGraph::has_edge(Vertex u, Vertex v) const { return u < size() && contains(adj_[u], v); }

std::vector<Edge> FiniteGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t FiniteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return total / 2;
}

FiniteGraph FiniteGraph::complement() const {
  FiniteGraph g(size());
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v = 0; v < size(); ++v) {
      if (u != v && !has_edge(u, v)) g.adj_[u].push_back(v);
    }
  }
  return g;
}

FiniteGraph FiniteGraph::induced(const std::vector<Vertex>& keep) const {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < keep.size(); ++i) {
    for (Vertex j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) edges.emplace_back(i, j);
    }
  }
  return from_edges(keep.size(), edges);
}

FiniteDigraph FiniteDigraph::from_arcs(std::size_t n, const std::vector<Edge>& arcs) {
  FiniteDigraph d(n);
  for (const auto& [u, v] : arcs) {
    const std::string arc = std::to_string(u) + " -> " + std::to_string(v);
    if (u >= n || v >= n) throw Error(ErrorCode::MalformedDigraph, "arc " + arc + " out of range");
    if (u == v) throw Error(ErrorCode::MalformedDigraph, "loop at " + std::to_string(u));
    if (d.has_arc(u, v)) throw Error(ErrorCode::MalformedDigraph, "repeated arc " + arc);
    if (d.has_arc(v, u)) throw Error(ErrorCode::MalformedDigraph, "arc " + arc + " occurs with its reverse");
    insert_sorted(d.out_[u], v);
    insert_sorted(d.in_[v], u);
  }
  return d;
}

bool FiniteDigraph::has_arc(Vertex u, Vertex v) const { return u < size() && contains(out_[u], v); }

std::vector<Edge> FiniteDigraph::arcs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  }
  return out;
}

std::size_t FiniteDigraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& list : out_) total += list.size();
  return total;
}

FiniteGraph FiniteDigraph::underlying() const { return FiniteGraph::from_edges(size(), arcs()); }

void FiniteDigraph::reverse_arc(Vertex u, Vertex v) {
  if (!has_arc(u, v)) {
    throw Error(ErrorCode::InvalidArgument, "no arc " + std::to_string(u) + " -> " + std::to_string(v));
  }
  erase_sorted(out_[u], v);
  erase_sorted(in_[v], u);
  insert_sorted(out_[v], u);
  insert_sorted(in_[u], v);
}

namespace {

struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> pairs;
};

EdgeList parse_edge_list(std::string_view text, bool allow_arrow) {
  std::istringstream in{std::string(text)};
  std::string line;
  EdgeList out;
  bool header = false;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + why +
                                           " (expected an `n` header line, then one `u v` pair per line)");
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (allow_arrow) std::replace(line.begin(), line.end(), '>', ' ');
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    auto number = [&](const std::string& tok) -> std::uint64_t {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          tok.size() > 9) {
        fail("bad number '" + tok + "'");
      }
      return std::stoull(tok);
    };
    if (!header) {
      if (tokens.size() != 1) fail("missing vertex count");
      out.n = number(tokens[0]);
      header = true;
      continue;
    }
    if (tokens.size() != 2) fail("expected two vertices");
    out.pairs.emplace_back(static_cast<Vertex>(number(tokens[0])), static_cast<Vertex>(number(tokens[1])));
  }
  if (!header) fail("empty input");
  return out;
}

}  // namespace

FiniteGraph parse_graph(std::string_view text) {
  auto e = parse_edge_list(text, false);
  return FiniteGraph::from_edges(e.n, e.pairs);
}

FiniteDigraph parse_digraph(std::string_view text) {
  auto e = parse_edge_list(text, true);
  return FiniteDigraph::from_arcs(e.n, e.pairs);
}

std::string format_graph(const FiniteGraph& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string format_digraph(const FiniteDigraph& d) {
  std::string out = std::to_string(d.size()) + "\n";
  for (const auto& [u, v] : d.arcs()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

FiniteGraph bit_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (u < 32 && ((v >> u) & 1u)) edges.emplace_back(u, v);
    }
  }
  return FiniteGraph::from_edges(n, edges);
}

FiniteDigraph bit_digraph(const std::vector<Natural>& vertices) {
  std::vector<Edge> arcs;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex j = 0; j < vertices.size(); ++j) {
      const auto pos = vertices[j].to_u64();
      if (i != j && pos && *pos < vertices[i].bit_length() && vertices[i].bit(*pos)) arcs.emplace_back(i, j);
    }
  }
  return FiniteDigraph::from_arcs(vertices.size(), arcs);
}

}  // namespace satlab::graphs
