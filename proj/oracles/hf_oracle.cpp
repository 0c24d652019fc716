#include "hf_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace satlab::oracles {

namespace {

std::uint64_t code_at(std::string_view text, std::size_t& pos) {
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '{') throw std::invalid_argument("oracle: expected '{'");
  ++pos;
  std::set<std::uint64_t> members;
  skip();
  if (text[pos] == '}') {
    ++pos;
    return 0;
  }
  while (true) {
    members.insert(code_at(text, pos));
    skip();
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == '}') {
      ++pos;
      break;
    }
    throw std::invalid_argument("oracle: expected ',' or '}'");
  }
  std::uint64_t code = 0;
  for (auto m : members) {
    if (m >= 64) throw std::invalid_argument("oracle: code too large");
    code += std::uint64_t{1} << m;
  }
  return code;
}

}  // namespace

std::uint64_t brace_code(std::string_view text) {
  std::size_t pos = 0;
  return code_at(text, pos);
}

std::string brace_text(std::uint64_t code) {
  std::string out = "{";
  bool first = true;
  for (std::uint64_t b = 0; b < 64; ++b) {
    if (!((code >> b) & 1u)) continue;
    if (!first) out += ",";
    first = false;
    out += brace_text(b);
  }
  return out + "}";
}

std::string canonical_brace(const graphs::FiniteDigraph& d, graphs::Vertex v) {
  std::set<std::string> members;
  for (graphs::Vertex w : d.out(v)) members.insert(canonical_brace(d, w));
  std::string out = "{";
  for (const auto& m : members) out += (out.size() > 1 ? "," : "") + m;
  return out + "}";
}

std::vector<graphs::FiniteDigraph> extensional_digraphs(std::size_t max_size) {
  auto signature = [](const graphs::FiniteDigraph& d) {
    std::set<std::string> all;
    for (graphs::Vertex v = 0; v < d.size(); ++v) all.insert(canonical_brace(d, v));
    std::string out;
    for (const auto& s : all) out += s + ";";
    return out;
  };
  std::vector<graphs::FiniteDigraph> out{graphs::FiniteDigraph(0)};
  std::vector<graphs::FiniteDigraph> frontier = out;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::set<std::string> seen;
    std::vector<graphs::FiniteDigraph> next;
    for (const auto& d : frontier) {
      const std::size_t n = d.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<graphs::Vertex> members;
        for (graphs::Vertex v = 0; v < n; ++v) {
          if ((mask >> v) & 1u) members.push_back(v);
        }
        bool fresh = true;
        for (graphs::Vertex v = 0; v < n && fresh; ++v) fresh = d.out(v) != members;
        if (!fresh) continue;
        auto arcs = d.arcs();
        for (graphs::Vertex m : members) arcs.emplace_back(static_cast<graphs::Vertex>(n), m);
        auto e = graphs::FiniteDigraph::from_arcs(n + 1, arcs);
        if (seen.insert(signature(e)).second) next.push_back(std::move(e));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

graphs::FiniteDigraph relabel(const graphs::FiniteDigraph& d, const std::vector<graphs::Vertex>& perm) {
  std::vector<graphs::Vertex> inverse(perm.size());
  for (graphs::Vertex i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
  std::vector<graphs::Edge> arcs;
  for (const auto& [u, v] : d.arcs()) arcs.emplace_back(inverse[u], inverse[v]);
  return graphs::FiniteDigraph::from_arcs(d.size(), arcs);
}

std::vector<Natural> naive_collapse_codes(const graphs::FiniteDigraph& d) {
  using boost::multiprecision::cpp_int;
  auto code = [&](auto&& self, graphs::Vertex v) -> cpp_int {
    std::set<cpp_int> members;
    for (graphs::Vertex w : d.out(v)) members.insert(self(self, w));
    cpp_int c = 0;
    for (const auto& m : members) {
      if (m >= (1 << 20)) throw std::invalid_argument("oracle: code too large");
      c += cpp_int(1) << static_cast<unsigned>(m);
    }
    return c;
  };
  std::vector<Natural> out;
  for (graphs::Vertex v = 0; v < d.size(); ++v) out.push_back(Natural::parse(code(code, v).str()));
  return out;
}

}  // namespace satlab::oracles
