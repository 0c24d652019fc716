#include "common.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace satlab::cli {

void Verifier::check(const std::string& name, bool ok) {
  if (!ok) throw std::logic_error("postcondition failed: " + name);
  passed_.push_back(name);
}

json Verifier::to_json() const { return json{{"passed", true}, {"checks", passed_}}; }

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<Natural> parse_naturals(std::string_view text) {
  std::vector<Natural> out;
  if (text == "-") return out;
  for (const auto& part : split(text, ',')) {
    const auto b = part.find_first_not_of(' ');
    const auto e = part.find_last_not_of(' ');
    if (b == std::string::npos) throw Error(ErrorCode::ParseError, "empty entry in list '" + std::string(text) + "'");
    out.push_back(Natural::parse(std::string_view(part).substr(b, e - b + 1)));
  }
  return out;
}

std::vector<graphs::Vertex> parse_vertices(std::string_view text) {
  std::vector<graphs::Vertex> out;
  for (const auto& n : parse_naturals(text)) {
    const auto v = n.to_u64();
    if (!v || *v > 0xffffffffu) throw Error(ErrorCode::ParseError, "vertex " + n.to_string() + " is out of range");
    out.push_back(static_cast<graphs::Vertex>(*v));
  }
  return out;
}

std::string format_vertices(const std::vector<graphs::Vertex>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "{" + join(parts, ",") + "}";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

graphs::FiniteGraph load_graph(const std::string& path, std::optional<std::size_t> bit) {
  if (bit && !path.empty()) throw Error(ErrorCode::InvalidArgument, "give either a graph file or --bit, not both");
  if (bit) return graphs::bit_graph(*bit);
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "a graph file or --bit N is required");
  return graphs::parse_graph(read_file(path));
}

}  // namespace satlab::cli
