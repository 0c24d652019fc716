#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "satlab/error.hpp"
#include "satlab/graphs/graph.hpp"
#include "satlab/natural.hpp"

namespace satlab::cli {

using json = nlohmann::json;

struct Output {
  json payload = json::object();
  json verification = json::object();
  std::string text;
  // Status name of a domain failure that still carries a partial payload.
  std::optional<std::string> failure;
  std::string message;
};

using Handler = std::function<Output()>;

// Records named postcondition checks; a failed check is an internal error.
class Verifier {
 public:
  void check(const std::string& name, bool ok);
  json to_json() const;

 private:
  std::vector<std::string> passed_;
};

std::vector<std::string> split(std::string_view text, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
// Comma-separated naturals; empty text or "-" is the empty list.
std::vector<Natural> parse_naturals(std::string_view text);
std::vector<graphs::Vertex> parse_vertices(std::string_view text);
std::string format_vertices(const std::vector<graphs::Vertex>& v);
std::string read_file(const std::string& path);
// Edge-list file, or the BIT graph on 0..bit-1 when `bit` is set.
graphs::FiniteGraph load_graph(const std::string& path, std::optional<std::size_t> bit);

void add_order_commands(CLI::App& app, Handler& chosen);
void add_graph_commands(CLI::App& app, Handler& chosen);
void add_hf_commands(CLI::App& app, Handler& chosen);
void add_bf_commands(CLI::App& app, Handler& chosen);
void add_ba_commands(CLI::App& app, Handler& chosen);
void add_selftest_command(CLI::App& app, Handler& chosen);

}  // namespace satlab::cli
