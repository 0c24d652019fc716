#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "dispatch.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = satlab::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dispatch examples") {
  CHECK(run({"hf", "encode", "{}"}).out == "0\n");
  CHECK(run({"hf", "encode", "{}"}).code == 0);
  CHECK(run({"graph", "witness", "--a", "0,1", "--b", "2"}).out == "3\n");
  const auto st = run({"selftest"});
  CHECK(st.code == 0);
  CHECK(st.out.find("FAILED") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"order"}).code == 2);
  CHECK(run({"order", "cmp", "fin:3", "0"}).code == 2);
  CHECK(run({"order", "cmp", "fin:3", "0", "x"}).code == 2);
  CHECK(run({"hf", "decode", "12a"}).code == 2);
  CHECK(run({"graph", "witness", "--a", "1", "--b", "1"}).code == 1);
  CHECK(run({"order", "cut", "fin:5", "--lower", "1", "--upper", "2"}).code == 1);
  CHECK(run({"hf", "collapse", "/nonexistent/file"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  // Usage errors show the grammar of the failing command.
  CHECK(run({"order", "cmp", "fin:3"}).err.find("desc") != std::string::npos);
}

TEST_CASE("json lines") {
  const auto r = run({"--json", "graph", "witness", "--a", "0,1", "--b", "2"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["payload"]["witness"] == "3");
  CHECK(j["verification"]["passed"] == true);
  // --json may follow the subcommand.
  CHECK(run({"graph", "witness", "--a", "0,1", "--b", "2", "--json"}).out == r.out);

  const auto e = run({"--json", "order", "cut", "fin:5", "--lower", "1", "--upper", "2"});
  const auto je = nlohmann::json::parse(e.out);
  CHECK(je["status"] == "EmptyOrderBetween");
  CHECK(je["payload"].is_null());
  CHECK(je.contains("message"));

  const auto p = run({"--json", "bf", "run", "--left", "dlo", "--right", "bit"});
  CHECK(p.code == 1);
  CHECK(nlohmann::json::parse(p.out)["status"] == "InvalidArgument");
}

TEST_CASE("determinism") {
  const std::vector<std::string> args = {"--json", "bf", "run", "--left", "bit", "--right", "bit", "--steps", "16"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> seeded = {"--json", "bf", "run", "--steps", "16", "--seed", "9"};
  CHECK(run(seeded).out == run(seeded).out);
  CHECK(run(seeded).out != run({"--json", "bf", "run", "--steps", "16", "--seed", "10"}).out);
}
