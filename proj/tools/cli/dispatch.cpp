#include "dispatch.hpp"

#include <algorithm>

#include "common.hpp"

namespace satlab::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

void emit(std::ostream& out, bool as_json, const std::string& status, const Output& o) {
  if (as_json) {
    json j = {{"status", status}, {"payload", o.payload}, {"verification", o.verification}};
    if (!o.message.empty()) j["message"] = o.message;
    out << j.dump() << "\n";
  } else {
    out << o.text;
  }
}

void emit_error(std::ostream& out, std::ostream& err, bool as_json, const std::string& status, const std::string& msg) {
  if (as_json) {
    out << json{{"status", status}, {"payload", nullptr}, {"verification", nullptr}, {"message", msg}}.dump() << "\n";
  }
  err << "error: " << status << ": " << msg << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"satlab: computable shadows of saturated structures", "satlab"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "one JSON object per result line");
  Handler chosen;
  add_order_commands(app, chosen);
  add_graph_commands(app, chosen);
  add_hf_commands(app, chosen);
  add_bf_commands(app, chosen);
  add_ba_commands(app, chosen);
  add_selftest_command(app, chosen);
  // --json is accepted after the subcommand too.
  for (auto* sub : app.get_subcommands({})) {
    for (auto* leaf : sub->get_subcommands({})) leaf->add_flag("--json", as_json, "one JSON object per result line");
    if (sub->get_subcommands({}).empty()) sub->add_flag("--json", as_json, "one JSON object per result line");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    std::string help;
    for (auto* sub = &app; sub;) {
      help = sub->help();
      auto subs = sub->get_subcommands();
      sub = subs.empty() ? nullptr : subs.front();
    }
    err << help;
    return kExitUsage;
  } catch (const Error& e) {
    // Raised while validating arguments inside a callback.
    emit_error(out, err, as_json, std::string(error_code_name(e.code())), e.what());
    return e.code() == ErrorCode::ParseError ? kExitUsage : kExitDomain;
  }

  try {
    const auto o = chosen();
    if (o.failure) {
      emit(out, as_json, *o.failure, o);
      err << "error: " << *o.failure << ": " << o.message << "\n";
      return kExitDomain;
    }
    emit(out, as_json, "ok", o);
    return kExitOk;
  } catch (const Error& e) {
    emit_error(out, err, as_json, std::string(error_code_name(e.code())), e.what());
    return e.code() == ErrorCode::ParseError ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    emit_error(out, err, as_json, "InternalError", e.what());
    return kExitDomain;
  }
}

}  // namespace satlab::cli
