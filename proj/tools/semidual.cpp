#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semidual/session.hpp"

using namespace semidual;

namespace {

constexpr const char* kFixturePrefix = "fixture:";

std::optional<std::string> load(const std::string& path) {
  if (path.rfind(kFixturePrefix, 0) == 0) {
    std::string name = path.substr(std::string(kFixturePrefix).size());
    for (const auto& f : fixture_sessions()) {
      if (f.name == name) return f.text;
    }
    return std::nullopt;
  }
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semidualizing-module constructions and checks on session files"};
  app.require_subcommand(0, 1);
  RunOptions opts;
  bool list = false;
  app.add_option("--bound", opts.default_bound, "default Ext/Tor vanishing bound for commands without one")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--machine", opts.machine, "one JSON record per command");
  app.add_flag("--fixtures", list, "list the built-in example sessions");
  std::string file;
  CLI::App* run = app.add_subcommand("run", "run a session file (or fixture:<name>)");
  run->add_option("file", file, "session file")->required();
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& f : fixture_sessions()) std::cout << f.name << "  " << f.description << "\n";
    if (!run->parsed()) return kExitPass;
  }
  if (!run->parsed()) {
    std::cerr << app.help();
    return kExitError;
  }
  auto text = load(file);
  if (!text) {
    std::cerr << "error: cannot read " << file << "\n";
    return kExitError;
  }
  Session s;
  try {
    s = parse_session(*text);
  } catch (const SessionError& e) {
    std::cerr << file << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
    return kExitParse;
  }
  return run_session(s, opts, std::cout);
}
