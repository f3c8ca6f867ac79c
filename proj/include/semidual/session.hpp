#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "semidual/checkers.hpp"

namespace semidual {

/// A diagnostic tied to a 1-based line and column of the session text.
class SessionError : public std::runtime_error {
 public:
  SessionError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
        line_(line), col_(col), msg_(msg) {}
  int line() const { return line_; }
  int column() const { return col_; }
  const std::string& message() const { return msg_; }

 private:
  int line_, col_;
  std::string msg_;
};

struct FieldDef {
  Field field = Field::rationals();
};

struct RingDef {
  std::string name;
  PolyRingPtr ambient;
  std::vector<Polynomial> relations;
  std::optional<std::vector<int>> weights;
};

struct IdealDef {
  std::string name, ring;
  std::vector<Polynomial> gens;
};

struct ModuleDef {
  std::string name, ring;
  /// entries[i][j]: row i (generator), column j (relation). Empty for free.
  std::vector<std::vector<Polynomial>> entries;
  std::size_t rows = 0;
};

struct ConstructionDef {
  std::string name, kind;  // ltimes, bowtie, pseudo, stacked
  std::string ring, arg;
  std::optional<Polynomial> r0;
};

struct Command {
  std::string verb, op;  // e.g. "verify", "theoremB"
  std::vector<std::string> args;
  std::optional<int> bound, max, imax;
  int line = 0;
};

using SessionItem = std::variant<FieldDef, RingDef, IdealDef, ModuleDef, ConstructionDef, Command>;

struct Session {
  std::vector<SessionItem> items;
};

/// Throws SessionError for unknown keywords, unbound names, malformed
/// polynomials, arity and type mismatches.
Session parse_session(const std::string& text);

struct RunOptions {
  int default_bound = kDefaultBound;
  bool machine = false;
};

/// Exit codes of run_session and the command-line tool.
enum ExitCode { kExitPass = 0, kExitFail = 1, kExitError = 2, kExitParse = 3 };

/// Runs the commands in order, writing one report per command to `out`.
/// Returns kExitError if any command or definition raised an error, else
/// kExitFail if any report failed, else kExitPass.
int run_session(const Session& s, const RunOptions& opts, std::ostream& out);

/// Built-in example sessions.
struct FixtureSession {
  std::string name, description, text;
};
const std::vector<FixtureSession>& fixture_sessions();

}  // namespace semidual
