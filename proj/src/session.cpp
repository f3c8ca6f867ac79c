#include "semidual/session.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <ostream>

#include <json.hpp>

namespace semidual {

namespace {

using json = nlohmann::ordered_json;

struct Piece {
  std::string text;
  std::size_t offset;  // of text within the line
};

std::string trim_piece(const std::string& s, std::size_t& lead) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  lead = a;
  return s.substr(a, b - a);
}

/// One statement (a line without its comment) with a cursor.
class Scanner {
 public:
  Scanner(std::string text, int line) : s_(std::move(text)), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw SessionError(line_, static_cast<int>(pos) + 1, msg);
  }
  int line() const { return line_; }
  std::size_t pos() {
    skip();
    return pos_;
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  std::string ident(const std::string& what) {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    }
    if (b == pos_) fail("expected " + what);
    return s_.substr(b, pos_ - b);
  }
  int integer(const std::string& what) {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_ || (pos_ == b + 1 && s_[b] == '-')) fail_at(b, "expected " + what);
    try {
      return std::stoi(s_.substr(b, pos_ - b));
    } catch (const std::out_of_range&) {
      fail_at(b, what + " out of range");
    }
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  /// The next word if it equals `w`.
  bool accept_word(const std::string& w) {
    skip();
    std::size_t save = pos_;
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      if (ident("word") == w) return true;
    }
    pos_ = save;
    return false;
  }
  void expect_word(const std::string& w) {
    if (!accept_word(w)) fail("expected '" + w + "'");
  }
  /// Contents of a balanced group starting at `open`.
  Piece group(char open, char close) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != open) fail(std::string("expected '") + open + "'");
    std::size_t start = ++pos_;
    int depth = 1;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (depth == 0) break;
      ++pos_;
    }
    if (pos_ >= s_.size()) fail_at(start - 1, std::string("unbalanced '") + open + "'");
    if (s_[pos_] != close) fail(std::string("expected '") + close + "'");
    Piece p{s_.substr(start, pos_ - start), start};
    ++pos_;
    return p;
  }
  void finish() {
    if (!at_end()) fail("unexpected text");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string s_;
  int line_;
  std::size_t pos_ = 0;
};

/// Top-level comma-separated parts of a group (empty group -> no parts).
std::vector<Piece> split(const Scanner& sc, const Piece& g) {
  std::vector<Piece> out;
  std::size_t lead = 0;
  if (trim_piece(g.text, lead).empty()) return out;
  int depth = 0;
  std::size_t b = 0;
  for (std::size_t i = 0; i <= g.text.size(); ++i) {
    char c = i < g.text.size() ? g.text[i] : ',';
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      std::string t = trim_piece(g.text.substr(b, i - b), lead);
      if (t.empty()) sc.fail_at(g.offset + i, "empty list entry");
      out.push_back(Piece{t, g.offset + b + lead});
      b = i + 1;
    }
  }
  return out;
}

Polynomial parse_poly(const Scanner& sc, const PolyRingPtr& amb, const Piece& p) {
  try {
    return parse_polynomial(amb, p.text);
  } catch (const ParseError& e) {
    sc.fail_at(p.offset + e.position(), "malformed polynomial '" + p.text + "'");
  } catch (const std::exception& e) {
    sc.fail_at(p.offset, "malformed polynomial '" + p.text + "': " + e.what());
  }
}

enum class Kind { Ring, Ideal, Module, Construction };

std::string kind_word(Kind k) {
  switch (k) {
    case Kind::Ring: return "ring";
    case Kind::Ideal: return "ideal";
    case Kind::Module: return "module";
    case Kind::Construction: return "construction";
  }
  return "?";
}

struct Binding {
  Kind kind;
  std::string ring;  // base ring (the ring itself for rings)
  PolyRingPtr ambient;
};

struct CommandSig {
  std::string verb;
  // 'R' ring, 'C' construction, 'M' module-like (ring, ideal or module)
  std::string args;
  bool bound, max, imax;
};

const std::map<std::string, CommandSig>& command_table() {
  static const std::map<std::string, CommandSig> t = {
      {"semidualizing", {"check", "RM", true, false, false}},
      {"retract", {"check", "C", true, false, false}},
      {"kernel", {"check", "C", false, false, false}},
      {"reflexive", {"check", "MM", true, false, false}},
      {"auslander", {"check", "MM", true, false, false}},
      {"bass", {"check", "MM", true, false, false}},
      {"gcdim", {"compute", "MM", true, true, false}},
      {"dual", {"compute", "M", false, false, false}},
      {"theoremA", {"verify", "CM", true, true, false}},
      {"theoremB", {"verify", "C", true, false, false}},
      {"exttransfer", {"verify", "CM", true, false, true}},
  };
  return t;
}

class Parser {
 public:
  Session run(const std::string& text) {
    std::size_t start = 0;
    int line = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      ++line;
      std::string l = text.substr(start, end - start);
      if (auto hash = l.find('#'); hash != std::string::npos) l.erase(hash);
      if (!l.empty() && l.back() == '\r') l.pop_back();
      Scanner sc(l, line);
      if (!sc.at_end()) statement(sc);
      start = end + 1;
    }
    return std::move(session_);
  }

 private:
  void statement(Scanner& sc) {
    std::size_t kpos = sc.pos();
    std::string kw = sc.ident("keyword");
    if (kw == "field") return field(sc, kpos);
    if (kw == "ring") return ring(sc);
    if (kw == "ideal") return ideal(sc);
    if (kw == "module") return module(sc);
    if (kw == "construction") return construction(sc);
    if (kw == "check" || kw == "compute" || kw == "verify") return command(sc, kw);
    sc.fail_at(kpos, "unknown keyword '" + kw + "'");
  }

  std::string new_name(Scanner& sc) {
    std::size_t p = sc.pos();
    std::string n = sc.ident("name");
    if (bindings_.count(n)) sc.fail_at(p, "name '" + n + "' is already bound");
    sc.expect('=');
    return n;
  }

  const Binding& lookup(const Scanner& sc, const Piece& p) const {
    auto it = bindings_.find(p.text);
    if (it == bindings_.end()) sc.fail_at(p.offset, "unbound name '" + p.text + "'");
    return it->second;
  }
  const Binding& lookup_ring(Scanner& sc) {
    std::size_t p = sc.pos();
    std::string n = sc.ident("ring name");
    const Binding& b = lookup(sc, Piece{n, p});
    if (b.kind != Kind::Ring) sc.fail_at(p, "'" + n + "' is a " + kind_word(b.kind) + ", not a ring");
    return b;
  }

  void field(Scanner& sc, std::size_t kpos) {
    if (field_seen_) sc.fail_at(kpos, "only one field per session");
    if (!bindings_.empty()) sc.fail_at(kpos, "the field must precede all definitions");
    field_seen_ = true;
    std::size_t p = sc.pos();
    std::string f = sc.ident("field name");
    if (f == "Q") {
      field_ = Field::rationals();
    } else if (f == "Fp") {
      std::size_t q = sc.pos();
      int m = sc.integer("prime");
      try {
        field_ = Field::prime(static_cast<std::uint64_t>(m));
      } catch (const std::invalid_argument&) {
        sc.fail_at(q, std::to_string(m) + " is not prime");
      }
    } else {
      sc.fail_at(p, "unknown field '" + f + "'");
    }
    sc.finish();
    session_.items.push_back(FieldDef{field_});
  }

  void ring(Scanner& sc) {
    RingDef d;
    d.name = new_name(sc);
    sc.expect_word("poly");
    Piece vars = sc.group('(', ')');
    std::vector<std::string> names;
    for (const auto& v : split(sc, vars)) {
      bool ok = std::isalpha(static_cast<unsigned char>(v.text[0])) != 0;
      for (char c : v.text) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) sc.fail_at(v.offset, "bad variable name '" + v.text + "'");
      if (std::find(names.begin(), names.end(), v.text) != names.end()) {
        sc.fail_at(v.offset, "duplicate variable '" + v.text + "'");
      }
      names.push_back(v.text);
    }
    std::optional<Piece> rels;
    if (sc.accept('/')) rels = sc.group('(', ')');
    OrderKind order = OrderKind::GrevLex;
    if (sc.accept_word("order")) {
      std::size_t p = sc.pos();
      std::string o = sc.ident("order");
      if (o == "lex") order = OrderKind::Lex;
      else if (o != "grevlex") sc.fail_at(p, "unknown order '" + o + "'");
    }
    if (sc.accept_word("weights")) {
      Piece w = sc.group('(', ')');
      std::vector<int> ws;
      for (const auto& p : split(sc, w)) {
        Scanner sub(p.text, sc.line());
        int x = 0;
        try {
          x = sub.integer("weight");
          sub.finish();
        } catch (const SessionError& e) {
          sc.fail_at(p.offset + static_cast<std::size_t>(e.column()) - 1, e.message());
        }
        if (x <= 0) sc.fail_at(p.offset, "weights must be positive");
        ws.push_back(x);
      }
      if (ws.size() != names.size()) sc.fail_at(w.offset, "expected " + std::to_string(names.size()) + " weights");
      d.weights = ws;
    }
    sc.finish();
    MonomialOrder mo = order == OrderKind::Lex ? MonomialOrder::lex(names.size()) : MonomialOrder::grevlex(names.size());
    try {
      d.ambient = make_poly_ring(field_, names, mo);
    } catch (const std::exception& e) {
      sc.fail_at(vars.offset, e.what());
    }
    if (rels) {
      for (const auto& p : split(sc, *rels)) d.relations.push_back(parse_poly(sc, d.ambient, p));
    }
    bindings_[d.name] = Binding{Kind::Ring, d.name, d.ambient};
    session_.items.push_back(std::move(d));
  }

  void ideal(Scanner& sc) {
    IdealDef d;
    d.name = new_name(sc);
    Piece gens = sc.group('(', ')');
    sc.expect_word("in");
    const Binding& r = lookup_ring(sc);
    sc.finish();
    auto parts = split(sc, gens);
    if (parts.empty()) sc.fail_at(gens.offset, "an ideal needs at least one generator");
    for (const auto& p : parts) d.gens.push_back(parse_poly(sc, r.ambient, p));
    d.ring = r.ring;
    bindings_[d.name] = Binding{Kind::Ideal, d.ring, r.ambient};
    session_.items.push_back(std::move(d));
  }

  void module(Scanner& sc) {
    ModuleDef d;
    d.name = new_name(sc);
    if (sc.accept_word("free")) {
      std::size_t p = sc.pos();
      int n = sc.integer("rank");
      if (n < 0) sc.fail_at(p, "rank must be non-negative");
      d.rows = static_cast<std::size_t>(n);
      sc.expect_word("over");
      const Binding& r = lookup_ring(sc);
      sc.finish();
      d.ring = r.ring;
    } else if (sc.accept_word("coker")) {
      Piece m = sc.group('[', ']');
      sc.expect_word("over");
      const Binding& r = lookup_ring(sc);
      sc.finish();
      d.ring = r.ring;
      auto rows = split(sc, m);
      if (rows.empty()) sc.fail_at(m.offset, "empty matrix");
      std::size_t ncols = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Piece& row = rows[i];
        if (row.text.front() != '[' || row.text.back() != ']') sc.fail_at(row.offset, "expected a row '[...]'");
        Piece inner{row.text.substr(1, row.text.size() - 2), row.offset + 1};
        std::vector<Polynomial> entries;
        for (const auto& e : split(sc, inner)) entries.push_back(parse_poly(sc, r.ambient, e));
        if (i == 0) ncols = entries.size();
        if (entries.size() != ncols) {
          sc.fail_at(row.offset, "row has " + std::to_string(entries.size()) + " entries, expected " +
                                     std::to_string(ncols));
        }
        d.entries.push_back(std::move(entries));
      }
      d.rows = rows.size();
    } else {
      sc.fail("expected 'coker' or 'free'");
    }
    bindings_[d.name] = Binding{Kind::Module, d.ring, bindings_.at(d.ring).ambient};
    session_.items.push_back(std::move(d));
  }

  void construction(Scanner& sc) {
    ConstructionDef d;
    d.name = new_name(sc);
    std::size_t kpos = sc.pos();
    d.kind = sc.ident("construction kind");
    if (d.kind != "ltimes" && d.kind != "bowtie" && d.kind != "pseudo" && d.kind != "stacked") {
      sc.fail_at(kpos, "unknown construction '" + d.kind + "'");
    }
    Piece args = sc.group('(', ')');
    sc.finish();
    auto parts = split(sc, args);
    std::size_t want = d.kind == "pseudo" ? 3 : 2;
    if (parts.size() != want) {
      sc.fail_at(args.offset, d.kind + " takes " + std::to_string(want) + " arguments, got " +
                                  std::to_string(parts.size()));
    }
    const Binding& r = lookup(sc, parts[0]);
    if (r.kind != Kind::Ring) sc.fail_at(parts[0].offset, "'" + parts[0].text + "' is not a ring");
    const Binding& c = lookup(sc, parts[1]);
    if (c.kind == Kind::Construction) sc.fail_at(parts[1].offset, "'" + parts[1].text + "' is a construction");
    if (c.ring != r.ring) sc.fail_at(parts[1].offset, "'" + parts[1].text + "' is not over " + r.ring);
    bool ideal_kind = d.kind == "bowtie" || d.kind == "pseudo";
    if (ideal_kind && c.kind != Kind::Ideal) sc.fail_at(parts[1].offset, d.kind + " requires an ideal");
    if (d.kind == "pseudo") {
      const Piece& p = parts[2];
      if (p.text.rfind("r0", 0) != 0 || p.text.find('=') == std::string::npos) sc.fail_at(p.offset, "expected r0=<poly>");
      std::size_t eq = p.text.find('=');
      std::size_t lead = 0;
      std::string poly = trim_piece(p.text.substr(eq + 1), lead);
      std::string key = p.text.substr(0, eq);
      if (trim_piece(key, lead) != "r0") sc.fail_at(p.offset, "expected r0=<poly>");
      d.r0 = parse_poly(sc, r.ambient, Piece{poly, p.offset + eq + 1 + lead});
    }
    d.ring = r.ring;
    d.arg = parts[1].text;
    bindings_[d.name] = Binding{Kind::Construction, d.ring, r.ambient};
    session_.items.push_back(std::move(d));
  }

  void command(Scanner& sc, const std::string& verb) {
    Command c;
    c.verb = verb;
    c.line = sc.line();
    std::size_t opos = sc.pos();
    c.op = sc.ident("command");
    auto it = command_table().find(c.op);
    if (it == command_table().end() || it->second.verb != verb) {
      sc.fail_at(opos, "unknown command '" + verb + " " + c.op + "'");
    }
    const CommandSig& sig = it->second;
    Piece args = sc.group('(', ')');
    auto parts = split(sc, args);
    if (parts.size() != sig.args.size()) {
      sc.fail_at(args.offset, c.op + " takes " + std::to_string(sig.args.size()) + " arguments, got " +
                                  std::to_string(parts.size()));
    }
    std::string ring;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Binding& b = lookup(sc, parts[i]);
      char want = sig.args[i];
      bool ok = (want == 'R' && b.kind == Kind::Ring) || (want == 'C' && b.kind == Kind::Construction) ||
                (want == 'M' && b.kind != Kind::Construction);
      if (!ok) {
        std::string expected = want == 'R' ? "a ring" : want == 'C' ? "a construction" : "a module, ideal or ring";
        sc.fail_at(parts[i].offset, "'" + parts[i].text + "' is a " + kind_word(b.kind) + ", expected " + expected);
      }
      if (i == 0) ring = b.ring;
      else if (b.ring != ring) sc.fail_at(parts[i].offset, "'" + parts[i].text + "' is not over " + ring);
      c.args.push_back(parts[i].text);
    }
    while (!sc.at_end()) {
      std::size_t p = sc.pos();
      std::string opt = sc.ident("option");
      std::optional<int>* slot = nullptr;
      if (opt == "bound" && sig.bound) slot = &c.bound;
      if (opt == "max" && sig.max) slot = &c.max;
      if (opt == "imax" && sig.imax) slot = &c.imax;
      if (!slot) sc.fail_at(p, "unknown option '" + opt + "' for " + c.op);
      if (slot->has_value()) sc.fail_at(p, "option '" + opt + "' given twice");
      std::size_t q = sc.pos();
      int v = sc.integer(opt + " value");
      if (v < 0) sc.fail_at(q, opt + " must be non-negative");
      *slot = v;
    }
    session_.items.push_back(std::move(c));
  }

  Session session_;
  std::map<std::string, Binding> bindings_;
  Field field_ = Field::rationals();
  bool field_seen_ = false;
};

// ------------------------------------------------------------------ run

json report_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  switch (r.verdict) {
    case Verdict::Pass: j["verdict"] = "PASS"; break;
    case Verdict::Fail: j["verdict"] = "FAIL"; break;
    case Verdict::VerifiedToBound: j["verdict"] = "VERIFIED_TO_BOUND"; break;
    case Verdict::Vacuous: j["verdict"] = "VACUOUS"; break;
  }
  if (r.verdict == Verdict::VerifiedToBound) j["bound"] = r.bound;
  if (r.verdict == Verdict::Fail) j["witness"] = r.witness;
  json d = json::object();
  for (const auto& [k, v] : r.details) d[k] = v;
  j["details"] = d;
  json subs = json::array();
  for (const auto& s : r.subs) subs.push_back(report_json(s));
  j["subs"] = subs;
  return j;
}

struct Env {
  std::map<std::string, Ring> rings;
  std::map<std::string, PresentedModule> modules;  // ideals and modules
  std::map<std::string, std::shared_ptr<RetractTriple>> triples;

  /// Module-like argument: a ring name stands for the ring as a module.
  PresentedModule module(const std::string& n) const {
    if (auto it = rings.find(n); it != rings.end()) return PresentedModule::free(it->second, 1);
    return modules.at(n);
  }
};

void define(Env& env, const SessionItem& item) {
  if (const auto* r = std::get_if<RingDef>(&item)) {
    env.rings[r->name] = make_ring(r->ambient, r->relations, r->weights);
  } else if (const auto* i = std::get_if<IdealDef>(&item)) {
    const Ring& R = env.rings.at(i->ring);
    std::vector<Polynomial> gens;
    for (const auto& g : i->gens) gens.push_back(R->reduce(g));
    env.modules[i->name] = PresentedModule::ideal(R, gens);
  } else if (const auto* m = std::get_if<ModuleDef>(&item)) {
    const Ring& R = env.rings.at(m->ring);
    if (m->entries.empty()) {
      env.modules[m->name] = PresentedModule::free(R, m->rows);
    } else {
      std::size_t cols = m->entries.front().size();
      std::vector<std::vector<Polynomial>> e;
      for (const auto& row : m->entries) {
        std::vector<Polynomial> r;
        for (const auto& p : row) r.push_back(R->reduce(p));
        e.push_back(std::move(r));
      }
      std::optional<std::vector<int>> deg;
      if (R->graded()) deg = std::vector<int>(m->rows, 0);
      env.modules[m->name] = PresentedModule(Matrix::from_entries(R, m->rows, cols, e), deg);
    }
  } else if (const auto* c = std::get_if<ConstructionDef>(&item)) {
    const Ring& R = env.rings.at(c->ring);
    PresentedModule C = env.module(c->arg);
    std::shared_ptr<RetractTriple> t;
    if (c->kind == "stacked") {
      t = std::make_shared<RetractTriple>(stacked_triple(R, C));
    } else {
      ConstructionSpec spec;
      spec.kind = c->kind == "ltimes"   ? ConstructionKind::TrivialExtension
                  : c->kind == "bowtie" ? ConstructionKind::AmalgamatedDuplication
                                        : ConstructionKind::PseudocanonicalCover;
      spec.R = R;
      spec.C = C;
      if (c->r0) spec.r0 = R->reduce(*c->r0);
      t = std::make_shared<RetractTriple>(build_construction(spec));
    }
    env.triples[c->name] = t;
  }
}

CheckReport execute(const Env& env, const Command& c, const RunOptions& opts) {
  int bound = c.bound.value_or(opts.default_bound);
  int maxn = c.max.value_or(kDefaultMaxN);
  auto M = [&](std::size_t i) { return env.module(c.args[i]); };
  auto T = [&]() -> const RetractTriple& { return *env.triples.at(c.args[0]); };
  if (c.op == "semidualizing") return check_semidualizing(M(1), bound);
  if (c.op == "retract") return check_retract_property(T(), bound);
  if (c.op == "kernel") return check_kernel_property(T());
  if (c.op == "reflexive") return check_totally_C_reflexive(M(0), M(1), bound);
  if (c.op == "auslander") return check_foxby_class(FoxbyClass::Auslander, M(0), M(1), bound);
  if (c.op == "bass") return check_foxby_class(FoxbyClass::Bass, M(0), M(1), bound);
  if (c.op == "gcdim") return gc_dimension_report(gc_dimension(M(0), M(1), maxn, bound));
  if (c.op == "dual") {
    MatlisDual d = matlis_dual(M(0));
    CheckReport r = CheckReport::pass("dual");
    r.detail("dim", std::to_string(d.basis.size()));
    r.detail("generators", std::to_string(d.module.ngens()));
    return r;
  }
  if (c.op == "theoremA") return verify_theorem_A_fg(T(), M(1), maxn, bound);
  if (c.op == "theoremB") return verify_theorem_B(T(), bound);
  if (c.op == "exttransfer") return verify_ext_transfer(T(), M(1), c.imax.value_or(2));
  throw std::logic_error("unhandled command " + c.op);
}

std::string command_text(const Command& c) {
  std::string s = c.verb + " " + c.op + "(";
  for (std::size_t i = 0; i < c.args.size(); ++i) s += (i ? "," : "") + c.args[i];
  return s + ")";
}

}  // namespace

Session parse_session(const std::string& text) { return Parser().run(text); }

int run_session(const Session& s, const RunOptions& opts, std::ostream& out) {
  Env env;
  bool failed = false, errored = false;
  for (const auto& item : s.items) {
    if (const auto* c = std::get_if<Command>(&item)) {
      json rec;
      rec["line"] = c->line;
      rec["command"] = command_text(*c);
      try {
        CheckReport r = execute(env, *c, opts);
        r.name = c->op;
        failed = failed || r.failed();
        if (opts.machine) {
          json body = report_json(r);
          for (auto& [k, v] : body.items()) rec[k] = v;
          out << rec.dump() << "\n";
        } else {
          out << "CHECK " << r.to_text();
        }
      } catch (const std::exception& e) {
        if (opts.machine) {
          rec["name"] = c->op;
          rec["verdict"] = "ERROR";
          rec["error"] = e.what();
          out << rec.dump() << "\n";
        } else {
          out << "CHECK " << c->op << ": ERROR " << e.what() << "\n";
        }
        errored = true;
      }
      continue;
    }
    try {
      define(env, item);
    } catch (const std::exception& e) {
      std::string name = std::visit(
          [](const auto& d) -> std::string {
            if constexpr (requires { d.name; }) return d.name;
            return "field";
          },
          item);
      if (opts.machine) {
        json rec;
        rec["definition"] = name;
        rec["verdict"] = "ERROR";
        rec["error"] = e.what();
        out << rec.dump() << "\n";
      } else {
        out << "DEFINE " << name << ": ERROR " << e.what() << "\n";
      }
      return kExitError;
    }
  }
  if (errored) return kExitError;
  return failed ? kExitFail : kExitPass;
}

const std::vector<FixtureSession>& fixture_sessions() {
  static const std::vector<FixtureSession> list = {
      {"semigroup-bowtie", "amalgamated duplication of k[t^3,t^4,t^5] along its canonical ideal",
       R"(field Q
ring R = poly(x, y, z) / (y^2 - x*z, y*z - x^3, z^2 - x^2*y) order grevlex weights (3, 4, 5)
ideal C = (x, y) in R
module k = coker [[x, y, z]] over R
construction S = bowtie(R, C)
check semidualizing(R, C) bound 4
check retract(S) bound 4
check kernel(S)
verify theoremB(S) bound 4
verify theoremA(S, k) max 4 bound 4
verify exttransfer(S, R) imax 2
)"},
      {"semigroup-pseudo", "pseudocanonical cover of the same ring with r0 = x",
       R"(field Q
ring R = poly(x, y, z) / (y^2 - x*z, y*z - x^3, z^2 - x^2*y) order grevlex weights (3, 4, 5)
ideal C = (x, y) in R
construction P = pseudo(R, C, r0=x)
check retract(P) bound 4
check kernel(P)
verify theoremB(P) bound 4
)"},
      {"trivial-x3", "trivial extension of Q[x]/(x^3) by itself",
       R"(field Q
ring R = poly(x) / (x^3) order grevlex weights (1)
module F = free 1 over R
module k = coker [[x]] over R
construction T = ltimes(R, F)
check retract(T) bound 4
check kernel(T)
verify theoremB(T) bound 4
verify theoremA(T, k) max 4 bound 4
verify theoremA(T, F) max 4 bound 4
verify exttransfer(T, k) imax 2
)"},
      {"rm-maximal", "Q[x,y]/(x,y)^2 with the maximal ideal, which is not semidualizing",
       R"(field Q
ring R = poly(x, y) / (x^2, x*y, y^2) order grevlex weights (1, 1)
ideal m = (x, y) in R
module k = coker [[x, y]] over R
construction T = ltimes(R, m)
check semidualizing(R, m) bound 4
verify theoremB(T) bound 4
verify theoremA(T, k) max 2 bound 2
)"},
      {"stacked", "the iterated trivial extension over Q where ker g is too large",
       R"(field Q
ring K = poly()
module F = free 1 over K
module F2 = free 2 over K
construction S = stacked(K, F)
check kernel(S)
verify theoremA(S, F) max 4 bound 4
verify theoremA(S, F2) max 4 bound 4
)"},
  };
  return list;
}

}  // namespace semidual
