#pragma once
// First-order terms over Int/Bool/Point, deterministic SMT-LIB2 rendering,
// and a persistent solver session speaking SMT-LIB2 over pipes.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lttp {

enum class Sort { Int, Bool, Point, ArrayIntInt, ArrayIntBool };
std::string sort_smt2(Sort s);

enum class TKind {
  IntConst, BoolConst,
  Sym,       // named constant or bound variable
  App,       // uninterpreted function application
  Add, Sub, Neg, Mul,
  Le, Lt, Ge, Gt,
  Eq, Distinct,
  And, Or, Not, Implies, Ite,
  Select, Store
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TKind kind;
  std::int64_t num = 0;          // IntConst value / BoolConst 0-1
  std::string name;              // Sym / App
  std::vector<TermPtr> args;

  static TermPtr int_const(std::int64_t v);
  static TermPtr bool_const(bool v);
  static TermPtr sym(std::string name);
  static TermPtr app(std::string fn, std::vector<TermPtr> args);
  static TermPtr make(TKind k, std::vector<TermPtr> args);
};

// Convenience builders. mk_and/mk_or of an empty vector give true/false.
TermPtr mk_and(std::vector<TermPtr> ts);
TermPtr mk_or(std::vector<TermPtr> ts);
TermPtr mk_not(TermPtr t);
TermPtr mk_implies(TermPtr a, TermPtr b);
TermPtr mk_eq(TermPtr a, TermPtr b);
TermPtr mk_distinct(std::vector<TermPtr> ts);
TermPtr mk_ite(TermPtr c, TermPtr t, TermPtr e);

std::string to_smt2(const TermPtr& t);

// Bottom-up constant folding and and/or/not simplification.
TermPtr simplify(const TermPtr& t);

// A renderable SMT-LIB2 query. Declarations are emitted in insertion order;
// rendering is deterministic.
struct SmtScript {
  std::string logic;                                  // empty = none
  bool declare_point = false;                         // (declare-sort Point 0)
  std::vector<std::string> options;                   // raw (set-option ...) etc.
  std::vector<std::pair<std::string, Sort>> consts;   // declare-const
  struct Func { std::string name; std::vector<Sort> params; Sort ret; };
  std::vector<Func> funcs;                            // declare-fun
  std::vector<std::string> raw;                       // raw lines (define-fun ...)
  std::vector<TermPtr> asserts;
  std::vector<TermPtr> gets;                          // values to fetch on sat

  void add_const(const std::string& n, Sort s);
  void add_func(const std::string& n, std::vector<Sort> ps, Sort ret);
  std::string render(bool with_check_and_gets = true) const;
};

enum class SatResult { Sat, Unsat, Unknown };

struct SolverReply {
  SatResult res = SatResult::Unknown;
  bool timed_out = false;
  std::vector<std::string> values;  // aligned with SmtScript::gets (sat only)
  std::string raw;                  // full solver output for diagnostics
};

// One persistent solver subprocess per session. Each query batch is
// terminated by an (echo "<marker>") line; the client reads output until the
// marker. A timeout kills the subprocess (a fresh one is spawned lazily).
// Works with the bundled solver/z3 and any `z3 -in`-style binary.
class SolverSession {
 public:
  // Command resolution: explicit arg > GRAMMATIC_SMT env > built-in default.
  explicit SolverSession(std::string cmd = "");
  ~SolverSession();
  SolverSession(const SolverSession&) = delete;
  SolverSession& operator=(const SolverSession&) = delete;

  SolverReply check(const SmtScript& script, int timeout_ms);

  // Sends raw SMT-LIB2 text (marker appended) and returns output lines.
  std::optional<std::vector<std::string>> request(const std::string& text,
                                                  int timeout_ms);

  const std::string& command() const { return cmd_; }
  int queries_issued() const { return query_counter_; }

 private:
  bool ensure_alive();
  void kill_child();
  std::optional<std::vector<std::string>> request_once(const std::string& text,
                                                       int timeout_ms,
                                                       bool& child_died);

  std::string cmd_;
  int child_pid_ = -1;
  int to_child_ = -1, from_child_ = -1;
  std::string pending_;  // buffered output not yet consumed
  int query_counter_ = 0;
};

// Parses a (get-value (t)) reply line like "((t 4))" and returns the value
// part ("4", "(- 3)", "true", "Point!val!2", ...).
std::optional<std::string> parse_value_reply(const std::string& line);
std::optional<std::int64_t> parse_int_value(const std::string& v);

}  // namespace lttp
