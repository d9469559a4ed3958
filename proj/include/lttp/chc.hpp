#pragma once
// Constrained Horn Clause systems (linear, body length <= 1), HORN
// emission, bounded derivation enumeration, per-derivation feasibility,
// control-path reconstruction, and black-box CHC solving.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lttp/ir.hpp"
#include "lttp/logic.hpp"

namespace lttp {

struct chc_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RelPred {
  std::string name;
  std::vector<Sort> sig;  // parameter sorts; size() is the arity
};

// An application of a relational predicate to argument terms.
struct ClauseApp {
  std::string rel;
  std::vector<TermPtr> args;
};

// body /\ constraint => head, universally quantified over vars.
// Linear restriction: at most one body application.
struct Clause {
  std::string name;                                // deterministic id
  std::vector<std::pair<std::string, Sort>> vars;  // quantified variables
  std::optional<ClauseApp> body;
  TermPtr constraint;  // nullptr = true
  ClauseApp head;
};

// Control provenance attached by the completion of a skeleton: the clause
// builds one program edge between the path points held in two of its
// variables. Point identity across a derivation is carried by structural
// variable sharing between the head and body applications, so no explicit
// forwarding map is needed.
struct PathMeta {
  int instr_index = -1;     // program edge built by this clause
  std::string src_var;      // clause variable bound to the edge's source
  std::string tgt_var;      // clause variable bound to the edge's target
};

struct CHCSystem {
  std::vector<RelPred> rels;
  std::vector<Clause> clauses;
  std::string query;  // relation whose reachability is the goal

  // Path provenance (present only for skeleton-completed systems).
  std::map<int, PathMeta> meta;  // clause index -> provenance
  const Program* program = nullptr;

  const RelPred* find_rel(const std::string& name) const;
  const Clause* find_clause(const std::string& name) const;
  // Throws chc_error on arity mismatches, unknown relations, a query that
  // heads no clause, or a non-linear clause.
  void validate() const;
};

// A derivation of a linear system: clause indices from the root (head =
// query) down to a ground clause (no body). Adjacent entries are linked by
// head/body relation agreement.
struct Derivation {
  std::vector<int> clauses;
};

bool valid_derivation(const CHCSystem& s, const Derivation& d);

// SMT-LIB2 HORN script: declarations, one named rule per clause, and a goal
// clause asserting the query is unreachable. The solver answers `sat` when a
// solution (Defn: interpretation making every clause valid and the goal
// hold) exists, `unsat` when the query is derivable.
std::string emit_horn(const CHCSystem& s);

// All derivations with at most max_depth clause applications, in
// lexicographic order of clause indices (root-first).
std::vector<Derivation> enumerate_derivations(const CHCSystem& s,
                                              int max_depth);

// Conjoins the derivation's clause constraints under fresh per-node variable
// copies with argument/parameter agreement and checks satisfiability. On
// sat, when model_out is non-null, fills it with the values of every
// Int-sorted instantiated variable (key "d<i>_<var>"). Throws chc_error when
// the solver cannot reach a verdict.
SatResult derivation_feasible(const CHCSystem& s, const Derivation& d,
                              SolverSession& smt, int timeout_ms,
                              std::map<std::string, long long>* model_out =
                                  nullptr);

// The per-node variable name used by derivation_feasible for node i of the
// derivation (root is node 0).
std::string der_var(int node, const std::string& var);

// Reconstructs the control path a derivation describes by replaying the
// clauses' PathMeta over abstract path points and chaining the built edges.
// Requires provenance metadata; throws chc_error otherwise.
ControlPath der_path(const CHCSystem& s, const Derivation& d);

struct SolveOptions {
  int smt_timeout_ms = 60000;   // per derivation_feasible query
  int chc_timeout_ms = 600000;  // external HORN solver budget
  int enum_depth = 8;           // initial bounded-enumeration depth
  int enum_depth_cap = 32;      // depth doubles up to this cap
};

struct SolveResult {
  enum class Kind { Infeasible, Feasible, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Derivation> witness;             // Feasible, when found
  std::map<std::string, long long> model;        // witness model values
  std::string raw;                               // external solver output
};

// Bounded enumeration first: any Sat derivation short-circuits as the
// Feasible witness. Otherwise the external HORN solver decides; `sat` is
// Infeasible, `unsat` re-runs the enumerator at doubled depths and yields
// Feasible with no witness past the cap.
SolveResult solve(const CHCSystem& s, SolverSession& smt, SolverSession& chc,
                  const SolveOptions& opt);

}  // namespace lttp
