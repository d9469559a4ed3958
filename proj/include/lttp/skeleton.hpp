#pragma once
// Run-grammar skeletons: slot/role relation shapes, the deterministic clause
// scheme (extend/split with completion at first arrival), the CFG-shaped
// fast path, constraint-based synthesis against feedback paths, behavioral
// re-validation, and completion into CHC systems.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lttp/chc.hpp"
#include "lttp/ir.hpp"
#include "lttp/logic.hpp"
#include "lttp/sympath.hpp"

namespace lttp {

struct skeleton_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when the synthesis constraint is unsatisfiable at the largest
// budget in the schedule.
struct budget_exhausted : skeleton_error {
  using skeleton_error::skeleton_error;
};

// Slots are listed in path order. A Start slot opens a negative control pair
// whose End is the immediately following slot; every other slot is Aux. The
// subpath between a pair's two points is derived below the relation; Aux
// slots are fully derived elsewhere.
enum class Role { Start, End, Aux };

struct SkelSlot {
  std::string loc;
  Role role = Role::Aux;
};

struct SkelRel {
  std::string name;
  std::vector<SkelSlot> slots;  // path order; size() is the arity
  int frontier = -1;            // Start slot of the pair clauses of this
                                // relation grow
  bool split = false;           // clause mode: false = extend from the
                                // frontier start, true = edge source is a
                                // fresh point inside the frontier pair
  std::string src_loc;          // built-edge source location; equals
                                // slots[frontier].loc in extend mode
};

// One clause per (relation, program edge out of src_loc). The body relation
// realizes the forwarding-derived slot table; absent for ground clauses.
struct SkelClause {
  std::string head;
  int instr = -1;
  bool completing = false;  // edge target location equals the pair-end
                            // location ("complete at first arrival")
  std::optional<std::string> body;
};

struct SkeletonSystem {
  std::vector<SkelRel> rels;  // rels[0] is the query relation
  std::string query;
  std::vector<SkelClause> clauses;
  const Program* program = nullptr;

  const SkelRel* find_rel(const std::string& name) const;
};

// Human-readable rendering of the relations and the clause table.
std::string print_skeleton(const SkeletonSystem& s);

// The slot table the body of a clause of `head` building `instr` must have
// under deterministic forwarding; nullopt when the clause is ground
// (completing with no other Start slot). `completing` is set either way.
// Throws skeleton_error if the edge cannot be built by `head` at all.
std::optional<std::vector<SkelSlot>> derived_body_slots(const SkelRel& head,
                                                        const Program& p,
                                                        int instr,
                                                        bool& completing);

// A feedback entry: an infeasible error path with a refuting neighborhood.
struct Feedback {
  ControlPath path;
  Neighborhood nu;
};

struct Budget {
  int max_relations = 0;  // 0 = |locations| of the program
  int arity = 4;
};

struct SynOptions {
  Budget budget;
  int coverage_depth = 10;   // error paths witnessed for completeness
  int coverage_cap = 24;
  int check_depth = 10;      // check_skeleton depth after decoding
  int cegis_retries = 8;     // model-blocking retries on check failure
  int smt_timeout_ms = 120000;
};

// CFG-shaped skeleton: one relation per location on an error path, pair
// (loc, l_error), extend mode. The F = empty fast path.
SkeletonSystem cfg_skeleton(const Program& p);

// Constraint-based synthesis: one finite-domain query whose model fixes the
// relation tables and per-clause body choices, with embedded derivation
// witnesses for every feedback path (realizing its neighborhood) and for a
// capped set of coverage error paths. The decoded skeleton must pass
// check_skeleton; failing models are blocked and synthesis retries. Climbs
// the budget schedule (arity +2 up to 10, then relation count + |locs|) and
// throws budget_exhausted when the largest budget is unsatisfiable.
SkeletonSystem syn_skeleton(const Program& p, const std::vector<Feedback>& f,
                            const SynOptions& opt, SolverSession& smt);

struct SkeletonReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Independent re-validation: structural consistency (roles, frontier, clause
// coverage and exactness, body-table agreement), completeness and
// unambiguity against enumerate_paths up to `depth`, and neighborhood
// realization for every feedback entry.
SkeletonReport check_skeleton(const Program& p, const SkeletonSystem& s,
                              const std::vector<Feedback>& f, int depth);

// Completion into a CHC system. Every relation gets one Int pid parameter
// per slot plus the extra parameters supplied by `extra_params` (may be
// null). Each clause carries the control constraints (strictly increasing
// pids, built-edge successor link, split-point placement) conjoined with the
// formula returned by `constraint` (may be null = true), which receives the
// clause index plus the head/body argument terms (body empty for ground
// clauses) and the built edge's source/target pid terms. Path provenance
// metadata is attached for der_path.
struct CompletionSpec {
  std::function<std::vector<std::pair<std::string, Sort>>(const SkelRel&)>
      extra_params;
  std::function<TermPtr(int clause_index, const std::vector<TermPtr>& head,
                        const std::vector<TermPtr>& body, TermPtr src,
                        TermPtr tgt,
                        std::vector<std::pair<std::string, Sort>>& fresh_vars)>
      constraint;
};

CHCSystem completion(const SkeletonSystem& s, const CompletionSpec& spec);

}  // namespace lttp
