#pragma once
// Symbolic path encoding over update histories: one uninterpreted Point sort
// serves both path points and object identities. The vocabulary maps each
// data variable x to x : Point -> Int, each object variable p to
// p : Point -> Point, and each field f to f : Point x Point -> Point, where
// f(n, o) is the path point at which field f of object o was most recently
// stored (store edges record their *target* point; allocation records the
// allocation point but is excluded from the load-match index).
//
// This encoding is deliberately looser than the concrete interpreter: the
// entry state is unconstrained, allocated fields hold arbitrary garbage
// until stored, and loads with no matching store yield arbitrary values.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lttp/ir.hpp"
#include "lttp/logic.hpp"

namespace lttp {

struct encode_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when the solver cannot decide a query; never coerced to a verdict.
struct indeterminate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Witness-point neighborhood: node index -> set of node indices whose
// bindings the encoding may consult at that node. Sparse: a missing key is
// the empty set.
using Neighborhood = std::map<int, std::set<int>>;

// Static store/alloc index of a program, shared by all paths.
struct SymContext {
  // (field, store-target location) -> variable holding the stored value.
  std::map<std::pair<std::string, std::string>, std::string> stored_var;
  // field -> store-target locations.
  std::map<std::string, std::set<std::string>> store_targets;
  // Locations that are targets of alloc edges (alloc identity = edge target).
  std::set<std::string> alloc_targets;
};

// Builds the index; throws encode_error if a location would be both an
// alloc target and a store target, or if two stores of the same field with
// different source variables share a target location (the location-keyed
// match index requires both to be unambiguous).
SymContext make_sym_context(const Program& p);

// Appends the symbolic transition relation of instruction `ins` on edge
// (node n -> node n2) to `script` and returns it. Q lists the witness
// points; locs are the path's node locations. Fresh auxiliary constants
// (havoc values, composite intermediates) are declared in `script`.
TermPtr symrel(const Program& p, const SymContext& ctx, const Instruction& ins,
               int n, int n2, const std::vector<int>& Q,
               const std::vector<std::string>& locs, SmtScript& script);

// Full path encoding: vocabulary declarations, pairwise-distinct node
// constants (plus nil), and the conjunction of per-edge symrels with
// Q = nu(target). nu == nullptr means nu_All (every node sees every node).
SmtScript sympath(const Program& p, const ControlPath& path,
                  const Neighborhood* nu = nullptr);

// Decides feasibility of the path; throws indeterminate_error on Unknown.
bool is_feas(const Program& p, const ControlPath& path, SolverSession& solver,
             int timeout_ms);

struct DepsStats {
  int main_queries = 0;       // exactly |N|^2 + 1
  int selfcheck_queries = 0;
};

// Computes a minimal refuting neighborhood for an infeasible path by greedy
// removal in lexicographic (target, witness) order: |N|^2 + 1 main queries.
// With self_check, re-verifies refutingness and per-element minimality
// before returning. Throws encode_error if the path is feasible and
// indeterminate_error on Unknown.
Neighborhood deps(const Program& p, const ControlPath& path,
                  SolverSession& solver, int timeout_ms,
                  bool self_check = true, DepsStats* stats = nullptr);

// Node constant name for path node i.
std::string node_name(int i);

}  // namespace lttp
