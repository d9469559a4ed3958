#pragma once
// Flattened relational grammars: each skeleton relation is completed into a
// CHC relation over per-slot state snapshots (pids, live data variables,
// live object identities, and a matrix of store-history cells), with clause
// constraints encoding the built edge's symbolic transition, structural
// sharing of unchanged snapshots, and location-keyed load matching.
//
// The encoding deliberately mirrors the loose per-path semantics of sympath:
// object identities are integers (nil = -1, an allocation's identity is the
// built edge's target pid), history cells hold the pid of the point whose
// incoming edge last stored the cell (allocation counts, but allocation
// targets never coincide with store targets, so such cells never match a
// load), and unmatched loads yield fresh unconstrained values.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lttp/chc.hpp"
#include "lttp/interp.hpp"
#include "lttp/ir.hpp"
#include "lttp/skeleton.hpp"
#include "lttp/sympath.hpp"

namespace lttp {

struct grammar_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-location live variable sets (backward dataflow to fixpoint). Stored
// values and store-target objects are kept artificially live at store-target
// locations so that load matching can read them off witness slots.
struct Liveness {
  std::map<std::string, std::set<std::string>> data, obj;
};
Liveness compute_liveness(const Program& p);

// Fields that occur in some load; only their history cells are tracked.
std::set<std::string> loaded_fields(const Program& p);

// The completion spec realizing the flattened encoding for skeletons of `p`.
// Captures copies of everything it needs; the returned spec outlives `s`.
CompletionSpec grammar_spec(const Program& p, const SkeletonSystem& s);

struct Grammar {
  SkeletonSystem skeleton;
  CHCSystem chc;
};

// Synthesizes a skeleton refuting the feedback set (cfg-shaped when empty)
// and completes it into a CHC system with the flattened encoding.
Grammar syn_grammar(const Program& p, const std::vector<Feedback>& f,
                    const SynOptions& opt, SolverSession& smt);

struct SimReport {
  std::vector<std::string> violations;
  int runs_checked = 0;
  bool ok() const { return violations.empty(); }
};

// Independent simulation check: for every error path up to `depth` with a
// concrete run (strict interpreter), replays the unique skeleton derivation
// and checks that each clause constraint is satisfiable under the run's
// natural valuation (pids = node indices, identities = alloc target nodes,
// history cells = last-store nodes, fresh negative sentinels for never-
// stored cells). Stops after max_runs runs.
SimReport check_simulation(const Program& p, const SkeletonSystem& sk,
                           const CHCSystem& chc, int depth, int max_runs,
                           SolverSession& smt, int timeout_ms);

}  // namespace lttp
