#pragma once
// Top-level verification driver: the main proof loop, the array-based
// baseline verifier, the independent per-path feasibility oracle, progress
// monitoring, and benchmark running.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lttp/interp.hpp"
#include "lttp/ir.hpp"
#include "lttp/logic.hpp"
#include "lttp/sympath.hpp"

namespace lttp {

// Independent per-path feasibility check in the theory of arrays
// (QF_AUFLIA), designed to agree exactly with is_feas: nil = -1, an alloc's
// identity is the target node index, initial variables and allocated fields
// are unconstrained, and a load of a cell with no recorded store yields a
// fresh unconstrained value per load (definedness arrays start all-false and
// alloc resets its own cells to undefined). Throws indeterminate_error on
// Unknown.
bool array_path_oracle(const Program& p, const ControlPath& path,
                       SolverSession& solver, int timeout_ms);

// Renders the oracle's script (exposed for golden-file tests).
SmtScript array_path_script(const Program& p, const ControlPath& path);

enum class Verdict { Safe, Unsafe, Unknown };
std::string verdict_name(Verdict v);

struct VerifierConfig {
  std::string smt_cmd;        // empty = GRAMMATIC_SMT env or built-in default
  std::string chc_cmd;        // empty = GRAMMATIC_CHC env, then smt_cmd chain
  int timeout_ms = 600000;    // per solver query
  int unroll_depth = 8;       // pre-solve derivation enumeration depth
  int max_relations = 0;      // 0 = |Locs| of the pruned program
  int arity = 4;              // initial skeleton arity budget
  bool coalesce = true;
  int max_iterations = 64;    // proof-loop feedback cap
};

struct VerdictReport {
  Verdict verdict = Verdict::Unknown;
  int iterations = 0;
  int relations = 0;                   // final grammar size (Safe)
  int clauses = 0;
  std::optional<Run> witness;          // Unsafe only; check_run-validated
  std::string detail;                  // human-readable notes
};

// The main proof loop: synthesize a grammar refuting the accumulated
// feedback paths, solve its CHC system, and either conclude Safe, extend
// the feedback set, or materialize an Unsafe witness.
VerdictReport lttp_verify(const Program& p, const VerifierConfig& cfg);

// Baseline: location-indexed CHC system over integer variables and
// value arrays (concrete semantics), solved directly.
VerdictReport baseline_verify(const Program& p, const VerifierConfig& cfg);

// One benchmark outcome; `seconds` is wall-clock for the whole verification.
struct BenchRow {
  std::string name;
  Verdict verdict = Verdict::Unknown;
  int iterations = 0;
  int relations = 0;
  int clauses = 0;
  double seconds = 0.0;
  std::string detail;
};

// Runs lttp_verify on every `*.ir` file in `dir` (sorted by name);
// per-benchmark failures (parse errors, solver crashes) are recorded as
// Unknown rows, never thrown.
std::vector<BenchRow> run_benchmarks(const std::string& dir,
                                     const VerifierConfig& cfg);

std::string bench_markdown(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);

// Progress monitor: checks that successive feedback paths are new, i.e.
// the proof loop never re-derives a previously refuted path.
struct ProgressMonitor {
  std::vector<std::vector<int>> seen;  // edge sequences
  // Returns false (violation) if the path was already fed back.
  bool note(const ControlPath& path);
  bool ok = true;
};

}  // namespace lttp
