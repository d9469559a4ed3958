#pragma once
// Concrete operational semantics: machine states, single-step execution,
// run search over a fixed control path, and run checking.
//
// This interpreter implements the strict semantics: the initial state is
// all-zero with all object variables nil, dereferencing nil (or reading an
// unallocated cell) is Stuck, and alloc zero/nil-initializes every field of
// the fresh object. The symbolic path encoding is deliberately looser (see
// sympath), so agreement is one-directional: every Run found here is
// symbolically feasible.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lttp/ir.hpp"

namespace lttp {

// Object identity 0 is nil; allocated objects get ids 1, 2, ...
using ObjId = std::int64_t;
inline constexpr ObjId kNil = 0;

struct ConcreteState {
  std::map<std::string, std::int64_t> data;              // data variables
  std::map<std::string, ObjId> objs;                     // object variables
  std::map<std::pair<ObjId, std::string>, std::int64_t> data_heap;
  std::map<std::pair<ObjId, std::string>, ObjId> obj_heap;
  ObjId alloc_count = 0;

  bool operator==(const ConcreteState&) const = default;
};

// Initial state: every declared data variable 0, every object variable nil.
ConcreteState initial_state(const Program& p);

enum class StepStatus { Ok, Stuck, Blocked };
// Blocked: an assume evaluated to false (the transition is disabled).
// Stuck: a nil dereference or unallocated-cell access.

struct StepResult {
  StepStatus status;
  ConcreteState state;  // meaningful only when status == Ok
};

// Executes one instruction. Havoc consumes the next value from `choices`
// (front first); running out of choices is an error.
StepResult step(const Program& p, const ConcreteState& s, const Instruction& ins,
                std::vector<std::int64_t>& choices);

struct Run {
  ControlPath path;
  // states[i] is the state at path node i; size path.edges.size() + 1.
  std::vector<ConcreteState> states;
  // The havoc choices that produced the run, in consumption order.
  std::vector<std::int64_t> choices;
};

// Searches for a run of p along the exact control path, trying havoc values
// from `domain` (depth-first, in order). If `seed` is given, those values
// are tried first at the corresponding havoc positions.
std::optional<Run> find_run(const Program& p, const ControlPath& path,
                            const std::vector<std::int64_t>& domain,
                            const std::vector<std::int64_t>* seed = nullptr);

// Replays the run and confirms every recorded state transition, that the
// path starts at l_init when it claims to, and that recorded states match.
bool check_run(const Program& p, const Run& run);

// Number of havoc instructions executed along the path (composites counted
// per contained havoc).
std::size_t count_havocs(const Program& p, const ControlPath& path);

std::int64_t eval_expr(const ExprPtr& e, const std::map<std::string, std::int64_t>& env);

}  // namespace lttp
