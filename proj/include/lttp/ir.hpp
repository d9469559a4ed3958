#pragma once
// Intermediate representation of heap-manipulating programs: data expressions,
// labeled instructions, programs, control paths, and the structural operations
// on them (parsing, printing, path enumeration, straight-line coalescing).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lttp {

struct ir_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Data expressions (integer-valued; booleans are 0/1)
// ---------------------------------------------------------------------------

enum class ExprKind {
  Const, Var,
  Add, Sub, Neg, Mul,
  Eq, Ne, Lt, Le, Gt, Ge,
  And, Or, Not
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  std::int64_t value = 0;       // Const
  std::string var;              // Var
  std::vector<ExprPtr> args;    // everything else

  static ExprPtr constant(std::int64_t v);
  static ExprPtr variable(std::string name);
  static ExprPtr make(ExprKind k, std::vector<ExprPtr> args);
};

// Collects the names of all variables occurring in e.
void collect_vars(const ExprPtr& e, std::set<std::string>& out);

std::string print_expr(const ExprPtr& e);

// ---------------------------------------------------------------------------
// Instructions
// ---------------------------------------------------------------------------

enum class IKind {
  DataAssign,  // x := e
  Havoc,       // x := havoc
  Assume,      // assume(e)
  DataLoad,    // x := p.f
  DataStore,   // p.f := x
  ObjLoad,     // q := p.g
  ObjStore,    // p.g := q
  Alloc,       // p := new
  NilTest,     // x := isnil(p)
  ObjEq,       // x := p == q
  Composite    // straight-line sequence of simple heap-free instructions
};

// One instruction. Operand roles by kind:
//   DataAssign: a=x, e        Havoc: a=x           Assume: e
//   DataLoad:   a=x b=p c=f   DataStore: a=p b=f c=x
//   ObjLoad:    a=q b=p c=g   ObjStore:  a=p b=g c=q
//   Alloc:      a=p           NilTest: a=x b=p     ObjEq: a=x b=p c=q
//   Composite:  steps (only DataAssign/Havoc/Assume/Alloc/NilTest/ObjEq,
//               at most one Alloc)
struct Instruction {
  IKind kind;
  std::string a, b, c;
  ExprPtr e;
  std::vector<Instruction> steps;
};

bool touches_heap(const Instruction& ins);   // load or store
std::string print_instruction(const Instruction& ins);

// ---------------------------------------------------------------------------
// Programs
// ---------------------------------------------------------------------------

struct LabeledInstruction {
  std::string pre;      // source location
  std::string target;   // destination location
  Instruction instr;
};

struct Program {
  std::vector<std::string> data_vars, obj_vars;
  std::vector<std::string> data_fields, obj_fields;
  std::string l_init, l_error;
  std::vector<LabeledInstruction> instructions;

  // All locations (pre/target/init/error), sorted and de-duplicated.
  std::vector<std::string> locations() const;
  // Index of each location in locations(); useful as a stable numeric code.
  std::map<std::string, int> location_codes() const;
  // Indices of instructions with the given pre location, in definition order.
  std::vector<int> outgoing(const std::string& loc) const;
  // Index of the instruction (pre -> target), or -1 if absent.
  int edge_at(const std::string& pre, const std::string& target) const;

  bool is_data_var(const std::string& n) const;
  bool is_obj_var(const std::string& n) const;
  bool is_data_field(const std::string& n) const;
  bool is_obj_field(const std::string& n) const;

  // Structural well-formedness: declared names unique, operands declared,
  // at most one instruction per (pre, target), no edge out of l_error,
  // composites heap-free with at most one alloc. Throws ir_error.
  void validate() const;
};

// A control path: a start location plus a sequence of instruction indices,
// each edge's pre matching the previous edge's target.
struct ControlPath {
  std::string start;
  std::vector<int> edges;
};

// Locations visited by the path, length edges.size() + 1.
std::vector<std::string> path_locations(const Program& p, const ControlPath& path);

// Parses the textual IR format; `assert(e)` sugar lowers to the pair
// assume(!e) -> l_error and assume(e) -> fall-through. Throws ir_error.
Program parse_program(const std::string& text);

std::string print_program(const Program& p);

// All control paths from `from` to `to` with at most max_edges edges, in
// lexicographic order of edge indices, truncated to `cap` paths.
std::vector<ControlPath> enumerate_paths(const Program& p,
                                         const std::string& from,
                                         const std::string& to,
                                         std::size_t max_edges,
                                         std::size_t cap = SIZE_MAX);

// Number of such paths (exact, cheap): DP over path length.
std::uint64_t count_paths(const Program& p, const std::string& from,
                          const std::string& to, std::size_t max_edges);

// Merges straight-line chains of heap-free instructions into composites.
// An interior location is merged only if it has in/out degree one, is not
// init/error, is not the target of a back edge, and the merge does not
// duplicate an existing (pre, target) edge or put two allocs in one
// composite. Heap instructions are never merged.
Program coalesce(const Program& p);

// Restricts p to instructions lying on some l_init -> l_error path.
Program prune_to_error(const Program& p);

}  // namespace lttp
