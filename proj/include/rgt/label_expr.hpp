#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgt/errors.hpp"
#include "rgt/label.hpp"

namespace rgt {

// Int and String are subtypes of Atom, Atom of List. List-typed variables may
// expand to any number of atoms; the other types consume exactly one.
enum class VarType : uint8_t { List, Atom, Int, String };

std::string_view to_string(VarType t);
std::optional<VarType> var_type_from_string(std::string_view s);

struct VarDecl {
  std::string name;
  VarType type;
  bool operator==(const VarDecl&) const = default;
};
using VarDecls = std::vector<VarDecl>;

/// One term of a label expression. An expression is a `:`-joined sequence of
/// terms; evaluation flattens List variables into the result.
struct LabelTerm {
  enum class Kind : uint8_t { Const, Var, Sum };
  Kind kind = Kind::Const;
  Atom value = int64_t{0};          // Const
  int var = -1;                     // Var: index into the rule's VarDecls
  std::vector<LabelTerm> operands;  // Sum: integer summands (Const or Var)

  static LabelTerm constant(Atom a);
  static LabelTerm variable(int var);
  static LabelTerm sum(std::vector<LabelTerm> operands);

  bool operator==(const LabelTerm&) const;
};

using LabelExpr = std::vector<LabelTerm>;

/// Variable assignment; slot i belongs to VarDecls[i]. Atom-typed variables
/// hold singleton labels.
class Binding {
 public:
  Binding() = default;
  explicit Binding(size_t nvars) : slots_(nvars) {}

  size_t size() const { return slots_.size(); }
  bool bound(int var) const { return slots_[var].has_value(); }
  const Label& get(int var) const { return *slots_[var]; }
  void bind(int var, Label value) { slots_[var] = std::move(value); }
  void unbind(int var) { slots_[var].reset(); }
  bool operator==(const Binding&) const = default;

 private:
  std::vector<std::optional<Label>> slots_;
};

/// Checks the structural rules: at most one List-typed variable per
/// expression, sums only over Int-typed subexpressions, variable indices in
/// range. Throws std::invalid_argument on violation.
void validate_expr(const LabelExpr& e, const VarDecls& vars);

/// Extends `b` in place so that eval(pattern, b) == host, recording every
/// newly bound variable in `newly_bound`. On failure the binding is left
/// exactly as it was and false is returned. Deterministic: the single List
/// variable absorbs the residual after all fixed-arity terms are matched
/// positionally from both ends.
bool unify_into(const LabelExpr& pattern, const VarDecls& vars, const Label& host,
                Binding& b, std::vector<int>& newly_bound);

/// Functional form of unify_into.
std::optional<Binding> unify(const LabelExpr& pattern, const VarDecls& vars,
                             const Label& host, const Binding& b);

/// Evaluates a label expression to a ground label. Concatenation flattens;
/// integer sums are checked for 64-bit overflow.
Label eval(const LabelExpr& e, const VarDecls& vars, const Binding& b);

bool is_ground(const LabelExpr& e);

/// Renders the expression in rule syntax, e.g. "x:n+1" or "empty".
std::string to_string(const LabelExpr& e, const VarDecls& vars);

}  // namespace rgt
