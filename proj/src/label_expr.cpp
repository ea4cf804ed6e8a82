#include "rgt/label_expr.hpp"

#include <stdexcept>

namespace rgt {

std::string_view to_string(VarType t) {
  switch (t) {
    case VarType::List: return "list";
    case VarType::Atom: return "atom";
    case VarType::Int: return "int";
    case VarType::String: return "string";
  }
  return "?";
}

std::optional<VarType> var_type_from_string(std::string_view s) {
  if (s == "list") return VarType::List;
  if (s == "atom") return VarType::Atom;
  if (s == "int") return VarType::Int;
  if (s == "string") return VarType::String;
  return std::nullopt;
}

LabelTerm LabelTerm::constant(Atom a) {
  LabelTerm t;
  t.kind = Kind::Const;
  t.value = std::move(a);
  return t;
}

LabelTerm LabelTerm::variable(int var) {
  LabelTerm t;
  t.kind = Kind::Var;
  t.var = var;
  return t;
}

LabelTerm LabelTerm::sum(std::vector<LabelTerm> operands) {
  LabelTerm t;
  t.kind = Kind::Sum;
  t.operands = std::move(operands);
  return t;
}

bool LabelTerm::operator==(const LabelTerm& o) const {
  return kind == o.kind && value == o.value && var == o.var && operands == o.operands;
}

namespace {

bool is_list_var(const LabelTerm& t, const VarDecls& vars) {
  return t.kind == LabelTerm::Kind::Var && vars[t.var].type == VarType::List;
}

void validate_term(const LabelTerm& t, const VarDecls& vars, bool inside_sum) {
  switch (t.kind) {
    case LabelTerm::Kind::Const:
      if (inside_sum && !is_int(t.value))
        throw std::invalid_argument("sum over a non-integer constant");
      break;
    case LabelTerm::Kind::Var:
      if (t.var < 0 || size_t(t.var) >= vars.size())
        throw std::invalid_argument("variable index out of range");
      if (inside_sum && vars[t.var].type != VarType::Int)
        throw std::invalid_argument("sum over non-int variable " + vars[t.var].name);
      break;
    case LabelTerm::Kind::Sum:
      if (inside_sum) throw std::invalid_argument("nested sums are flattened");
      if (t.operands.size() < 2) throw std::invalid_argument("sum needs two operands");
      for (const LabelTerm& op : t.operands) validate_term(op, vars, true);
      break;
  }
}

// Evaluates an integer term; returns nullopt if a variable is unbound.
std::optional<int64_t> eval_int(const LabelTerm& t, const VarDecls& vars, const Binding& b) {
  if (t.kind == LabelTerm::Kind::Const) return std::get<int64_t>(t.value);
  if (t.kind == LabelTerm::Kind::Var) {
    if (!b.bound(t.var)) return std::nullopt;
    return std::get<int64_t>(b.get(t.var).front());
  }
  int64_t acc = 0;
  for (const LabelTerm& op : t.operands) {
    auto v = eval_int(op, vars, b);
    if (!v) return std::nullopt;
    if (__builtin_add_overflow(acc, *v, &acc)) throw IntOverflow{};
  }
  return acc;
}

// Matches one fixed-arity term against one host atom, extending b.
bool match_term(const LabelTerm& t, const VarDecls& vars, const Atom& a, Binding& b,
                std::vector<int>& newly_bound) {
  switch (t.kind) {
    case LabelTerm::Kind::Const:
      return t.value == a;
    case LabelTerm::Kind::Var: {
      VarType ty = vars[t.var].type;
      if (ty == VarType::Int && !is_int(a)) return false;
      if (ty == VarType::String && !is_string(a)) return false;
      if (b.bound(t.var)) {
        const Label& cur = b.get(t.var);
        return cur.size() == 1 && cur.front() == a;
      }
      b.bind(t.var, Label{a});
      newly_bound.push_back(t.var);
      return true;
    }
    case LabelTerm::Kind::Sum: {
      auto v = eval_int(t, vars, b);
      return v && is_int(a) && std::get<int64_t>(a) == *v;
    }
  }
  return false;
}

}  // namespace

void validate_expr(const LabelExpr& e, const VarDecls& vars) {
  int list_vars = 0;
  for (const LabelTerm& t : e) {
    validate_term(t, vars, false);
    if (is_list_var(t, vars)) ++list_vars;
  }
  if (list_vars > 1)
    throw std::invalid_argument("more than one list variable in a label expression");
}

bool unify_into(const LabelExpr& pattern, const VarDecls& vars, const Label& host,
                Binding& b, std::vector<int>& newly_bound) {
  size_t undo_from = newly_bound.size();
  auto fail = [&]() {
    while (newly_bound.size() > undo_from) {
      b.unbind(newly_bound.back());
      newly_bound.pop_back();
    }
    return false;
  };

  size_t list_pos = pattern.size();
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (is_list_var(pattern[i], vars)) {
      list_pos = i;
      break;
    }
  }

  if (list_pos == pattern.size()) {
    if (host.size() != pattern.size()) return false;
    for (size_t i = 0; i < pattern.size(); ++i)
      if (!match_term(pattern[i], vars, host[i], b, newly_bound)) return fail();
    return true;
  }

  size_t prefix = list_pos;
  size_t suffix = pattern.size() - list_pos - 1;
  if (host.size() < prefix + suffix) return false;
  for (size_t i = 0; i < prefix; ++i)
    if (!match_term(pattern[i], vars, host[i], b, newly_bound)) return fail();
  for (size_t i = 0; i < suffix; ++i) {
    const LabelTerm& t = pattern[list_pos + 1 + i];
    const Atom& a = host[host.size() - suffix + i];
    if (!match_term(t, vars, a, b, newly_bound)) return fail();
  }
  Label middle(host.begin() + prefix, host.end() - suffix);
  int v = pattern[list_pos].var;
  if (b.bound(v)) {
    if (b.get(v) != middle) return fail();
  } else {
    b.bind(v, std::move(middle));
    newly_bound.push_back(v);
  }
  return true;
}

std::optional<Binding> unify(const LabelExpr& pattern, const VarDecls& vars,
                             const Label& host, const Binding& b) {
  Binding out = b;
  std::vector<int> bound;
  if (!unify_into(pattern, vars, host, out, bound)) return std::nullopt;
  return out;
}

Label eval(const LabelExpr& e, const VarDecls& vars, const Binding& b) {
  Label out;
  for (const LabelTerm& t : e) {
    switch (t.kind) {
      case LabelTerm::Kind::Const:
        out.push_back(t.value);
        break;
      case LabelTerm::Kind::Var: {
        if (!b.bound(t.var)) throw UnboundVariable(vars[t.var].name);
        const Label& v = b.get(t.var);
        out.insert(out.end(), v.begin(), v.end());
        break;
      }
      case LabelTerm::Kind::Sum: {
        auto v = eval_int(t, vars, b);
        if (!v) {
          for (const LabelTerm& op : t.operands)
            if (op.kind == LabelTerm::Kind::Var && !b.bound(op.var))
              throw UnboundVariable(vars[op.var].name);
          throw UnboundVariable("?");
        }
        out.push_back(*v);
        break;
      }
    }
  }
  return out;
}

bool is_ground(const LabelExpr& e) {
  for (const LabelTerm& t : e) {
    if (t.kind == LabelTerm::Kind::Var) return false;
    if (t.kind == LabelTerm::Kind::Sum)
      for (const LabelTerm& op : t.operands)
        if (op.kind != LabelTerm::Kind::Const) return false;
  }
  return true;
}

namespace {
std::string term_to_string(const LabelTerm& t, const VarDecls& vars) {
  switch (t.kind) {
    case LabelTerm::Kind::Const:
      return to_string(t.value);
    case LabelTerm::Kind::Var:
      return vars[t.var].name;
    case LabelTerm::Kind::Sum: {
      std::string out;
      for (size_t i = 0; i < t.operands.size(); ++i) {
        if (i) out += "+";
        out += term_to_string(t.operands[i], vars);
      }
      return out;
    }
  }
  return "?";
}
}  // namespace

std::string to_string(const LabelExpr& e, const VarDecls& vars) {
  if (e.empty()) return "empty";
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) out += ":";
    out += term_to_string(e[i], vars);
  }
  return out;
}

}  // namespace rgt
