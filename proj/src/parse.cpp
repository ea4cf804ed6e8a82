#include "rgt/parse.hpp"

#include <cctype>
#include <map>
#include <set>

namespace rgt {

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.col) + ": " + d.message;
}

namespace {

struct Token {
  enum class Kind { Ident, Int, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int64_t int_value = 0;
  int line = 1, col = 1;

  bool is_punct(std::string_view p) const { return kind == Kind::Punct && text == p; }
  bool is_ident(std::string_view s) const { return kind == Kind::Ident && text == s; }
};

struct Abort {};

struct Lexer {
  std::string_view src;
  size_t pos = 0;
  int line = 1, col = 1;
  Diagnostics& diags;

  void bump() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_space() {
    while (pos < src.size()) {
      if (std::isspace(uint8_t(src[pos]))) {
        bump();
      } else if (src[pos] == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
        while (pos < src.size() && src[pos] != '\n') bump();
      } else {
        break;
      }
    }
  }

  Token make(Token::Kind k, int l, int c) {
    Token t;
    t.kind = k;
    t.line = l;
    t.col = c;
    return t;
  }

  [[noreturn]] void fail(int l, int c, std::string msg) {
    diags.push_back({l, c, std::move(msg)});
    throw Abort{};
  }

  Token next() {
    skip_space();
    int l = line, c = col;
    if (pos >= src.size()) return make(Token::Kind::End, l, c);
    char ch = src[pos];
    if (std::isalpha(uint8_t(ch)) || ch == '_') {
      Token t = make(Token::Kind::Ident, l, c);
      while (pos < src.size() && (std::isalnum(uint8_t(src[pos])) || src[pos] == '_')) {
        t.text.push_back(src[pos]);
        bump();
      }
      return t;
    }
    if (std::isdigit(uint8_t(ch)) ||
        (ch == '-' && pos + 1 < src.size() && std::isdigit(uint8_t(src[pos + 1])))) {
      Token t = make(Token::Kind::Int, l, c);
      std::string digits;
      if (ch == '-') {
        digits.push_back('-');
        bump();
      }
      while (pos < src.size() && std::isdigit(uint8_t(src[pos]))) {
        digits.push_back(src[pos]);
        bump();
      }
      try {
        t.int_value = std::stoll(digits);
      } catch (const std::out_of_range&) {
        fail(l, c, "integer literal out of 64-bit range");
      }
      t.text = digits;
      return t;
    }
    if (ch == '"') {
      Token t = make(Token::Kind::String, l, c);
      bump();
      for (;;) {
        if (pos >= src.size() || src[pos] == '\n') fail(l, c, "unterminated string literal");
        char d = src[pos];
        if (d == '"') {
          bump();
          break;
        }
        if (d == '\\') {
          bump();
          if (pos >= src.size()) fail(l, c, "unterminated string literal");
          char e = src[pos];
          if (e != '"' && e != '\\') fail(line, col, "unknown escape in string literal");
          t.text.push_back(e);
          bump();
          continue;
        }
        t.text.push_back(d);
        bump();
      }
      return t;
    }
    if (ch == '=' && pos + 1 < src.size() && src[pos + 1] == '>') {
      Token t = make(Token::Kind::Punct, l, c);
      t.text = "=>";
      bump();
      bump();
      return t;
    }
    static const std::string singles = "()[]{}|,;:#!=+";
    if (singles.find(ch) != std::string::npos) {
      Token t = make(Token::Kind::Punct, l, c);
      t.text = std::string(1, ch);
      bump();
      return t;
    }
    fail(l, c, std::string("unexpected character '") + ch + "'");
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;
  Diagnostics& diags;

  Parser(std::string_view text, Diagnostics& out) : diags(out) {
    Lexer lx{text, 0, 1, 1, diags};
    for (;;) {
      Token t = lx.next();
      bool end = t.kind == Token::Kind::End;
      toks.push_back(std::move(t));
      if (end) break;
    }
  }

  const Token& peek(size_t k = 0) const {
    size_t i = at + k;
    return i < toks.size() ? toks[i] : toks.back();
  }
  Token take() {
    Token t = peek();
    if (at + 1 < toks.size()) ++at;
    return t;
  }
  bool eat_punct(std::string_view p) {
    if (peek().is_punct(p)) {
      take();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const Token& t, std::string msg) {
    diags.push_back({t.line, t.col, std::move(msg)});
    throw Abort{};
  }
  void expect_punct(std::string_view p) {
    if (!eat_punct(p)) fail(peek(), "expected '" + std::string(p) + "'");
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) fail(peek(), std::string("expected ") + what);
    return take().text;
  }
  // item identifiers may be plain idents or bare integers ("1", "e0")
  std::string expect_item_id() {
    if (peek().kind == Token::Kind::Ident || peek().kind == Token::Kind::Int)
      return take().text;
    fail(peek(), "expected an identifier");
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
};

// -- host graphs -----------------------------------------------------------------

Atom parse_ground_atom(Parser& p) {
  if (p.peek().kind == Token::Kind::Int) return Atom{p.take().int_value};
  if (p.peek().kind == Token::Kind::String) return Atom{p.take().text};
  p.fail(p.peek(), "expected an integer or string atom");
}

Label parse_ground_label(Parser& p) {
  if (p.peek().is_ident("empty")) {
    p.take();
    return {};
  }
  Label out;
  out.push_back(parse_ground_atom(p));
  while (p.eat_punct(":")) out.push_back(parse_ground_atom(p));
  return out;
}

NodeMark parse_host_node_mark(Parser& p) {
  Token t = p.peek();
  std::string name = p.expect_ident("a mark name");
  auto m = node_mark_from_string(name);
  if (!m || *m == NodeMark::Unmarked) p.fail(t, "unknown node mark '" + name + "'");
  return *m;
}

EdgeMark parse_host_edge_mark(Parser& p) {
  Token t = p.peek();
  std::string name = p.expect_ident("a mark name");
  auto m = edge_mark_from_string(name);
  if (!m || *m == EdgeMark::Unmarked) p.fail(t, "unknown edge mark '" + name + "'");
  return *m;
}

HostGraph parse_host_body(Parser& p, Backend backend) {
  HostGraph g(backend);
  p.expect_punct("[");
  std::map<std::string, NodeId> node_ids;
  while (!p.peek().is_punct("|")) {
    Token open = p.peek();
    p.expect_punct("(");
    Token id_tok = p.peek();
    std::string id = p.expect_item_id();
    bool rooted = false;
    if (p.eat_punct("(")) {
      std::string flag = p.expect_ident("a root flag");
      if (flag != "R") p.fail(id_tok, "unknown node flag '" + flag + "'");
      p.expect_punct(")");
      rooted = true;
    }
    p.expect_punct(",");
    Label label = parse_ground_label(p);
    NodeMark mark = NodeMark::Unmarked;
    if (p.eat_punct("#")) mark = parse_host_node_mark(p);
    p.expect_punct(")");
    if (node_ids.count(id)) p.fail(id_tok, "duplicate node id '" + id + "'");
    node_ids.emplace(id, g.add_node(std::move(label), mark, rooted));
    (void)open;
  }
  p.expect_punct("|");
  std::set<std::string> edge_ids;
  while (!p.peek().is_punct("]")) {
    p.expect_punct("(");
    Token id_tok = p.peek();
    std::string id = p.expect_item_id();
    p.expect_punct(",");
    Token src_tok = p.peek();
    std::string src = p.expect_item_id();
    p.expect_punct(",");
    Token tgt_tok = p.peek();
    std::string tgt = p.expect_item_id();
    p.expect_punct(",");
    Label label = parse_ground_label(p);
    EdgeMark mark = EdgeMark::Unmarked;
    if (p.eat_punct("#")) mark = parse_host_edge_mark(p);
    p.expect_punct(")");
    if (!edge_ids.insert(id).second) p.fail(id_tok, "duplicate edge id '" + id + "'");
    auto s = node_ids.find(src);
    if (s == node_ids.end()) p.fail(src_tok, "unknown source node '" + src + "'");
    auto t = node_ids.find(tgt);
    if (t == node_ids.end()) p.fail(tgt_tok, "unknown target node '" + tgt + "'");
    g.add_edge(s->second, t->second, std::move(label), mark);
  }
  p.expect_punct("]");
  if (!p.at_end()) p.fail(p.peek(), "trailing input after graph");
  return g;
}

// -- rules -----------------------------------------------------------------------

VarDecls parse_var_decls(Parser& p) {
  VarDecls out;
  if (p.peek().is_punct(")")) return out;
  std::vector<std::string> pending;
  for (;;) {
    Token name_tok = p.peek();
    std::string name = p.expect_ident("a variable name");
    if (name == "empty") p.fail(name_tok, "'empty' is reserved");
    pending.push_back(name);
    if (p.eat_punct(",")) continue;
    p.expect_punct(":");
    Token type_tok = p.peek();
    std::string type_name = p.expect_ident("a variable type");
    auto type = var_type_from_string(type_name);
    if (!type) p.fail(type_tok, "unknown variable type '" + type_name + "'");
    for (std::string& v : pending) {
      for (const VarDecl& d : out)
        if (d.name == v) p.fail(name_tok, "duplicate variable '" + v + "'");
      out.push_back({std::move(v), *type});
    }
    pending.clear();
    if (p.eat_punct(",")) continue;
    break;
  }
  return out;
}

LabelTerm parse_summand(Parser& p, const VarDecls& vars) {
  if (p.peek().kind == Token::Kind::Int) return LabelTerm::constant(p.take().int_value);
  if (p.peek().kind == Token::Kind::String) return LabelTerm::constant(p.take().text);
  Token t = p.peek();
  std::string name = p.expect_ident("a label term");
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name == name) return LabelTerm::variable(int(i));
  p.fail(t, "undeclared variable '" + name + "'");
}

LabelTerm parse_term(Parser& p, const VarDecls& vars) {
  LabelTerm first = parse_summand(p, vars);
  if (!p.peek().is_punct("+")) return first;
  std::vector<LabelTerm> operands{std::move(first)};
  while (p.eat_punct("+")) operands.push_back(parse_summand(p, vars));
  return LabelTerm::sum(std::move(operands));
}

LabelExpr parse_label_expr(Parser& p, const VarDecls& vars) {
  if (p.peek().is_ident("empty")) {
    p.take();
    return {};
  }
  LabelExpr out;
  out.push_back(parse_term(p, vars));
  while (p.eat_punct(":")) out.push_back(parse_term(p, vars));
  return out;
}

RuleGraph parse_rule_graph(Parser& p, const VarDecls& vars) {
  RuleGraph g;
  p.expect_punct("[");
  while (!p.peek().is_punct("|")) {
    p.expect_punct("(");
    RuleNode n;
    Token id_tok = p.peek();
    n.id = p.expect_item_id();
    if (p.eat_punct("(")) {
      std::string flag = p.expect_ident("a node flag");
      if (flag != "R") p.fail(id_tok, "unknown node flag '" + flag + "'");
      p.expect_punct(")");
      n.rooted = true;
    }
    p.expect_punct(",");
    n.label = parse_label_expr(p, vars);
    n.mark = NodeMark::Unmarked;
    if (p.eat_punct("#")) {
      Token t = p.peek();
      std::string name = p.expect_ident("a mark name");
      if (name == "any") {
        n.mark = std::nullopt;
      } else {
        auto m = node_mark_from_string(name);
        if (!m || *m == NodeMark::Unmarked) p.fail(t, "unknown node mark '" + name + "'");
        n.mark = *m;
      }
    }
    p.expect_punct(")");
    g.nodes.push_back(std::move(n));
  }
  p.expect_punct("|");
  while (!p.peek().is_punct("]")) {
    p.expect_punct("(");
    RuleEdge e;
    Token id_tok = p.peek();
    e.id = p.expect_item_id();
    if (p.eat_punct("(")) {
      std::string flag = p.expect_ident("an edge flag");
      if (flag != "B") p.fail(id_tok, "unknown edge flag '" + flag + "'");
      p.expect_punct(")");
      e.directed = false;
    }
    p.expect_punct(",");
    e.src = p.expect_item_id();
    p.expect_punct(",");
    e.tgt = p.expect_item_id();
    p.expect_punct(",");
    e.label = parse_label_expr(p, vars);
    e.mark = EdgeMark::Unmarked;
    if (p.eat_punct("#")) {
      Token t = p.peek();
      std::string name = p.expect_ident("a mark name");
      if (name == "any") {
        e.mark = std::nullopt;
      } else {
        auto m = edge_mark_from_string(name);
        if (!m || *m == EdgeMark::Unmarked) p.fail(t, "unknown edge mark '" + name + "'");
        e.mark = *m;
      }
    }
    p.expect_punct(")");
    g.edges.push_back(std::move(e));
  }
  p.expect_punct("]");
  return g;
}

Rule parse_one_rule(Parser& p) {
  Rule r;
  Token head = p.peek();
  r.name = p.expect_ident("a rule name");
  p.expect_punct("(");
  r.vars = parse_var_decls(p);
  p.expect_punct(")");
  r.lhs = parse_rule_graph(p, r.vars);
  p.expect_punct("=>");
  r.rhs = parse_rule_graph(p, r.vars);
  if (!p.peek().is_ident("interface")) p.fail(p.peek(), "expected 'interface'");
  p.take();
  p.expect_punct("{");
  if (!p.peek().is_punct("}")) {
    r.interface.push_back(p.expect_item_id());
    while (p.eat_punct(",")) r.interface.push_back(p.expect_item_id());
  }
  p.expect_punct("}");
  try {
    validate_rule(r);
  } catch (const std::invalid_argument& e) {
    p.diags.push_back({head.line, head.col, e.what()});
    throw Abort{};
  }
  return r;
}

// -- programs --------------------------------------------------------------------

struct ProgramParser {
  Parser& p;
  std::vector<Token> breaks;

  Command parse_cmd() {
    std::vector<Command> items;
    items.push_back(parse_atom());
    while (p.eat_punct(";")) items.push_back(parse_atom());
    return Command::seq(std::move(items));
  }

  Command parse_atom() {
    Command c = parse_primary();
    while (p.eat_punct("!")) c = Command::loop(std::move(c));
    return c;
  }

  Command parse_primary() {
    const Token& t = p.peek();
    if (t.is_punct("(")) {
      p.take();
      Command c = parse_cmd();
      p.expect_punct(")");
      return c;
    }
    if (t.is_punct("{")) {
      p.take();
      std::vector<std::string> names;
      names.push_back(p.expect_ident("a rule name"));
      while (p.eat_punct(",")) names.push_back(p.expect_ident("a rule name"));
      p.expect_punct("}");
      return Command::rule_call(std::move(names));
    }
    if (t.kind != Token::Kind::Ident) p.fail(t, "expected a command");
    if (t.text == "break") {
      breaks.push_back(p.take());
      return Command::brk();
    }
    if (t.text == "skip") {
      p.take();
      return Command::skip();
    }
    if (t.text == "fail") {
      p.take();
      return Command::fail();
    }
    if (t.text == "try") {
      p.take();
      Command cond = parse_atom();
      Command then = Command::skip();
      Command els = Command::skip();
      if (p.peek().is_ident("then")) {
        p.take();
        then = parse_atom();
      }
      if (p.peek().is_ident("else")) {
        p.take();
        els = parse_atom();
      }
      return Command::try_else(std::move(cond), std::move(then), std::move(els));
    }
    if (t.text == "if") {
      p.take();
      Command cond = parse_atom();
      if (!p.peek().is_ident("then")) p.fail(p.peek(), "expected 'then'");
      p.take();
      Command then = parse_atom();
      Command els = Command::skip();
      if (p.peek().is_ident("else")) {
        p.take();
        els = parse_atom();
      }
      return Command::if_then(std::move(cond), std::move(then), std::move(els));
    }
    if (t.text == "then" || t.text == "else" || t.text == "interface")
      p.fail(t, "expected a command");
    // bare name: resolved to a procedure call or rule call after all
    // declarations are known
    return Command::call(p.take().text);
  }
};

void resolve_names(Command& c, const std::set<std::string>& procs) {
  if (c.kind == Command::Kind::Call && !procs.count(c.name)) {
    c = Command::rule_call({c.name});
    return;
  }
  for (Command& ch : c.children) resolve_names(ch, procs);
}

Program parse_program_body(Parser& p) {
  Program prog;
  ProgramParser pp{p, {}};
  std::map<std::string, Token> decl_pos;
  while (!p.at_end()) {
    Token name_tok = p.peek();
    std::string name = p.expect_ident("a procedure name");
    p.expect_punct("=");
    Command body = pp.parse_cmd();
    if (prog.procedures.count(name))
      p.fail(name_tok, "duplicate declaration of '" + name + "'");
    prog.procedures.emplace(name, std::move(body));
    decl_pos.emplace(name, name_tok);
  }
  if (!prog.procedures.count("Main")) {
    p.diags.push_back({1, 1, "program has no Main"});
    throw Abort{};
  }
  std::set<std::string> proc_names;
  for (auto& [n, b] : prog.procedures) proc_names.insert(n);
  for (auto& [n, b] : prog.procedures) resolve_names(b, proc_names);
  if (program_may_escape_break(prog)) {
    Token where = pp.breaks.empty() ? decl_pos.at("Main") : pp.breaks.front();
    p.diags.push_back({where.line, where.col, "break outside any loop"});
    throw Abort{};
  }
  return prog;
}

}  // namespace

ParseResult<HostGraph> parse_host_graph(std::string_view text, Backend backend) {
  ParseResult<HostGraph> out;
  try {
    Parser p(text, out.diags);
    out.value = parse_host_body(p, backend);
  } catch (Abort&) {
    out.value.reset();
  }
  return out;
}

ParseResult<std::vector<Rule>> parse_rules(std::string_view text) {
  ParseResult<std::vector<Rule>> out;
  try {
    Parser p(text, out.diags);
    std::vector<Rule> rules;
    while (!p.at_end()) rules.push_back(parse_one_rule(p));
    out.value = std::move(rules);
  } catch (Abort&) {
    out.value.reset();
  }
  return out;
}

ParseResult<Rule> parse_rule(std::string_view text) {
  auto rs = parse_rules(text);
  ParseResult<Rule> out;
  out.diags = std::move(rs.diags);
  if (rs.value && rs.value->size() == 1) {
    out.value = std::move(rs.value->front());
  } else if (rs.value) {
    out.diags.push_back({1, 1, "expected exactly one rule"});
  }
  return out;
}

ParseResult<Program> parse_program(std::string_view text) {
  ParseResult<Program> out;
  try {
    Parser p(text, out.diags);
    out.value = parse_program_body(p);
  } catch (Abort&) {
    out.value.reset();
  }
  return out;
}

// -- printers --------------------------------------------------------------------

namespace {

std::string mark_suffix(NodeMark m) {
  if (m == NodeMark::Unmarked) return "";
  return " # " + std::string(to_string(m));
}

std::string mark_suffix(EdgeMark m) {
  if (m == EdgeMark::Unmarked) return "";
  return " # " + std::string(to_string(m));
}

std::string mark_suffix(const NodeMarkPattern& m) {
  if (!m) return " # any";
  return mark_suffix(*m);
}

std::string mark_suffix(const EdgeMarkPattern& m) {
  if (!m) return " # any";
  return mark_suffix(*m);
}

std::string rule_graph_str(const RuleGraph& g, const VarDecls& vars) {
  std::string out = "[";
  for (const RuleNode& n : g.nodes) {
    out += " (" + n.id + (n.rooted ? "(R)" : "") + ", " + to_string(n.label, vars) +
           mark_suffix(n.mark) + ")";
  }
  out += " |";
  for (const RuleEdge& e : g.edges) {
    out += " (" + e.id + (e.directed ? "" : "(B)") + ", " + e.src + ", " + e.tgt + ", " +
           to_string(e.label, vars) + mark_suffix(e.mark) + ")";
  }
  out += " ]";
  return out;
}

std::string var_decls_str(const VarDecls& vars) {
  std::string out;
  for (size_t i = 0; i < vars.size();) {
    size_t j = i;
    while (j < vars.size() && vars[j].type == vars[i].type) ++j;
    if (i) out += ", ";
    for (size_t k = i; k < j; ++k) {
      if (k > i) out += ",";
      out += vars[k].name;
    }
    out += ":";
    out += to_string(vars[i].type);
    i = j;
  }
  return out;
}

bool prints_as_atom(const Command& c) {
  switch (c.kind) {
    case Command::Kind::RuleCall:
    case Command::Kind::Call:
    case Command::Kind::Loop:
    case Command::Kind::Break:
    case Command::Kind::Skip:
    case Command::Kind::Fail:
      return true;
    default:
      return false;
  }
}

std::string cmd_str(const Command& c);

std::string atom_str(const Command& c) {
  switch (c.kind) {
    case Command::Kind::RuleCall:
      if (c.rules.size() == 1) return c.rules[0];
      else {
        std::string out = "{";
        for (size_t i = 0; i < c.rules.size(); ++i) {
          if (i) out += ", ";
          out += c.rules[i];
        }
        return out + "}";
      }
    case Command::Kind::Call:
      return c.name;
    case Command::Kind::Loop:
      return (prints_as_atom(c.body()) ? atom_str(c.body())
                                       : "(" + cmd_str(c.body()) + ")") +
             "!";
    case Command::Kind::Break:
      return "break";
    case Command::Kind::Skip:
      return "skip";
    case Command::Kind::Fail:
      return "fail";
    default:
      return "(" + cmd_str(c) + ")";
  }
}

std::string cmd_str(const Command& c) {
  switch (c.kind) {
    case Command::Kind::Seq: {
      std::string out;
      for (size_t i = 0; i < c.children.size(); ++i) {
        if (i) out += "; ";
        const Command& ch = c.children[i];
        out += (ch.kind == Command::Kind::Try || ch.kind == Command::Kind::If)
                   ? cmd_str(ch)
                   : atom_str(ch);
      }
      return out;
    }
    case Command::Kind::Try: {
      std::string out = "try " + atom_str(c.cond());
      if (!(c.then_branch() == Command::skip())) out += " then " + atom_str(c.then_branch());
      if (!(c.else_branch() == Command::skip())) out += " else " + atom_str(c.else_branch());
      return out;
    }
    case Command::Kind::If: {
      std::string out = "if " + atom_str(c.cond()) + " then " + atom_str(c.then_branch());
      if (!(c.else_branch() == Command::skip())) out += " else " + atom_str(c.else_branch());
      return out;
    }
    default:
      return atom_str(c);
  }
}

}  // namespace

std::string print_host_graph(const HostGraph& g) {
  std::string out = "[\n";
  for (NodeId n : g.nodes()) {
    out += "  (n" + std::to_string(n.index) + (g.is_rooted(n) ? "(R)" : "") + ", " +
           to_string(g.get_label(n)) + mark_suffix(g.get_mark(n)) + ")\n";
  }
  out += "  |\n";
  for (EdgeId e : g.edges()) {
    out += "  (e" + std::to_string(e.index) + ", n" + std::to_string(g.get_source(e).index) +
           ", n" + std::to_string(g.get_target(e).index) + ", " + to_string(g.get_label(e)) +
           mark_suffix(g.get_mark(e)) + ")\n";
  }
  out += "]\n";
  return out;
}

std::string print_rule(const Rule& r) {
  return r.name + "(" + var_decls_str(r.vars) + ")\n" + rule_graph_str(r.lhs, r.vars) +
         "\n  => " + rule_graph_str(r.rhs, r.vars) + "\n  interface {" +
         [&] {
           std::string out;
           for (size_t i = 0; i < r.interface.size(); ++i) {
             if (i) out += ", ";
             out += r.interface[i];
           }
           return out;
         }() +
         "}\n";
}

std::string print_rules(const std::vector<Rule>& rules) {
  std::string out;
  for (size_t i = 0; i < rules.size(); ++i) {
    if (i) out += "\n";
    out += print_rule(rules[i]);
  }
  return out;
}

std::string print_program(const Program& p) {
  std::string out;
  auto emit = [&](const std::string& name, const Command& c) {
    out += name + " = " + cmd_str(c) + "\n";
  };
  auto main = p.procedures.find("Main");
  if (main != p.procedures.end()) emit("Main", main->second);
  for (const auto& [name, c] : p.procedures)
    if (name != "Main") emit(name, c);
  return out;
}

}  // namespace rgt
