#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gmosa/minilang/ast.hpp"
#include "gmosa/minilang/parser.hpp"

namespace gmosa::minilang {

// --- Setter / accessor heuristic -------------------------------------------
//
// A method name decomposes as <prefix><keyword><suffix>. The keyword appears
// lowercase when the prefix is empty (setValue) and capitalized otherwise
// (jjtSetParent); the character following it, if any, must be uppercase or a
// digit so that names like "settle" do not match. A set/put method is a setter
// iff the get-counterpart with the same prefix and suffix exists.

namespace detail {

inline std::string keyword_form(std::string_view keyword, bool prefix_empty) {
  std::string form(keyword);
  if (!prefix_empty) form[0] = static_cast<char>(std::toupper(form[0]));
  return form;
}

inline bool boundary_ok(std::string_view name, std::size_t after) {
  if (after >= name.size()) return true;
  unsigned char c = static_cast<unsigned char>(name[after]);
  return std::isupper(c) || std::isdigit(c);
}

// All (prefix, suffix) splits of `name` around `keyword`.
inline std::vector<std::pair<std::string, std::string>> keyword_splits(
    const std::string& name, std::string_view keyword) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i + keyword.size() <= name.size(); ++i) {
    std::string form = keyword_form(keyword, i == 0);
    if (name.compare(i, form.size(), form) != 0) continue;
    if (!boundary_ok(name, i + form.size())) continue;
    out.emplace_back(name.substr(0, i), name.substr(i + form.size()));
  }
  return out;
}

}  // namespace detail

inline std::vector<std::string> detect_setters(const std::vector<std::string>& method_names) {
  std::set<std::string> names(method_names.begin(), method_names.end());
  std::set<std::string> setters;
  for (const auto& name : method_names) {
    for (std::string_view kw : {std::string_view("set"), std::string_view("put")}) {
      for (const auto& [prefix, suffix] : detail::keyword_splits(name, kw)) {
        std::string counterpart =
            prefix + detail::keyword_form("get", prefix.empty()) + suffix;
        if (names.count(counterpart)) {
          setters.insert(name);
        }
      }
    }
  }
  return {setters.begin(), setters.end()};
}

inline std::vector<std::string> detect_accessors(const std::vector<std::string>& method_names) {
  std::set<std::string> accessors;
  for (const auto& name : method_names) {
    if (!detail::keyword_splits(name, "get").empty()) accessors.insert(name);
  }
  return {accessors.begin(), accessors.end()};
}

inline std::vector<std::string> detect_setters(const CutClass& cut) {
  std::vector<std::string> names;
  for (const auto& m : cut.members)
    if (!m.is_ctor) names.push_back(m.name);
  return detect_setters(names);
}

// --- Target enumeration -----------------------------------------------------
//
// Entry targets in member declaration order, then predicate branches in
// (predicate id, true-before-false) order.

inline std::vector<BranchTarget> enumerate_targets(const CutClass& cut) {
  std::vector<BranchTarget> out;
  for (const auto& m : cut.members) {
    BranchTarget t;
    t.id = static_cast<int>(out.size());
    t.kind = BranchTarget::Kind::Entry;
    t.member_index = m.index;
    out.push_back(t);
  }
  for (const auto& p : cut.predicates) {
    for (bool outcome : {true, false}) {
      BranchTarget t;
      t.id = static_cast<int>(out.size());
      t.kind = BranchTarget::Kind::Branch;
      t.predicate_id = p.id;
      t.outcome = outcome;
      out.push_back(t);
    }
  }
  return out;
}

// Control-dependence chain from the method entry down to the target's
// predicate, excluding the predicate itself. Empty for entry targets and
// top-level predicates.
inline std::vector<std::pair<int, bool>> control_parent_chain(const CutClass& cut,
                                                              const BranchTarget& target) {
  std::vector<std::pair<int, bool>> chain;
  if (target.kind == BranchTarget::Kind::Entry) return chain;
  int pred = target.predicate_id;
  auto parent = cut.predicates[pred].control_parent;
  while (parent) {
    chain.push_back(*parent);
    parent = cut.predicates[parent->first].control_parent;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

inline std::string describe_target(const CutClass& cut, const BranchTarget& t) {
  if (t.kind == BranchTarget::Kind::Entry) {
    const Member& m = cut.members[t.member_index];
    return std::string("entry ") + (m.is_ctor ? "constructor " : "method ") + m.name;
  }
  const PredicateSite& p = cut.predicates[t.predicate_id];
  return "branch p" + std::to_string(p.id) + ":" + (t.outcome ? "true" : "false") +
         " in " + p.method;
}

// --- Type checker -----------------------------------------------------------

namespace detail {

class Checker {
 public:
  explicit Checker(CutClass& cut) : cut_(cut) {}

  void run() {
    check_unique_names();
    for (auto& m : cut_.members) check_member(m);
    finalize();
  }

 private:
  void check_unique_names() {
    std::set<std::string> field_names;
    for (const auto& f : cut_.fields) {
      if (!field_names.insert(f.name).second)
        throw CompileError(CompileError::Kind::Type, {}, "duplicate field name '" + f.name + "'");
    }
    std::set<std::string> method_names;
    for (const auto& m : cut_.members) {
      if (m.is_ctor) continue;
      if (!method_names.insert(m.name).second)
        throw CompileError(CompileError::Kind::Type, m.pos,
                           "duplicate method name '" + m.name + "'");
    }
  }

  void check_member(Member& m) {
    scope_.clear();
    slot_types_.clear();
    for (const auto& p : m.params) {
      if (scope_.count(p.name))
        throw CompileError(CompileError::Kind::Type, m.pos,
                           "duplicate parameter name '" + p.name + "'");
      scope_[p.name] = static_cast<int>(slot_types_.size());
      slot_types_.push_back(p.type);
    }
    current_ = &m;
    parent_stack_.clear();
    check_block(m.body);
    m.local_slot_count = static_cast<int>(slot_types_.size());
    m.slot_types = slot_types_;
    if (!m.is_ctor && m.return_type != Type::Void && !block_returns(m.body))
      throw CompileError(CompileError::Kind::Type, m.pos,
                         "method '" + m.name + "' may end without returning a value");
  }

  static bool block_returns(const std::vector<StmtPtr>& block) {
    for (const auto& s : block) {
      switch (s->kind) {
        case Stmt::Kind::Return:
          return true;
        case Stmt::Kind::If:
          if (!s->else_block.empty() && block_returns(s->then_block) &&
              block_returns(s->else_block))
            return true;
          break;
        default:
          break;
      }
    }
    return false;
  }

  void check_block(std::vector<StmtPtr>& block) {
    for (auto& s : block) check_stmt(*s);
  }

  void check_stmt(Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::Declare: {
        if (scope_.count(s.name))
          throw CompileError(CompileError::Kind::Type, s.pos,
                             "duplicate variable '" + s.name + "'");
        if (s.expr) {
          Type t = check_expr(*s.expr);
          if (t != s.decl_type)
            throw CompileError(CompileError::Kind::Type, s.pos,
                               "initializer type mismatch for '" + s.name + "'");
        }
        s.slot = static_cast<int>(slot_types_.size());
        scope_[s.name] = s.slot;
        slot_types_.push_back(s.decl_type);
        return;
      }
      case Stmt::Kind::Assign: {
        Type value = check_expr(*s.expr);
        auto it = scope_.find(s.name);
        if (it != scope_.end()) {
          s.slot = it->second;
          s.field_target = false;
          if (slot_types_[s.slot] != value)
            throw CompileError(CompileError::Kind::Type, s.pos,
                               "assignment type mismatch for '" + s.name + "'");
          return;
        }
        int f = cut_.field_index(s.name);
        if (f < 0)
          throw CompileError(CompileError::Kind::Type, s.pos,
                             "undeclared variable '" + s.name + "'");
        s.slot = f;
        s.field_target = true;
        if (cut_.fields[f].type != value)
          throw CompileError(CompileError::Kind::Type, s.pos,
                             "assignment type mismatch for field '" + s.name + "'");
        return;
      }
      case Stmt::Kind::If:
      case Stmt::Kind::While: {
        Type c = check_expr(*s.expr);
        if (c != Type::Bool)
          throw CompileError(CompileError::Kind::Type, s.pos, "condition must be bool");
        PredicateSite site;
        site.id = static_cast<int>(cut_.predicates.size());
        site.member_index = current_->index;
        site.method = current_->name;
        site.comparison = classify_predicate(*s.expr);
        if (!parent_stack_.empty()) site.control_parent = parent_stack_.back();
        s.predicate_id = site.id;
        cut_.predicates.push_back(site);
        parent_stack_.push_back({site.id, true});
        check_block(s.then_block);
        parent_stack_.pop_back();
        if (s.kind == Stmt::Kind::If && !s.else_block.empty()) {
          parent_stack_.push_back({site.id, false});
          check_block(s.else_block);
          parent_stack_.pop_back();
        }
        return;
      }
      case Stmt::Kind::Return: {
        Type expected = current_->is_ctor ? Type::Void : current_->return_type;
        if (expected == Type::Void) {
          if (s.expr)
            throw CompileError(CompileError::Kind::Type, s.pos,
                               "void member cannot return a value");
        } else {
          if (!s.expr)
            throw CompileError(CompileError::Kind::Type, s.pos, "return value required");
          Type t = check_expr(*s.expr);
          if (t != expected)
            throw CompileError(CompileError::Kind::Type, s.pos, "return type mismatch");
        }
        return;
      }
      case Stmt::Kind::ExprStmt:
        check_expr(*s.expr);
        return;
    }
  }

  static PredKind classify_predicate(const Expr& cond) {
    if (cond.kind == Expr::Kind::Binary) {
      switch (cond.bin_op) {
        case BinOp::Eq: return PredKind::Eq;
        case BinOp::Ne: return PredKind::Ne;
        case BinOp::Lt: return PredKind::Lt;
        case BinOp::Le: return PredKind::Le;
        case BinOp::Gt: return PredKind::Gt;
        case BinOp::Ge: return PredKind::Ge;
        case BinOp::And: return PredKind::And;
        case BinOp::Or: return PredKind::Or;
        default: return PredKind::Boolean;
      }
    }
    if (cond.kind == Expr::Kind::Unary && cond.un_op == UnOp::Not) return PredKind::Not;
    return PredKind::Boolean;
  }

  Type check_expr(Expr& e) {
    switch (e.kind) {
      case Expr::Kind::IntLit: return e.type = Type::Int;
      case Expr::Kind::BoolLit: return e.type = Type::Bool;
      case Expr::Kind::StringLit: return e.type = Type::String;
      case Expr::Kind::Local: {
        auto it = scope_.find(e.text);
        if (it != scope_.end()) {
          e.slot = it->second;
          return e.type = slot_types_[e.slot];
        }
        int f = cut_.field_index(e.text);
        if (f < 0)
          throw CompileError(CompileError::Kind::Type, e.pos,
                             "undeclared variable '" + e.text + "'");
        e.kind = Expr::Kind::Field;
        e.slot = f;
        return e.type = cut_.fields[f].type;
      }
      case Expr::Kind::Field:
        return e.type;  // produced only by this checker
      case Expr::Kind::Call: {
        int m = cut_.member_index_of(e.text);
        if (m < 0)
          throw CompileError(CompileError::Kind::Type, e.pos,
                             "call to undeclared method '" + e.text + "'");
        const Member& callee = cut_.members[m];
        if (callee.params.size() != e.children.size())
          throw CompileError(CompileError::Kind::Type, e.pos,
                             "wrong number of arguments to '" + e.text + "'");
        for (std::size_t i = 0; i < e.children.size(); ++i) {
          Type t = check_expr(*e.children[i]);
          if (t != callee.params[i].type)
            throw CompileError(CompileError::Kind::Type, e.children[i]->pos,
                               "argument type mismatch in call to '" + e.text + "'");
        }
        e.slot = m;
        return e.type = callee.return_type;
      }
      case Expr::Kind::Unary: {
        Type t = check_expr(*e.children[0]);
        if (e.un_op == UnOp::Neg) {
          if (t != Type::Int)
            throw CompileError(CompileError::Kind::Type, e.pos, "operand of '-' must be int");
          return e.type = Type::Int;
        }
        if (t != Type::Bool)
          throw CompileError(CompileError::Kind::Type, e.pos, "operand of '!' must be bool");
        return e.type = Type::Bool;
      }
      case Expr::Kind::Binary: {
        Type l = check_expr(*e.children[0]);
        Type r = check_expr(*e.children[1]);
        BinOp op = e.bin_op;
        if (op == BinOp::Add) {
          if (l == Type::Int && r == Type::Int) return e.type = Type::Int;
          if (l == Type::String && r == Type::String) return e.type = Type::String;
          throw CompileError(CompileError::Kind::Type, e.pos,
                             "'+' requires two ints or two strings");
        }
        if (is_arithmetic(op)) {
          if (l != Type::Int || r != Type::Int)
            throw CompileError(CompileError::Kind::Type, e.pos,
                               std::string("'") + bin_op_text(op) + "' requires int operands");
          return e.type = Type::Int;
        }
        if (op == BinOp::Eq || op == BinOp::Ne) {
          if (l != r || l == Type::Void)
            throw CompileError(CompileError::Kind::Type, e.pos,
                               "equality requires matching primitive types");
          return e.type = Type::Bool;
        }
        if (is_relational(op)) {
          if (l != Type::Int || r != Type::Int)
            throw CompileError(CompileError::Kind::Type, e.pos,
                               std::string("'") + bin_op_text(op) + "' requires int operands");
          return e.type = Type::Bool;
        }
        // logical
        if (l != Type::Bool || r != Type::Bool)
          throw CompileError(CompileError::Kind::Type, e.pos,
                             std::string("'") + bin_op_text(op) + "' requires bool operands");
        return e.type = Type::Bool;
      }
    }
    return Type::Void;
  }

  void finalize() {
    std::vector<std::string> method_names;
    for (const auto& m : cut_.members)
      if (!m.is_ctor) method_names.push_back(m.name);
    cut_.setters = detect_setters(method_names);
    cut_.accessors = detect_accessors(method_names);
    cut_.targets = enumerate_targets(cut_);
    cut_.predicate_ancestors.clear();
    cut_.predicate_ancestors.resize(cut_.predicates.size());
    for (const auto& p : cut_.predicates) {
      std::vector<std::pair<int, bool>> chain;
      auto parent = p.control_parent;
      while (parent) {
        chain.push_back(*parent);
        parent = cut_.predicates[parent->first].control_parent;
      }
      std::reverse(chain.begin(), chain.end());
      cut_.predicate_ancestors[p.id] = std::move(chain);
    }
    if (cut_.members.empty())
      cut_.warnings.push_back("class has no constructors or methods; it is untestable");
    else if (cut_.constructor_indices().empty())
      cut_.warnings.push_back("class has no constructor; instances cannot be created");
  }

  CutClass& cut_;
  Member* current_ = nullptr;
  std::map<std::string, int> scope_;
  std::vector<Type> slot_types_;
  std::vector<std::pair<int, bool>> parent_stack_;
};

}  // namespace detail

inline CutClass parse_class(std::string_view source) {
  Parser parser(source);
  CutClass cut = parser.parse_class_decl();
  detail::Checker(cut).run();
  return cut;
}

// --- Canonical rendering ----------------------------------------------------

namespace detail {

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Binary:
      switch (e.bin_op) {
        case BinOp::Or: return 1;
        case BinOp::And: return 2;
        case BinOp::Eq: case BinOp::Ne: case BinOp::Lt:
        case BinOp::Le: case BinOp::Gt: case BinOp::Ge: return 3;
        case BinOp::Add: case BinOp::Sub: return 4;
        case BinOp::Mul: case BinOp::Div: case BinOp::Mod: return 5;
      }
      return 0;
    case Expr::Kind::Unary: return 6;
    default: return 7;
  }
}

inline std::string escape_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

inline void render_expr(const Expr& e, std::string& out) {
  auto child = [&out](const Expr& c, int min_prec) {
    if (precedence(c) < min_prec) {
      out.push_back('(');
      render_expr(c, out);
      out.push_back(')');
    } else {
      render_expr(c, out);
    }
  };
  switch (e.kind) {
    case Expr::Kind::IntLit: out += std::to_string(e.int_value); return;
    case Expr::Kind::BoolLit: out += e.bool_value ? "true" : "false"; return;
    case Expr::Kind::StringLit: out += escape_string(e.text); return;
    case Expr::Kind::Local:
    case Expr::Kind::Field: out += e.text; return;
    case Expr::Kind::Call: {
      out += e.text;
      out.push_back('(');
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ", ";
        render_expr(*e.children[i], out);
      }
      out.push_back(')');
      return;
    }
    case Expr::Kind::Unary:
      out += e.un_op == UnOp::Neg ? "-" : "!";
      child(*e.children[0], 6);
      return;
    case Expr::Kind::Binary: {
      int p = precedence(e);
      child(*e.children[0], p);
      out.push_back(' ');
      out += bin_op_text(e.bin_op);
      out.push_back(' ');
      child(*e.children[1], p + 1);
      return;
    }
  }
}

inline void render_block(const std::vector<StmtPtr>& block, int indent, std::string& out);

inline void render_stmt(const Stmt& s, int indent, std::string& out) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out += pad;
  switch (s.kind) {
    case Stmt::Kind::Declare:
      out += type_name(s.decl_type);
      out.push_back(' ');
      out += s.name;
      if (s.expr) {
        out += " = ";
        render_expr(*s.expr, out);
      }
      out += ";\n";
      return;
    case Stmt::Kind::Assign:
      out += s.name;
      out += " = ";
      render_expr(*s.expr, out);
      out += ";\n";
      return;
    case Stmt::Kind::If:
      out += "if (";
      render_expr(*s.expr, out);
      out += ") {\n";
      render_block(s.then_block, indent + 1, out);
      out += pad;
      out += "}";
      if (!s.else_block.empty()) {
        out += " else {\n";
        render_block(s.else_block, indent + 1, out);
        out += pad;
        out += "}";
      }
      out += "\n";
      return;
    case Stmt::Kind::While:
      out += "while (";
      render_expr(*s.expr, out);
      out += ") {\n";
      render_block(s.then_block, indent + 1, out);
      out += pad;
      out += "}\n";
      return;
    case Stmt::Kind::Return:
      out += "return";
      if (s.expr) {
        out.push_back(' ');
        render_expr(*s.expr, out);
      }
      out += ";\n";
      return;
    case Stmt::Kind::ExprStmt:
      render_expr(*s.expr, out);
      out += ";\n";
      return;
  }
}

inline void render_block(const std::vector<StmtPtr>& block, int indent, std::string& out) {
  for (const auto& s : block) render_stmt(*s, indent, out);
}

}  // namespace detail

// Canonical source form; parse_class(render_source(c)) is structurally
// identical to c.
inline std::string render_source(const CutClass& cut) {
  std::string out = "class " + cut.name + " {\n";
  for (const auto& f : cut.fields) {
    out += "  ";
    out += type_name(f.type);
    out.push_back(' ');
    out += f.name;
    out += ";\n";
  }
  for (const auto& m : cut.members) {
    out += "  ";
    if (!m.is_ctor) {
      out += type_name(m.return_type);
      out.push_back(' ');
    }
    out += m.name;
    out.push_back('(');
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      if (i) out += ", ";
      out += type_name(m.params[i].type);
      out.push_back(' ');
      out += m.params[i].name;
    }
    out += ") {\n";
    detail::render_block(m.body, 2, out);
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace gmosa::minilang
