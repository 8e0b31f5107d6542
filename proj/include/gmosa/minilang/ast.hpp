#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmosa::minilang {

enum class Type { Int, Bool, String, Void };

inline const char* type_name(Type t) {
  switch (t) {
    case Type::Int: return "int";
    case Type::Bool: return "bool";
    case Type::String: return "string";
    case Type::Void: return "void";
  }
  return "?";
}

struct SourcePos {
  int line = 0;
  int column = 0;
};

// Raised for both syntax and type errors; carries the offending position.
class CompileError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Type };

  CompileError(Kind kind, SourcePos pos, const std::string& message)
      : std::runtime_error(format(kind, pos, message)),
        kind_(kind),
        pos_(pos),
        message_(message) {}

  Kind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  static std::string format(Kind kind, SourcePos pos, const std::string& msg) {
    return std::string(kind == Kind::Syntax ? "syntax error" : "type error") +
           " at " + std::to_string(pos.line) + ":" + std::to_string(pos.column) +
           ": " + msg;
  }

  Kind kind_;
  SourcePos pos_;
  std::string message_;
};

enum class BinOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or };
enum class UnOp { Neg, Not };

inline const char* bin_op_text(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
  }
  return "?";
}

inline bool is_relational(BinOp op) {
  return op == BinOp::Eq || op == BinOp::Ne || op == BinOp::Lt ||
         op == BinOp::Le || op == BinOp::Gt || op == BinOp::Ge;
}

inline bool is_arithmetic(BinOp op) {
  return op == BinOp::Add || op == BinOp::Sub || op == BinOp::Mul ||
         op == BinOp::Div || op == BinOp::Mod;
}

inline bool is_logical(BinOp op) { return op == BinOp::And || op == BinOp::Or; }

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { IntLit, BoolLit, StringLit, Local, Field, Call, Unary, Binary };

  Kind kind;
  SourcePos pos;
  Type type = Type::Void;  // filled in by the checker

  std::int64_t int_value = 0;    // IntLit
  bool bool_value = false;       // BoolLit
  std::string text;              // StringLit contents; identifier for Local/Field/Call
  int slot = -1;                 // Local: local slot; Field: field index; Call: member index
  UnOp un_op = UnOp::Neg;        // Unary
  BinOp bin_op = BinOp::Add;     // Binary
  std::vector<ExprPtr> children; // Unary: [operand]; Binary: [lhs, rhs]; Call: args

  ExprPtr clone() const {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->pos = pos;
    e->type = type;
    e->int_value = int_value;
    e->bool_value = bool_value;
    e->text = text;
    e->slot = slot;
    e->un_op = un_op;
    e->bin_op = bin_op;
    e->children.reserve(children.size());
    for (const auto& c : children) e->children.push_back(c->clone());
    return e;
  }
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
  enum class Kind { Declare, Assign, If, While, Return, ExprStmt };

  Kind kind;
  SourcePos pos;

  // Declare: decl_type/name/slot, expr = optional initializer.
  // Assign: name + (slot or field index via field_target), expr = value.
  // If/While: expr = condition, predicate_id assigned by the checker.
  // Return: expr = optional value. ExprStmt: expr.
  Type decl_type = Type::Void;
  std::string name;
  int slot = -1;
  bool field_target = false;
  int predicate_id = -1;
  ExprPtr expr;
  std::vector<StmtPtr> then_block;  // if-then / while body
  std::vector<StmtPtr> else_block;

  StmtPtr clone() const {
    auto s = std::make_unique<Stmt>();
    s->kind = kind;
    s->pos = pos;
    s->decl_type = decl_type;
    s->name = name;
    s->slot = slot;
    s->field_target = field_target;
    s->predicate_id = predicate_id;
    if (expr) s->expr = expr->clone();
    s->then_block.reserve(then_block.size());
    for (const auto& t : then_block) s->then_block.push_back(t->clone());
    s->else_block.reserve(else_block.size());
    for (const auto& e : else_block) s->else_block.push_back(e->clone());
    return s;
  }
};

struct Param {
  Type type;
  std::string name;
};

// A constructor or a method, in declaration order. Constructors have
// return_type Void, is_ctor true and name equal to the class name.
struct Member {
  bool is_ctor = false;
  Type return_type = Type::Void;
  std::string name;
  std::vector<Param> params;
  std::vector<StmtPtr> body;
  int index = -1;            // position in CutClass::members
  int local_slot_count = 0;  // params + locals, assigned by the checker
  std::vector<Type> slot_types;
  SourcePos pos;

  Member clone() const {
    Member m;
    m.is_ctor = is_ctor;
    m.return_type = return_type;
    m.name = name;
    m.params = params;
    m.body.reserve(body.size());
    for (const auto& s : body) m.body.push_back(s->clone());
    m.index = index;
    m.local_slot_count = local_slot_count;
    m.slot_types = slot_types;
    m.pos = pos;
    return m;
  }
};

struct Field {
  Type type;
  std::string name;
};

// Comparison kind of the top-level operator of an if/while condition.
enum class PredKind { Eq, Ne, Lt, Le, Gt, Ge, Boolean, And, Or, Not };

inline const char* pred_kind_name(PredKind k) {
  switch (k) {
    case PredKind::Eq: return "==";
    case PredKind::Ne: return "!=";
    case PredKind::Lt: return "<";
    case PredKind::Le: return "<=";
    case PredKind::Gt: return ">";
    case PredKind::Ge: return ">=";
    case PredKind::Boolean: return "boolean";
    case PredKind::And: return "&&";
    case PredKind::Or: return "||";
    case PredKind::Not: return "!";
  }
  return "?";
}

struct PredicateSite {
  int id = -1;            // dense, per class, in source order
  int member_index = -1;  // owning constructor/method
  std::string method;     // owning member name
  PredKind comparison = PredKind::Boolean;
  // (parent predicate id, outcome that leads here); absent for top level.
  std::optional<std::pair<int, bool>> control_parent;
};

struct BranchTarget {
  enum class Kind { Entry, Branch };

  int id = -1;
  Kind kind = Kind::Entry;
  int member_index = -1;  // Entry
  int predicate_id = -1;  // Branch
  bool outcome = false;   // Branch
};

struct CutClass {
  std::string name;
  std::vector<Field> fields;
  std::vector<Member> members;  // constructors and methods, declaration order
  std::vector<PredicateSite> predicates;

  // Derived by the checker.
  std::vector<BranchTarget> targets;
  std::vector<std::string> setters;    // sorted method names
  std::vector<std::string> accessors;  // sorted method names (get-keyword)
  std::vector<std::vector<std::pair<int, bool>>> predicate_ancestors;
  std::vector<std::string> warnings;

  bool is_setter(const std::string& method) const {
    for (const auto& s : setters)
      if (s == method) return true;
    return false;
  }

  bool is_accessor(const std::string& method) const {
    for (const auto& a : accessors)
      if (a == method) return true;
    return false;
  }

  // A production method: callable unit under test in intra-method mode.
  bool is_production_method(int member_index) const {
    const Member& m = members[member_index];
    return !m.is_ctor && !is_setter(m.name) && !is_accessor(m.name);
  }

  int field_index(const std::string& field) const {
    for (std::size_t i = 0; i < fields.size(); ++i)
      if (fields[i].name == field) return static_cast<int>(i);
    return -1;
  }

  int member_index_of(const std::string& method) const {
    for (const auto& m : members)
      if (!m.is_ctor && m.name == method) return m.index;
    return -1;
  }

  std::vector<int> constructor_indices() const {
    std::vector<int> out;
    for (const auto& m : members)
      if (m.is_ctor) out.push_back(m.index);
    return out;
  }

  std::vector<int> method_indices() const {
    std::vector<int> out;
    for (const auto& m : members)
      if (!m.is_ctor) out.push_back(m.index);
    return out;
  }

  CutClass clone() const {
    CutClass c;
    c.name = name;
    c.fields = fields;
    c.members.reserve(members.size());
    for (const auto& m : members) c.members.push_back(m.clone());
    c.predicates = predicates;
    c.targets = targets;
    c.setters = setters;
    c.accessors = accessors;
    c.predicate_ancestors = predicate_ancestors;
    c.warnings = warnings;
    return c;
  }
};

}  // namespace gmosa::minilang
