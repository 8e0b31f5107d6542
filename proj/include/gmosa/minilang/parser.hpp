#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gmosa/minilang/ast.hpp"
#include "gmosa/minilang/lexer.hpp"

namespace gmosa::minilang {

// Recursive-descent parser producing an unchecked CutClass skeleton:
// names are unresolved (slots -1), predicates unnumbered, derived fields empty.
class Parser {
 public:
  explicit Parser(std::string_view source) : tokens_(lex(source)) {}

  CutClass parse_class_decl() {
    CutClass cut;
    expect(Tok::KwClass, "expected 'class'");
    cut.name = expect(Tok::Ident, "expected class name").text;
    expect(Tok::LBrace, "expected '{'");
    while (!at(Tok::RBrace)) {
      if (at(Tok::End))
        throw err("unexpected end of input inside class body");
      parse_member(cut);
    }
    expect(Tok::RBrace, "expected '}'");
    expect(Tok::End, "trailing input after class");
    return cut;
  }

 private:
  const Token& cur() const { return tokens_[index_]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_type() const {
    return at(Tok::KwInt) || at(Tok::KwBool) || at(Tok::KwString) || at(Tok::KwVoid);
  }
  const Token& next() { return tokens_[index_++]; }
  const Token& expect(Tok k, const char* message) {
    if (!at(k)) throw err(message);
    return next();
  }
  CompileError err(const std::string& message) const {
    return CompileError(CompileError::Kind::Syntax, cur().pos, message);
  }

  Type parse_type() {
    if (at(Tok::KwInt)) { next(); return Type::Int; }
    if (at(Tok::KwBool)) { next(); return Type::Bool; }
    if (at(Tok::KwString)) { next(); return Type::String; }
    if (at(Tok::KwVoid)) { next(); return Type::Void; }
    throw err("expected a type");
  }

  void parse_member(CutClass& cut) {
    SourcePos p = cur().pos;
    if (at_type()) {
      Type t = parse_type();
      Token name = expect(Tok::Ident, "expected member name");
      if (at(Tok::Semi)) {
        if (t == Type::Void)
          throw CompileError(CompileError::Kind::Type, p, "field may not have type void");
        next();
        cut.fields.push_back({t, name.text});
        return;
      }
      Member m;
      m.is_ctor = false;
      m.return_type = t;
      m.name = name.text;
      m.pos = p;
      parse_signature_and_body(m);
      m.index = static_cast<int>(cut.members.size());
      cut.members.push_back(std::move(m));
      return;
    }
    if (at(Tok::Ident)) {
      Token name = next();
      if (name.text != cut.name)
        throw CompileError(CompileError::Kind::Type, name.pos,
                           "constructor name must match class name '" + cut.name + "'");
      Member m;
      m.is_ctor = true;
      m.return_type = Type::Void;
      m.name = name.text;
      m.pos = p;
      parse_signature_and_body(m);
      m.index = static_cast<int>(cut.members.size());
      cut.members.push_back(std::move(m));
      return;
    }
    throw err("expected a field, constructor or method");
  }

  void parse_signature_and_body(Member& m) {
    expect(Tok::LParen, "expected '('");
    if (!at(Tok::RParen)) {
      while (true) {
        SourcePos p = cur().pos;
        Type t = parse_type();
        if (t == Type::Void)
          throw CompileError(CompileError::Kind::Type, p, "parameter may not have type void");
        Token name = expect(Tok::Ident, "expected parameter name");
        m.params.push_back({t, name.text});
        if (at(Tok::Comma)) { next(); continue; }
        break;
      }
    }
    expect(Tok::RParen, "expected ')'");
    m.body = parse_block();
  }

  std::vector<StmtPtr> parse_block() {
    expect(Tok::LBrace, "expected '{'");
    std::vector<StmtPtr> stmts;
    while (!at(Tok::RBrace)) {
      if (at(Tok::End)) throw err("unexpected end of input inside block");
      stmts.push_back(parse_stmt());
    }
    next();
    return stmts;
  }

  StmtPtr parse_stmt() {
    SourcePos p = cur().pos;
    if (at_type()) {
      Type t = parse_type();
      if (t == Type::Void)
        throw CompileError(CompileError::Kind::Type, p, "variable may not have type void");
      Token name = expect(Tok::Ident, "expected variable name");
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Declare;
      s->pos = p;
      s->decl_type = t;
      s->name = name.text;
      if (at(Tok::Assign)) {
        next();
        s->expr = parse_expr();
      }
      expect(Tok::Semi, "expected ';'");
      return s;
    }
    if (at(Tok::KwIf)) return parse_if();
    if (at(Tok::KwWhile)) {
      next();
      expect(Tok::LParen, "expected '('");
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::While;
      s->pos = p;
      s->expr = parse_expr();
      expect(Tok::RParen, "expected ')'");
      s->then_block = parse_block();
      return s;
    }
    if (at(Tok::KwReturn)) {
      next();
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Return;
      s->pos = p;
      if (!at(Tok::Semi)) s->expr = parse_expr();
      expect(Tok::Semi, "expected ';'");
      return s;
    }
    if (at(Tok::Ident) && tokens_[index_ + 1].kind == Tok::Assign) {
      Token name = next();
      next();  // '='
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Assign;
      s->pos = p;
      s->name = name.text;
      s->expr = parse_expr();
      expect(Tok::Semi, "expected ';'");
      return s;
    }
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::ExprStmt;
    s->pos = p;
    s->expr = parse_expr();
    expect(Tok::Semi, "expected ';'");
    return s;
  }

  StmtPtr parse_if() {
    SourcePos p = cur().pos;
    next();  // 'if'
    expect(Tok::LParen, "expected '('");
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::If;
    s->pos = p;
    s->expr = parse_expr();
    expect(Tok::RParen, "expected ')'");
    s->then_block = parse_block();
    if (at(Tok::KwElse)) {
      next();
      if (at(Tok::KwIf)) {
        s->else_block.push_back(parse_if());
      } else {
        s->else_block = parse_block();
      }
    }
    return s;
  }

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (at(Tok::OrOr)) {
      SourcePos p = next().pos;
      lhs = make_binary(BinOp::Or, std::move(lhs), parse_and(), p);
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_rel();
    while (at(Tok::AndAnd)) {
      SourcePos p = next().pos;
      lhs = make_binary(BinOp::And, std::move(lhs), parse_rel(), p);
    }
    return lhs;
  }

  ExprPtr parse_rel() {
    ExprPtr lhs = parse_add();
    while (at(Tok::EqEq) || at(Tok::NotEq) || at(Tok::Lt) || at(Tok::Le) ||
           at(Tok::Gt) || at(Tok::Ge)) {
      Tok k = cur().kind;
      SourcePos p = next().pos;
      BinOp op = k == Tok::EqEq   ? BinOp::Eq
                 : k == Tok::NotEq ? BinOp::Ne
                 : k == Tok::Lt    ? BinOp::Lt
                 : k == Tok::Le    ? BinOp::Le
                 : k == Tok::Gt    ? BinOp::Gt
                                   : BinOp::Ge;
      lhs = make_binary(op, std::move(lhs), parse_add(), p);
    }
    return lhs;
  }

  ExprPtr parse_add() {
    ExprPtr lhs = parse_mul();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      BinOp op = at(Tok::Plus) ? BinOp::Add : BinOp::Sub;
      SourcePos p = next().pos;
      lhs = make_binary(op, std::move(lhs), parse_mul(), p);
    }
    return lhs;
  }

  ExprPtr parse_mul() {
    ExprPtr lhs = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash) || at(Tok::Percent)) {
      Tok k = cur().kind;
      SourcePos p = next().pos;
      BinOp op = k == Tok::Star ? BinOp::Mul : k == Tok::Slash ? BinOp::Div : BinOp::Mod;
      lhs = make_binary(op, std::move(lhs), parse_unary(), p);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(Tok::Minus) || at(Tok::Not)) {
      UnOp op = at(Tok::Minus) ? UnOp::Neg : UnOp::Not;
      SourcePos p = next().pos;
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Unary;
      e->pos = p;
      e->un_op = op;
      e->children.push_back(parse_unary());
      return e;
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    SourcePos p = cur().pos;
    if (at(Tok::IntLit)) {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::IntLit;
      e->pos = p;
      e->int_value = next().value;
      return e;
    }
    if (at(Tok::StringLit)) {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::StringLit;
      e->pos = p;
      e->text = next().text;
      return e;
    }
    if (at(Tok::KwTrue) || at(Tok::KwFalse)) {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::BoolLit;
      e->pos = p;
      e->bool_value = at(Tok::KwTrue);
      next();
      return e;
    }
    if (at(Tok::Ident)) {
      Token name = next();
      if (at(Tok::LParen)) {
        next();
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Call;
        e->pos = p;
        e->text = name.text;
        if (!at(Tok::RParen)) {
          while (true) {
            e->children.push_back(parse_expr());
            if (at(Tok::Comma)) { next(); continue; }
            break;
          }
        }
        expect(Tok::RParen, "expected ')'");
        return e;
      }
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Local;  // may be re-tagged Field by the checker
      e->pos = p;
      e->text = name.text;
      return e;
    }
    if (at(Tok::LParen)) {
      next();
      ExprPtr e = parse_expr();
      expect(Tok::RParen, "expected ')'");
      return e;
    }
    throw err("expected an expression");
  }

  static ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourcePos p) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Binary;
    e->pos = p;
    e->bin_op = op;
    e->children.push_back(std::move(lhs));
    e->children.push_back(std::move(rhs));
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace gmosa::minilang
