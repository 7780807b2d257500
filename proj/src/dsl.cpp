// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#include "tsop/dsl.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "tsop/entropy.hpp"

namespace tsop::dsl {

namespace {

enum class Tok {
  Number,
  Ident,
  Plus,
  Minus,
  Star,
  LParen,
  RParen,
  Comma,
  Semi,
  Leq,
  Geq,
  EqEq,
  End
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Leq: return "'<='";
    case Tok::Geq: return "'>='";
    case Tok::EqEq: return "'=='";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t begin;
  std::size_t end;
  double number = 0.0;
  std::string text;
};

std::vector<Token> lex(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = input.size();
  while (i < n) {
    const char c = input[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Tok kind) {
      tokens.push_back({kind, start, start + 1});
      ++i;
    };
    if (c == '+') { single(Tok::Plus); continue; }
    if (c == '-') { single(Tok::Minus); continue; }
    if (c == '*') { single(Tok::Star); continue; }
    if (c == '(') { single(Tok::LParen); continue; }
    if (c == ')') { single(Tok::RParen); continue; }
    if (c == ',') { single(Tok::Comma); continue; }
    if (c == ';') { single(Tok::Semi); continue; }
    if (c == '<' || c == '>' || c == '=') {
      if (i + 1 < n && input[i + 1] == '=') {
        Tok kind = c == '<' ? Tok::Leq : (c == '>' ? Tok::Geq : Tok::EqEq);
        tokens.push_back({kind, start, start + 2});
        i += 2;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", start,
                       "'<=', '>=' or '=='");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && (std::isdigit(static_cast<unsigned char>(input[j])) ||
                       input[j] == '.')) {
        ++j;
      }
      if (j < n && (input[j] == 'e' || input[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (input[k] == '+' || input[k] == '-')) ++k;
        while (k < n && std::isdigit(static_cast<unsigned char>(input[k]))) ++k;
        j = k;
      }
      double value = 0.0;
      auto res = std::from_chars(input.data() + i, input.data() + j, value);
      if (res.ec != std::errc{} || res.ptr != input.data() + j) {
        throw ParseError("malformed number literal", start, "number");
      }
      Token t{Tok::Number, start, j, value};
      t.text = std::string(input.substr(start, j - start));
      tokens.push_back(std::move(t));
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(input[j])) ||
                       input[j] == '_')) {
        ++j;
      }
      Token t{Tok::Ident, start, j};
      t.text = std::string(input.substr(start, j - start));
      tokens.push_back(std::move(t));
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start,
                     "number, identifier or operator");
  }
  tokens.push_back({Tok::End, n, n});
  return tokens;
}

struct Builtin {
  ExprKind kind;
  FuncName func;
  bool needs_param;
  int arity;
};

const Builtin* lookup_builtin(const std::string& name) {
  static const std::map<std::string, Builtin> table = {
      {"T", {ExprKind::Func, FuncName::T, true, 2}},
      {"S", {ExprKind::Func, FuncName::S, false, 2}},
      {"H", {ExprKind::Func, FuncName::H, false, 1}},
      {"Hl", {ExprKind::Func, FuncName::Hl, true, 1}},
      {"pm", {ExprKind::Func, FuncName::pm, true, 2}},
      {"lnl", {ExprKind::Func, FuncName::lnl, true, 1}},
      {"log", {ExprKind::Func, FuncName::log, false, 1}},
      {"pow", {ExprKind::Func, FuncName::pow, true, 1}},
      {"inv", {ExprKind::Inv, FuncName::T, false, 1}},
      {"kron", {ExprKind::Kron, FuncName::T, false, 2}},
  };
  auto it = table.find(name);
  return it == table.end() ? nullptr : &it->second;
}

class Parser {
public:
  explicit Parser(std::string_view input) : tokens_(lex(input)) {}

  Statement parse_statement() {
    ExprPtr lhs = parse_expr();
    Rel rel;
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Leq: rel = Rel::LEQ; break;
      case Tok::Geq: rel = Rel::GEQ; break;
      case Tok::EqEq: rel = Rel::EQ; break;
      default:
        throw ParseError("expected a relation", t.begin, "'<=', '>=' or '=='");
    }
    advance();
    ExprPtr rhs = parse_expr();
    expect(Tok::End, "end of input");
    if (lhs->value_kind != ValueKind::Matrix ||
        rhs->value_kind != ValueKind::Matrix) {
      const Expr& bad = lhs->value_kind != ValueKind::Matrix ? *lhs : *rhs;
      throw ParseError("statement sides must be operator-valued", bad.begin,
                       "operator expression");
    }
    Statement s;
    s.lhs = std::move(lhs);
    s.rel = rel;
    s.rhs = std::move(rhs);
    return s;
  }

private:
  const Token& peek(int ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  void advance() { if (pos_ + 1 < tokens_.size()) ++pos_; }

  const Token& expect(Tok kind, const char* expected) {
    const Token& t = peek();
    if (t.kind != kind) {
      std::ostringstream msg;
      msg << "expected " << expected << ", found " << tok_name(t.kind);
      throw ParseError(msg.str(), t.begin, expected);
    }
    advance();
    return t;
  }

  ExprPtr make_binary(ExprKind add_or_sub, ExprPtr lhs, ExprPtr rhs,
                      std::size_t op_begin) {
    if (lhs->value_kind != rhs->value_kind) {
      throw ParseError("cannot mix scalar and operator operands", op_begin,
                       "matching operand kinds");
    }
    auto node = std::make_unique<Expr>();
    node->kind = add_or_sub;
    node->value_kind = lhs->value_kind;
    node->begin = lhs->begin;
    node->end = rhs->end;
    node->args.push_back(std::move(lhs));
    node->args.push_back(std::move(rhs));
    return node;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
        const std::size_t op = t.begin;
        const ExprKind kind = t.kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
        advance();
        lhs = make_binary(kind, std::move(lhs), parse_term(), op);
        continue;
      }
      return lhs;
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (peek().kind == Tok::Star) {
      advance();
      ExprPtr rhs = parse_factor();
      auto node = std::make_unique<Expr>();
      const bool ls = lhs->value_kind == ValueKind::Scalar;
      const bool rs = rhs->value_kind == ValueKind::Scalar;
      node->kind = (!ls && !rs) ? ExprKind::MatMul : ExprKind::ScalarMul;
      node->value_kind = (ls && rs) ? ValueKind::Scalar : ValueKind::Matrix;
      node->begin = lhs->begin;
      node->end = rhs->end;
      node->args.push_back(std::move(lhs));
      node->args.push_back(std::move(rhs));
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      advance();
      auto node = std::make_unique<Expr>();
      node->kind = ExprKind::ScalarLit;
      node->value_kind = ValueKind::Scalar;
      node->begin = t.begin;
      node->end = t.end;
      node->scalar = t.number;
      return node;
    }
    if (t.kind == Tok::Ident) {
      if (peek(1).kind == Tok::LParen) {
        return parse_call();
      }
      advance();
      auto node = std::make_unique<Expr>();
      node->kind = ExprKind::MatrixVar;
      node->value_kind = ValueKind::Matrix;
      node->begin = t.begin;
      node->end = t.end;
      node->name = t.text;
      return node;
    }
    if (t.kind == Tok::LParen) {
      advance();
      ExprPtr inner = parse_expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    throw ParseError("expected an expression", t.begin,
                     "number, identifier or '('");
  }

  ExprPtr parse_call() {
    const Token& name_tok = peek();
    const Builtin* builtin = lookup_builtin(name_tok.text);
    if (builtin == nullptr) {
      throw ParseError("unknown function name '" + name_tok.text + "'",
                       name_tok.begin, "T, S, H, Hl, pm, lnl, log, pow, inv or kron");
    }
    advance();
    expect(Tok::LParen, "'('");

    std::optional<double> param;
    if (builtin->needs_param) {
      double sign = 1.0;
      if (peek().kind == Tok::Minus) {
        advance();
        sign = -1.0;
      }
      const Token& num = expect(Tok::Number, "lambda literal");
      param = sign * num.number;
      expect(Tok::Semi, "';'");
    } else if (peek().kind == Tok::Number && peek(1).kind == Tok::Semi) {
      throw ParseError("'" + name_tok.text + "' takes no lambda argument",
                       peek().begin, "operator expression");
    }

    std::vector<ExprPtr> args;
    args.push_back(parse_operand(name_tok.text));
    while (peek().kind == Tok::Comma) {
      advance();
      args.push_back(parse_operand(name_tok.text));
    }
    const Token& close = expect(Tok::RParen, "')'");

    if (static_cast<int>(args.size()) != builtin->arity) {
      std::ostringstream msg;
      msg << "'" << name_tok.text << "' expects " << builtin->arity
          << " operand(s), got " << args.size();
      throw ParseError(msg.str(), close.begin, "matching arity");
    }

    auto node = std::make_unique<Expr>();
    node->kind = builtin->kind;
    node->value_kind = ValueKind::Matrix;
    node->begin = name_tok.begin;
    node->end = close.end;
    node->name = name_tok.text;
    if (builtin->kind == ExprKind::Func) node->func = builtin->func;
    node->param = param;
    node->args = std::move(args);
    return node;
  }

  ExprPtr parse_operand(const std::string& fn) {
    ExprPtr arg = parse_expr();
    if (arg->value_kind != ValueKind::Matrix) {
      throw ParseError("'" + fn + "' takes operator-valued operands",
                       arg->begin, "operator expression");
    }
    return arg;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Shortest decimal form that round-trips exactly.
std::string format_number(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) break;
  }
  return buf;
}

constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecAtom = 3;

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return kPrecAdd;
    case ExprKind::ScalarMul:
    case ExprKind::MatMul:
      return kPrecMul;
    default:
      return kPrecAtom;
  }
}

void print_expr(const Expr& e, int parent_prec, bool right_operand,
                std::string& out) {
  const int prec = precedence(e);
  const bool parens =
      prec < parent_prec || (prec == parent_prec && right_operand &&
                             prec != kPrecAtom);
  if (parens) out += '(';
  switch (e.kind) {
    case ExprKind::MatrixVar:
      out += e.name;
      break;
    case ExprKind::ScalarLit:
      out += format_number(e.scalar);
      break;
    case ExprKind::Add:
    case ExprKind::Sub:
      print_expr(*e.args[0], prec, false, out);
      out += e.kind == ExprKind::Add ? " + " : " - ";
      print_expr(*e.args[1], prec, true, out);
      break;
    case ExprKind::ScalarMul:
    case ExprKind::MatMul:
      print_expr(*e.args[0], prec, false, out);
      out += "*";
      print_expr(*e.args[1], prec, true, out);
      break;
    case ExprKind::Inv:
    case ExprKind::Kron:
    case ExprKind::Func: {
      out += e.name;
      out += '(';
      if (e.param) {
        out += format_number(*e.param);
        out += "; ";
      }
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out += ", ";
        print_expr(*e.args[i], 0, false, out);
      }
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

void collect_vars(const Expr& e, std::set<std::string>& vars) {
  if (e.kind == ExprKind::MatrixVar) {
    vars.insert(e.name);
  }
  for (const ExprPtr& arg : e.args) {
    collect_vars(*arg, vars);
  }
}

}  // namespace

Statement parse(std::string_view input) {
  Parser parser(input);
  return parser.parse_statement();
}

std::string print(const Expr& e) {
  std::string out;
  print_expr(e, 0, false, out);
  return out;
}

std::string print(const Statement& s) {
  std::string out = print(*s.lhs);
  switch (s.rel) {
    case Rel::LEQ: out += " <= "; break;
    case Rel::GEQ: out += " >= "; break;
    case Rel::EQ: out += " == "; break;
  }
  out += print(*s.rhs);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value_kind != b.value_kind) return false;
  if (a.kind == ExprKind::MatrixVar && a.name != b.name) return false;
  if (a.kind == ExprKind::ScalarLit && a.scalar != b.scalar) return false;
  if (a.kind == ExprKind::Func && a.func != b.func) return false;
  if (a.param.has_value() != b.param.has_value()) return false;
  if (a.param && *a.param != *b.param) return false;
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

bool structurally_equal(const Statement& a, const Statement& b) {
  return a.rel == b.rel && structurally_equal(*a.lhs, *b.lhs) &&
         structurally_equal(*a.rhs, *b.rhs);
}

std::vector<std::string> free_variables(const Statement& s) {
  std::set<std::string> vars;
  collect_vars(*s.lhs, vars);
  collect_vars(*s.rhs, vars);
  return {vars.begin(), vars.end()};
}

namespace {

struct Value {
  ValueKind kind;
  double scalar = 0.0;
  ComplexMatrix matrix;
};

HermitianMatrix to_hermitian(const ComplexMatrix& m, const Expr& e) {
  try {
    return HermitianMatrix(m);
  } catch (const Error& err) {
    throw EvalError(std::string(err.what()) + " (subexpression '" + print(e) +
                        "')",
                    e.begin, e.end);
  }
}

Value eval(const Expr& e, const Bindings& bindings, const EvalOptions& opt) {
  auto wrap = [&e](auto&& fn) -> Value {
    try {
      return fn();
    } catch (const EvalError&) {
      throw;
    } catch (const Error& err) {
      throw EvalError(std::string(err.what()) + " (subexpression '" +
                          print(e) + "')",
                      e.begin, e.end);
    }
  };

  switch (e.kind) {
    case ExprKind::MatrixVar: {
      auto it = bindings.find(e.name);
      if (it == bindings.end()) {
        throw EvalError("unbound variable '" + e.name + "'", e.begin, e.end);
      }
      return Value{ValueKind::Matrix, 0.0, it->second.raw()};
    }
    case ExprKind::ScalarLit:
      return Value{ValueKind::Scalar, e.scalar, {}};
    case ExprKind::Add:
    case ExprKind::Sub: {
      Value a = eval(*e.args[0], bindings, opt);
      Value b = eval(*e.args[1], bindings, opt);
      const double sign = e.kind == ExprKind::Add ? 1.0 : -1.0;
      if (a.kind == ValueKind::Scalar) {
        return Value{ValueKind::Scalar, a.scalar + sign * b.scalar, {}};
      }
      if (a.matrix.rows() != b.matrix.rows()) {
        throw EvalError("dimension mismatch in '+'/'-'", e.begin, e.end);
      }
      return Value{ValueKind::Matrix, 0.0, a.matrix + sign * b.matrix};
    }
    case ExprKind::ScalarMul: {
      Value a = eval(*e.args[0], bindings, opt);
      Value b = eval(*e.args[1], bindings, opt);
      if (a.kind == ValueKind::Scalar && b.kind == ValueKind::Scalar) {
        return Value{ValueKind::Scalar, a.scalar * b.scalar, {}};
      }
      const double s = a.kind == ValueKind::Scalar ? a.scalar : b.scalar;
      const ComplexMatrix& m =
          a.kind == ValueKind::Scalar ? b.matrix : a.matrix;
      return Value{ValueKind::Matrix, 0.0, s * m};
    }
    case ExprKind::MatMul: {
      Value a = eval(*e.args[0], bindings, opt);
      Value b = eval(*e.args[1], bindings, opt);
      if (a.matrix.cols() != b.matrix.rows()) {
        throw EvalError("dimension mismatch in '*'", e.begin, e.end);
      }
      return Value{ValueKind::Matrix, 0.0, a.matrix * b.matrix};
    }
    case ExprKind::Inv: {
      Value a = eval(*e.args[0], bindings, opt);
      HermitianMatrix h = to_hermitian(a.matrix, *e.args[0]);
      return wrap([&]() -> Value {
        return Value{ValueKind::Matrix, 0.0, matrix_power(h, -1.0).raw()};
      });
    }
    case ExprKind::Kron: {
      Value a = eval(*e.args[0], bindings, opt);
      Value b = eval(*e.args[1], bindings, opt);
      HermitianMatrix ha = to_hermitian(a.matrix, *e.args[0]);
      HermitianMatrix hb = to_hermitian(b.matrix, *e.args[1]);
      return wrap([&]() -> Value {
        return Value{ValueKind::Matrix, 0.0,
                     kron(ha, hb, opt.max_kron_dim).raw()};
      });
    }
    case ExprKind::Func: {
      std::vector<HermitianMatrix> args;
      args.reserve(e.args.size());
      for (const ExprPtr& arg : e.args) {
        Value v = eval(*arg, bindings, opt);
        args.push_back(to_hermitian(v.matrix, *arg));
      }
      return wrap([&]() -> Value {
        switch (e.func) {
          case FuncName::T:
            return Value{ValueKind::Matrix, 0.0,
                         tsallis_rel_op_entropy(args[0], args[1],
                                                Lambda{*e.param})
                             .raw()};
          case FuncName::S:
            return Value{ValueKind::Matrix, 0.0,
                         rel_op_entropy(args[0], args[1]).raw()};
          case FuncName::H:
            return Value{ValueKind::Matrix, 0.0,
                         operator_entropy(args[0]).raw()};
          case FuncName::Hl:
            return Value{ValueKind::Matrix, 0.0,
                         tsallis_op_entropy(args[0], Lambda{*e.param}).raw()};
          case FuncName::pm:
            return Value{ValueKind::Matrix, 0.0,
                         power_mean(args[0], args[1], Lambda{*e.param}).raw()};
          case FuncName::lnl:
            return Value{ValueKind::Matrix, 0.0,
                         ln_lambda_op(args[0], Lambda{*e.param}).raw()};
          case FuncName::log:
            return Value{ValueKind::Matrix, 0.0, matrix_log(args[0]).raw()};
          case FuncName::pow:
            return Value{ValueKind::Matrix, 0.0,
                         matrix_power(args[0], *e.param).raw()};
        }
        throw EvalError("unreachable function", e.begin, e.end);
      });
    }
  }
  throw EvalError("unreachable expression kind", e.begin, e.end);
}

}  // namespace

StatementVerdict evaluate(const Statement& s, const Bindings& bindings,
                          const EvalOptions& options) {
  Value lv = eval(*s.lhs, bindings, options);
  Value rv = eval(*s.rhs, bindings, options);
  HermitianMatrix lhs = to_hermitian(lv.matrix, *s.lhs);
  HermitianMatrix rhs = to_hermitian(rv.matrix, *s.rhs);
  if (lhs.dim() != rhs.dim()) {
    throw EvalError("statement sides have different dimensions", s.lhs->begin,
                    s.rhs->end);
  }

  StatementVerdict verdict;
  verdict.rel = s.rel;
  switch (s.rel) {
    case Rel::LEQ: {
      LoewnerVerdict v = loewner_leq(lhs, rhs, options.tol);
      verdict.holds = v.holds;
      verdict.margin = v.witness_min_eig;
      verdict.loewner = v;
      break;
    }
    case Rel::GEQ: {
      LoewnerVerdict v = loewner_leq(rhs, lhs, options.tol);
      verdict.holds = v.holds;
      verdict.margin = v.witness_min_eig;
      verdict.loewner = v;
      break;
    }
    case Rel::EQ: {
      EqualityVerdict eq;
      eq.residual_norm = operator_norm(lhs - rhs);
      const double scale = std::max(operator_norm(lhs), operator_norm(rhs));
      eq.tolerance_used = options.tol.bound(scale);
      eq.leq = loewner_leq(lhs, rhs, options.tol);
      eq.geq = loewner_leq(rhs, lhs, options.tol);
      eq.holds = eq.residual_norm <= eq.tolerance_used && eq.leq.holds &&
                 eq.geq.holds;
      verdict.holds = eq.holds;
      verdict.margin = -eq.residual_norm;
      verdict.equality = eq;
      break;
    }
  }
  return verdict;
}

}  // namespace tsop::dsl
