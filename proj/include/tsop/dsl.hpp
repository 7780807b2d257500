// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsop/matrix.hpp"

namespace tsop::dsl {

// Grammar:
//   statement := expr rel expr
//   rel       := "<=" | ">=" | "=="
//   expr      := term { ("+" | "-") term }
//   term      := factor { "*" factor }
//   factor    := NUMBER | IDENT | call | "(" expr ")"
//   call      := IDENT "(" [ NUMBER ";" ] expr { "," expr } ")"
// The leading NUMBER of a call is the lambda (or exponent) literal; it is
// required exactly for T, Hl, pm, lnl and pow and may carry a sign.

enum class ExprKind {
  MatrixVar,
  ScalarLit,
  Add,
  Sub,
  ScalarMul,
  MatMul,
  Inv,
  Kron,
  Func
};

enum class FuncName { T, S, H, Hl, pm, lnl, log, pow };

enum class ValueKind { Scalar, Matrix };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  ExprKind kind{};
  ValueKind value_kind{};
  std::size_t begin = 0;  // byte span in the source text
  std::size_t end = 0;
  std::string name;              // MatrixVar
  double scalar = 0.0;           // ScalarLit
  FuncName func{};               // Func
  std::optional<double> param;   // lambda-or-exponent literal
  std::vector<ExprPtr> args;
};

enum class Rel { LEQ, GEQ, EQ };

struct Statement {
  ExprPtr lhs;
  Rel rel{};
  ExprPtr rhs;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t offset, std::string expected)
      : Error(msg), offset(offset), expected(std::move(expected)) {}
  std::size_t offset;
  std::string expected;
};

Statement parse(std::string_view input);

/// Canonical pretty-printing; parse(print(s)) is structurally identical to s.
std::string print(const Statement& s);
std::string print(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Statement& a, const Statement& b);

/// Sorted, de-duplicated matrix variable names.
std::vector<std::string> free_variables(const Statement& s);

using Bindings = std::map<std::string, HermitianMatrix>;

struct EqualityVerdict {
  double residual_norm = 0.0;
  double tolerance_used = 0.0;
  LoewnerVerdict leq{};
  LoewnerVerdict geq{};
  bool holds = false;
};

/// Verdict of one statement evaluation. For LEQ/GEQ the margin is the Loewner
/// witness; for EQ it is minus the residual norm.
struct StatementVerdict {
  Rel rel{};
  bool holds = false;
  double margin = 0.0;
  std::optional<LoewnerVerdict> loewner;
  std::optional<EqualityVerdict> equality;
};

struct EvalOptions {
  TolerancePolicy tol{};
  int max_kron_dim = kDefaultMaxKronDim;
};

StatementVerdict evaluate(const Statement& s, const Bindings& bindings,
                          const EvalOptions& options = {});

}  // namespace tsop::dsl
