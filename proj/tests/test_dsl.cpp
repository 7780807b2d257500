// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tsop/cli.hpp"
#include "tsop/dsl.hpp"
#include "tsop/ensembles.hpp"
#include "tsop/matrix_io.hpp"

using namespace tsop;
using namespace tsop::dsl;

TEST_CASE("parse structure") {
  Statement s = parse("T(0.5; A, B) <= B - A");
  CHECK(s.rel == Rel::LEQ);
  REQUIRE(s.lhs->kind == ExprKind::Func);
  CHECK(s.lhs->func == FuncName::T);
  CHECK(*s.lhs->param == 0.5);
  REQUIRE(s.lhs->args.size() == 2);
  CHECK(s.lhs->args[0]->name == "A");
  CHECK(s.lhs->args[1]->name == "B");
  REQUIRE(s.rhs->kind == ExprKind::Sub);
  CHECK(s.rhs->args[0]->name == "B");
  CHECK(s.rhs->args[1]->name == "A");

  CHECK_NOTHROW(parse("S(A, B) == T(0.5; A, B)"));
  CHECK(parse("T(-0.5; A, B) <= S(A, B)").lhs->param == -0.5);

  Statement prec = parse("A + 2*B*C <= kron(A, B)");
  REQUIRE(prec.lhs->kind == ExprKind::Add);
  const Expr& product = *prec.lhs->args[1];
  // Left associative: (2*B)*C with the scalar folded innermost.
  CHECK(product.kind == ExprKind::MatMul);
  CHECK(product.args[0]->kind == ExprKind::ScalarMul);
  CHECK(prec.rhs->kind == ExprKind::Kron);
}

TEST_CASE("parse errors carry byte offsets and expectations") {
  // Missing ';' after the lambda literal of pm.
  try {
    parse("pm(0.5 A, B) <= B");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 7);
    CHECK(e.expected == "';'");
  }

  CHECK_THROWS_AS(parse("frobnicate(A) <= B"), ParseError);
  try {
    parse("frobnicate(A) <= B");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unknown function") != std::string::npos);
    CHECK(e.offset == 0);
  }

  // Arity mismatch.
  CHECK_THROWS_AS(parse("T(0.5; A) <= B"), ParseError);
  CHECK_THROWS_AS(parse("H(A, B) <= B"), ParseError);
  // Missing lambda argument entirely.
  CHECK_THROWS_AS(parse("pm(A, B) <= B"), ParseError);
  // Lambda given to a function that takes none.
  try {
    parse("S(0.5; A, B) <= B");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("no lambda") != std::string::npos);
  }

  // Kind errors at parse time.
  CHECK_THROWS_AS(parse("A + 2 <= B"), ParseError);
  CHECK_THROWS_AS(parse("2 <= 3"), ParseError);
  CHECK_THROWS_AS(parse("T(0.5; 2, B) <= B"), ParseError);

  // Relation and trailing-input errors.
  CHECK_THROWS_AS(parse("A < B"), ParseError);
  CHECK_THROWS_AS(parse("A <= B extra"), ParseError);
  CHECK_THROWS_AS(parse("A <= (B"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("print round trip on handwritten statements") {
  for (const char* text : {
           "T(0.5; A, B) <= B - A",
           "S(A, B) == T(0.5; A, B)",
           "A - A*inv(B)*A <= T(0.25; A, B)",
           "(0 - 0.5)*kron(T(-0.5; A1, B1), T(-0.5; A2, B2)) <= T(-0.5; kron(A1, A2), kron(B1, B2))",
           "pm(0.5; A, B) - 0.5*pm(-0.5; A, B) - 0.58*A <= T(0.5; A, B)",
           "Hl(1e-06; kron(R1, R2)) == kron(Hl(1e-06; R1), R2) + kron(R1, Hl(1e-06; R2)) + 1e-06*kron(Hl(1e-06; R1), Hl(1e-06; R2))",
           "lnl(0.1; X) + lnl(0.1; Y) >= log(X) + log(Y)",
           "pow(0; A) - (A - B) <= pow(2; B)",
       }) {
    CAPTURE(text);
    Statement first = parse(text);
    std::string printed = print(first);
    Statement second = parse(printed);
    CHECK(structurally_equal(first, second));
    CHECK(print(second) == printed);
  }
}

TEST_CASE("print round trip on generated statements") {
  SeededGenerator gen(77);
  const std::vector<std::string> vars = {"A", "B", "C"};

  struct Builder {
    RandomStream rng;
    const std::vector<std::string>& vars;

    ExprPtr matrix_expr(int depth) {
      auto node = std::make_unique<Expr>();
      node->value_kind = ValueKind::Matrix;
      const int choice = depth <= 0 ? 0 : rng.index(8);
      switch (choice) {
        case 0:
          node->kind = ExprKind::MatrixVar;
          node->name = vars[rng.index(static_cast<int>(vars.size()))];
          break;
        case 1:
        case 2: {
          node->kind = choice == 1 ? ExprKind::Add : ExprKind::Sub;
          node->args.push_back(matrix_expr(depth - 1));
          node->args.push_back(matrix_expr(depth - 1));
          break;
        }
        case 3: {
          node->kind = ExprKind::ScalarMul;
          auto s = std::make_unique<Expr>();
          s->kind = ExprKind::ScalarLit;
          s->value_kind = ValueKind::Scalar;
          s->scalar = std::round(rng.uniform(0.0, 8.0) * 4.0) / 4.0;
          node->args.push_back(std::move(s));
          node->args.push_back(matrix_expr(depth - 1));
          break;
        }
        case 4: {
          node->kind = ExprKind::MatMul;
          node->args.push_back(matrix_expr(depth - 1));
          node->args.push_back(matrix_expr(depth - 1));
          break;
        }
        case 5: {
          node->kind = ExprKind::Inv;
          node->name = "inv";
          node->args.push_back(matrix_expr(depth - 1));
          break;
        }
        case 6: {
          node->kind = ExprKind::Kron;
          node->name = "kron";
          node->args.push_back(matrix_expr(depth - 1));
          node->args.push_back(matrix_expr(depth - 1));
          break;
        }
        default: {
          node->kind = ExprKind::Func;
          const int f = rng.index(8);
          static const FuncName funcs[] = {FuncName::T,   FuncName::S,
                                           FuncName::H,   FuncName::Hl,
                                           FuncName::pm,  FuncName::lnl,
                                           FuncName::log, FuncName::pow};
          static const char* names[] = {"T", "S", "H", "Hl",
                                        "pm", "lnl", "log", "pow"};
          static const bool needs_param[] = {true, false, false, true,
                                             true, true,  false, true};
          static const int arity[] = {2, 2, 1, 1, 2, 1, 1, 1};
          node->func = funcs[f];
          node->name = names[f];
          if (needs_param[f]) {
            static const double params[] = {0.5, -0.5, 0.1, 1.0, 1e-6, 0.37};
            node->param = params[rng.index(6)];
          }
          for (int i = 0; i < arity[f]; ++i) {
            node->args.push_back(matrix_expr(depth - 1));
          }
          break;
        }
      }
      return node;
    }
  };

  for (int k = 0; k < 200; ++k) {
    Builder builder{gen.derive(k).stream(), vars};
    Statement s;
    s.lhs = builder.matrix_expr(3);
    s.rhs = builder.matrix_expr(3);
    const int r = builder.rng.index(3);
    s.rel = r == 0 ? Rel::LEQ : (r == 1 ? Rel::GEQ : Rel::EQ);
    const std::string printed = print(s);
    CAPTURE(printed);
    Statement back = parse(printed);
    CHECK(structurally_equal(s, back));
  }
}

TEST_CASE("free variables") {
  Statement s = parse("T(0.5; A, B) + kron(C, A) <= pow(2; D)");
  CHECK(free_variables(s) == std::vector<std::string>{"A", "B", "C", "D"});
}

TEST_CASE("evaluate") {
  SeededGenerator gen(88);
  HermitianMatrix a = random_pd(gen.derive("a"), 3, 10.0);
  HermitianMatrix b = random_pd(gen.derive("b"), 3, 10.0);
  Bindings bindings;
  bindings.emplace("A", a);
  bindings.emplace("B", b);

  SUBCASE("T(A|A) == 0*A holds") {
    StatementVerdict v = evaluate(parse("T(0.5; A, A) == 0*A"), bindings);
    CHECK(v.holds);
    REQUIRE(v.equality.has_value());
    CHECK(v.equality->residual_norm <= v.equality->tolerance_used);
    CHECK(v.equality->leq.holds);
    CHECK(v.equality->geq.holds);
  }

  SUBCASE("upper bound holds, reversed bound fails with negative witness") {
    CHECK(evaluate(parse("T(0.5; A, B) <= B - A"), bindings).holds);
    Bindings shifted;
    shifted.emplace("A", a);
    shifted.emplace("B", a + HermitianMatrix::identity(3));
    StatementVerdict v =
        evaluate(parse("T(0.5; A, B) >= B - A"), shifted);
    CHECK_FALSE(v.holds);
    REQUIRE(v.loewner.has_value());
    CHECK(v.loewner->witness_min_eig < 0.0);
  }

  SUBCASE("evaluation is pure") {
    StatementVerdict v1 = evaluate(parse("S(A, B) <= T(0.5; A, B)"), bindings);
    StatementVerdict v2 = evaluate(parse("S(A, B) <= T(0.5; A, B)"), bindings);
    CHECK(v1.margin == v2.margin);
    CHECK(v1.holds);
  }

  SUBCASE("unbound variable") {
    try {
      evaluate(parse("T(0.5; A, Z) <= B"), bindings);
      FAIL("expected EvalError");
    } catch (const EvalError& e) {
      CHECK(std::string(e.what()).find("unbound variable 'Z'") !=
            std::string::npos);
      CHECK(e.span_begin == 10);
    }
  }

  SUBCASE("dimension mismatch between sides") {
    Bindings mixed;
    mixed.emplace("A", random_pd(gen.derive("d2"), 2, 10.0));
    mixed.emplace("B", random_pd(gen.derive("d3"), 3, 10.0));
    CHECK_THROWS_AS(evaluate(parse("A <= B"), mixed), EvalError);
    CHECK_THROWS_AS(evaluate(parse("A + B <= B"), mixed), EvalError);
  }

  SUBCASE("precondition failures carry the subexpression span") {
    Bindings indefinite;
    indefinite.emplace(
        "A", HermitianMatrix::diagonal(Eigen::Vector2d{1.0, -1.0}));
    indefinite.emplace("B", random_pd(gen.derive("pd"), 2, 10.0));
    try {
      evaluate(parse("B - T(0.5; A, B) <= B"), indefinite);
      FAIL("expected EvalError");
    } catch (const EvalError& e) {
      CHECK(std::string(e.what()).find("positive definite") !=
            std::string::npos);
      CHECK(e.span_begin == 4);   // the T(...) call
      CHECK(e.span_end == 16);
    }
  }

  SUBCASE("kron cap is enforced through options") {
    EvalOptions opt;
    opt.max_kron_dim = 4;
    Bindings kb;
    kb.emplace("A", random_pd(gen.derive("k1"), 2, 10.0));
    kb.emplace("B", random_pd(gen.derive("k2"), 3, 10.0));
    CHECK_THROWS_AS(evaluate(parse("kron(A, B) <= kron(A, B)"), kb, opt),
                    EvalError);
  }

  SUBCASE("scalar arithmetic inside parentheses") {
    StatementVerdict v =
        evaluate(parse("(0 - 1)*A <= A"), bindings);
    CHECK(v.holds);
  }
}

TEST_CASE("cli eval end to end with a matrices file") {
  SeededGenerator gen(99);
  HermitianMatrix a = random_pd(gen.derive("a"), 3, 10.0);
  HermitianMatrix b = a + HermitianMatrix::identity(3);
  nlohmann::json file;
  file["A"] = matrix_to_json(a);
  file["B"] = matrix_to_json(b);
  const std::string path = "/tmp/tsop_test_bindings.json";
  {
    std::ofstream out(path);
    out << file.dump();
  }

  std::ostringstream out, err;
  int code = cli::run({"eval", "T(0.5; A, B) <= B - A", "--matrices", path,
                       "--format", "json"},
                      out, err);
  CHECK(code == 0);
  nlohmann::json record = nlohmann::json::parse(out.str());
  CHECK(record["pass"] == true);
  CHECK(record["mode"] == "matrices");

  // The reversed statement fails on this ordered pair: exit code 1.
  out.str("");
  code = cli::run({"eval", "T(0.5; A, B) >= B - A", "--matrices", path}, out,
                  err);
  CHECK(code == 1);

  // Malformed statement: exit code 2.
  out.str("");
  err.str("");
  code = cli::run({"eval", "pm(0.5 A, B) <= B", "--random", "2"}, out, err);
  CHECK(code == 2);
  CHECK(err.str().find("byte 7") != std::string::npos);

  std::remove(path.c_str());
}
