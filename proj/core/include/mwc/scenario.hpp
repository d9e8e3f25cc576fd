#pragma once

// Scenario files (".mwc"): declarative wall-crossing computations.
//
//   # comment
//   let base = proj(2) * proj(14)
//   wall 18 { plus = bundle(proj(7), base); minus = bundle(proj(3), base) }
//   model M = base walls
//   expect M == poly"1 + 3p + 9p^2"
//
// Grammar:
//   scenario := stmt*
//   stmt     := "let" IDENT "=" expr
//             | "wall" RATIONAL "{" "plus" "=" exprlist ";" "minus" "=" exprlist ";"? "}"
//             | "model" IDENT "=" expr "walls"?
//             | "expect" IDENT "==" polyliteral
//   exprlist := expr ("+" expr)*        top-level "+" separates strata
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := "proj(" INT ")" | "aff(" INT ")" | "point()" | "gr(" INT "," INT ")"
//             | "hilb(" INT ")" | "relhilb(" INT "," INT ")"
//             | "sym2(" expr ")" | "wedge2(" expr ")" | "sym2od(" expr ")"
//             | "bundle(" expr "," expr ")" | "equivsq(" expr "," expr "," expr ")"
//             | polyliteral | IDENT | "(" expr ")"
//   polyliteral := "poly" QUOTED ;  RATIONAL := INT ("/" INT)?

#include "mwc/polynomial.hpp"
#include "mwc/strata.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mwc {

struct Binding {
    std::string name;
    SpaceExpr expr;
    SourcePos pos;
};

/// A named value to compute. With `walls` set the value is
/// assemble(expr, all walls of the scenario).
struct Model {
    std::string name;
    SpaceExpr expr;
    bool with_walls = false;
    SourcePos pos;
};

struct Expectation {
    std::string model;
    Polynomial expected;
    SourcePos pos;
};

struct Scenario {
    std::string name;
    std::vector<Binding> bindings;
    std::vector<WallTerm> walls;
    std::vector<Model> models;
    std::vector<Expectation> expectations;
};

/// Structural equality, ignoring names of the scenario and source positions.
bool same_structure(const Scenario& a, const Scenario& b);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourcePos pos);

    const std::string& message() const { return message_; }
    SourcePos pos() const { return pos_; }

private:
    std::string message_;
    SourcePos pos_;
};

/// Parses and validates a scenario: identifiers must be bound by an earlier
/// `let`, names are unique, and every `expect` names a declared model.
Scenario parse_scenario(std::string_view source, std::string name = "scenario");

/// Canonical text form; parse_scenario(print_scenario(s)) is structurally s.
std::string print_scenario(const Scenario& scenario);
std::string print_expr(const SpaceExpr& expr);

struct ModelResult {
    std::string name;
    std::optional<Polynomial> value;
    std::string error;
};

/// One verification line. Polynomial-valued checks carry literal text in
/// expected/computed and residual = computed - expected.
struct CheckResult {
    std::string name;
    std::string expected;
    std::optional<std::string> computed;
    std::optional<std::string> residual;
    bool pass = false;
    std::string error;

    static CheckResult polynomial(std::string name, const Polynomial& expected, const Polynomial& computed);
    static CheckResult value(std::string name, std::string expected, std::string computed);
    static CheckResult failure(std::string name, std::string expected, std::string error);

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::string scenario;
    std::vector<ModelResult> models;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// Evaluates bindings in order, computes every model and compares the
/// expectations. Evaluation errors are recorded per model.
VerificationReport run_scenario(const Scenario& scenario);

/// {"scenario": ..., "checks": [{name, expected, computed, residual, pass}], "models": [...]}
std::string report_to_json(const VerificationReport& report, int indent = 2);
VerificationReport report_from_json(std::string_view text);

}  // namespace mwc
