#pragma once

// Motivic calculus over expression trees of spaces.
//
//   Sum / Difference    P(X) = P(X - Z) + P(Z)
//   Product / Bundle    P(X) = P(Y) * P(F) for Zariski locally trivial fibrations
//   EquivariantSquare   (F x F)-fibration over a base with a free Z/2 action,
//                       split into its invariant and anti-invariant classes

#include "mwc/motives.hpp"
#include "mwc/polynomial.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwc {

using Rational = mpq_class;

struct SourcePos {
    int line = 0;
    int column = 0;

    bool known() const { return line > 0; }
};

class SpaceExpr {
public:
    enum class Kind {
        Atom,
        Literal,
        Ident,
        Sum,
        Difference,
        Product,
        Bundle,             // children: fiber, base
        EquivariantSquare,  // children: fiber, invariant base class, anti-invariant base class
        Sym2,
        Wedge2,
        Sym2OffDiagonal,
    };

    static SpaceExpr atom(AtomSpec spec, SourcePos pos = {});
    static SpaceExpr literal(Polynomial value, SourcePos pos = {});
    static SpaceExpr ident(std::string name, SourcePos pos = {});
    static SpaceExpr sum(SpaceExpr lhs, SpaceExpr rhs, SourcePos pos = {});
    static SpaceExpr difference(SpaceExpr lhs, SpaceExpr rhs, SourcePos pos = {});
    static SpaceExpr product(SpaceExpr lhs, SpaceExpr rhs, SourcePos pos = {});
    static SpaceExpr bundle(SpaceExpr fiber, SpaceExpr base, SourcePos pos = {});
    static SpaceExpr equivariant_square(SpaceExpr fiber, SpaceExpr base_plus, SpaceExpr base_minus,
                                        SourcePos pos = {});
    static SpaceExpr sym2(SpaceExpr arg, SourcePos pos = {});
    static SpaceExpr wedge2(SpaceExpr arg, SourcePos pos = {});
    static SpaceExpr sym2_off_diagonal(SpaceExpr arg, SourcePos pos = {});

    // Shorthands for hand-built trees.
    static SpaceExpr proj(long n) { return atom({AtomKind::Projective, {n}}); }
    static SpaceExpr relhilb(long d, long n) { return atom({AtomKind::RelHilbert, {d, n}}); }

    Kind kind() const { return node_->kind; }
    const AtomSpec& atom_spec() const { return node_->atom; }
    const Polynomial& literal_value() const { return node_->literal; }
    const std::string& name() const { return node_->name; }
    std::span<const SpaceExpr> children() const { return node_->children; }
    SourcePos pos() const { return node_->pos; }

    /// Structural equality; source positions are ignored.
    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);

private:
    struct Node {
        Kind kind;
        AtomSpec atom;
        Polynomial literal;
        std::string name;
        std::vector<SpaceExpr> children;
        SourcePos pos;
    };

    explicit SpaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static SpaceExpr make(Kind kind, std::vector<SpaceExpr> children, SourcePos pos);

    std::shared_ptr<const Node> node_;
};

SpaceExpr operator+(SpaceExpr a, SpaceExpr b);
SpaceExpr operator-(SpaceExpr a, SpaceExpr b);
SpaceExpr operator*(SpaceExpr a, SpaceExpr b);

/// Evaluation failure (unbound identifier, atom precondition, ...), with the
/// source position of the offending node when known.
class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& what, SourcePos pos);
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

/// Identifier -> polynomial bindings. No shadowing; lookup of an unknown
/// name is an error. A binding may also be recorded as failed, in which
/// case looking it up reports the original failure.
class Environment {
public:
    void bind(const std::string& name, Polynomial value);
    void bind_failure(const std::string& name, std::string message);

    bool contains(const std::string& name) const;
    const Polynomial& lookup(const std::string& name, SourcePos pos = {}) const;

private:
    std::map<std::string, Polynomial> values_;
    std::map<std::string, std::string> failures_;
};

Polynomial eval_expr(const SpaceExpr& expr, const Environment& env);

/// One wall of the wall-crossing: the flipped loci on either side of alpha.
struct WallTerm {
    Rational alpha;
    std::vector<SpaceExpr> plus;
    std::vector<SpaceExpr> minus;
    SourcePos pos;
};

/// P(C_alpha) = sum P(plus strata) - sum P(minus strata).
Polynomial wall_delta(const WallTerm& wall, const Environment& env);

/// base + sum of wall deltas.
Polynomial assemble(const Polynomial& base, std::span<const WallTerm> walls, const Environment& env);

}  // namespace mwc
