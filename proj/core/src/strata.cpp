#include "mwc/strata.hpp"

#include <algorithm>

namespace mwc {

SpaceExpr SpaceExpr::make(Kind kind, std::vector<SpaceExpr> children, SourcePos pos)
{
    return SpaceExpr(std::make_shared<const Node>(Node{kind, {}, {}, {}, std::move(children), pos}));
}

SpaceExpr SpaceExpr::atom(AtomSpec spec, SourcePos pos)
{
    return SpaceExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(spec), {}, {}, {}, pos}));
}

SpaceExpr SpaceExpr::literal(Polynomial value, SourcePos pos)
{
    return SpaceExpr(std::make_shared<const Node>(Node{Kind::Literal, {}, std::move(value), {}, {}, pos}));
}

SpaceExpr SpaceExpr::ident(std::string name, SourcePos pos)
{
    return SpaceExpr(std::make_shared<const Node>(Node{Kind::Ident, {}, {}, std::move(name), {}, pos}));
}

SpaceExpr SpaceExpr::sum(SpaceExpr lhs, SpaceExpr rhs, SourcePos pos)
{
    return make(Kind::Sum, {std::move(lhs), std::move(rhs)}, pos);
}

SpaceExpr SpaceExpr::difference(SpaceExpr lhs, SpaceExpr rhs, SourcePos pos)
{
    return make(Kind::Difference, {std::move(lhs), std::move(rhs)}, pos);
}

SpaceExpr SpaceExpr::product(SpaceExpr lhs, SpaceExpr rhs, SourcePos pos)
{
    return make(Kind::Product, {std::move(lhs), std::move(rhs)}, pos);
}

SpaceExpr SpaceExpr::bundle(SpaceExpr fiber, SpaceExpr base, SourcePos pos)
{
    return make(Kind::Bundle, {std::move(fiber), std::move(base)}, pos);
}

SpaceExpr SpaceExpr::equivariant_square(SpaceExpr fiber, SpaceExpr base_plus, SpaceExpr base_minus, SourcePos pos)
{
    return make(Kind::EquivariantSquare, {std::move(fiber), std::move(base_plus), std::move(base_minus)}, pos);
}

SpaceExpr SpaceExpr::sym2(SpaceExpr arg, SourcePos pos)
{
    return make(Kind::Sym2, {std::move(arg)}, pos);
}

SpaceExpr SpaceExpr::wedge2(SpaceExpr arg, SourcePos pos)
{
    return make(Kind::Wedge2, {std::move(arg)}, pos);
}

SpaceExpr SpaceExpr::sym2_off_diagonal(SpaceExpr arg, SourcePos pos)
{
    return make(Kind::Sym2OffDiagonal, {std::move(arg)}, pos);
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b)
{
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case SpaceExpr::Kind::Atom: return a.atom_spec() == b.atom_spec();
    case SpaceExpr::Kind::Literal: return a.literal_value() == b.literal_value();
    case SpaceExpr::Kind::Ident: return a.name() == b.name();
    default: return std::ranges::equal(a.children(), b.children());
    }
}

SpaceExpr operator+(SpaceExpr a, SpaceExpr b)
{
    return SpaceExpr::sum(std::move(a), std::move(b));
}

SpaceExpr operator-(SpaceExpr a, SpaceExpr b)
{
    return SpaceExpr::difference(std::move(a), std::move(b));
}

SpaceExpr operator*(SpaceExpr a, SpaceExpr b)
{
    return SpaceExpr::product(std::move(a), std::move(b));
}

EvalError::EvalError(const std::string& what, SourcePos pos)
    : std::runtime_error(pos.known() ? std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + what
                                     : what),
      pos_(pos)
{
}

void Environment::bind(const std::string& name, Polynomial value)
{
    if (contains(name)) throw std::invalid_argument("identifier '" + name + "' is already bound");
    values_.emplace(name, std::move(value));
}

void Environment::bind_failure(const std::string& name, std::string message)
{
    if (contains(name)) throw std::invalid_argument("identifier '" + name + "' is already bound");
    failures_.emplace(name, std::move(message));
}

bool Environment::contains(const std::string& name) const
{
    return values_.contains(name) || failures_.contains(name);
}

const Polynomial& Environment::lookup(const std::string& name, SourcePos pos) const
{
    if (auto it = values_.find(name); it != values_.end()) return it->second;
    if (auto it = failures_.find(name); it != failures_.end())
        throw EvalError("binding '" + name + "' failed: " + it->second, pos);
    throw EvalError("unbound identifier '" + name + "'", pos);
}

Polynomial eval_expr(const SpaceExpr& expr, const Environment& env)
{
    using Kind = SpaceExpr::Kind;
    auto child = [&](std::size_t i) { return eval_expr(expr.children()[i], env); };

    switch (expr.kind()) {
    case Kind::Atom:
        try {
            return motives::evaluate(expr.atom_spec());
        } catch (const AtomDomainError& e) {
            throw EvalError(e.what(), expr.pos());
        }
    case Kind::Literal: return expr.literal_value();
    case Kind::Ident: return env.lookup(expr.name(), expr.pos());
    case Kind::Sum: {
        Polynomial lhs = child(0);
        return lhs + child(1);
    }
    case Kind::Difference: {
        Polynomial lhs = child(0);
        return lhs - child(1);
    }
    case Kind::Product:
    case Kind::Bundle: {
        Polynomial lhs = child(0);
        return lhs * child(1);
    }
    case Kind::EquivariantSquare: {
        Polynomial fiber = child(0);
        Polynomial invariant = child(1);
        Polynomial anti_invariant = child(2);
        return invariant * motives::sym2(fiber) + anti_invariant * motives::wedge2(fiber);
    }
    case Kind::Sym2: return motives::sym2(child(0));
    case Kind::Wedge2: return motives::wedge2(child(0));
    case Kind::Sym2OffDiagonal: return motives::sym2_off_diagonal(child(0));
    }
    throw std::logic_error("unknown expression kind");
}

Polynomial wall_delta(const WallTerm& wall, const Environment& env)
{
    Polynomial delta;
    for (const auto& stratum : wall.plus) delta += eval_expr(stratum, env);
    for (const auto& stratum : wall.minus) delta -= eval_expr(stratum, env);
    return delta;
}

Polynomial assemble(const Polynomial& base, std::span<const WallTerm> walls, const Environment& env)
{
    Polynomial total = base;
    for (const auto& wall : walls) total += wall_delta(wall, env);
    return total;
}

}  // namespace mwc
