#include "mwc/scenario.hpp"

#include <sstream>

namespace mwc {

namespace {

using Kind = SpaceExpr::Kind;

enum class Ctx {
    Expr,     // anywhere an expr is allowed
    Stratum,  // one entry of an exprlist: no bare top-level "+"
    Right,    // right operand of "+"/"-": must be a term
    Factor,   // operand of "*"
};

bool is_additive(Kind k)
{
    return k == Kind::Sum || k == Kind::Difference;
}

void print(std::ostream& os, const SpaceExpr& e, Ctx ctx);

void print_args(std::ostream& os, const char* head, std::span<const SpaceExpr> args)
{
    os << head << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) os << ", ";
        print(os, args[i], Ctx::Expr);
    }
    os << ')';
}

void print(std::ostream& os, const SpaceExpr& e, Ctx ctx)
{
    const bool parens = (is_additive(e.kind()) && (ctx == Ctx::Right || ctx == Ctx::Factor)) ||
                        (e.kind() == Kind::Sum && ctx == Ctx::Stratum);
    if (parens) os << '(';
    const Ctx inner = parens ? Ctx::Expr : ctx;

    switch (e.kind()) {
    case Kind::Atom: {
        const AtomSpec& a = e.atom_spec();
        os << atom_name(a.kind) << '(';
        for (std::size_t i = 0; i < a.params.size(); ++i) os << (i > 0 ? ", " : "") << a.params[i];
        os << ')';
        break;
    }
    case Kind::Literal: os << "poly\"" << e.literal_value().to_string() << '"'; break;
    case Kind::Ident: os << e.name(); break;
    case Kind::Sum:
    case Kind::Difference:
        print(os, e.children()[0], inner == Ctx::Stratum ? Ctx::Stratum : Ctx::Expr);
        os << (e.kind() == Kind::Sum ? " + " : " - ");
        print(os, e.children()[1], Ctx::Right);
        break;
    case Kind::Product:
        // left-associative: a left Product needs no parentheses, a right one does
        print(os, e.children()[0], Ctx::Factor);
        os << " * ";
        if (e.children()[1].kind() == Kind::Product) {
            os << '(';
            print(os, e.children()[1], Ctx::Expr);
            os << ')';
        } else {
            print(os, e.children()[1], Ctx::Factor);
        }
        break;
    case Kind::Bundle: print_args(os, "bundle", e.children()); break;
    case Kind::EquivariantSquare: print_args(os, "equivsq", e.children()); break;
    case Kind::Sym2: print_args(os, "sym2", e.children()); break;
    case Kind::Wedge2: print_args(os, "wedge2", e.children()); break;
    case Kind::Sym2OffDiagonal: print_args(os, "sym2od", e.children()); break;
    }
    if (parens) os << ')';
}

void print_strata(std::ostream& os, const std::vector<SpaceExpr>& strata)
{
    for (std::size_t i = 0; i < strata.size(); ++i) {
        if (i > 0) os << " + ";
        print(os, strata[i], Ctx::Stratum);
    }
}

}  // namespace

std::string print_expr(const SpaceExpr& expr)
{
    std::ostringstream os;
    print(os, expr, Ctx::Expr);
    return os.str();
}

std::string print_scenario(const Scenario& s)
{
    std::ostringstream os;
    bool section = false;
    auto gap = [&] {
        if (section) os << '\n';
        section = true;
    };

    if (!s.bindings.empty()) {
        gap();
        for (const auto& b : s.bindings) os << "let " << b.name << " = " << print_expr(b.expr) << '\n';
    }
    for (const auto& w : s.walls) {
        gap();
        os << "wall " << w.alpha.get_str() << " {\n  plus = ";
        print_strata(os, w.plus);
        os << ";\n  minus = ";
        print_strata(os, w.minus);
        os << "\n}\n";
    }
    if (!s.models.empty()) {
        gap();
        for (const auto& m : s.models)
            os << "model " << m.name << " = " << print_expr(m.expr) << (m.with_walls ? " walls" : "") << '\n';
    }
    if (!s.expectations.empty()) {
        gap();
        for (const auto& e : s.expectations)
            os << "expect " << e.model << " == poly\"" << e.expected.to_string() << "\"\n";
    }
    return os.str();
}

}  // namespace mwc
