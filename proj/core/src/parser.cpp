#include "mwc/scenario.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace mwc {

ParseError::ParseError(const std::string& message, SourcePos pos)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      message_(message),
      pos_(pos)
{
}

namespace {

// Atom arguments beyond this are rejected at load time; evaluation cost
// grows quickly with them and no real scenario comes close.
constexpr long kMaxAtomArgument = 128;
constexpr int kMaxNesting = 200;
// Bounds the depth of left-leaning operator chains within one statement.
constexpr int kMaxOperators = 4096;

enum class Tok { Ident, Int, String, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            SourcePos at{line_, col_};
            if (i_ >= src_.size()) {
                out.push_back({Tok::End, "", at});
                return out;
            }
            const char c = src_[i_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = i_;
                while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                    advance();
                out.push_back({Tok::Ident, std::string(src_.substr(start, i_ - start)), at});
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = i_;
                while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) advance();
                out.push_back({Tok::Int, std::string(src_.substr(start, i_ - start)), at});
            } else if (c == '"') {
                advance();
                std::size_t start = i_;
                while (i_ < src_.size() && src_[i_] != '"') {
                    if (src_[i_] == '\n') throw ParseError("unterminated string", at);
                    advance();
                }
                if (i_ >= src_.size()) throw ParseError("unterminated string", at);
                out.push_back({Tok::String, std::string(src_.substr(start, i_ - start)), at});
                advance();
            } else if (c == '=' && i_ + 1 < src_.size() && src_[i_ + 1] == '=') {
                advance();
                advance();
                out.push_back({Tok::Symbol, "==", at});
            } else if (std::string_view("={};+-*(),/").find(c) != std::string_view::npos) {
                advance();
                out.push_back({Tok::Symbol, std::string(1, c), at});
            } else {
                throw ParseError("unexpected character", at);
            }
        }
    }

private:
    void advance()
    {
        if (src_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_space_and_comments()
    {
        while (i_ < src_.size()) {
            if (src_[i_] == '#') {
                while (i_ < src_.size() && src_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(src_[i_]))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const std::set<std::string, std::less<>>& keywords()
{
    static const std::set<std::string, std::less<>> words = {
        "let",  "wall", "plus",    "minus", "model", "walls",  "expect", "poly",   "proj",    "aff",
        "point", "gr",  "hilb", "relhilb", "sym2", "wedge2", "sym2od", "bundle", "equivsq",
    };
    return words;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string name) : toks_(std::move(tokens)) { scenario_.name = std::move(name); }

    Scenario run()
    {
        while (peek().kind != Tok::End) statement();
        for (const auto& e : scenario_.expectations) {
            if (!models_.contains(e.model)) throw ParseError("unknown model " + e.model, e.pos);
        }
        return std::move(scenario_);
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

    bool at_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
    bool at_word(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg + ", got " + got, t.pos);
    }

    Token expect_symbol(std::string_view s)
    {
        if (!at_symbol(s)) fail("expected '" + std::string(s) + "'");
        return next();
    }

    Token expect_word(std::string_view s)
    {
        if (!at_word(s)) fail("expected '" + std::string(s) + "'");
        return next();
    }

    Token identifier()
    {
        if (peek().kind != Tok::Ident) fail("expected identifier");
        if (keywords().contains(peek().text)) fail("reserved word cannot be used as identifier");
        return next();
    }

    long integer(long max)
    {
        if (peek().kind != Tok::Int) fail("expected integer");
        const Token& t = peek();
        long value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || value > max) fail("integer out of range (max " + std::to_string(max) + ")");
        next();
        return value;
    }

    void declare(const Token& name)
    {
        if (names_.contains(name.text)) throw ParseError("duplicate identifier " + name.text, name.pos);
        names_.insert(name.text);
    }

    void statement()
    {
        operators_ = 0;
        if (at_word("let")) {
            SourcePos pos = next().pos;
            Token name = identifier();
            expect_symbol("=");
            SpaceExpr e = expr();
            declare(name);
            bound_.insert(name.text);
            scenario_.bindings.push_back({name.text, std::move(e), pos});
        } else if (at_word("wall")) {
            SourcePos pos = next().pos;
            WallTerm wall;
            wall.pos = pos;
            wall.alpha = rational();
            expect_symbol("{");
            expect_word("plus");
            expect_symbol("=");
            wall.plus = expr_list();
            expect_symbol(";");
            expect_word("minus");
            expect_symbol("=");
            wall.minus = expr_list();
            if (at_symbol(";")) next();
            expect_symbol("}");
            scenario_.walls.push_back(std::move(wall));
        } else if (at_word("model")) {
            SourcePos pos = next().pos;
            Token name = identifier();
            expect_symbol("=");
            SpaceExpr e = expr();
            bool with_walls = false;
            if (at_word("walls")) {
                next();
                with_walls = true;
            }
            declare(name);
            models_.insert(name.text);
            scenario_.models.push_back({name.text, std::move(e), with_walls, pos});
        } else if (at_word("expect")) {
            SourcePos pos = next().pos;
            if (peek().kind != Tok::Ident) fail("expected model name");
            std::string model = next().text;
            expect_symbol("==");
            Polynomial value = poly_literal_after_keyword(true);
            scenario_.expectations.push_back({std::move(model), std::move(value), pos});
        } else {
            fail("expected 'let', 'wall', 'model' or 'expect'");
        }
    }

    Rational rational()
    {
        SourcePos pos = peek().pos;
        long num = integer(1'000'000'000);
        long den = 1;
        if (at_symbol("/")) {
            next();
            den = integer(1'000'000'000);
            if (den == 0) throw ParseError("zero denominator in wall label", pos);
        }
        Rational alpha(num, den);
        alpha.canonicalize();
        if (alpha <= 0) throw ParseError("wall label must be positive", pos);
        return alpha;
    }

    std::vector<SpaceExpr> expr_list()
    {
        std::vector<SpaceExpr> items;
        SpaceExpr current = term();
        while (at_symbol("+") || at_symbol("-")) {
            count_operator();
            Token op = next();
            if (op.text == "+") {
                items.push_back(std::move(current));
                current = term();
            } else {
                current = SpaceExpr::difference(std::move(current), term(), op.pos);
            }
        }
        items.push_back(std::move(current));
        return items;
    }

    void count_operator()
    {
        if (++operators_ > kMaxOperators) fail("statement has too many operators");
    }

    SpaceExpr expr()
    {
        SpaceExpr lhs = term();
        while (at_symbol("+") || at_symbol("-")) {
            count_operator();
            Token op = next();
            SpaceExpr rhs = term();
            lhs = op.text == "+" ? SpaceExpr::sum(std::move(lhs), std::move(rhs), op.pos)
                                 : SpaceExpr::difference(std::move(lhs), std::move(rhs), op.pos);
        }
        return lhs;
    }

    SpaceExpr term()
    {
        SpaceExpr lhs = factor();
        while (at_symbol("*")) {
            count_operator();
            Token op = next();
            lhs = SpaceExpr::product(std::move(lhs), factor(), op.pos);
        }
        return lhs;
    }

    SpaceExpr nested_expr()
    {
        if (++depth_ > kMaxNesting) fail("expression nested too deeply");
        SpaceExpr e = expr();
        --depth_;
        return e;
    }

    Polynomial poly_literal_after_keyword(bool need_keyword)
    {
        if (need_keyword) expect_word("poly");
        if (peek().kind != Tok::String) fail("expected quoted polynomial literal");
        Token lit = next();
        try {
            return Polynomial::parse(lit.text);
        } catch (const PolynomialSyntaxError& e) {
            SourcePos at{lit.pos.line, lit.pos.column + 1 + static_cast<int>(e.offset())};
            throw ParseError(e.what(), at);
        }
    }

    SpaceExpr factor()
    {
        const Token& t = peek();
        SourcePos pos = t.pos;
        if (at_symbol("(")) {
            next();
            SpaceExpr inner = nested_expr();
            expect_symbol(")");
            return inner;
        }
        if (t.kind != Tok::Ident) fail("expected expression");

        const std::string word = t.text;
        if (word == "poly") {
            next();
            return SpaceExpr::literal(poly_literal_after_keyword(false), pos);
        }
        if (!keywords().contains(word)) {
            next();
            if (!bound_.contains(word)) {
                if (models_.contains(word)) throw ParseError("model " + word + " cannot be used in an expression", pos);
                throw ParseError("unbound identifier " + word, pos);
            }
            return SpaceExpr::ident(word, pos);
        }

        next();
        auto atom = [&](AtomKind kind, int arity) {
            expect_symbol("(");
            std::vector<long> params;
            for (int k = 0; k < arity; ++k) {
                if (k > 0) expect_symbol(",");
                params.push_back(integer(kMaxAtomArgument));
            }
            expect_symbol(")");
            return SpaceExpr::atom({kind, std::move(params)}, pos);
        };
        auto call = [&](int arity) {
            expect_symbol("(");
            std::vector<SpaceExpr> args;
            for (int k = 0; k < arity; ++k) {
                if (k > 0) expect_symbol(",");
                args.push_back(nested_expr());
            }
            expect_symbol(")");
            return args;
        };

        if (word == "proj") return atom(AtomKind::Projective, 1);
        if (word == "aff") return atom(AtomKind::Affine, 1);
        if (word == "point") return atom(AtomKind::Point, 0);
        if (word == "gr") return atom(AtomKind::Grassmannian, 2);
        if (word == "hilb") return atom(AtomKind::HilbP2, 1);
        if (word == "relhilb") return atom(AtomKind::RelHilbert, 2);
        if (word == "sym2") return SpaceExpr::sym2(call(1)[0], pos);
        if (word == "wedge2") return SpaceExpr::wedge2(call(1)[0], pos);
        if (word == "sym2od") return SpaceExpr::sym2_off_diagonal(call(1)[0], pos);
        if (word == "bundle") {
            auto args = call(2);
            return SpaceExpr::bundle(args[0], args[1], pos);
        }
        if (word == "equivsq") {
            auto args = call(3);
            return SpaceExpr::equivariant_square(args[0], args[1], args[2], pos);
        }
        throw ParseError("keyword '" + word + "' cannot start an expression", pos);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    int depth_ = 0;
    int operators_ = 0;
    Scenario scenario_;
    std::set<std::string, std::less<>> names_;
    std::set<std::string, std::less<>> bound_;
    std::set<std::string, std::less<>> models_;
};

}  // namespace

Scenario parse_scenario(std::string_view source, std::string name)
{
    return Parser(Lexer(source).run(), std::move(name)).run();
}

}  // namespace mwc
