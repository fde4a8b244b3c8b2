#include <cctype>
#include <utility>
#include <vector>

#include "qident/dsl.hpp"

namespace qident::dsl {

ParseError::ParseError(SourcePos p, const std::string& message)
    : std::runtime_error("line " + std::to_string(p.line) + ", column " +
                         std::to_string(p.column) + ": " + message),
      pos(p) {}

EvalError::EvalError(SourcePos p, const std::string& message)
    : std::runtime_error("line " + std::to_string(p.line) + ", column " +
                         std::to_string(p.column) + ": " + message),
      pos(p) {}

namespace {

struct Token {
    enum class Kind {
        Number, Ident, Plus, Minus, Star, Slash, Caret,
        LParen, RParen, Comma, End
    };
    Kind kind;
    std::string text;
    SourcePos pos;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    SourcePos pos;
    size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
        ++i;
    };
    while (i < src.size()) {
        const char c = src[i];
        const SourcePos here = pos;
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                text += src[i];
                advance(src[i]);
            }
            out.push_back({Token::Kind::Number, std::move(text), here});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                text += src[i];
                advance(src[i]);
            }
            out.push_back({Token::Kind::Ident, std::move(text), here});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            case ',': kind = Token::Kind::Comma; break;
            default:
                throw ParseError(here, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), here});
        advance(c);
    }
    out.push_back({Token::Kind::End, "<end>", pos});
    return out;
}

bool is_keyword(const std::string& s) {
    return s == "q" || s == "x" || s == "poch" || s == "sum" || s == "inf";
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& next() { return tokens_[index_++]; }

    bool accept(Token::Kind kind) {
        if (peek().kind != kind) return false;
        ++index_;
        return true;
    }

    const Token& expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind)
            throw ParseError(peek().pos,
                             "expected " + what + " (found '" + peek().text + "')");
        return next();
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            const SourcePos at = peek().pos;
            if (accept(Token::Kind::Plus))
                lhs = make({Expr::Kind::Add, at, {}, {}, lhs, parse_term()});
            else if (accept(Token::Kind::Minus))
                lhs = make({Expr::Kind::Sub, at, {}, {}, lhs, parse_term()});
            else
                return lhs;
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_power();
        for (;;) {
            const SourcePos at = peek().pos;
            if (accept(Token::Kind::Star))
                lhs = make({Expr::Kind::Mul, at, {}, {}, lhs, parse_power()});
            else if (accept(Token::Kind::Slash))
                lhs = make({Expr::Kind::Div, at, {}, {}, lhs, parse_power()});
            else
                return lhs;
        }
    }

    ExprPtr parse_power() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            const SourcePos at = peek().pos;
            if (accept(Token::Kind::Caret))
                lhs = make({Expr::Kind::Pow, at, {}, {}, lhs, parse_unary()});
            else
                return lhs;
        }
    }

    ExprPtr parse_unary() {
        if (peek().kind == Token::Kind::Minus) {
            const SourcePos at = next().pos;
            return make({Expr::Kind::Neg, at, {}, {}, parse_unary(), nullptr});
        }
        return parse_atom();
    }

    ExprPtr parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Kind::Number: {
                next();
                Expr e{Expr::Kind::IntLit, tok.pos, Int(tok.text), {}, nullptr, nullptr};
                return make(std::move(e));
            }
            case Token::Kind::LParen: {
                next();
                ExprPtr e = parse_expr();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            case Token::Kind::Ident:
                return parse_ident();
            default:
                throw ParseError(tok.pos, "expected an expression (found '" +
                                              tok.text + "')");
        }
    }

    ExprPtr parse_ident() {
        const Token tok = next();
        if (tok.text == "q")
            return make({Expr::Kind::VarQ, tok.pos, {}, {}, nullptr, nullptr});
        if (tok.text == "x")
            return make({Expr::Kind::VarX, tok.pos, {}, {}, nullptr, nullptr});
        if (tok.text == "poch") return parse_poch(tok.pos);
        if (tok.text == "sum") return parse_sum(tok.pos);
        if (tok.text == "inf")
            throw ParseError(tok.pos,
                             "'inf' is only valid as a sum bound or poch count");
        for (const std::string& bound : binders_)
            if (bound == tok.text) {
                Expr e{Expr::Kind::BoundVar, tok.pos, {}, tok.text, nullptr, nullptr};
                return make(std::move(e));
            }
        throw ParseError(tok.pos, "unknown identifier '" + tok.text + "'");
    }

    /* poch(base, count): base must be q or x*q^s with a literal s; the shape
     * is resolved here so evaluation only ever sees valid products. */
    ExprPtr parse_poch(SourcePos at) {
        expect(Token::Kind::LParen, "'('");
        const SourcePos base_at = peek().pos;
        ExprPtr base = parse_expr();
        auto [x_deg, q_shift] = poch_base_shape(*base, base_at);
        expect(Token::Kind::Comma, "','");
        ExprPtr count = nullptr;  // null means inf
        if (peek().kind == Token::Kind::Ident && peek().text == "inf")
            next();
        else
            count = parse_expr();
        expect(Token::Kind::RParen, "')'");
        Expr e{Expr::Kind::Poch, at, {}, {}, base, count};
        e.base_x_deg = x_deg;
        e.base_q_shift = q_shift;
        return make(std::move(e));
    }

    std::pair<int, int> poch_base_shape(const Expr& base, SourcePos at) const {
        if (base.kind == Expr::Kind::VarQ) return {0, 1};
        if (base.kind == Expr::Kind::VarX) return {1, 0};
        if (base.kind == Expr::Kind::Mul) {
            const Expr* xe = base.a.get();
            const Expr* qe = base.b.get();
            if (xe->kind != Expr::Kind::VarX) std::swap(xe, qe);
            if (xe->kind == Expr::Kind::VarX) {
                if (qe->kind == Expr::Kind::VarQ) return {1, 1};
                if (qe->kind == Expr::Kind::Pow &&
                    qe->a->kind == Expr::Kind::VarQ &&
                    qe->b->kind == Expr::Kind::IntLit && qe->b->value >= 0 &&
                    qe->b->value <= 1000000)
                    return {1, static_cast<int>(qe->b->value)};
            }
        }
        throw ParseError(at, "poch base must be q or x*q^s");
    }

    ExprPtr parse_sum(SourcePos at) {
        expect(Token::Kind::LParen, "'('");
        const Token name = expect(Token::Kind::Ident, "a variable name");
        if (is_keyword(name.text))
            throw ParseError(name.pos,
                             "'" + name.text + "' cannot be a sum variable");
        for (const std::string& bound : binders_)
            if (bound == name.text)
                throw ParseError(name.pos, "sum variable '" + name.text +
                                               "' shadows an enclosing binding");
        expect(Token::Kind::Comma, "','");
        const Token lo = expect(Token::Kind::Number, "an integer lower bound");
        expect(Token::Kind::Comma, "','");
        std::optional<long long> hi;
        if (peek().kind == Token::Kind::Ident && peek().text == "inf") {
            next();
        } else {
            const Token hi_tok =
                expect(Token::Kind::Number, "an integer upper bound or 'inf'");
            hi = bound_value(hi_tok);
        }
        expect(Token::Kind::Comma, "','");
        binders_.push_back(name.text);
        ExprPtr body = parse_expr();
        binders_.pop_back();
        expect(Token::Kind::RParen, "')'");
        Expr e{Expr::Kind::Sum, at, {}, name.text, body, nullptr};
        e.sum_lo = bound_value(lo);
        e.sum_hi = hi;
        return make(std::move(e));
    }

    static long long bound_value(const Token& tok) {
        try {
            return std::stoll(tok.text);
        } catch (const std::out_of_range&) {
            throw ParseError(tok.pos, "sum bound '" + tok.text + "' is too large");
        }
    }

    std::vector<Token> tokens_;
    size_t index_ = 0;
    std::vector<std::string> binders_;
};

/* Printing uses one precedence level per grammar rule; a child is wrapped
 * exactly when printing it bare would re-associate the tree. */
enum Level { kAdd = 1, kMul = 2, kPow = 3, kUnary = 4, kAtom = 5 };

int level_of(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return kAdd;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return kMul;
        case Expr::Kind::Pow: return kPow;
        case Expr::Kind::Neg: return kUnary;
        default: return kAtom;
    }
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& child, int parent_level, bool is_right,
                 std::string& out) {
    const int lv = level_of(child);
    // Same-level right children need parentheses to survive left-assoc
    // reparsing; lower-level children always do.
    const bool parens = lv < parent_level || (lv == parent_level && is_right);
    if (parens) out += "(";
    print(child, out);
    if (parens) out += ")";
}

void print(const Expr& e, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::IntLit: out += e.value.str(); return;
        case Expr::Kind::VarQ: out += "q"; return;
        case Expr::Kind::VarX: out += "x"; return;
        case Expr::Kind::BoundVar: out += e.name; return;
        case Expr::Kind::Neg:
            out += "-";
            print_child(*e.a, kUnary, false, out);
            return;
        case Expr::Kind::Add:
            print_child(*e.a, kAdd, false, out);
            out += " + ";
            print_child(*e.b, kAdd, true, out);
            return;
        case Expr::Kind::Sub:
            print_child(*e.a, kAdd, false, out);
            out += " - ";
            print_child(*e.b, kAdd, true, out);
            return;
        case Expr::Kind::Mul:
            print_child(*e.a, kMul, false, out);
            out += "*";
            print_child(*e.b, kMul, true, out);
            return;
        case Expr::Kind::Div:
            print_child(*e.a, kMul, false, out);
            out += "/";
            print_child(*e.b, kMul, true, out);
            return;
        case Expr::Kind::Pow:
            print_child(*e.a, kPow, false, out);
            out += "^";
            print_child(*e.b, kPow, true, out);
            return;
        case Expr::Kind::Poch:
            out += "poch(";
            print(*e.a, out);
            out += ",";
            if (e.b)
                print(*e.b, out);
            else
                out += "inf";
            out += ")";
            return;
        case Expr::Kind::Sum:
            out += "sum(" + e.name + "," + std::to_string(e.sum_lo) + ",";
            out += e.sum_hi ? std::to_string(*e.sum_hi) : "inf";
            out += ",";
            print(*e.a, out);
            out += ")";
            return;
    }
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string to_text(const Expr& e) {
    std::string out;
    print(e, out);
    return out;
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::IntLit: return a.value == b.value;
        case Expr::Kind::VarQ:
        case Expr::Kind::VarX: return true;
        case Expr::Kind::BoundVar: return a.name == b.name;
        case Expr::Kind::Neg: return equal(*a.a, *b.a);
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
        case Expr::Kind::Pow: return equal(*a.a, *b.a) && equal(*a.b, *b.b);
        case Expr::Kind::Poch:
            if ((a.b == nullptr) != (b.b == nullptr)) return false;
            if (a.b && !equal(*a.b, *b.b)) return false;
            return equal(*a.a, *b.a) && a.base_x_deg == b.base_x_deg &&
                   a.base_q_shift == b.base_q_shift;
        case Expr::Kind::Sum:
            return a.name == b.name && a.sum_lo == b.sum_lo &&
                   a.sum_hi == b.sum_hi && equal(*a.a, *b.a);
    }
    return false;
}

}  // namespace qident::dsl
