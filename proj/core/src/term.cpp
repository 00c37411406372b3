#include "mrel/term.hpp"

#include <cctype>

#include "mrel/modal.hpp"
#include "mrel/star.hpp"

namespace mrel {

namespace {

TermPtr make(TermKind kind, std::string var, TermPtr lhs, TermPtr rhs) {
    auto t = std::make_shared<Term>();
    t->kind = kind;
    t->var = std::move(var);
    t->lhs = std::move(lhs);
    t->rhs = std::move(rhs);
    return t;
}

bool is_reserved(const std::string& name) {
    return name == "0" || name == "1s" || name == "1p" || name == "U";
}

}  // namespace

TermPtr t_zero() { return make(TermKind::Zero, {}, nullptr, nullptr); }
TermPtr t_unit_seq() { return make(TermKind::UnitSeq, {}, nullptr, nullptr); }
TermPtr t_unit_par() { return make(TermKind::UnitPar, {}, nullptr, nullptr); }
TermPtr t_univ() { return make(TermKind::Univ, {}, nullptr, nullptr); }
TermPtr t_var(std::string name) { return make(TermKind::Var, std::move(name), nullptr, nullptr); }
TermPtr t_plus(TermPtr l, TermPtr r) { return make(TermKind::Plus, {}, std::move(l), std::move(r)); }
TermPtr t_seq(TermPtr l, TermPtr r) { return make(TermKind::Seq, {}, std::move(l), std::move(r)); }
TermPtr t_par(TermPtr l, TermPtr r) { return make(TermKind::Par, {}, std::move(l), std::move(r)); }
TermPtr t_dom(TermPtr t) { return make(TermKind::Dom, {}, std::move(t), nullptr); }
TermPtr t_anti(TermPtr t) { return make(TermKind::Anti, {}, std::move(t), nullptr); }
TermPtr t_star(TermPtr t) { return make(TermKind::Star, {}, std::move(t), nullptr); }
TermPtr t_bstar(TermPtr l, TermPtr r) { return make(TermKind::BStar, {}, std::move(l), std::move(r)); }
TermPtr t_dia(TermPtr l, TermPtr r) { return make(TermKind::Dia, {}, std::move(l), std::move(r)); }
TermPtr t_box(TermPtr l, TermPtr r) { return make(TermKind::Box, {}, std::move(l), std::move(r)); }

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->var != b->var) return false;
    return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
}

namespace {

enum class Tok { End, Plus, Semi, Par, Star, LAngle, RAngle, LBrack, RBrack,
                 LParen, RParen, Comma, Ident };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': current_ = {Tok::Plus, "+", start}; ++pos_; return;
            case ';': current_ = {Tok::Semi, ";", start}; ++pos_; return;
            case '<': current_ = {Tok::LAngle, "<", start}; ++pos_; return;
            case '>': current_ = {Tok::RAngle, ">", start}; ++pos_; return;
            case '[': current_ = {Tok::LBrack, "[", start}; ++pos_; return;
            case ']': current_ = {Tok::RBrack, "]", start}; ++pos_; return;
            case '(': current_ = {Tok::LParen, "(", start}; ++pos_; return;
            case ')': current_ = {Tok::RParen, ")", start}; ++pos_; return;
            case ',': current_ = {Tok::Comma, ",", start}; ++pos_; return;
            case '|':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '|') {
                    current_ = {Tok::Par, "||", start};
                    pos_ += 2;
                    return;
                }
                throw ParseError("stray '|'", start);
            case '^':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                    current_ = {Tok::Star, "^*", start};
                    pos_ += 2;
                    return;
                }
                throw ParseError("expected '^*'", start);
            default:
                break;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                    text_[end] == '_')) {
                ++end;
            }
            current_ = {Tok::Ident, text_.substr(pos_, end - pos_), start};
            pos_ = end;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{Tok::End, "", 0};
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    TermPtr parse() {
        TermPtr t = plus();
        if (lex_.peek().kind != Tok::End) {
            throw ParseError("trailing input", lex_.peek().pos);
        }
        return t;
    }

  private:
    TermPtr plus() {
        TermPtr t = par();
        while (lex_.peek().kind == Tok::Plus) {
            lex_.take();
            t = t_plus(std::move(t), par());
        }
        return t;
    }

    TermPtr par() {
        TermPtr t = sequence();
        while (lex_.peek().kind == Tok::Par) {
            lex_.take();
            t = t_par(std::move(t), sequence());
        }
        return t;
    }

    TermPtr sequence() {
        TermPtr t = unary();
        while (lex_.peek().kind == Tok::Semi) {
            lex_.take();
            t = t_seq(std::move(t), unary());
        }
        return t;
    }

    TermPtr unary() {
        const Token& tok = lex_.peek();
        if (tok.kind == Tok::LAngle) {
            lex_.take();
            TermPtr program = plus();
            expect(Tok::RAngle, "'>'");
            return t_dia(std::move(program), unary());
        }
        if (tok.kind == Tok::LBrack) {
            lex_.take();
            TermPtr program = plus();
            expect(Tok::RBrack, "']'");
            return t_box(std::move(program), unary());
        }
        return postfix();
    }

    TermPtr postfix() {
        TermPtr t = primary();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            t = t_star(std::move(t));
        }
        return t;
    }

    TermPtr primary() {
        const Token tok = lex_.take();
        switch (tok.kind) {
            case Tok::LParen: {
                TermPtr t = plus();
                expect(Tok::RParen, "')'");
                return t;
            }
            case Tok::Ident:
                if (tok.text == "0") return t_zero();
                if (tok.text == "1s") return t_unit_seq();
                if (tok.text == "1p") return t_unit_par();
                if (tok.text == "U") return t_univ();
                if (tok.text == "d" && lex_.peek().kind == Tok::LParen) {
                    lex_.take();
                    TermPtr t = plus();
                    expect(Tok::RParen, "')'");
                    return t_dom(std::move(t));
                }
                if (tok.text == "a" && lex_.peek().kind == Tok::LParen) {
                    lex_.take();
                    TermPtr t = plus();
                    expect(Tok::RParen, "')'");
                    return t_anti(std::move(t));
                }
                if (tok.text == "bstar" && lex_.peek().kind == Tok::LParen) {
                    lex_.take();
                    TermPtr l = plus();
                    expect(Tok::Comma, "','");
                    TermPtr r = plus();
                    expect(Tok::RParen, "')'");
                    return t_bstar(std::move(l), std::move(r));
                }
                if (!valid_var(tok.text)) {
                    throw ParseError("invalid variable name '" + tok.text + "'", tok.pos);
                }
                return t_var(tok.text);
            default:
                throw ParseError("expected a term", tok.pos);
        }
    }

    static bool valid_var(const std::string& name) {
        if (name.empty() || is_reserved(name)) return false;
        return std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
    }

    void expect(Tok kind, const char* what) {
        if (lex_.peek().kind != kind) {
            throw ParseError(std::string("expected ") + what, lex_.peek().pos);
        }
        lex_.take();
    }

    Lexer lex_;
};

// Binding levels used by the printer; higher binds tighter.
constexpr int kPlusLevel = 0;
constexpr int kParLevel = 1;
constexpr int kSeqLevel = 2;
constexpr int kUnaryLevel = 3;
constexpr int kPostfixLevel = 4;
constexpr int kPrimaryLevel = 5;

int term_level(const Term& t) {
    switch (t.kind) {
        case TermKind::Plus: return kPlusLevel;
        case TermKind::Par: return kParLevel;
        case TermKind::Seq: return kSeqLevel;
        case TermKind::Dia:
        case TermKind::Box: return kUnaryLevel;
        case TermKind::Star: return kPostfixLevel;
        default: return kPrimaryLevel;
    }
}

void print(const TermPtr& t, int min_level, std::string& out) {
    const bool parens = term_level(*t) < min_level;
    if (parens) out += '(';
    switch (t->kind) {
        case TermKind::Zero: out += '0'; break;
        case TermKind::UnitSeq: out += "1s"; break;
        case TermKind::UnitPar: out += "1p"; break;
        case TermKind::Univ: out += 'U'; break;
        case TermKind::Var: out += t->var; break;
        case TermKind::Plus:
            print(t->lhs, kPlusLevel, out);
            out += " + ";
            print(t->rhs, kParLevel, out);
            break;
        case TermKind::Par:
            print(t->lhs, kParLevel, out);
            out += " || ";
            print(t->rhs, kSeqLevel, out);
            break;
        case TermKind::Seq:
            print(t->lhs, kSeqLevel, out);
            out += " ; ";
            print(t->rhs, kUnaryLevel, out);
            break;
        case TermKind::Dom:
            out += "d(";
            print(t->lhs, kPlusLevel, out);
            out += ')';
            break;
        case TermKind::Anti:
            out += "a(";
            print(t->lhs, kPlusLevel, out);
            out += ')';
            break;
        case TermKind::Star:
            print(t->lhs, kPostfixLevel, out);
            out += "^*";
            break;
        case TermKind::BStar:
            out += "bstar(";
            print(t->lhs, kPlusLevel, out);
            out += ", ";
            print(t->rhs, kPlusLevel, out);
            out += ')';
            break;
        case TermKind::Dia:
            out += '<';
            print(t->lhs, kPlusLevel, out);
            out += "> ";
            print(t->rhs, kUnaryLevel, out);
            break;
        case TermKind::Box:
            out += '[';
            print(t->lhs, kPlusLevel, out);
            out += "] ";
            print(t->rhs, kUnaryLevel, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).parse(); }

std::string term_to_string(const TermPtr& t) {
    std::string out;
    print(t, kPlusLevel, out);
    return out;
}

void Environment::bind(const std::string& name, Multirelation value) {
    if (is_reserved(name)) {
        throw Error("'" + name + "' is reserved and cannot be bound");
    }
    require_same_universe(universe_, value.universe(), "bind");
    bindings_.insert_or_assign(name, std::move(value));
}

bool Environment::bound(const std::string& name) const {
    return bindings_.count(name) != 0;
}

const Multirelation& Environment::lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) throw Error("unbound variable '" + name + "'");
    return it->second;
}

bool Environment::operator==(const Environment& rhs) const {
    return universe_ == rhs.universe_ && bindings_ == rhs.bindings_;
}

Multirelation eval_term(const TermPtr& t, const Environment& env) {
    const Universe& u = env.universe();
    switch (t->kind) {
        case TermKind::Zero: return Multirelation::empty(u);
        case TermKind::UnitSeq: return Multirelation::unit_seq(u);
        case TermKind::UnitPar: return Multirelation::unit_par(u);
        case TermKind::Univ: return Multirelation::universal(u);
        case TermKind::Var: return env.lookup(t->var);
        case TermKind::Plus: return eval_term(t->lhs, env) | eval_term(t->rhs, env);
        case TermKind::Seq: return seq(eval_term(t->lhs, env), eval_term(t->rhs, env));
        case TermKind::Par: return par(eval_term(t->lhs, env), eval_term(t->rhs, env));
        case TermKind::Dom: return domain(eval_term(t->lhs, env)).rel();
        case TermKind::Anti: return antidomain(eval_term(t->lhs, env)).rel();
        case TermKind::Star: return star(eval_term(t->lhs, env));
        case TermKind::BStar:
            return binary_star(eval_term(t->lhs, env), eval_term(t->rhs, env));
        case TermKind::Dia:
            return diamond(eval_term(t->lhs, env), domain(eval_term(t->rhs, env))).rel();
        case TermKind::Box:
            return antidomain(
                       seq(eval_term(t->lhs, env),
                           antidomain(eval_term(t->rhs, env)).rel()))
                .rel();
    }
    throw Error("eval_term: unknown node");
}

}  // namespace mrel
