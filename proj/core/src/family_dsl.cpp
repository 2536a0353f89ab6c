#include "trw/family_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <utility>

#include "trw/errors.hpp"

namespace trw {

namespace {

struct Token {
    enum class Kind { Ident, Nat, Plus, Minus, Star, Caret, LParen, RParen, Colon, Comma, DotDot, End };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::string describe(const Token& t) {
    if (t.kind == Token::Kind::End) return "end of line";
    return "'" + t.text + "'";
}

std::vector<Token> lex_line(const std::string& s, std::size_t lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, std::size_t col) {
        out.push_back(Token{k, std::move(text), lineno, col});
    };
    while (i < s.size()) {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            continue;
        }
        const std::size_t col = i + 1;
        if (std::isalpha(ch) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            push(Token::Kind::Ident, s.substr(i, j - i), col);
            i = j;
            continue;
        }
        if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            push(Token::Kind::Nat, s.substr(i, j - i), col);
            i = j;
            continue;
        }
        switch (ch) {
            case '+': push(Token::Kind::Plus, "+", col); ++i; break;
            case '-': push(Token::Kind::Minus, "-", col); ++i; break;
            case '*': push(Token::Kind::Star, "*", col); ++i; break;
            case '^': push(Token::Kind::Caret, "^", col); ++i; break;
            case '(': push(Token::Kind::LParen, "(", col); ++i; break;
            case ')': push(Token::Kind::RParen, ")", col); ++i; break;
            case ':': push(Token::Kind::Colon, ":", col); ++i; break;
            case ',': push(Token::Kind::Comma, ",", col); ++i; break;
            case '.':
                if (i + 1 < s.size() && s[i + 1] == '.') {
                    push(Token::Kind::DotDot, "..", col);
                    i += 2;
                    break;
                }
                throw SyntaxError(lineno, col, "'..'", "'.'");
            default:
                throw SyntaxError(lineno, col, "a valid token", std::string("'") + s[i] + "'");
        }
    }
    push(Token::Kind::End, "", s.size() + 1);
    return out;
}

constexpr unsigned kExponentCap = 1000;

class ExprParser {
  public:
    ExprParser(const std::vector<Token>& toks, std::size_t start,
               const std::vector<std::string>& params)
        : toks_(toks), pos_(start), params_(params) {}

    ParamXPoly parse_to_end() {
        ParamXPoly v = expr();
        expect(Token::Kind::End, "end of line");
        return v;
    }

  private:
    const std::vector<Token>& toks_;
    std::size_t pos_;
    const std::vector<std::string>& params_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    const Token& expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) throw SyntaxError(peek().line, peek().col, what, describe(peek()));
        return advance();
    }

    ParamXPoly expr() {
        ParamXPoly v = term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            bool minus = advance().kind == Token::Kind::Minus;
            ParamXPoly t = term();
            v = minus ? v - t : v + t;
        }
        return v;
    }

    ParamXPoly term() {
        ParamXPoly v = factor();
        while (peek().kind == Token::Kind::Star) {
            advance();
            v = v * factor();
        }
        return v;
    }

    ParamXPoly factor() {
        bool neg = false;
        if (peek().kind == Token::Kind::Minus) {
            neg = true;
            advance();
        }
        ParamXPoly v = atom();
        if (peek().kind == Token::Kind::Caret) {
            advance();
            const Token& t = expect(Token::Kind::Nat, "a natural-number exponent");
            mpz_class e(t.text);
            if (e > kExponentCap)
                throw SyntaxError(t.line, t.col,
                                  "an exponent of at most " + std::to_string(kExponentCap),
                                  "'" + t.text + "'");
            v = pow(v, static_cast<unsigned>(e.get_ui()));
        }
        return neg ? -v : v;
    }

    ParamXPoly atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Nat) {
            advance();
            return ParamXPoly::constant(params_, mpz_class(t.text));
        }
        if (t.kind == Token::Kind::Ident) {
            advance();
            if (t.text == "x") return ParamXPoly::variable_x(params_);
            if (std::find(params_.begin(), params_.end(), t.text) != params_.end())
                return ParamXPoly::param(params_, t.text);
            throw SyntaxError(t.line, t.col, "'x' or a declared parameter", "'" + t.text + "'");
        }
        if (t.kind == Token::Kind::LParen) {
            advance();
            ParamXPoly v = expr();
            expect(Token::Kind::RParen, "')'");
            return v;
        }
        throw SyntaxError(t.line, t.col, "a number, 'x', a parameter, or '('", describe(t));
    }
};

// True if the line holds nothing but whitespace.
bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return c == ' ' || c == '\t' || c == '\r';
    });
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    lines.push_back(std::move(cur));
    return lines;
}

// Requires tokens[0] = keyword ident, tokens[1] = ':'.
void expect_directive(const std::vector<Token>& toks, const std::string& keyword) {
    if (toks[0].kind != Token::Kind::Ident || toks[0].text != keyword)
        throw SyntaxError(toks[0].line, toks[0].col, "'" + keyword + ":'", describe(toks[0]));
    if (toks.size() < 2 || toks[1].kind != Token::Kind::Colon)
        throw SyntaxError(toks[1].line, toks[1].col, "':'", describe(toks[1]));
}

mpz_class parse_signed_int(const std::vector<Token>& toks, std::size_t& pos) {
    bool neg = false;
    if (toks[pos].kind == Token::Kind::Minus) {
        neg = true;
        ++pos;
    }
    if (toks[pos].kind != Token::Kind::Nat)
        throw SyntaxError(toks[pos].line, toks[pos].col, "an integer", describe(toks[pos]));
    mpz_class v(toks[pos].text);
    ++pos;
    return neg ? mpz_class(-v) : v;
}

}  // namespace

ParamXPoly parse_poly_expr(const std::string& text, const std::vector<std::string>& params) {
    std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (!blank(lines[i]))
            throw SyntaxError(i + 1, 1, "a single-line expression", "a second line");
    std::vector<Token> toks = lex_line(lines[0], 1);
    return ExprParser(toks, 0, params).parse_to_end();
}

ParamFamily parse_family(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);

    // Tokenized nonblank lines, in order.
    std::vector<std::vector<Token>> rows;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (!blank(lines[i])) rows.push_back(lex_line(lines[i], i + 1));

    const std::size_t end_line = lines.size() + 1;
    std::size_t row = 0;
    auto need_row = [&](const std::string& what) -> const std::vector<Token>& {
        if (row >= rows.size()) throw SyntaxError(end_line, 1, what, "end of document");
        return rows[row];
    };

    // name: <identifier>
    {
        const auto& toks = need_row("'name:' line");
        expect_directive(toks, "name");
        if (toks.size() < 3 || toks[2].kind != Token::Kind::Ident)
            throw SyntaxError(toks[2].line, toks[2].col, "an identifier", describe(toks[2]));
        if (toks.size() > 4 || toks[3].kind != Token::Kind::End)
            throw SyntaxError(toks[3].line, toks[3].col, "end of line", describe(toks[3]));
        ++row;
    }
    const std::string fam_name = rows[0][2].text;

    // params: <id> (, <id>)*
    std::vector<std::string> params;
    {
        const auto& toks = need_row("'params:' line");
        expect_directive(toks, "params");
        std::size_t pos = 2;
        while (true) {
            if (toks[pos].kind != Token::Kind::Ident)
                throw SyntaxError(toks[pos].line, toks[pos].col, "a parameter name",
                                  describe(toks[pos]));
            const Token& p = toks[pos];
            if (p.text == "x")
                throw SyntaxError(p.line, p.col, "a parameter name other than 'x'", "'x'");
            if (std::find(params.begin(), params.end(), p.text) != params.end())
                throw SyntaxError(p.line, p.col, "a distinct parameter name",
                                  "'" + p.text + "'");
            params.push_back(p.text);
            ++pos;
            if (toks[pos].kind == Token::Kind::Comma) {
                if (params.size() == 2)
                    throw SyntaxError(toks[pos].line, toks[pos].col, "at most 2 parameters",
                                      "','");
                ++pos;
                continue;
            }
            break;
        }
        if (toks[pos].kind != Token::Kind::End)
            throw SyntaxError(toks[pos].line, toks[pos].col, "',' or end of line",
                              describe(toks[pos]));
        ++row;
    }

    // poly: <expr>
    ParamXPoly poly;
    {
        const auto& toks = need_row("'poly:' line");
        expect_directive(toks, "poly");
        poly = ExprParser(toks, 2, params).parse_to_end();
        ++row;
    }

    // range <id>: <int>..<int>, at most once per parameter
    std::vector<ParamRange> ranges(params.size(), ParamRange{-10, 10});
    std::vector<bool> seen(params.size(), false);
    for (; row < rows.size(); ++row) {
        const auto& toks = rows[row];
        if (toks[0].kind != Token::Kind::Ident || toks[0].text != "range")
            throw SyntaxError(toks[0].line, toks[0].col, "'range' or end of document",
                              describe(toks[0]));
        if (toks.size() < 2 || toks[1].kind != Token::Kind::Ident)
            throw SyntaxError(toks[1].line, toks[1].col, "a parameter name", describe(toks[1]));
        auto it = std::find(params.begin(), params.end(), toks[1].text);
        if (it == params.end())
            throw SyntaxError(toks[1].line, toks[1].col, "a declared parameter",
                              "'" + toks[1].text + "'");
        const std::size_t pidx = static_cast<std::size_t>(it - params.begin());
        if (seen[pidx])
            throw SyntaxError(toks[1].line, toks[1].col, "a parameter without a range yet",
                              "'" + toks[1].text + "'");
        if (toks.size() < 3 || toks[2].kind != Token::Kind::Colon)
            throw SyntaxError(toks[2].line, toks[2].col, "':'", describe(toks[2]));
        std::size_t pos = 3;
        mpz_class lo = parse_signed_int(toks, pos);
        if (toks[pos].kind != Token::Kind::DotDot)
            throw SyntaxError(toks[pos].line, toks[pos].col, "'..'", describe(toks[pos]));
        ++pos;
        mpz_class hi = parse_signed_int(toks, pos);
        if (toks[pos].kind != Token::Kind::End)
            throw SyntaxError(toks[pos].line, toks[pos].col, "end of line", describe(toks[pos]));
        if (lo > hi)
            throw SyntaxError(toks[3].line, toks[3].col, "a nonempty range (lo <= hi)",
                              lo.get_str() + ".." + hi.get_str());
        ranges[pidx] = ParamRange{std::move(lo), std::move(hi)};
        seen[pidx] = true;
    }

    const unsigned degree = static_cast<unsigned>(std::max(poly.degree(), 0));
    return make_family(fam_name, params, degree, std::move(poly), std::move(ranges), "user");
}

}  // namespace trw
