#include "lambda/parser.hpp"

#include <cctype>
#include <charconv>

namespace lambda {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
    enum class Kind { Lambda, Dot, LParen, RParen, Name, End };
    Kind kind = Kind::End;
    std::size_t pos = 0;  // 1-based byte offset
    VarName name;
};

const char* token_desc(Token::Kind k) {
    switch (k) {
    case Token::Kind::Lambda: return "'\\'";
    case Token::Kind::Dot: return "'.'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::Name: return "identifier";
    case Token::Kind::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && is_space(src_[i_])) ++i_;
        const std::size_t pos = i_ + 1;
        if (i_ >= src_.size()) return {Token::Kind::End, pos, {}};
        const char c = src_[i_];
        if (c == '\\') {
            ++i_;
            return {Token::Kind::Lambda, pos, {}};
        }
        // UTF-8 lambda (0xCE 0xBB)
        if (static_cast<unsigned char>(c) == 0xCE && i_ + 1 < src_.size() &&
            static_cast<unsigned char>(src_[i_ + 1]) == 0xBB) {
            i_ += 2;
            return {Token::Kind::Lambda, pos, {}};
        }
        if (c == '.') { ++i_; return {Token::Kind::Dot, pos, {}}; }
        if (c == '(') { ++i_; return {Token::Kind::LParen, pos, {}}; }
        if (c == ')') { ++i_; return {Token::Kind::RParen, pos, {}}; }
        if (c == '#') return lex_generated(pos);
        if (is_ident_start(c)) {
            std::size_t j = i_;
            while (j < src_.size() && is_ident_char(src_[j])) ++j;
            VarName v{std::string(src_.substr(i_, j - i_))};
            i_ = j;
            return {Token::Kind::Name, pos, std::move(v)};
        }
        throw ParseError(pos, "unexpected character '" + printable(c) + "'");
    }

private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    static std::string printable(char c) {
        if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
        return buf;
    }

    Token lex_generated(std::size_t pos) {
        std::size_t j = i_ + 1;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        const std::string_view digits = src_.substr(i_ + 1, j - i_ - 1);
        if (digits.empty())
            throw ParseError(pos, "'#' must be followed by a decimal index");
        if (digits.size() > 1 && digits[0] == '0')
            throw ParseError(pos, "generated variable index may not have leading zeros");
        std::uint64_t value = 0;
        const auto* end = digits.data() + digits.size();
        const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
        if (ec != std::errc{} || ptr != end)
            throw ParseError(pos, "generated variable index out of range");
        i_ = j;
        return {Token::Kind::Name, pos, VarName::from_index(value)};
    }

    std::string_view src_;
    std::size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    TermPtr parse_whole() {
        TermPtr t = parse_term_rec();
        if (tok_.kind != Token::Kind::End)
            throw ParseError(tok_.pos, std::string("unexpected ") +
                                           token_desc(tok_.kind) + " after term");
        return t;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    TermPtr parse_term_rec() {
        if (tok_.kind == Token::Kind::Lambda) {
            const std::size_t lambda_pos = tok_.pos;
            advance();
            if (tok_.kind != Token::Kind::Name)
                throw ParseError(tok_.pos, "expected a binder after the lambda at position " +
                                               std::to_string(lambda_pos));
            VarName binder = std::move(tok_.name);
            advance();
            if (tok_.kind != Token::Kind::Dot)
                throw ParseError(tok_.pos, "expected '.' after binder");
            advance();
            return mk_abs(std::move(binder), parse_term_rec());
        }
        return parse_app();
    }

    TermPtr parse_app() {
        TermPtr t = parse_atom();
        while (tok_.kind == Token::Kind::Name || tok_.kind == Token::Kind::LParen)
            t = mk_app(std::move(t), parse_atom());
        return t;
    }

    TermPtr parse_atom() {
        switch (tok_.kind) {
        case Token::Kind::Name: {
            TermPtr t = mk_var(std::move(tok_.name));
            advance();
            return t;
        }
        case Token::Kind::LParen: {
            advance();
            TermPtr t = parse_term_rec();
            if (tok_.kind != Token::Kind::RParen)
                throw ParseError(tok_.pos, std::string("expected ')', found ") +
                                               token_desc(tok_.kind));
            advance();
            return t;
        }
        default:
            throw ParseError(tok_.pos, std::string("expected a term, found ") +
                                           token_desc(tok_.kind));
        }
    }

    Lexer lexer_;
    Token tok_;
};

}  // namespace

ParseError::ParseError(std::size_t pos, const std::string& message)
    : std::runtime_error("parse error at " + std::to_string(pos) + ": " + message),
      pos_(pos) {}

TermPtr parse_term(std::string_view input) { return Parser(input).parse_whole(); }

VarName parse_var_name(std::string_view input) {
    Lexer lexer(input);
    Token tok = lexer.next();
    if (tok.kind != Token::Kind::Name)
        throw ParseError(tok.pos, std::string("expected a variable name, found ") +
                                      token_desc(tok.kind));
    Token end = lexer.next();
    if (end.kind != Token::Kind::End)
        throw ParseError(end.pos, "trailing input after variable name");
    return std::move(tok.name);
}

}  // namespace lambda
