#include "crp/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace crp {

namespace {

const char* kind_label(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Lex: return "lex error";
        case ParseErrorKind::Syntax: return "syntax error";
        case ParseErrorKind::EmptyHead: return "empty head";
        case ParseErrorKind::CrDisjunctiveHead: return "disjunctive cr-rule head";
    }
    return "parse error";
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         kind_label(kind) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

enum class TokenType { Ident, Not, Minus, Pipe, Comma, Dot, Arrow, CrArrow, End };

struct Token {
    TokenType type;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_trivia();
        int line = line_, column = column_;
        if (pos_ >= text_.size()) return {TokenType::End, "", line, column};
        char c = text_[pos_];
        if (c == '-') return advance({TokenType::Minus, "-", line, column}, 1);
        if (c == '|') return advance({TokenType::Pipe, "|", line, column}, 1);
        if (c == ',') return advance({TokenType::Comma, ",", line, column}, 1);
        if (c == '.') return advance({TokenType::Dot, ".", line, column}, 1);
        if (c == ':') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-')
                return advance({TokenType::Arrow, ":-", line, column}, 2);
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '+')
                return advance({TokenType::CrArrow, ":+", line, column}, 2);
            throw ParseError(ParseErrorKind::Lex, line, column, "expected ':-' or ':+'");
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_'))
                consume_char();
            std::string word(text_.substr(start, pos_ - start));
            if (word == "not") return {TokenType::Not, word, line, column};
            if (!is_valid_atom_name(word))
                throw ParseError(ParseErrorKind::Lex, line, column,
                                 "atom must start with a lowercase letter: '" + word + "'");
            return {TokenType::Ident, word, line, column};
        }
        throw ParseError(ParseErrorKind::Lex, line, column,
                         std::string("unexpected character '") + c + "'");
    }

private:
    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') consume_char();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                consume_char();
            } else {
                break;
            }
        }
    }

    void consume_char() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    Token advance(Token t, int width) {
        pos_ += static_cast<std::size_t>(width);
        column_ += width;
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    Program parse() {
        std::vector<Rule> rules;
        while (current_.type != TokenType::End) rules.push_back(statement(rules.size()));
        return Program(std::move(rules));
    }

    Literal single_literal() {
        Literal l = literal();
        expect(TokenType::End, "end of input");
        return l;
    }

private:
    Rule statement(std::size_t id) {
        if (current_.type == TokenType::Arrow || current_.type == TokenType::CrArrow)
            throw ParseError(ParseErrorKind::EmptyHead, current_.line, current_.column,
                             "rule head must not be empty");
        std::vector<Literal> head{literal()};
        while (current_.type == TokenType::Pipe) {
            shift();
            head.push_back(literal());
        }
        RuleKind kind = RuleKind::Regular;
        std::vector<Literal> pos_body, neg_body;
        if (current_.type == TokenType::Arrow) {
            shift();
            body(pos_body, neg_body);
        } else if (current_.type == TokenType::CrArrow) {
            if (head.size() > 1)
                throw ParseError(ParseErrorKind::CrDisjunctiveHead, current_.line, current_.column,
                                 "cr-rule head must be a single literal");
            kind = RuleKind::Cr;
            shift();
            if (current_.type != TokenType::Dot) body(pos_body, neg_body);
        }
        expect(TokenType::Dot, "'.'");
        return Rule(static_cast<int>(id), kind, std::move(head), std::move(pos_body),
                    std::move(neg_body));
    }

    void body(std::vector<Literal>& pos, std::vector<Literal>& neg) {
        ext_literal(pos, neg);
        while (current_.type == TokenType::Comma) {
            shift();
            ext_literal(pos, neg);
        }
    }

    void ext_literal(std::vector<Literal>& pos, std::vector<Literal>& neg) {
        if (current_.type == TokenType::Not) {
            shift();
            neg.push_back(literal());
        } else {
            pos.push_back(literal());
        }
    }

    Literal literal() {
        bool negated = false;
        if (current_.type == TokenType::Minus) {
            negated = true;
            shift();
        }
        if (current_.type != TokenType::Ident)
            throw ParseError(ParseErrorKind::Syntax, current_.line, current_.column,
                             "expected atom, got '" + describe(current_) + "'");
        Literal l(current_.text, negated);
        shift();
        return l;
    }

    void expect(TokenType type, const std::string& what) {
        if (current_.type != type)
            throw ParseError(ParseErrorKind::Syntax, current_.line, current_.column,
                             "expected " + what + ", got '" + describe(current_) + "'");
        shift();
    }

    static std::string describe(const Token& t) {
        return t.type == TokenType::End ? "end of input" : t.text;
    }

    void shift() { current_ = lexer_.next(); }

    Lexer lexer_;
    Token current_{TokenType::End, "", 1, 1};
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

Literal parse_literal(std::string_view text) { return Parser(text).single_literal(); }

std::string render_program(const Program& p) {
    std::string out;
    for (const auto& r : p.rules()) {
        out += to_string(r);
        out += '\n';
    }
    return out;
}

}  // namespace crp
