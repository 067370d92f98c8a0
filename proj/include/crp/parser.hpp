#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "crp/model.hpp"

namespace crp {

enum class ParseErrorKind { Lex, Syntax, EmptyHead, CrDisjunctiveHead };

// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, int column, const std::string& message);

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ParseErrorKind kind_;
    int line_;
    int column_;
};

// Grammar (ground programs only):
//   program  := statement*
//   statement:= head ( ":-" body | ":+" body? )? "."
//   head     := literal ( "|" literal )*
//   body     := ext_lit ( "," ext_lit )*
//   ext_lit  := "not"? literal
//   literal  := "-"? atom
//   atom     := [a-z][a-zA-Z0-9_]*
// "%" starts a comment running to end of line. "not" is reserved.
Program parse_program(std::string_view text);

/// One literal, e.g. "a" or "-a". Throws ParseError on anything else.
Literal parse_literal(std::string_view text);

/// Surface syntax of the whole program, one rule per line.
/// parse_program(render_program(p)) == p.
std::string render_program(const Program& p);

}  // namespace crp
