#ifndef AIL_PARSER_HPP
#define AIL_PARSER_HPP

#include <string>

#include "ail/formula.hpp"

namespace ail {

/// Syntax error with 1-based position and the token set that would have
/// been accepted at that point.
class ParseError : public AilError {
public:
    ParseError(int line, int column, const std::string& message,
               const std::string& expected);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

/// Grammar (unary ops bind tighter than &; precedence & > | > -> > <->):
///
///   formula := iff
///   iff     := imp ("<->" imp)*                      left-assoc
///   imp     := or ("->" imp)?                        right-assoc
///   or      := and ("|" and)*                        left-assoc
///   and     := unary ("&" unary)*                    left-assoc
///   unary   := "~" unary | modal unary | primary
///   modal   := ("A"|"I"|"E"|"S"|"C") "[" agent "]"
///            | ("+"|"-") "[" agent "]" "{" atom ("," atom)* "}"
///   primary := atom | "(" formula ")"
///
/// Atom and agent names match [a-z][a-zA-Z0-9_]*. A dynamic operator inside
/// an A[..] operand is rejected here as well.
FormulaPtr parse(const std::string& text);

/// True iff `name` is a well-formed atom/agent identifier.
bool is_identifier(const std::string& name);

}  // namespace ail

#endif
