#pragma once

// The twist-word DSL.
//
//   word  := term { term }
//   term  := atom [ '^' integer ]
//   atom  := TWIST | '(' word ')' | '[' word ',' word ']' | OPAQUE
//   TWIST := 't_' identifier
//   OPAQUE:= '?' identifier [ '(' key '=' integer { ',' key '=' integer } ')' ]
//
// Products read left to right and compose functionally (rightmost acts
// first), so printed words match the usual displayed order. Identifiers are
// alphanumeric; subscripts are flattened (c_1 is written c1). Opaque labels
// "C" or "C<digits>" denote commutator blocks, anything else an unknown
// element. The empty string is the empty word.
//
// parse_word(print_word(w)) is the identity on reduced words; derivation
// metadata attached to opaque blocks (images, declared twist counts) is not
// part of the surface syntax and does not survive a round trip.

#include <string>

#include "mcg/words.hpp"

namespace mcg {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

TwistWord parse_word(const std::string& src);
std::string print_word(const TwistWord& w);

}  // namespace mcg
