#ifndef FINSEMI_IO_HPP_
#define FINSEMI_IO_HPP_

#include <iosfwd>
#include <string>

#include "finsemi/semigroup.hpp"

namespace finsemi {

// Cayley-table text format:
//   - optional comment lines starting with '#'
//   - first non-comment line: the order n
//   - next n lines: n whitespace-separated integers in 0..n-1,
//     row index = left factor
//   - optional final line "names: a b c ..." with n distinct tokens
//
// The canonical form emitted by to_table_text has no comments, single
// spaces, and a trailing newline on every line; parsing a canonical file and
// re-serializing reproduces it byte for byte.

FiniteSemigroup parse_table_text(std::istream& in);
FiniteSemigroup parse_table_text(const std::string& text);

//! JSON form: {"order": n, "table": [[...]], "names": [...]} with "names"
//! omitted when absent.
FiniteSemigroup parse_table_json(std::istream& in);
FiniteSemigroup parse_table_json(const std::string& text);

//! Dispatches on the first non-whitespace byte ('{' selects JSON).
FiniteSemigroup parse_table_auto(std::istream& in);

std::string to_table_text(const FiniteSemigroup& S);
std::string to_table_json(const FiniteSemigroup& S);

}  // namespace finsemi

#endif  // FINSEMI_IO_HPP_
