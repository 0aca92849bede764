#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "hypcode/field.hpp"
#include "hypcode/lattice.hpp"

namespace hypcode {

// Text interchange formats shared by the CLI and the test fixtures.
//
//   field:  GF p=<p> k=<k> mod=<c0,c1,...,ck>
//   set:    SET q=<q> m=<m> tag=<tag>
//           <e1,e2,...,em>        (one member per line, lex sorted)
//   word:   comma-separated decimal element indices on one line
//
// A code spec file is the field line followed by a set block.

void write_set(std::ostream& os, const ExponentSet& s);
ExponentSet read_set(std::istream& is);

void write_word(std::ostream& os, const Word& w);
Word read_word(std::istream& is);

void write_code_spec(std::ostream& os, const Field& f, const ExponentSet& s);
std::pair<FieldPtr, ExponentSet> read_code_spec(std::istream& is);

// File based convenience wrappers; throw std::runtime_error on open failure.
void save_set(const std::string& path, const ExponentSet& s);
ExponentSet load_set(const std::string& path);
void save_word(const std::string& path, const Word& w);
Word load_word(const std::string& path);

} // namespace hypcode
