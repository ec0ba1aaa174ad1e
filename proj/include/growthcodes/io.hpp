#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "growthcodes/code.hpp"
#include "growthcodes/linalg.hpp"

namespace growthcodes {

// Generator-matrix text format:
//
//   q n k
//   k lines of n space-separated residues in 0..q-1
//
// Writers emit single spaces and a newline after every line, so equal
// matrices serialize to identical bytes. Readers accept any whitespace and an
// optional trailing newline.

// Throws ParseError on malformed input or CompositeModulus for a bad q.
FieldMatrix read_matrix(std::istream& in);
// Also validates the rows as a basis (DependentBasis).
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const FieldMatrix& m);
void write_code(std::ostream& out, const LinearCode& code);
std::string to_text(const FieldMatrix& m);

// Throws IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace growthcodes
