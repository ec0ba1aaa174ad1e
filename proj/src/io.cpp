#include "growthcodes/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "growthcodes/errors.hpp"

namespace growthcodes {

namespace {

std::uint64_t read_count(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) throw ParseError(std::string("missing ") + what);
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(std::string("bad ") + what + ": '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError(std::string(what) + " out of range: " + token);
  }
}

}  // namespace

FieldMatrix read_matrix(std::istream& in) {
  const std::uint64_t q = read_count(in, "field size q");
  const std::uint64_t n = read_count(in, "length n");
  const std::uint64_t k = read_count(in, "dimension k");
  const PrimeField field(q);
  if (n * k > (std::uint64_t{1} << 32)) throw ParseError("matrix too large");

  std::vector<Residue> data;
  data.reserve(n * k);
  for (std::uint64_t i = 0; i < n * k; ++i) {
    const std::uint64_t v = read_count(in, "matrix entry");
    if (v >= q) {
      throw ParseError("entry " + std::to_string(v) + " at row " + std::to_string(i / n + 1) +
                       " is not a residue mod " + std::to_string(q));
    }
    data.push_back(static_cast<Residue>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("unexpected trailing data: '" + extra + "'");
  return {field, k, n, std::move(data)};
}

LinearCode read_code(std::istream& in) { return LinearCode(read_matrix(in)); }

LinearCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_code(in);
}

void write_matrix(std::ostream& out, const FieldMatrix& m) {
  out << m.field().modulus() << ' ' << m.cols() << ' ' << m.rows() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
}

void write_code(std::ostream& out, const LinearCode& code) { write_matrix(out, code.generator()); }

std::string to_text(const FieldMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace growthcodes
