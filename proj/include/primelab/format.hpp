#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace primelab::io {

// %.17g — round-trips doubles and is byte-stable for a given build.
std::string fmt_double(double v);

// Real part alone when the imaginary part is exactly zero, else "re+imi".
std::string fmt_complex(std::complex<double> v);

// A preformatted table cell; quoted cells are emitted as JSON strings,
// unquoted ones as raw JSON tokens (numbers, booleans).
struct Cell {
    std::string text;
    bool quoted = false;
};

Cell num(uint64_t v);
Cell num(int64_t v);
Cell num(double v);
Cell num(std::complex<double> v);
Cell boolean(bool v);
Cell str(std::string v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

// CSV with the exact header line, or a JSON array of objects in header
// order. Both are deterministic for identical tables.
void write_table(std::ostream& out, const Table& table, bool as_json);

}  // namespace primelab::io
