#include "primelab/format.hpp"

#include <cstdio>

namespace primelab::io {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_complex(std::complex<double> v) {
    if (v.imag() == 0.0) return fmt_double(v.real());
    return fmt_double(v.real()) + "+" + fmt_double(v.imag()) + "i";
}

Cell num(uint64_t v) { return {std::to_string(v), false}; }
Cell num(int64_t v) { return {std::to_string(v), false}; }
Cell num(double v) { return {fmt_double(v), false}; }
Cell num(std::complex<double> v) { return {fmt_complex(v), v.imag() != 0.0}; }
Cell boolean(bool v) { return {v ? "true" : "false", false}; }
Cell str(std::string v) { return {std::move(v), true}; }

namespace {

void json_escape(std::ostream& out, const std::string& s) {
    out << '"';
    for (char c : s) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
    }
    out << '"';
}

}  // namespace

void write_table(std::ostream& out, const Table& table, bool as_json) {
    if (!as_json) {
        for (size_t i = 0; i < table.header.size(); ++i)
            out << (i ? "," : "") << table.header[i];
        out << '\n';
        for (const auto& row : table.rows) {
            for (size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i].text;
            out << '\n';
        }
        return;
    }
    out << "[";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n " : "\n ") << "{";
        const auto& row = table.rows[r];
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            json_escape(out, table.header[i]);
            out << ":";
            if (row[i].quoted)
                json_escape(out, row[i].text);
            else
                out << row[i].text;
        }
        out << "}";
    }
    out << "\n]\n";
}

}  // namespace primelab::io
