#include "dcoc/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "dcoc/errors.hpp"

namespace dcoc {

namespace {

bool next_content_line(std::istream& in, std::string& line, long long& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;      // blank
        if (line[i] == '#') continue;              // comment
        return true;
    }
    return false;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    if (!(ss >> a >> b)) return false;
    std::string rest;
    if (ss >> rest) return false;
    return true;
}

} // namespace

Digraph read_edge_list(std::istream& in) {
    std::string line;
    long long line_no = 0;

    if (!next_content_line(in, line, line_no))
        fail("parse", "missing header line 'n m'");
    long long n = 0, m = 0;
    if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
        fail("parse", "bad header at line " + std::to_string(line_no) + ": expected 'n m'");

    Digraph::Builder b(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, line_no))
            fail("parse", "expected " + std::to_string(m) + " arcs, got " + std::to_string(i));
        long long u = 0, v = 0;
        if (!parse_two_ints(line, u, v))
            fail("parse", "bad arc at line " + std::to_string(line_no) + ": expected 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("parse", "arc endpoint out of range at line " + std::to_string(line_no));
        if (u == v)
            fail("parse", "self-loop at line " + std::to_string(line_no));
        if (b.has(static_cast<int>(u), static_cast<int>(v)))
            fail("parse", "duplicate arc at line " + std::to_string(line_no));
        b.add_arc(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_content_line(in, line, line_no))
        fail("parse", "trailing content at line " + std::to_string(line_no));
    return b.build();
}

Digraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("parse", "cannot open file: " + path);
    return read_edge_list(in);
}

Digraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& d) {
    out << d.n() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs_sorted()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Digraph& d) {
    std::ofstream out(path);
    if (!out) fail("parse", "cannot open file for writing: " + path);
    write_edge_list(out, d);
}

std::string edge_list_string(const Digraph& d) {
    std::ostringstream ss;
    write_edge_list(ss, d);
    return ss.str();
}

uint64_t edge_list_digest(const Digraph& d) {
    std::string bytes = edge_list_string(d);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace dcoc
