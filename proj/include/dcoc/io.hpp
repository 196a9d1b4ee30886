#ifndef DCOC_IO_HPP
#define DCOC_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dcoc/digraph.hpp"

namespace dcoc {

// Edge-list text format. First non-comment line: "n m". Then exactly m
// lines "u v" (0-indexed, arc u -> v). Lines starting with '#' are
// ignored anywhere in the file. The writer emits the canonical form:
// header, then arcs sorted by (u, v), one per line, no comments; reading
// the written form back reproduces the digraph and re-writing it
// reproduces the bytes.
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);
Digraph parse_edge_list(const std::string& text);

void write_edge_list(std::ostream& out, const Digraph& d);
void write_edge_list_file(const std::string& path, const Digraph& d);
std::string edge_list_string(const Digraph& d);

// FNV-1a over the canonical edge-list bytes; stable instance fingerprint
uint64_t edge_list_digest(const Digraph& d);

} // namespace dcoc

#endif
