#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontoembed/rdf.hpp"

namespace ontoembed {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_number(line) {}
    std::size_t line_number;
};

// Line-oriented N-Triples. Comments (#) and blank lines are skipped,
// duplicate triples are dropped, blank-node labels are kept per document.
// Malformed lines throw ParseError with the 1-based line number.
std::vector<Triple> parse_ntriples(std::istream& in);
std::vector<Triple> parse_ntriples(const std::string& text);
std::vector<Triple> parse_ntriples_file(const std::string& path);

std::string to_ntriples_line(const Triple& t);
void write_ntriples(std::ostream& out, const std::vector<Triple>& triples);
void write_ntriples_file(const std::string& path, const std::vector<Triple>& triples);

}  // namespace ontoembed
