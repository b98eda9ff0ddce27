#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "flatcover/hypergraph.hpp"

namespace flatcover {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ".hg" text format:
//   c <comment>
//   p hg <n> <m>
//   e <v1> <v2> ...     (m lines, ascending 1-based ids; "e" alone = empty edge)
Hypergraph parse_hg(std::istream& in);
Hypergraph parse_hg(const std::string& text);
std::string serialize_hg(const Hypergraph& h);

// Cover certificate:
//   s cover <count>
//   i <edge-index>      (count lines)
Cover parse_cover(std::istream& in);
Cover parse_cover(const std::string& text);
std::string serialize_cover(const Cover& c);

// Grouping trace, one line per round:
//   g <|S|> <v-id> : <S members> ; <preimage pairs>
std::string serialize_trace(const GroupTrace& trace);

}  // namespace flatcover
