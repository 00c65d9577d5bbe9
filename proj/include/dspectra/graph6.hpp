#pragma once

#include <string>
#include <string_view>

#include "dspectra/graph.hpp"

namespace dspectra {

// graph6 text codec, interoperable with the nauty tool family: order byte
// n+63 for n <= 62 (or '~' plus three bytes for larger n), followed by the
// upper-triangle adjacency bits in column-major order, packed big-endian
// into 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header and ignores trailing whitespace.
// Malformed input throws parse_error naming the byte offset.
Graph graph6_decode(std::string_view line);

}  // namespace dspectra
