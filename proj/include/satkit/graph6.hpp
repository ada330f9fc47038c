#pragma once

#include <string>
#include <string_view>

#include "satkit/graph.hpp"

namespace satkit {

// graph6 text format: upper triangle read column by column, packed into
// 6-bit groups, each group printed as group+63.  Orders up to 62 carry the
// order as a single leading byte; 63 and 64 use the '~' three-byte header.
std::string to_graph6(const Graph& g);

// Strict parse: rejects malformed headers, orders outside [1,64], bytes
// outside the printable range, wrong lengths and nonzero padding bits.
Graph from_graph6(std::string_view s);

}  // namespace satkit
