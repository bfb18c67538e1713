#pragma once

#include <string>
#include <string_view>

#include "ispwl/graph.hpp"

namespace ispwl {

// graph6 interchange format: printable ASCII, 6-bit packed upper triangle in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ... Bytes are value+63.
// Node counts <= 62 use a single byte; larger counts use the '~' escape forms.
// An optional ">>graph6<<" header is accepted on input.

Graph parse_graph6(std::string_view line);        // ParseError on bad input
std::string encode_graph6(const Graph& g);

}  // namespace ispwl
