#pragma once

#include <stdexcept>
#include <string>

namespace ispwl {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, graph6 payloads, manifests).
struct ParseError : Error {
  using Error::Error;
};

// Out-of-range or inconsistent parameters (n <= m, damping outside (0,1), ...).
struct ParamError : Error {
  using Error::Error;
};

// A caller broke an API precondition (mismatched comparison sets, members that
// are not neighbors, dimension mismatches).
struct ContractError : Error {
  using Error::Error;
};

// Node id outside the graph.
struct BoundsError : Error {
  using Error::Error;
};

}  // namespace ispwl
