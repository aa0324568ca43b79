#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tmc/graph.hpp"

namespace tmc {

enum class Graph6ErrorKind {
  bad_order,        // order outside [1, 64]
  malformed_length, // body shorter than the order requires
  invalid_byte,     // character outside the printable graph6 range
  trailing_garbage, // extra characters after the body
  nonzero_padding,  // pad bits after the last vertex pair are set
};

class graph6_error : public std::runtime_error {
 public:
  graph6_error(Graph6ErrorKind k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
  Graph6ErrorKind kind;
};

// One line of graph6, without the newline. An optional ">>graph6<<"
// marker is accepted and stripped.
Graph graph6_decode(std::string_view line);

std::string graph6_encode(const Graph& g);

}  // namespace tmc
