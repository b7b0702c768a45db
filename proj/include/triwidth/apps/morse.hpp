#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triwidth/hasse.hpp"

namespace triwidth::apps {

struct MorseCheck {
  bool ok = true;
  std::string violation;  // range | disjoint | empty | cycle
  std::string witness;
};

// `matching` holds indices into h.graph.arcs.
MorseCheck morse_validate(const HasseDiagram& h, const std::vector<int>& matching);

// Critical faces of a matching: every face node minus twice the matching size.
long long morse_critical(const HasseDiagram& h, std::size_t matching_size);

struct MorseOptions {
  int max_arcs = 256;                  // refuse larger diagrams
  std::uint64_t budget = 200'000'000;  // search nodes
};

struct MorseResult {
  long long c_min = 0;
  std::vector<int> matching;  // sorted arc indices
  std::uint64_t nodes = 0;
};

// Exact optimum by branch and bound; among optimal matchings the one found first
// when arcs are tried in index order, "include" before "exclude".
MorseResult morse_optimal(const HasseDiagram& h, const MorseOptions& opt = {});

}  // namespace triwidth::apps
