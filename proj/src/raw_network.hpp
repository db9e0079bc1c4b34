#pragma once

// Mutable adjacency representation shared by the algorithm implementations.

#include <vector>

#include "fsmcalc/network.hpp"

namespace fsmcalc::detail {

struct RawNetwork {
  StateId start = 0;
  std::vector<std::vector<Arc>> arcs;
  std::vector<char> final;

  std::size_t size() const { return arcs.size(); }
  StateId add_state(bool is_final = false) {
    arcs.emplace_back();
    final.push_back(is_final ? 1 : 0);
    return static_cast<StateId>(arcs.size() - 1);
  }
};

RawNetwork to_raw(const Network &net);
Network from_raw(const SymbolTablePtr &table, const RawNetwork &raw);

RawNetwork remove_epsilons(const RawNetwork &in);
/// Keeps states that are both accessible and coaccessible. Returns a network
/// with a single non-final state when the language is empty.
RawNetwork trim(const RawNetwork &in);
RawNetwork determinize(const RawNetwork &in);
RawNetwork minimize(const RawNetwork &in);
bool has_cycle(const RawNetwork &in);

} // namespace fsmcalc::detail
