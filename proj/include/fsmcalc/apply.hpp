#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsmcalc/network.hpp"
#include "fsmcalc/operations.hpp"

namespace fsmcalc {

enum class Direction { Up, Down };

/// All ways of spelling `input` as a sequence of `sigma` symbols. Longer
/// symbols are tried first, so the first segmentation is the greedy one.
/// Empty when some character cannot be covered.
std::vector<Word> tokenize_input(std::string_view input, const SymbolTable &table,
                                 const std::vector<SymbolId> &sigma);

struct ApplyOptions {
  /// Output cap; cyclic output sides are cut off here.
  std::size_t max_results = 1000;
  /// Optional bound on output length in symbols.
  std::optional<std::size_t> max_length;
};

struct ApplyResult {
  std::vector<std::string> outputs; // sorted, deduplicated
  bool truncated = false;
};

/// Looks `input` up on the upper side (Down) or lower side (Up) and returns
/// the strings on the other side. Epsilons on the input side are free.
ApplyResult apply(const Network &net, Direction direction, std::string_view input,
                  const ApplyOptions &options = {});

} // namespace fsmcalc
