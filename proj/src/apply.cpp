#include "fsmcalc/apply.hpp"

#include <algorithm>
#include <set>

namespace fsmcalc {

namespace {

constexpr std::size_t kMaxSegmentations = 10000;

} // namespace

std::vector<Word> tokenize_input(std::string_view input, const SymbolTable &table,
                                 const std::vector<SymbolId> &sigma) {
  std::vector<std::pair<std::string_view, SymbolId>> symbols;
  for (SymbolId sym : sigma)
    if (sym != kEpsilon)
      symbols.emplace_back(table.name(sym), sym);
  std::sort(symbols.begin(), symbols.end(), [](const auto &a, const auto &b) {
    if (a.first.size() != b.first.size())
      return a.first.size() > b.first.size();
    return a.first < b.first;
  });

  // completes[i]: the suffix starting at i can be segmented.
  const std::size_t n = input.size();
  std::vector<char> completes(n + 1, 0);
  completes[n] = 1;
  for (std::size_t i = n; i-- > 0;)
    for (const auto &[name, sym] : symbols)
      if (input.substr(i).starts_with(name) && completes[i + name.size()]) {
        completes[i] = 1;
        break;
      }

  std::vector<Word> result;
  if (!completes[0])
    return result;
  Word current;
  auto walk = [&](auto &self, std::size_t pos) -> void {
    if (result.size() >= kMaxSegmentations)
      return;
    if (pos == n) {
      result.push_back(current);
      return;
    }
    for (const auto &[name, sym] : symbols) {
      if (!input.substr(pos).starts_with(name) || !completes[pos + name.size()])
        continue;
      current.push_back(sym);
      self(self, pos + name.size());
      current.pop_back();
    }
  };
  walk(walk, 0);
  return result;
}

ApplyResult apply(const Network &net, Direction direction, std::string_view input,
                  const ApplyOptions &options) {
  ApplyResult result;
  const bool down = direction == Direction::Down;
  const auto segmentations =
      tokenize_input(input, *net.table(), net.side_sigma(/*upper=*/down));
  if (segmentations.empty())
    return result;

  const Network query = words_network(net.table(), segmentations);
  const Network related = down ? compose(query, net) : compose(net, query);
  const Network outputs = project(related, down ? Side::Lower : Side::Upper);

  // Shortlex breadth-first walk over the deterministic output automaton.
  std::set<std::string> found;
  std::vector<std::pair<StateId, Word>> level{{outputs.start(), {}}};
  std::size_t length = 0;
  const SymbolTable &table = *net.table();
  while (!level.empty()) {
    for (const auto &[state, word] : level) {
      if (!outputs.is_final(state))
        continue;
      if (found.size() == options.max_results) {
        result.truncated = true;
        break;
      }
      found.insert(spell(table, word));
    }
    if (result.truncated || (options.max_length && length == *options.max_length))
      break;
    std::vector<std::pair<StateId, Word>> next;
    const std::size_t room = options.max_results - found.size();
    for (const auto &[state, word] : level)
      for (const Arc &arc : outputs.arcs(state)) {
        if (next.size() == room) {
          result.truncated = true;
          break;
        }
        Word longer = word;
        longer.push_back(arc.label.upper);
        next.emplace_back(arc.target, std::move(longer));
      }
    level = std::move(next);
    ++length;
  }
  result.outputs.assign(found.begin(), found.end());
  return result;
}

} // namespace fsmcalc
