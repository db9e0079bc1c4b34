#pragma once

// String-level reference implementations of merge, used by the unit tests
// and the acceptance runner.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fsmcalc/merge.hpp"
#include "fsmcalc/operations.hpp"

namespace fsmcalc::testing {

// One template string against one filler string: scan left to right,
// consuming the next filler symbol exactly when the current template symbol
// is a class containing it, copying otherwise. Accepts only if both strings
// are used up.
inline std::set<Word> merge_strings(const Word &t, const Word &f, const ClassRegistry &classes) {
  Word out;
  std::size_t j = 0;
  for (SymbolId s : t) {
    if (classes.is_class(s) && j < f.size() && classes.matches(s, f[j]))
      out.push_back(f[j++]);
    else
      out.push_back(s);
  }
  if (j != f.size())
    return {};
  return {out};
}

// Sets of strings. A class slot branches over every symbol that extends the
// consumed filler prefix towards some filler string; only when no filler
// string continues with a member of the class is the slot copied. This is
// what the product over a deterministic filler does, and it coincides with
// merge_strings when the filler is a single string.
inline std::set<Word> merge_languages(const std::set<Word> &templates,
                                      const std::set<Word> &fillers,
                                      const ClassRegistry &classes) {
  std::set<Word> prefixes;
  for (const Word &f : fillers)
    for (std::size_t n = 0; n <= f.size(); ++n)
      prefixes.emplace(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));

  std::set<Word> out;
  for (const Word &t : templates) {
    Word result, consumed;
    std::function<void(std::size_t)> scan = [&](std::size_t i) {
      if (i == t.size()) {
        if (fillers.contains(consumed))
          out.insert(result);
        return;
      }
      const SymbolId s = t[i];
      bool matched = false;
      if (const auto *members = classes.members(s))
        for (SymbolId x : *members) {
          consumed.push_back(x);
          if (prefixes.contains(consumed)) {
            matched = true;
            result.push_back(x);
            scan(i + 1);
            result.pop_back();
          }
          consumed.pop_back();
        }
      if (!matched) {
        result.push_back(s);
        scan(i + 1);
        result.pop_back();
      }
    };
    scan(0);
  }
  return out;
}

} // namespace fsmcalc::testing
