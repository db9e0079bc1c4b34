#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fsmcalc/network.hpp"

namespace fsmcalc {

// lexc-lite: continuation-class lexicons.
//
//     ! comment
//     LEXICON Root
//     b a g i +Noun:b a g i  Number ;
//     0:"^[" Plural ;
//
// Each whitespace-separated token is one symbol; `0` is epsilon and double
// quotes protect tokens containing `:` `;` `!` or whitespace-free specials.
// `upper:lower` splits at the first unquoted colon; without a colon the
// entry is an identity. The last token before `;` names the continuation
// lexicon, or `#` for end of word.

struct LexiconEntry {
  std::vector<std::string> upper;
  std::vector<std::string> lower;
  std::string continuation;
  std::size_t line = 0;
};

struct LexiconSection {
  std::string name;
  std::vector<LexiconEntry> entries;
};

struct LexiconSource {
  std::vector<LexiconSection> sections;
  /// `Root` when declared, otherwise the first section.
  std::string root;

  const LexiconSection *find(std::string_view name) const;
};

/// Throws FormatError on malformed input.
LexiconSource parse_lexicon(std::string_view text);
LexiconSource read_lexicon(const std::filesystem::path &path);

/// Union over all root-to-`#` chains of the concatenated entries; each entry
/// contributes the crossproduct of its upper and lower token strings,
/// end-padded with epsilons. Throws FormatError for unknown continuations.
Network compile_lexicon(const LexiconSource &source, const SymbolTablePtr &table);

} // namespace fsmcalc
