#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "fsmcalc/merge.hpp"
#include "fsmcalc/network.hpp"

namespace fsmcalc {

/// Non-empty lines with surrounding whitespace removed; lines starting with
/// `#` are skipped.
std::vector<std::string> read_word_list(const std::filesystem::path &path);

/// Full reduplication for plural nouns. Each root `w` yields
///
///     w +Noun          : w
///     w +Noun +Plural  : ^[ { w } ^ 2 ^]
///
/// and the lower side is then compile-replaced, so `bagi +Noun +Plural`
/// maps to `bagibagi`.
Network build_malay(const std::vector<std::string> &roots, const SymbolTablePtr &table);

struct ArabicBuild {
  Network network;
  /// One message per (root, template, vocalism) triple that yields no stem.
  std::vector<std::string> warnings;
};

/// Root-and-pattern stems. For each triple the upper side is
/// `root =Root template =Template vocalism =Voc` (one symbol per character)
/// and the lower side is `^[ root .m>. template .<m. vocalism ^]`, which
/// compile-replace turns into the merged stems. Lower strings that still
/// contain a class symbol after merging (unfilled template slots) are
/// dropped.
ArabicBuild build_arabic(const std::vector<std::string> &roots,
                         const std::vector<std::string> &templates,
                         const std::vector<std::string> &vocalisms,
                         const ClassRegistry &classes, const SymbolTablePtr &table);

/// Palindromes among `words`, found with the region-rewriting construction:
/// `L & L.r`, then each word is wrapped as `^[ [ w XX ] ^ 2 ^]`, compiled,
/// rewritten into `^[ [ w & [ w ] .r ^]` and compiled again. Words must be
/// spelled with characters that are plain regex symbols.
std::set<std::string> extract_palindromes(const std::vector<std::string> &words);

} // namespace fsmcalc
