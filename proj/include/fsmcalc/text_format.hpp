#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fsmcalc/network.hpp"

namespace fsmcalc {

/// Serializes to the line-oriented text format:
///
///     fsmcalc 1
///     <src>\t<dst>\t<upper>\t<lower>     one line per arc, ascending src
///     final\t<state>                     one line per final state
///
/// State 0 is the start state and epsilon is written `@0@`. The network is
/// written as stored; pass it through normalize() first for a canonical file.
std::string write_text(const Network &net);

/// Parses the text format. Throws FormatError with the offending line.
Network read_text(std::string_view text, const SymbolTablePtr &table);

void save_network(const Network &net, const std::filesystem::path &path);
Network load_network(const std::filesystem::path &path,
                     const SymbolTablePtr &table);

} // namespace fsmcalc
