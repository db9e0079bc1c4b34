#pragma once

#include <string_view>

#include "fsmcalc/merge.hpp"
#include "fsmcalc/network.hpp"
#include "fsmcalc/operations.hpp"
#include "fsmcalc/regex.hpp"

namespace fsmcalc {

inline constexpr std::string_view kRegionOpen = "^[";
inline constexpr std::string_view kRegionClose = "^]";

/// Compiles the `^[ ... ^]` regions found on `side` and splices the results
/// back into a copy of the network.
///
/// Outside regions the network is copied unchanged. Each path from a `^[`
/// arc to the matching `^]` arc is handled separately: the `side` symbols
/// between the delimiters are joined with single spaces and compiled as a
/// regular expression, the opposite-side symbols along the whole path form
/// a single-string automaton, and the crossproduct of the two (opposite side
/// kept where it was) replaces the path between the `^[` source state and
/// the `^]` target state. Delimiter symbols disappear from both sides.
///
/// Throws CompileReplaceError for unbalanced or nested delimiters, cyclic
/// regions, syntax errors in extracted text (the message quotes the text),
/// compiled regions that are not automata, and extracted text containing a
/// delimiter symbol.
Network compile_replace(const Network &net, Side side, const Definitions &defs,
                        const ClassRegistry &classes);

} // namespace fsmcalc
