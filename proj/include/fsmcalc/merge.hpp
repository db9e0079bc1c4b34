#pragma once

#include <map>
#include <set>
#include <string_view>

#include "fsmcalc/network.hpp"

namespace fsmcalc {

/// Maps class symbols (`C`, `V`) to the ordinary symbols they stand for.
/// No class symbol may itself be a member of a class; classes may overlap.
class ClassRegistry {
public:
  ClassRegistry() = default;

  /// Returns a copy with `name` bound to `members`, replacing any previous
  /// binding. Throws MergeError if `members` is empty, contains a class
  /// symbol, or if `name` is already a member of some class.
  ClassRegistry define(SymbolId name, std::set<SymbolId> members) const;

  bool is_class(SymbolId sym) const { return classes_.contains(sym); }
  /// True when `sym` is a member of class `cls`.
  bool matches(SymbolId cls, SymbolId sym) const;
  const std::set<SymbolId> *members(SymbolId cls) const;
  const std::map<SymbolId, std::set<SymbolId>> &classes() const { return classes_; }

private:
  std::map<SymbolId, std::set<SymbolId>> classes_;
};

inline ClassRegistry define_class(const ClassRegistry &registry, SymbolId name,
                                  std::set<SymbolId> members) {
  return registry.define(name, std::move(members));
}

/// Pattern-filling merge of a template automaton with a filler automaton.
///
/// Walks both networks in lockstep from their start states. For each
/// template arc, every filler arc whose symbol belongs to the template
/// symbol's class yields an arc labelled with the filler symbol and both
/// networks advance. A template arc with no such filler arc is copied and
/// only the template advances; ordinary template symbols are therefore
/// always copied. A result state is final when both constituents are final.
///
/// Throws NotAnAutomaton for transducer operands and MergeError when the
/// filler contains a class symbol.
Network merge(const Network &templ, const Network &filler,
              const ClassRegistry &classes);

} // namespace fsmcalc

namespace fsmcalc {

/// Reads class definitions, one per line: `class <NAME> = <sym> <sym> ...`.
/// Blank lines and lines starting with `#` are ignored; a trailing `;` is
/// allowed. Throws FormatError.
ClassRegistry parse_classes(std::string_view text, const SymbolTablePtr &table,
                            ClassRegistry base = {});

} // namespace fsmcalc
