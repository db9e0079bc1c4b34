#include "fsmcalc/merge.hpp"

#include <deque>
#include <sstream>
#include <vector>

#include "fsmcalc/error.hpp"
#include "fsmcalc/operations.hpp"
#include "raw_network.hpp"

namespace fsmcalc {

ClassRegistry ClassRegistry::define(SymbolId name, std::set<SymbolId> members) const {
  if (name == kEpsilon)
    throw MergeError("class name cannot be epsilon");
  if (members.empty())
    throw MergeError("class has no members");
  if (members.contains(kEpsilon))
    throw MergeError("class members cannot include epsilon");
  for (SymbolId m : members)
    if (m == name || (is_class(m) && m != name))
      throw MergeError("class members cannot include class symbols");
  for (const auto &[cls, set] : classes_)
    if (cls != name && set.contains(name))
      throw MergeError("class symbol is already a member of another class");
  ClassRegistry copy = *this;
  copy.classes_[name] = std::move(members);
  return copy;
}

bool ClassRegistry::matches(SymbolId cls, SymbolId sym) const {
  auto it = classes_.find(cls);
  return it != classes_.end() && it->second.contains(sym);
}

const std::set<SymbolId> *ClassRegistry::members(SymbolId cls) const {
  auto it = classes_.find(cls);
  return it == classes_.end() ? nullptr : &it->second;
}

Network merge(const Network &templ, const Network &filler,
              const ClassRegistry &classes) {
  require_same_table(templ, filler);
  if (!templ.is_automaton())
    throw NotAnAutomaton("merge (template)");
  if (!filler.is_automaton())
    throw NotAnAutomaton("merge (filler)");
  for (SymbolId sym : filler.sigma())
    if (classes.is_class(sym))
      throw MergeError("merge: filler contains class symbol '" +
                       filler.name(sym) + "'");

  const Network t = normalize(templ);
  const Network f = normalize(filler);

  detail::RawNetwork raw;
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto intern = [&](StateId ts, StateId fs) {
    auto [it, inserted] = ids.emplace(std::pair{ts, fs}, static_cast<StateId>(raw.size()));
    if (inserted) {
      raw.add_state(t.is_final(ts) && f.is_final(fs));
      queue.emplace_back(ts, fs);
    }
    return it->second;
  };

  raw.start = intern(t.start(), f.start());
  while (!queue.empty()) {
    auto [ts, fs] = queue.front();
    queue.pop_front();
    const StateId source = ids.at({ts, fs});
    for (const Arc &tarc : t.arcs(ts)) {
      const SymbolId slot = tarc.label.upper;
      bool matched = false;
      if (classes.is_class(slot)) {
        for (const Arc &farc : f.arcs(fs)) {
          if (!classes.matches(slot, farc.label.upper))
            continue;
          matched = true;
          StateId target = intern(tarc.target, farc.target);
          raw.arcs[static_cast<std::size_t>(source)].push_back({farc.label, target});
        }
      }
      if (!matched) {
        StateId target = intern(tarc.target, fs);
        raw.arcs[static_cast<std::size_t>(source)].push_back({tarc.label, target});
      }
    }
  }
  return normalize(detail::from_raw(t.table(), raw));
}

} // namespace fsmcalc

namespace fsmcalc {

ClassRegistry parse_classes(std::string_view text, const SymbolTablePtr &table,
                            ClassRegistry base) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;)
      tokens.push_back(w);
    if (tokens.empty() || tokens.front().starts_with('#'))
      continue;
    if (!tokens.empty() && tokens.back() == ";")
      tokens.pop_back();
    else if (!tokens.empty() && tokens.back().size() > 1 && tokens.back().ends_with(';'))
      tokens.back().pop_back();
    if (tokens.size() < 4 || tokens[0] != "class" || tokens[2] != "=")
      throw FormatError("expected 'class <NAME> = <symbols>'", line_no);
    std::set<SymbolId> members;
    for (std::size_t i = 3; i < tokens.size(); ++i)
      members.insert(table->intern(tokens[i]));
    try {
      base = base.define(table->intern(tokens[1]), std::move(members));
    } catch (const MergeError &e) {
      throw FormatError(e.what(), line_no);
    }
  }
  return base;
}

} // namespace fsmcalc
